#pragma once

#include <stdexcept>

namespace biharm {

/// A requested build exceeds a configured size limit.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Computed Lie-theoretic structure does not have the expected shape.
/// Signals a bug in a builder or a corrupted bracket table.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace biharm
