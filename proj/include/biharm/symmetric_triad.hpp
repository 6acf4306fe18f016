#pragma once

#include "biharm/root_system.hpp"

#include <vector>

namespace biharm {

/// A triple (full root system, Sigma, W) over one ambient space.
struct SymmetricTriadData {
  RootSystem sigma_tilde;
  std::vector<RootVector> sigma;
  std::vector<RootVector> w;
};

/// m and n as functions on the roots of sigma_tilde, stored parallel to
/// `sigma_tilde.roots()`.
struct MultiplicityMap {
  std::vector<int> m;
  std::vector<int> n;
};

/// Conditions (1)..(6) of a symmetric triad; condition (1) also requires
/// irreducibility of the full root system.
ValidationReport validate_symmetric_triad(const SymmetricTriadData& t);

/// Conditions (1-1),(1-2),(1-3),(2),(3),(4) of a multiplicity pair.
ValidationReport validate_multiplicities(const SymmetricTriadData& t, const MultiplicityMap& mm);

}  // namespace biharm
