#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biharm::cli {

/// Exit statuses. Mismatch means the computation ran and disagreed with
/// the expected result (catalog label, oracle tolerance, failed axiom).
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Documents go to
/// `out` (or --out PATH), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.17g").
std::string format_double(double x);

}  // namespace biharm::cli
