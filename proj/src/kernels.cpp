#include "biharm/kernels.hpp"

#include "parallel_for.hpp"

#include <stdexcept>

namespace biharm {

using detail::for_each_index;

std::vector<double> cell_grid(const SymmetricTriad1D& t, int samples) {
  if (samples < 1) throw std::invalid_argument("sample count must be at least 1");
  const Cell cell = fundamental_cell(t);
  const double lo = cell.lo_rad(), hi = cell.hi_rad();
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = lo + (hi - lo) * static_cast<double>(i + 1) / static_cast<double>(samples + 1);
  return grid;
}

std::vector<CurveSample> sample_curve(const SymmetricTriad1D& t, int samples, Exec exec) {
  const auto grid = cell_grid(t, samples);
  std::vector<CurveSample> out(grid.size());
  for_each_index(grid.size(), exec, [&](std::size_t i) {
    out[i] = {grid[i], b_norm_sq(t, grid[i]), tension_coeff(t, grid[i])};
  });
  return out;
}

std::vector<ClassificationResult> classify_batch(const std::vector<SymmetricTriad1D>& triads, Exec exec) {
  std::vector<ClassificationResult> out(triads.size());
  for_each_index(triads.size(), exec, [&](std::size_t i) { out[i] = classify(triads[i]); });
  return out;
}

}  // namespace biharm
