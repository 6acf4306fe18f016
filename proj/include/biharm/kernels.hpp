#pragma once

#include "biharm/solver.hpp"

#include <vector>

namespace biharm {

/// Data-parallel kernels come in two flavours. Serial is the reference the
/// OpenMP path is tested against; both give bit-identical results.
enum class Exec { Serial, Parallel };

struct CurveSample {
  double s = 0;
  double b_norm_sq = 0;
  double tension_coeff = 0;
};

/// s_i = lo + (hi - lo) (i + 1) / (samples + 1), i < samples, inside the cell.
/// Throws std::invalid_argument when samples < 1.
std::vector<double> cell_grid(const SymmetricTriad1D& t, int samples);

std::vector<CurveSample> sample_curve(const SymmetricTriad1D& t, int samples, Exec exec);

std::vector<ClassificationResult> classify_batch(const std::vector<SymmetricTriad1D>& triads, Exec exec);

}  // namespace biharm
