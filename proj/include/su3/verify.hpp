#pragma once

// Cross-checks between the three character evaluators.

#include <cstdint>
#include <vector>

#include "su3/cartan.hpp"

namespace su3 {

struct OracleDiffConfig {
  std::int64_t max_label = 12;  // a, b <= max_label
  std::size_t points = 100;     // per weight and per check
  std::uint64_t seed = 1;
  /// regular points keep every wall norm at or above this
  double regular_wall = 0.1;
  /// near-wall points put one wall norm at or below this
  double near_wall = 1e-6;
};

struct OracleDiffRow {
  DominantWeight mu;
  /// max |chi_weyl - chi_schur| / dim over regular points
  double weyl_vs_schur = 0.0;
  /// max |chi_descent(j) - chi_schur| / dim over points near wall j
  double descent_vs_schur[3] = {0.0, 0.0, 0.0};
};

struct OracleDiffReport {
  double max_weyl_vs_schur = 0.0;
  double max_descent_vs_schur = 0.0;
  std::vector<OracleDiffRow> rows;
};

/// Points are drawn once from the seed and shared by every weight.
OracleDiffReport oracle_diff(const OracleDiffConfig& config);

/// Uniform point of the alcove from two raw 64-bit draws.
TorusPoint alcove_point(std::uint64_t x, std::uint64_t y);

}  // namespace su3
