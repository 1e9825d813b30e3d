#pragma once

// Pointwise character envelopes and the empirical constant sweep.
//
// All envelopes omit the unquantified constant C. Empirical constants depend
// on the |alpha|^2 = 2 normalization; reports carry kConvention.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "su3/cartan.hpp"
#include "su3/character.hpp"

namespace su3 {

inline constexpr std::string_view kConvention = "alpha_sq_2";

struct EnvelopeValue {
  /// sum_s prod_alpha min{|<s lambda, alpha>|, 1/wall_norm}
  double min_form = 0.0;
  /// sum_s prod_alpha x/(1 + x y), x = |<s lambda, alpha>|, y = wall_norm;
  /// equals 2 d_mu sum_s prod_alpha (1 + x y)^{-1}.
  double product_form = 0.0;
  /// min-form term of each element of weyl_group(), in that order.
  std::array<double, 6> per_weyl_terms{};
};

EnvelopeValue envelope_min(const DominantWeight& mu, const TorusPoint& h);

/// Product of the two largest wall norms; zero exactly at central points.
double c_of_H(const TorusPoint& h);

struct PointwiseBound {
  /// d_mu / (c(H) mu_bar mu_under)
  double bound = 0.0;
  /// d_mu / (c(H) sqrt(d_mu)), the older comparator
  double previous = 0.0;
};

/// Throws Error(singular_input) when exp H is central (c(H) <= 1e-14).
PointwiseBound pointwise_singular_bound(const DominantWeight& mu, const TorusPoint& h);

struct RatioRecord {
  DominantWeight mu;
  TorusPoint theta;
  double abs_chi = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
  Method method = Method::weyl;
};

RatioRecord ratio(const DominantWeight& mu, const TorusPoint& h);

/// min{n+1, 1/|sin theta|} - |sin((n+1) theta) / sin theta|
double rank1_bound_margin(std::int64_t n, double theta);

struct Rank1Scan {
  double min_margin = 0.0;
  std::int64_t n_at_min = 0;
  double theta_at_min = 0.0;
  std::size_t evaluations = 0;
  /// minimum margin and its theta for each n, filled by rank1_scan
  std::vector<double> margin_per_n;
  std::vector<double> theta_per_n;
};

/// All n in [0, n_max] against theta_i = pi i / (grid + 1), i = 1..grid.
Rank1Scan rank1_scan(std::int64_t n_max, std::size_t grid);

enum class GridKind {
  /// vertices, exact wall points, corner and near-wall layers, random interior
  stratified,
  /// points with <alpha_0, H> = 0 exactly
  alpha0_wall,
};

struct AlcoveGridSpec {
  GridKind kind = GridKind::stratified;
  std::size_t points = 10000;
  std::uint64_t seed = 1;
};

/// Deterministic in (kind, points, seed).
std::vector<TorusPoint> alcove_grid(const AlcoveGridSpec& spec);

struct SweepConfig {
  /// every (a, b) with a + b <= dense_shell is swept
  int dense_shell = 20;
  /// shells dense_shell < a + b <= max_shell keep a % stride == 0 and a == a + b
  int max_shell = 40;
  int stride = 3;
  AlcoveGridSpec grid;
  /// budget on character evaluations; the sweep stops early and reports
  /// complete = false when the next weight would exceed it
  std::size_t max_evaluations = 50'000'000;
  bool keep_all_records = false;
};

std::vector<DominantWeight> sweep_weights(const SweepConfig& config);

struct ShellSummary {
  int shell = 0;
  double max_ratio = 0.0;
  RatioRecord argmax;
  std::size_t weights = 0;
};

struct SweepReport {
  bool complete = true;
  double c_emp = 0.0;
  RatioRecord argmax;
  std::vector<ShellSummary> shells;
  /// max over a+b in [0, dense_shell] and over [dense_shell, max_shell]
  double max_low = 0.0;
  double max_high = 0.0;
  double shell_ratio = 0.0;
  /// every swept weight had ratio(mu, 0) == 1/12 exactly
  bool center_ratio_exact = true;
  bool all_finite = true;
  std::size_t evaluations = 0;
  std::map<Method, std::size_t> method_counts;
  /// per-weight maximizing record, in sweep order
  std::vector<RatioRecord> per_weight_max;
  std::vector<RatioRecord> all_records;
};

SweepReport sweep_constant(const SweepConfig& config);

}  // namespace su3
