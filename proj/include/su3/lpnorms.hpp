#pragma once

// Lp norms of characters over the group, predicted growth rates, and the
// auxiliary alcove integral used to derive them.
//
// Norms are self-normalized: N_p / Z with Z the integral of the Weyl density,
// so the trivial character has norm exactly 1 for every p.

#include <cstdint>
#include <string>
#include <vector>

#include "su3/cartan.hpp"

namespace su3 {

struct QuadratureSpec {
  /// Gauss-Legendre points per axis of the square mapped onto each triangle
  int base_order = 64;
  /// doublings of the triangle subdivision allowed after the first level
  int max_refinements = 6;
  double rel_tol = 1e-6;
  /// fixed number of subdivisions per alcove edge; 0 derives it from the
  /// integrand's frequency content
  int subdivision = 0;
  /// cap on integrand evaluations over all levels
  std::uint64_t max_evaluations = 2'000'000'000;
};

/// Name of the square-to-triangle map: (u, v) -> v0 + u (v1 - v0) + u v (v2 - v1).
inline constexpr const char* kTriangleMapping = "duffy";

void validate(const QuadratureSpec& spec);

struct LpReport {
  DominantWeight mu;
  double p = 0.0;
  double norm = 0.0;
  double normalizer = 0.0;  // Z
  double integral = 0.0;    // N_p
  double predicted_singular = 0.0;
  /// NaN outside the domain of the respective bound
  double predicted_regular = 0.0;
  double predicted_dimension = 0.0;
  bool converged = false;
  int levels = 0;
  int subdivision = 0;  // per-edge count of the last level
  double last_delta = 0.0;
  std::uint64_t evaluations = 0;
};

/// Throws Error(invalid_argument) for p <= 0; non-convergence is reported in
/// the result, not thrown.
LpReport haar_lp_norm(const DominantWeight& mu, double p, const QuadratureSpec& spec = {});

/// Seven-case growth rate in (mu_bar, mu_under), C omitted.
double predicted_singular_bound(double mu_bar, double mu_under, double p);
double predicted_singular_bound(const DominantWeight& mu, double p);
/// Three-case rate in mu_bar alone; requires p >= 2.
double predicted_regular_bound(const DominantWeight& mu, double p);
/// dim^{1 - 8/(3p)}; requires p > 8/3.
double predicted_dimension_bound(const DominantWeight& mu, double p);

/// Which of the seven cases p falls in: 0 for p < 8/3, ..., 6 for p > 5.
/// The boundary values 8/3, 3, 5 are matched within 1e-12.
int lp_case(double p);

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
  std::size_t triangles = 0;
  std::uint64_t evaluations = 0;
};

/// Integral over {t1, t2 >= 0, t1 + t2 <= 4 pi / 3} of
/// t1^2 t2^2 (t1+t2)^2 / ((1 + a t1)^p (1 + b t2)^p (1 + c (t1 + t2))^p).
/// Adaptive; stops when the estimated error is below rel_tol * |value|.
IntegralResult I_numeric(double p, double a, double b, double c, const QuadratureSpec& spec = {});

/// Seven-case majorant for a >= b >= c > 0, constant omitted. Unsorted input
/// is rejected.
double I_bound(double p, double a, double b, double c);

enum class Family { axis, diagonal, fixed_b };
const char* family_name(Family f);
DominantWeight family_weight(Family f, std::int64_t n, std::int64_t b0 = 0);

struct ScalingRow {
  std::int64_t n = 0;
  DominantWeight mu;
  double p = 0.0;
  double norm = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  bool converged = false;
  double last_delta = 0.0;
};

struct ScalingFit {
  Family family = Family::axis;
  std::int64_t b0 = 0;
  double p = 0.0;
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  /// fit after dropping the smallest N while residual > 0.02 and more than
  /// four points remain
  double trimmed_slope = 0.0;
  double trimmed_residual = 0.0;
  std::size_t trimmed_dropped = 0;
  bool all_converged = true;
  std::vector<ScalingRow> rows;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root mean square
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

/// Needs at least four distinct positive N.
ScalingFit scaling_fit(Family family, double p, const std::vector<std::int64_t>& n_values,
                       const QuadratureSpec& spec = {}, std::int64_t b0 = 0);

struct PropRow {
  double p = 0.0;
  double a = 0.0, b = 0.0, c = 0.0;
  double numeric = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  bool converged = false;
};

struct PropShell {
  double c = 0.0;
  double max_ratio = 0.0;
};

struct PropCheck {
  double p = 0.0;
  /// max of numeric / bound over all triples
  double k = 0.0;
  std::vector<PropShell> shells;  // grouped by the smallest entry
  /// max over the upper half of the shells divided by max over the lower half
  double shell_ratio = 0.0;
  /// max ratio of each shell over the previous one
  std::vector<double> consecutive_ratios;
  bool all_converged = true;
  std::vector<PropRow> rows;
};

/// All sorted triples a >= b >= c drawn from magnitudes, integrated with
/// (a~, b~, c~) = (a, b, c).
PropCheck prop_check(double p, const std::vector<double>& magnitudes, const QuadratureSpec& spec = {});

}  // namespace su3
