#include "su3/lpnorms.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <queue>

#include "su3/character.hpp"
#include "su3/error.hpp"
#include "su3/parallel.hpp"

namespace su3 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Vec2 {
  double x, y;
};

// Gauss-Legendre product rule pulled back to a triangle through the Duffy
// map. A node sits at v0 + alpha (v1 - v0) + beta (v2 - v1).
struct TriangleRule {
  std::vector<double> alpha, beta, weight;  // weight already carries u

  explicit TriangleRule(int n) {
    std::unique_ptr<gsl_integration_glfixed_table, decltype(&gsl_integration_glfixed_table_free)> table(
        gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(n)), &gsl_integration_glfixed_table_free);
    if (!table) throw Error(ErrorCode::resource_guard, "cannot allocate Gauss-Legendre table");
    std::vector<double> x(n), w(n);
    for (int i = 0; i < n; ++i) gsl_integration_glfixed_point(0.0, 1.0, i, &x[i], &w[i], table.get());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        alpha.push_back(x[i]);
        beta.push_back(x[i] * x[j]);
        weight.push_back(w[i] * w[j] * x[i]);
      }
  }

  std::size_t size() const { return weight.size(); }

  template <class F>
  double integrate(const Vec2& v0, const Vec2& v1, const Vec2& v2, F&& f) const {
    const Vec2 e1{v1.x - v0.x, v1.y - v0.y};
    const Vec2 e2{v2.x - v1.x, v2.y - v1.y};
    const double jac = std::abs(e1.x * e2.y - e1.y * e2.x);
    double s = 0.0;
    for (std::size_t i = 0; i < weight.size(); ++i)
      s += weight[i] * f(v0.x + alpha[i] * e1.x + beta[i] * e2.x, v0.y + alpha[i] * e1.y + beta[i] * e2.y);
    return jac * s;
  }
};

bool near(double p, double q) { return std::abs(p - q) <= 1e-12; }

int even_power(double p) {
  if (p > 0 && p <= 64 && p == std::floor(p) && static_cast<int>(p) % 2 == 0) return static_cast<int>(p) / 2;
  return 0;
}

// Frequency content of |chi|^p in (t1, t2): p times the largest coefficient of
// either coordinate over the Weyl orbit of lambda, plus the density's own.
std::array<double, 2> bandwidth(const DominantWeight& mu, double p) {
  const auto lam = RegularTriple::from_weight(mu);
  double c1 = 0.0, c2 = 0.0;
  for (const auto& s : weyl_group()) {
    const auto nu = act(s, lam).ell();
    const double n1 = static_cast<double>(nu[0]), n2 = static_cast<double>(nu[1]), n3 = static_cast<double>(nu[2]);
    c1 = std::max(c1, std::abs(2 * n1 - n2 - n3) / 3.0);
    c2 = std::max(c2, std::abs(n1 + n2 - 2 * n3) / 3.0);
  }
  return {p * c1 + 2.0, p * c2 + 2.0};
}

struct LevelSums {
  double integral = 0.0;
  double normalizer = 0.0;
};

LevelSums integrate_alcove(const DominantWeight& mu, double p, const TriangleRule& rule, int k) {
  const bool trivial = mu.a == 0 && mu.b == 0;
  const int half = even_power(p);
  auto density = [](double t1, double t2) {
    const double w = std::sin(0.5 * t1) * std::sin(0.5 * t2) * std::sin(0.5 * (t1 + t2));
    return w * w;
  };
  auto moment = [&](double t1, double t2) {
    if (trivial) return density(t1, t2);
    const auto h = TorusPoint::from_alcove(t1, t2);
    const auto s = wall_sines(h);
    const double w = s[0] * s[0] * s[1] * s[1] * s[2] * s[2];
    const auto chi = chi_stable(mu, h, s).value;
    if (half > 0) {
      const double q = std::norm(chi);
      double r = q;
      for (int i = 1; i < half; ++i) r *= q;
      return r * w;
    }
    return std::pow(std::abs(chi), p) * w;
  };

  const double h = kTwoPi / k;
  const std::size_t total = static_cast<std::size_t>(k) * k;
  // triangles in a fixed order: upward ones (i, j), i + j <= k - 1, then
  // downward ones, i + j <= k - 2
  std::vector<std::array<int, 3>> cells;
  cells.reserve(total);
  for (int i = 0; i < k; ++i)
    for (int j = 0; i + j <= k - 1; ++j) cells.push_back({i, j, 0});
  for (int i = 0; i < k; ++i)
    for (int j = 0; i + j <= k - 2; ++j) cells.push_back({i, j, 1});

  std::vector<double> num(total), den(total);
  parallel_for(total, [&](std::size_t c) {
    const auto [i, j, down] = cells[c];
    Vec2 v0, v1, v2;
    if (!down) {
      v0 = {i * h, j * h};
      v1 = {(i + 1) * h, j * h};
      v2 = {i * h, (j + 1) * h};
      // the Duffy map clusters nodes at v0; keep that away from the alcove
      // corner, where the oracle is the only stable evaluator
      if (i == 0 && j == 0) std::swap(v0, v1);
    } else {
      v0 = {(i + 1) * h, j * h};
      v1 = {(i + 1) * h, (j + 1) * h};
      v2 = {i * h, (j + 1) * h};
    }
    num[c] = rule.integrate(v0, v1, v2, moment);
    den[c] = rule.integrate(v0, v1, v2, density);
  });
  return {pairwise_sum(num), pairwise_sum(den)};
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (spec.base_order < 2 || spec.base_order > 1024)
    throw Error(ErrorCode::invalid_argument, "base_order must lie in [2, 1024]");
  if (spec.max_refinements < 0) throw Error(ErrorCode::invalid_argument, "max_refinements must be nonnegative");
  if (!(spec.rel_tol > 0.0)) throw Error(ErrorCode::invalid_argument, "rel_tol must be positive");
  if (spec.subdivision < 0) throw Error(ErrorCode::invalid_argument, "subdivision must be nonnegative");
}

int lp_case(double p) {
  if (!(p > 0.0)) throw Error(ErrorCode::invalid_argument, "p must be positive");
  const double p83 = 8.0 / 3.0;
  if (near(p, p83)) return 1;
  if (near(p, 3.0)) return 3;
  if (near(p, 5.0)) return 5;
  if (p < p83) return 0;
  if (p < 3.0) return 2;
  if (p < 5.0) return 4;
  return 6;
}

double predicted_singular_bound(double mu_bar, double mu_under, double p) {
  if (!(mu_under > 0.0) || mu_bar < mu_under)
    throw Error(ErrorCode::invalid_argument, "need mu_bar >= mu_under > 0");
  const double big = mu_bar, small = mu_under;
  switch (lp_case(p)) {
    case 0: return 1.0;
    case 1: return std::pow(std::log(2.0 + small), 3.0 / 8.0);
    case 2: return std::pow(small, 3.0 - 8.0 / p);
    case 3: return std::cbrt(small) * std::cbrt(std::log(2.0 + big / small));
    case 4: return std::pow(big, 1.0 - 3.0 / p) * std::pow(small, 2.0 - 5.0 / p);
    case 5: return std::pow(big, 0.4) * small * std::pow(std::log(2.0 + big / small), 0.2);
    default: return std::pow(big, 2.0 - 8.0 / p) * small;
  }
}

double predicted_singular_bound(const DominantWeight& mu, double p) {
  const auto st = mu_stats(mu);
  return predicted_singular_bound(static_cast<double>(st.mu_bar), static_cast<double>(st.mu_under), p);
}

double predicted_regular_bound(const DominantWeight& mu, double p) {
  if (!(p >= 2.0)) throw Error(ErrorCode::invalid_argument, "regular-regime bound requires p >= 2");
  const double big = static_cast<double>(mu_stats(mu).mu_bar);
  const double p83 = 8.0 / 3.0;
  if (near(p, p83)) return std::pow(std::log(2.0 + big), 3.0 / 8.0);
  if (p < p83) return 1.0;
  return std::pow(big, 3.0 - 8.0 / p);
}

double predicted_dimension_bound(const DominantWeight& mu, double p) {
  if (!(p > 8.0 / 3.0)) throw Error(ErrorCode::invalid_argument, "dimension bound requires p > 8/3");
  return std::pow(static_cast<double>(dim(mu)), 1.0 - 8.0 / (3.0 * p));
}

LpReport haar_lp_norm(const DominantWeight& mu, double p, const QuadratureSpec& spec) {
  if (!(p > 0.0) || !std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "p must be positive and finite");
  validate(spec);

  LpReport out;
  out.mu = mu;
  out.p = p;
  out.predicted_singular = predicted_singular_bound(mu, p);
  out.predicted_regular = p >= 2.0 ? predicted_regular_bound(mu, p) : kNaN;
  out.predicted_dimension = p > 8.0 / 3.0 ? predicted_dimension_bound(mu, p) : kNaN;
  out.last_delta = kNaN;

  const TriangleRule rule(spec.base_order);
  int k = spec.subdivision;
  if (k == 0) {
    const auto omega = bandwidth(mu, p);
    const double usable = std::max(0.5 * spec.base_order, spec.base_order - 12.0);
    const double h = 4.0 * usable / (omega[0] + omega[1]);
    k = std::max(1, static_cast<int>(std::ceil(kTwoPi / h)));
  }

  auto cost = [&](int kk) { return static_cast<std::uint64_t>(kk) * kk * rule.size() * 2; };
  if (cost(k) > spec.max_evaluations)
    throw Error(ErrorCode::resource_guard, "first quadrature level exceeds max_evaluations");

  LevelSums prev = integrate_alcove(mu, p, rule, k);
  out.evaluations += cost(k);
  out.levels = 1;
  out.subdivision = k;
  for (int r = 0; r < spec.max_refinements; ++r) {
    const int next = 2 * k;
    if (out.evaluations + cost(next) > spec.max_evaluations) break;
    const LevelSums cur = integrate_alcove(mu, p, rule, next);
    out.evaluations += cost(next);
    ++out.levels;
    out.subdivision = next;
    const double dn = std::abs(cur.integral - prev.integral) / std::abs(cur.integral);
    const double dz = std::abs(cur.normalizer - prev.normalizer) / std::abs(cur.normalizer);
    out.last_delta = std::max(dn, dz);
    prev = cur;
    k = next;
    if (out.last_delta <= spec.rel_tol) {
      out.converged = true;
      break;
    }
  }

  out.integral = prev.integral;
  out.normalizer = prev.normalizer;
  out.norm = std::pow(prev.integral / prev.normalizer, 1.0 / p);
  return out;
}

IntegralResult I_numeric(double p, double a, double b, double c, const QuadratureSpec& spec) {
  if (!(p > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw Error(ErrorCode::invalid_argument, "I_numeric needs p, a, b, c > 0");
  validate(spec);

  auto f = [&](double t1, double t2) {
    const double s = t1 + t2;
    const double num = t1 * t1 * t2 * t2 * s * s;
    return num * std::pow((1.0 + a * t1) * (1.0 + b * t2) * (1.0 + c * s), -p);
  };
  // an embedded pair: the finer rule is the estimate, the difference its error
  const int fine_order = std::max(2, spec.base_order / 4);
  const TriangleRule fine(fine_order), coarse(std::max(1, fine_order / 2));
  const std::uint64_t per_triangle = fine.size() + coarse.size();

  struct Cell {
    Vec2 v0, v1, v2;
    double value, error;
    std::size_t id;
  };
  std::vector<Cell> cells;
  auto make = [&](Vec2 v0, Vec2 v1, Vec2 v2) {
    const double q = fine.integrate(v0, v1, v2, f);
    const double e = std::abs(q - coarse.integrate(v0, v1, v2, f));
    cells.push_back({v0, v1, v2, q, e, cells.size()});
    return cells.size() - 1;
  };
  auto worse = [&](std::size_t x, std::size_t y) {
    if (cells[x].error != cells[y].error) return cells[x].error < cells[y].error;
    return cells[x].id > cells[y].id;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> queue(worse);

  const double m = 4.0 * 3.14159265358979323846 / 3.0;
  queue.push(make({0.0, 0.0}, {m, 0.0}, {0.0, m}));
  std::vector<char> alive{1};

  IntegralResult out;
  out.evaluations = per_triangle;
  double total = cells[0].value, error = cells[0].error;
  for (;;) {
    if (error <= spec.rel_tol * std::abs(total)) {
      out.converged = true;
      break;
    }
    if (out.evaluations + 4 * per_triangle > spec.max_evaluations) break;
    const std::size_t idx = queue.top();
    queue.pop();
    alive[idx] = 0;
    const Cell parent = cells[idx];
    total -= parent.value;
    error -= parent.error;
    const Vec2 m01{0.5 * (parent.v0.x + parent.v1.x), 0.5 * (parent.v0.y + parent.v1.y)};
    const Vec2 m12{0.5 * (parent.v1.x + parent.v2.x), 0.5 * (parent.v1.y + parent.v2.y)};
    const Vec2 m20{0.5 * (parent.v2.x + parent.v0.x), 0.5 * (parent.v2.y + parent.v0.y)};
    for (const auto& tri : {std::array<Vec2, 3>{parent.v0, m01, m20}, std::array<Vec2, 3>{m01, parent.v1, m12},
                            std::array<Vec2, 3>{m20, m12, parent.v2}, std::array<Vec2, 3>{m12, m20, m01}}) {
      const std::size_t child = make(tri[0], tri[1], tri[2]);
      alive.push_back(1);
      total += cells[child].value;
      error += cells[child].error;
      queue.push(child);
    }
    out.evaluations += 4 * per_triangle;
  }

  // the running sums drift; recompute both from the leaves in creation order
  std::vector<double> values, errors;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (alive[i]) {
      values.push_back(cells[i].value);
      errors.push_back(cells[i].error);
    }
  out.value = pairwise_sum(values);
  out.error_estimate = pairwise_sum(errors);
  out.triangles = values.size();
  return out;
}

double I_bound(double p, double a, double b, double c) {
  if (!(c > 0.0)) throw Error(ErrorCode::invalid_argument, "I_bound needs c > 0");
  if (!(a >= b && b >= c))
    throw Error(ErrorCode::invalid_argument,
                "I_bound needs a >= b >= c; sort the pairings first (mu_stats gives the sorted triple)");
  switch (lp_case(p)) {
    case 0: return std::pow(a * b * c, -p);
    case 1: return std::pow(a * b * c, -p) * std::log(2.0 + c);
    case 2: return std::pow(a * b, -p) * std::pow(c, 2.0 * p - 8.0);
    case 3: return std::pow(a * b, -3.0) / (c * c) * std::log(2.0 + a / c);
    case 4: return std::pow(a, -3.0) * std::pow(b, -p) * std::pow(c, p - 5.0);
    case 5: return std::pow(a, -3.0) * std::pow(b, -5.0) * std::log(2.0 + b / c);
    default: return std::pow(a, -3.0) * std::pow(b, -5.0);
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::axis: return "axis";
    case Family::diagonal: return "diagonal";
    case Family::fixed_b: return "fixed_b";
  }
  return "?";
}

DominantWeight family_weight(Family f, std::int64_t n, std::int64_t b0) {
  switch (f) {
    case Family::axis: return {n, 0};
    case Family::diagonal: return {n, n};
    case Family::fixed_b: return {n, b0};
  }
  throw Error(ErrorCode::invalid_argument, "unknown family");
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorCode::invalid_argument, "line fit needs two or more points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::invalid_argument, "line fit needs distinct abscissae");
  LineFit out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (out.intercept + out.slope * x[i]);
    ss += r * r;
  }
  out.residual = std::sqrt(ss / static_cast<double>(n));
  return out;
}

ScalingFit scaling_fit(Family family, double p, const std::vector<std::int64_t>& n_values, const QuadratureSpec& spec,
                       std::int64_t b0) {
  std::vector<std::int64_t> ns = n_values;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  if (ns.size() < 4 || ns.front() <= 0)
    throw Error(ErrorCode::invalid_argument, "scaling fit needs at least four distinct positive N");
  if (family == Family::fixed_b && b0 < 0) throw Error(ErrorCode::invalid_argument, "b0 must be nonnegative");

  ScalingFit out;
  out.family = family;
  out.b0 = b0;
  out.p = p;
  for (const auto n : ns) {
    const auto mu = family_weight(family, n, b0);
    const auto rep = haar_lp_norm(mu, p, spec);
    ScalingRow row;
    row.n = n;
    row.mu = mu;
    row.p = p;
    row.norm = rep.norm;
    row.predicted = rep.predicted_singular;
    row.ratio = rep.norm / rep.predicted_singular;
    row.converged = rep.converged;
    row.last_delta = rep.last_delta;
    out.all_converged = out.all_converged && rep.converged;
    out.rows.push_back(row);
  }

  std::vector<double> x, y;
  for (const auto& r : out.rows) {
    x.push_back(std::log(static_cast<double>(r.n)));
    y.push_back(std::log(r.norm));
  }
  auto fit = fit_line(x, y);
  out.slope = fit.slope;
  out.intercept = fit.intercept;
  out.residual = fit.residual;
  while (fit.residual > 0.02 && x.size() > 4) {
    x.erase(x.begin());
    y.erase(y.begin());
    ++out.trimmed_dropped;
    fit = fit_line(x, y);
  }
  out.trimmed_slope = fit.slope;
  out.trimmed_residual = fit.residual;
  return out;
}

PropCheck prop_check(double p, const std::vector<double>& magnitudes, const QuadratureSpec& spec) {
  std::vector<double> mags = magnitudes;
  std::sort(mags.begin(), mags.end());
  mags.erase(std::unique(mags.begin(), mags.end()), mags.end());
  if (mags.empty() || !(mags.front() > 0.0)) throw Error(ErrorCode::invalid_argument, "magnitudes must be positive");

  PropCheck out;
  out.p = p;
  for (std::size_t i = mags.size(); i-- > 0;)
    for (std::size_t j = i + 1; j-- > 0;)
      for (std::size_t k = j + 1; k-- > 0;) {
        PropRow row;
        row.p = p;
        row.a = mags[i];
        row.b = mags[j];
        row.c = mags[k];
        out.rows.push_back(row);
      }

  parallel_for(out.rows.size(), [&](std::size_t r) {
    auto& row = out.rows[r];
    const auto res = I_numeric(p, row.a, row.b, row.c, spec);
    row.numeric = res.value;
    row.converged = res.converged;
    row.bound = I_bound(p, row.a, row.b, row.c);
    row.ratio = row.numeric / row.bound;
  });

  for (const double c : mags) out.shells.push_back({c, 0.0});
  for (const auto& row : out.rows) {
    out.all_converged = out.all_converged && row.converged;
    out.k = std::max(out.k, row.ratio);
    auto it = std::find_if(out.shells.begin(), out.shells.end(), [&](const PropShell& s) { return s.c == row.c; });
    it->max_ratio = std::max(it->max_ratio, row.ratio);
  }
  const std::size_t lower = (out.shells.size() + 1) / 2;
  double max_low = 0.0, max_high = 0.0;
  for (std::size_t s = 0; s < out.shells.size(); ++s) {
    (s < lower ? max_low : max_high) = std::max(s < lower ? max_low : max_high, out.shells[s].max_ratio);
    if (s > 0) out.consecutive_ratios.push_back(out.shells[s].max_ratio / out.shells[s - 1].max_ratio);
  }
  out.shell_ratio = out.shells.size() > 1 ? max_high / max_low : 1.0;
  return out;
}

}  // namespace su3
