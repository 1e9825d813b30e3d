#include "su3/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include "su3/error.hpp"
#include "su3/parallel.hpp"

namespace su3 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Portable uniform double in [0, 1) from raw 64-bit output.
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Larger ratio wins; ties go to the lexicographically smallest (a, b, t1, t2).
bool better(const RatioRecord& x, const RatioRecord& y) {
  if (x.ratio != y.ratio) return x.ratio > y.ratio;
  return std::make_tuple(x.mu.a, x.mu.b, x.theta.t1(), x.theta.t2()) <
         std::make_tuple(y.mu.a, y.mu.b, y.theta.t1(), y.theta.t2());
}

using Point2 = std::array<double, 2>;

Point2 lerp(const Point2& p, const Point2& q, double s) {
  return {p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])};
}

}  // namespace

EnvelopeValue envelope_min(const DominantWeight& mu, const TorusPoint& h) {
  const auto lambda = RegularTriple::from_weight(mu);
  const auto walls = wall_norms(h);

  EnvelopeValue out;
  const auto& group = weyl_group();
  for (std::size_t i = 0; i < group.size(); ++i) {
    const auto nu = act(group[i], lambda);
    double min_term = 1.0;
    double product_term = 1.0;
    for (int k = 0; k < 3; ++k) {
      const double x = static_cast<double>(std::abs(pairing(nu, kExtendedSimpleRoots[k])));
      const double y = walls[k];
      min_term *= y < 1e-300 ? x : std::min(x, 1.0 / y);
      product_term *= x / (1.0 + x * y);
    }
    out.per_weyl_terms[i] = min_term;
    out.min_form += min_term;
    out.product_form += product_term;
  }
  return out;
}

double c_of_H(const TorusPoint& h) {
  auto w = wall_norms(h);
  std::sort(w.begin(), w.end());
  return w[1] * w[2];
}

PointwiseBound pointwise_singular_bound(const DominantWeight& mu, const TorusPoint& h) {
  const double c = c_of_H(h);
  if (!(c > 1e-14))
    throw Error(ErrorCode::singular_input, "pointwise bound needs a non-central torus point");
  const auto st = mu_stats(mu);
  const double d = static_cast<double>(dim(mu));
  PointwiseBound out;
  out.bound = d / (c * static_cast<double>(st.mu_bar) * static_cast<double>(st.mu_under));
  out.previous = d / (c * std::sqrt(d));
  return out;
}

RatioRecord ratio(const DominantWeight& mu, const TorusPoint& h) {
  const auto chi = chi_stable(mu, h);
  RatioRecord r;
  r.mu = mu;
  r.theta = h;
  r.abs_chi = std::abs(chi.value);
  r.envelope = envelope_min(mu, h).min_form;
  r.ratio = r.abs_chi / r.envelope;
  r.method = chi.method;
  return r;
}

double rank1_bound_margin(std::int64_t n, double theta) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "rank-one degree must be nonnegative");
  const double s = std::abs(std::sin(theta));
  const double cap = static_cast<double>(n + 1);
  const double bound = s > 0.0 ? std::min(cap, 1.0 / s) : cap;
  return bound - std::abs(chi_rank1(n + 1, theta));
}

Rank1Scan rank1_scan(std::int64_t n_max, std::size_t grid) {
  if (n_max < 0 || grid == 0) throw Error(ErrorCode::invalid_argument, "rank1 scan needs n_max >= 0 and grid > 0");
  std::vector<Rank1Scan> per_n(static_cast<std::size_t>(n_max + 1));
  parallel_for(per_n.size(), [&](std::size_t idx) {
    const auto n = static_cast<std::int64_t>(idx);
    Rank1Scan best;
    best.min_margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i <= grid; ++i) {
      const double theta = kPi * static_cast<double>(i) / static_cast<double>(grid + 1);
      const double m = rank1_bound_margin(n, theta);
      if (m < best.min_margin) {
        best.min_margin = m;
        best.n_at_min = n;
        best.theta_at_min = theta;
      }
    }
    best.evaluations = grid;
    per_n[idx] = best;
  });

  Rank1Scan out = per_n.front();
  out.evaluations = 0;
  for (const auto& r : per_n) {
    out.margin_per_n.push_back(r.min_margin);
    out.theta_per_n.push_back(r.theta_at_min);
    if (r.min_margin < out.min_margin) {
      out.min_margin = r.min_margin;
      out.n_at_min = r.n_at_min;
      out.theta_at_min = r.theta_at_min;
    }
    out.evaluations += r.evaluations;
  }
  return out;
}

std::vector<TorusPoint> alcove_grid(const AlcoveGridSpec& spec) {
  if (spec.points < 4) throw Error(ErrorCode::invalid_argument, "alcove grid needs at least 4 points");
  std::vector<TorusPoint> pts;
  pts.reserve(spec.points);
  std::mt19937_64 rng(spec.seed);

  if (spec.kind == GridKind::alpha0_wall) {
    // theta = (s, -2s, s); the offset keeps s away from exact central points
    for (std::size_t i = 0; i < spec.points; ++i) {
      const double s = -kPi + kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(spec.points);
      pts.push_back(TorusPoint::from_angles({s, -2.0 * s, s}));
    }
    return pts;
  }

  const std::array<Point2, 3> vertex{Point2{0.0, 0.0}, Point2{kTwoPi, 0.0}, Point2{0.0, kTwoPi}};
  auto push = [&](const Point2& t) { pts.push_back(TorusPoint::from_alcove(t[0], t[1])); };

  for (const auto& v : vertex) push(v);
  const std::size_t rest = spec.points - 3;

  // exact wall points
  const std::size_t per_edge = rest * 18 / 100 / 3;
  for (int e = 0; e < 3; ++e) {
    const auto& p = vertex[e];
    const auto& q = vertex[(e + 1) % 3];
    for (std::size_t k = 1; k <= per_edge; ++k) {
      const double s = static_cast<double>(k) / static_cast<double>(per_edge + 1);
      Point2 t = lerp(p, q, s);
      // pin the coordinate that defines the wall
      if (e == 0) t[1] = 0.0;
      if (e == 1) t[1] = kTwoPi - t[0];
      if (e == 2) t[0] = 0.0;
      push(t);
    }
  }

  // corner neighborhoods: radii 1e-9 .. 0.3 of the edge, directions spanning
  // the corner including both edges
  const std::size_t per_corner = rest * 24 / 100 / 3;
  const std::size_t directions = 20;
  const std::size_t radii = std::max<std::size_t>(1, per_corner / directions);
  for (int c = 0; c < 3; ++c) {
    const auto& v = vertex[c];
    const auto& p = vertex[(c + 1) % 3];
    const auto& q = vertex[(c + 2) % 3];
    for (std::size_t ir = 0; ir < radii; ++ir) {
      const double expo = radii == 1 ? -3.0 : -9.0 + (9.0 + std::log10(0.3)) * static_cast<double>(ir) / static_cast<double>(radii - 1);
      const double r = std::pow(10.0, expo);
      for (std::size_t id = 0; id < directions; ++id) {
        const double s = static_cast<double>(id) / static_cast<double>(directions - 1);
        push(lerp(v, lerp(p, q, s), r));
      }
    }
  }

  // near-wall layers: fraction 10^-k of the way toward the opposite vertex
  const std::size_t layers = 10;
  const std::size_t per_layer = std::max<std::size_t>(1, rest * 30 / 100 / 3 / layers);
  for (int e = 0; e < 3; ++e) {
    const auto& p = vertex[e];
    const auto& q = vertex[(e + 1) % 3];
    const auto& opposite = vertex[(e + 2) % 3];
    for (std::size_t k = 1; k <= layers; ++k) {
      const double delta = std::pow(10.0, -static_cast<double>(k));
      for (std::size_t i = 0; i < per_layer; ++i) {
        const double s = (static_cast<double>(i) + 0.5) / static_cast<double>(per_layer);
        push(lerp(lerp(p, q, s), opposite, delta));
      }
    }
  }

  // uniform random interior
  while (pts.size() < spec.points) {
    double x = unit_uniform(rng);
    double y = unit_uniform(rng);
    if (x + y > 1.0) {
      x = 1.0 - x;
      y = 1.0 - y;
    }
    push({kTwoPi * x, kTwoPi * y});
  }
  pts.resize(spec.points);
  return pts;
}

std::vector<DominantWeight> sweep_weights(const SweepConfig& config) {
  if (config.dense_shell < 0 || config.max_shell < config.dense_shell || config.stride < 1)
    throw Error(ErrorCode::invalid_argument, "sweep shells must satisfy 0 <= dense_shell <= max_shell, stride >= 1");
  std::vector<DominantWeight> out;
  for (int n = 0; n <= config.max_shell; ++n)
    for (int a = 0; a <= n; ++a)
      if (n <= config.dense_shell || a % config.stride == 0 || a == n) out.emplace_back(a, n - a);
  return out;
}

SweepReport sweep_constant(const SweepConfig& config) {
  const auto weights = sweep_weights(config);
  const auto grid = alcove_grid(config.grid);

  SweepReport report;
  const std::size_t fit = grid.empty() ? weights.size() : config.max_evaluations / grid.size();
  const std::size_t used = std::min(fit, weights.size());
  report.complete = used == weights.size();

  struct PerWeight {
    RatioRecord best;
    bool center_exact = true;
    bool finite = true;
    std::map<Method, std::size_t> methods;
    std::vector<RatioRecord> records;
  };
  std::vector<PerWeight> results(used);

  parallel_for(used, [&](std::size_t w) {
    const auto& mu = weights[w];
    PerWeight r;
    r.best.ratio = -1.0;
    if (config.keep_all_records) r.records.reserve(grid.size());
    for (const auto& h : grid) {
      const auto rec = ratio(mu, h);
      if (!std::isfinite(rec.ratio) || !(rec.envelope > 0.0)) r.finite = false;
      ++r.methods[rec.method];
      if (better(rec, r.best)) r.best = rec;
      if (config.keep_all_records) r.records.push_back(rec);
    }
    r.center_exact = ratio(mu, TorusPoint{}).ratio == 1.0 / 12.0;
    results[w] = std::move(r);
  });

  report.argmax.ratio = -1.0;
  std::map<int, ShellSummary> shells;
  for (std::size_t w = 0; w < used; ++w) {
    auto& r = results[w];
    const int shell = static_cast<int>(weights[w].a + weights[w].b);
    auto& s = shells[shell];
    s.shell = shell;
    if (s.weights == 0 || better(r.best, s.argmax)) {
      s.argmax = r.best;
      s.max_ratio = r.best.ratio;
    }
    ++s.weights;
    if (better(r.best, report.argmax)) report.argmax = r.best;
    if (shell <= config.dense_shell) report.max_low = std::max(report.max_low, r.best.ratio);
    if (shell >= config.dense_shell) report.max_high = std::max(report.max_high, r.best.ratio);
    report.center_ratio_exact = report.center_ratio_exact && r.center_exact;
    report.all_finite = report.all_finite && r.finite;
    for (const auto& [m, n] : r.methods) report.method_counts[m] += n;
    report.evaluations += grid.size();
    report.per_weight_max.push_back(r.best);
    if (config.keep_all_records)
      report.all_records.insert(report.all_records.end(), r.records.begin(), r.records.end());
  }
  for (auto& [n, s] : shells) report.shells.push_back(s);
  report.c_emp = report.argmax.ratio;
  report.shell_ratio = report.max_low > 0.0 ? report.max_high / report.max_low : 0.0;
  return report;
}

}  // namespace su3
