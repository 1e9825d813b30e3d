#include "su3char.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <new>
#include <string>

#include "su3/bounds.hpp"
#include "su3/character.hpp"
#include "su3/error.hpp"
#include "su3/lpnorms.hpp"
#include "su3/parallel.hpp"
#include "su3/report.hpp"
#include "su3/verify.hpp"

struct su3_report {
  std::string command;
  su3::Json summary;
  su3::Table table;
  su3_status verdict = SU3_OK;
  std::string summary_text;
};

namespace {

thread_local std::string g_last_error;

su3_status to_status(su3::ErrorCode code) {
  switch (code) {
    case su3::ErrorCode::invalid_argument: return SU3_ERR_INVALID_ARGUMENT;
    case su3::ErrorCode::singular_input: return SU3_ERR_SINGULAR;
    case su3::ErrorCode::resource_guard: return SU3_ERR_RESOURCE;
    case su3::ErrorCode::non_convergence: return SU3_ERR_NONCONVERGENCE;
    case su3::ErrorCode::io_failure: return SU3_ERR_IO;
    case su3::ErrorCode::invariant_violation: return SU3_ERR_INVARIANT;
  }
  return SU3_ERR_INTERNAL;
}

template <class F>
su3_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return SU3_OK;
  } catch (const su3::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return SU3_ERR_RESOURCE;
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return SU3_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SU3_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw su3::Error(su3::ErrorCode::invalid_argument, std::string(what) + " must not be NULL");
}

su3::TorusPoint point(const double theta[3]) {
  need(theta, "theta");
  return su3::TorusPoint::from_angles({theta[0], theta[1], theta[2]});
}

su3::DominantWeight weight(int64_t a, int64_t b) { return su3::DominantWeight{a, b}; }

su3::QuadratureSpec quadrature(const su3_quadrature* spec) {
  su3::QuadratureSpec q;
  if (spec) {
    q.base_order = spec->base_order;
    q.max_refinements = spec->max_refinements;
    q.rel_tol = spec->rel_tol;
    q.subdivision = spec->subdivision;
    q.max_evaluations = spec->max_evaluations;
  }
  su3::validate(q);
  return q;
}

su3::Json quadrature_json(const su3::QuadratureSpec& q) {
  su3::Json j;
  j["base_order"] = q.base_order;
  j["max_refinements"] = q.max_refinements;
  j["rel_tol"] = q.rel_tol;
  j["subdivision"] = q.subdivision;
  j["max_evaluations"] = q.max_evaluations;
  j["mapping"] = su3::kTriangleMapping;
  return j;
}

su3_method to_c(su3::Method m) {
  switch (m) {
    case su3::Method::weyl: return SU3_METHOD_WEYL;
    case su3::Method::descent: return SU3_METHOD_DESCENT;
    case su3::Method::schur: return SU3_METHOD_SCHUR;
  }
  return SU3_METHOD_AUTO;
}

su3::CharValue evaluate(const su3::DominantWeight& mu, const su3::TorusPoint& h, su3_method method, int wall) {
  switch (method) {
    case SU3_METHOD_AUTO: return su3::chi_stable(mu, h);
    case SU3_METHOD_WEYL: return su3::chi_weyl(mu, h);
    case SU3_METHOD_DESCENT: return su3::chi_descent(mu, h, wall);
    case SU3_METHOD_SCHUR: return su3::chi_schur(mu, h);
  }
  throw su3::Error(su3::ErrorCode::invalid_argument, "unknown method");
}

std::string method_label(const su3::CharValue& v) {
  std::string s(su3::method_name(v.method));
  if (v.method == su3::Method::descent) s += "(" + std::to_string(v.wall) + ")";
  return s;
}

su3::Json record_json(const su3::RatioRecord& r) {
  su3::Json j;
  j["mu_a"] = r.mu.a;
  j["mu_b"] = r.mu.b;
  j["t1"] = r.theta.t1();
  j["t2"] = r.theta.t2();
  j["abs_chi"] = r.abs_chi;
  j["envelope"] = r.envelope;
  j["ratio"] = r.ratio;
  j["method"] = std::string(su3::method_name(r.method));
  return j;
}

std::vector<su3::Cell> record_row(const su3::RatioRecord& r) {
  return {r.mu.a, r.mu.b, r.theta.t1(), r.theta.t2(), r.abs_chi, r.envelope, r.ratio,
          std::string(su3::method_name(r.method))};
}

su3_report* finish(std::unique_ptr<su3_report> r) {
  r->summary["verdict"] = su3_status_name(r->verdict);
  r->summary_text = su3::dump_json_pretty(r->summary);
  return r.release();
}

su3::Json parse_config(const char* config_json) {
  if (!config_json) return su3::Json::object();
  auto j = su3::Json::parse(config_json);
  if (!j.is_object()) throw su3::Error(su3::ErrorCode::invalid_argument, "config must be a JSON object");
  return j;
}

}  // namespace

extern "C" {

const char* su3_last_error(void) { return g_last_error.c_str(); }

const char* su3_status_name(su3_status status) {
  switch (status) {
    case SU3_OK: return "ok";
    case SU3_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case SU3_ERR_SINGULAR: return "singular_input";
    case SU3_ERR_RESOURCE: return "resource_guard";
    case SU3_ERR_NONCONVERGENCE: return "non_convergence";
    case SU3_ERR_IO: return "io_failure";
    case SU3_ERR_INVARIANT: return "invariant_violation";
    case SU3_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* su3_version(void) { return "1.0.0"; }

void su3_set_threads(unsigned threads) { su3::set_thread_count(threads); }
unsigned su3_threads(void) { return su3::thread_count(); }

su3_status su3_dim(int64_t a, int64_t b, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::dim(weight(a, b));
  });
}

su3_status su3_chi(int64_t a, int64_t b, const double theta[3], su3_method method, int wall, su3_char_value* out) {
  return guarded([&] {
    need(out, "out");
    const auto v = evaluate(weight(a, b), point(theta), method, wall);
    *out = {v.value.real(), v.value.imag(), to_c(v.method), v.wall, v.condition};
  });
}

su3_status su3_fold_to_alcove(const double theta_in[3], double theta_out[3], size_t* steps) {
  return guarded([&] {
    need(theta_in, "theta_in");
    need(theta_out, "theta_out");
    const auto r = su3::fold_to_alcove({theta_in[0], theta_in[1], theta_in[2]});
    for (int i = 0; i < 3; ++i) theta_out[i] = r.point.theta()[i];
    if (steps) *steps = r.log.size();
  });
}

su3_status su3_envelope(int64_t a, int64_t b, const double theta[3], double* min_form, double* product_form,
                        double per_weyl_terms[6]) {
  return guarded([&] {
    const auto e = su3::envelope_min(weight(a, b), point(theta));
    if (min_form) *min_form = e.min_form;
    if (product_form) *product_form = e.product_form;
    if (per_weyl_terms) std::copy(e.per_weyl_terms.begin(), e.per_weyl_terms.end(), per_weyl_terms);
  });
}

su3_status su3_c_of_H(const double theta[3], double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::c_of_H(point(theta));
  });
}

su3_status su3_pointwise_bound(int64_t a, int64_t b, const double theta[3], double* bound, double* previous) {
  return guarded([&] {
    const auto r = su3::pointwise_singular_bound(weight(a, b), point(theta));
    if (bound) *bound = r.bound;
    if (previous) *previous = r.previous;
  });
}

su3_status su3_rank1_margin(int64_t n, double theta, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::rank1_bound_margin(n, theta);
  });
}

su3_status su3_predicted_singular(int64_t a, int64_t b, double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::predicted_singular_bound(weight(a, b), p);
  });
}

su3_status su3_predicted_regular(int64_t a, int64_t b, double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::predicted_regular_bound(weight(a, b), p);
  });
}

su3_status su3_predicted_dimension(int64_t a, int64_t b, double p, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::predicted_dimension_bound(weight(a, b), p);
  });
}

su3_status su3_I_bound(double p, double a, double b, double c, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = su3::I_bound(p, a, b, c);
  });
}

void su3_quadrature_default(su3_quadrature* spec) {
  if (!spec) return;
  const su3::QuadratureSpec q;
  *spec = {q.base_order, q.max_refinements, q.rel_tol, q.subdivision, q.max_evaluations};
}

su3_status su3_I_numeric(double p, double a, double b, double c, const su3_quadrature* spec, double* value,
                         int* converged) {
  return guarded([&] {
    need(value, "value");
    const auto r = su3::I_numeric(p, a, b, c, quadrature(spec));
    *value = r.value;
    if (converged) *converged = r.converged ? 1 : 0;
  });
}

void su3_sweep_config_default(su3_sweep_config* config) {
  if (!config) return;
  const su3::SweepConfig c;
  *config = {c.dense_shell, c.max_shell,        c.stride, SU3_GRID_STRATIFIED, c.grid.points,
             c.grid.seed,   c.max_evaluations, 0,        1.05};
}

su3_status su3_run_sweep(const su3_sweep_config* config, su3_report** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    su3::SweepConfig c;
    c.dense_shell = config->dense_shell;
    c.max_shell = config->max_shell;
    c.stride = config->stride;
    c.grid.kind = config->grid == SU3_GRID_ALPHA0_WALL ? su3::GridKind::alpha0_wall : su3::GridKind::stratified;
    c.grid.points = config->points;
    c.grid.seed = config->seed;
    c.max_evaluations = config->max_evaluations;
    c.keep_all_records = config->keep_all_records != 0;
    const auto rep = su3::sweep_constant(c);

    auto r = std::make_unique<su3_report>();
    r->command = "verify-envelope";
    auto& s = r->summary;
    s["convention"] = std::string(su3::kConvention);
    s["complete"] = rep.complete;
    s["c_emp"] = rep.c_emp;
    s["argmax"] = record_json(rep.argmax);
    s["max_low"] = rep.max_low;
    s["max_high"] = rep.max_high;
    s["shell_ratio"] = rep.shell_ratio;
    s["shell_slack"] = config->shell_slack;
    s["center_ratio_exact"] = rep.center_ratio_exact;
    s["all_finite"] = rep.all_finite;
    s["weights"] = rep.per_weight_max.size();
    s["evaluations"] = rep.evaluations;
    su3::Json methods = su3::Json::object();
    for (const auto m : {su3::Method::weyl, su3::Method::descent, su3::Method::schur}) {
      const auto it = rep.method_counts.find(m);
      methods[std::string(su3::method_name(m))] = it == rep.method_counts.end() ? 0 : it->second;
    }
    s["method_counts"] = methods;
    su3::Json shells = su3::Json::array();
    for (const auto& sh : rep.shells) {
      su3::Json j;
      j["shell"] = sh.shell;
      j["max_ratio"] = sh.max_ratio;
      j["mu_a"] = sh.argmax.mu.a;
      j["mu_b"] = sh.argmax.mu.b;
      j["weights"] = sh.weights;
      shells.push_back(j);
    }
    s["shells"] = shells;

    r->table.columns = {"mu_a", "mu_b", "t1", "t2", "abs_chi", "envelope", "ratio", "method"};
    for (const auto& rec : c.keep_all_records ? rep.all_records : rep.per_weight_max)
      r->table.rows.push_back(record_row(rec));

    const bool stable = c.max_shell == c.dense_shell || rep.shell_ratio <= config->shell_slack;
    if (!rep.complete)
      r->verdict = SU3_ERR_RESOURCE;
    else if (!rep.all_finite || !rep.center_ratio_exact || !stable)
      r->verdict = SU3_ERR_INVARIANT;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_lp(int64_t a, int64_t b, const double* p, size_t count, const su3_quadrature* spec,
                      su3_report** out) {
  return guarded([&] {
    need(p, "p");
    need(out, "out");
    if (count == 0) throw su3::Error(su3::ErrorCode::invalid_argument, "at least one p is required");
    const auto q = quadrature(spec);
    const auto mu = weight(a, b);

    auto r = std::make_unique<su3_report>();
    r->command = "lp";
    r->table.columns = {"mu_a",      "mu_b",   "p",           "norm",        "normalizer",
                        "integral",  "predicted_singular",    "predicted_regular", "predicted_dimension",
                        "converged", "levels", "subdivision", "last_delta", "evaluations"};
    su3::Json reports = su3::Json::array();
    bool converged = true, orthonormal = true;
    for (size_t i = 0; i < count; ++i) {
      const auto rep = su3::haar_lp_norm(mu, p[i], q);
      su3::Json j;
      j["mu_a"] = a;
      j["mu_b"] = b;
      j["p"] = rep.p;
      j["norm"] = rep.norm;
      j["normalizer"] = rep.normalizer;
      j["integral"] = rep.integral;
      j["predicted_singular"] = rep.predicted_singular;
      j["predicted_regular"] = rep.predicted_regular;
      j["predicted_dimension"] = rep.predicted_dimension;
      j["converged"] = rep.converged;
      j["levels"] = rep.levels;
      j["subdivision"] = rep.subdivision;
      j["last_delta"] = rep.last_delta;
      j["evaluations"] = rep.evaluations;
      reports.push_back(j);
      r->table.rows.push_back({a, b, rep.p, rep.norm, rep.normalizer, rep.integral, rep.predicted_singular,
                               rep.predicted_regular, rep.predicted_dimension,
                               static_cast<std::int64_t>(rep.converged), static_cast<std::int64_t>(rep.levels),
                               static_cast<std::int64_t>(rep.subdivision), rep.last_delta,
                               static_cast<std::int64_t>(rep.evaluations)});
      converged = converged && rep.converged;
      if (rep.p == 2.0 && std::abs(rep.norm - 1.0) > 10.0 * q.rel_tol) orthonormal = false;
    }
    r->summary["quadrature"] = quadrature_json(q);
    r->summary["reports"] = reports;
    r->summary["norm"] = reports.front()["norm"];
    r->summary["all_converged"] = converged;
    r->summary["orthonormal"] = orthonormal;
    if (!orthonormal)
      r->verdict = SU3_ERR_INVARIANT;
    else if (!converged)
      r->verdict = SU3_ERR_NONCONVERGENCE;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_scaling(su3_family family, int64_t b0, double p, const int64_t* n_values, size_t count,
                           const su3_quadrature* spec, su3_report** out) {
  return guarded([&] {
    need(n_values, "n_values");
    need(out, "out");
    su3::Family f;
    switch (family) {
      case SU3_FAMILY_AXIS: f = su3::Family::axis; break;
      case SU3_FAMILY_DIAGONAL: f = su3::Family::diagonal; break;
      case SU3_FAMILY_FIXED_B: f = su3::Family::fixed_b; break;
      default: throw su3::Error(su3::ErrorCode::invalid_argument, "unknown family");
    }
    const auto q = quadrature(spec);
    const auto fit = su3::scaling_fit(f, p, std::vector<std::int64_t>(n_values, n_values + count), q, b0);

    auto r = std::make_unique<su3_report>();
    r->command = "scaling";
    auto& s = r->summary;
    s["family"] = su3::family_name(f);
    s["b0"] = b0;
    s["p"] = p;
    s["quadrature"] = quadrature_json(q);
    s["slope"] = fit.slope;
    s["intercept"] = fit.intercept;
    s["residual"] = fit.residual;
    s["trimmed_slope"] = fit.trimmed_slope;
    s["trimmed_residual"] = fit.trimmed_residual;
    s["trimmed_dropped"] = fit.trimmed_dropped;
    double k_prime = 0.0;
    for (const auto& row : fit.rows) k_prime = std::max(k_prime, row.ratio);
    s["k_prime"] = k_prime;
    s["all_converged"] = fit.all_converged;

    r->table.columns = {"N", "mu_a", "mu_b", "p", "norm", "predicted", "ratio", "converged", "last_delta"};
    for (const auto& row : fit.rows)
      r->table.rows.push_back({row.n, row.mu.a, row.mu.b, row.p, row.norm, row.predicted, row.ratio,
                               static_cast<std::int64_t>(row.converged), row.last_delta});
    if (!fit.all_converged) r->verdict = SU3_ERR_NONCONVERGENCE;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_prop(double p, const double* magnitudes, size_t count, double shell_limit,
                        const su3_quadrature* spec, su3_report** out) {
  return guarded([&] {
    need(magnitudes, "magnitudes");
    need(out, "out");
    const auto q = quadrature(spec);
    const auto pc = su3::prop_check(p, std::vector<double>(magnitudes, magnitudes + count), q);

    auto r = std::make_unique<su3_report>();
    r->command = "prop-i";
    auto& s = r->summary;
    s["p"] = p;
    s["quadrature"] = quadrature_json(q);
    s["k"] = pc.k;
    su3::Json shells = su3::Json::array();
    for (const auto& sh : pc.shells) shells.push_back({{"c", sh.c}, {"max_ratio", sh.max_ratio}});
    s["shells"] = shells;
    s["shell_ratio"] = pc.shell_ratio;
    s["shell_limit"] = shell_limit;
    s["consecutive_ratios"] = pc.consecutive_ratios;
    s["all_converged"] = pc.all_converged;

    r->table.columns = {"p", "a", "b", "c", "numeric", "bound", "ratio", "converged"};
    for (const auto& row : pc.rows)
      r->table.rows.push_back(
          {row.p, row.a, row.b, row.c, row.numeric, row.bound, row.ratio, static_cast<std::int64_t>(row.converged)});
    if (pc.shell_ratio > shell_limit)
      r->verdict = SU3_ERR_INVARIANT;
    else if (!pc.all_converged)
      r->verdict = SU3_ERR_NONCONVERGENCE;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_rank1(int64_t n_max, size_t grid, su3_report** out) {
  return guarded([&] {
    need(out, "out");
    const auto scan = su3::rank1_scan(n_max, grid);
    auto r = std::make_unique<su3_report>();
    r->command = "rank1";
    auto& s = r->summary;
    s["n_max"] = n_max;
    s["grid"] = grid;
    s["min_margin"] = scan.min_margin;
    s["n_at_min"] = scan.n_at_min;
    s["theta_at_min"] = scan.theta_at_min;
    s["evaluations"] = scan.evaluations;
    s["tolerance"] = -1e-12;
    r->table.columns = {"n", "min_margin", "theta_at_min"};
    for (std::size_t n = 0; n < scan.margin_per_n.size(); ++n)
      r->table.rows.push_back({static_cast<std::int64_t>(n), scan.margin_per_n[n], scan.theta_per_n[n]});
    if (scan.min_margin < -1e-12) r->verdict = SU3_ERR_INVARIANT;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_oracle_diff(int64_t max_label, size_t points, uint64_t seed, su3_report** out) {
  return guarded([&] {
    need(out, "out");
    su3::OracleDiffConfig c;
    c.max_label = max_label;
    c.points = points;
    c.seed = seed;
    const auto rep = su3::oracle_diff(c);

    constexpr double kWeylTol = 1e-8, kDescentTol = 1e-6;
    auto r = std::make_unique<su3_report>();
    r->command = "oracle-diff";
    auto& s = r->summary;
    s["max_label"] = max_label;
    s["points"] = points;
    s["seed"] = seed;
    s["regular_wall"] = c.regular_wall;
    s["near_wall"] = c.near_wall;
    s["max_weyl_vs_schur"] = rep.max_weyl_vs_schur;
    s["max_descent_vs_schur"] = rep.max_descent_vs_schur;
    s["weyl_tolerance"] = kWeylTol;
    s["descent_tolerance"] = kDescentTol;
    r->table.columns = {"mu_a", "mu_b", "weyl_vs_schur", "descent0_vs_schur", "descent1_vs_schur",
                        "descent2_vs_schur"};
    for (const auto& row : rep.rows)
      r->table.rows.push_back({row.mu.a, row.mu.b, row.weyl_vs_schur, row.descent_vs_schur[0],
                               row.descent_vs_schur[1], row.descent_vs_schur[2]});
    if (!(rep.max_weyl_vs_schur <= kWeylTol) || !(rep.max_descent_vs_schur <= kDescentTol))
      r->verdict = SU3_ERR_INVARIANT;
    *out = finish(std::move(r));
  });
}

su3_status su3_run_eval(int64_t a, int64_t b, const double* theta, size_t n, su3_method method, int wall,
                        su3_report** out) {
  return guarded([&] {
    need(theta, "theta");
    need(out, "out");
    if (n == 0) throw su3::Error(su3::ErrorCode::invalid_argument, "at least one point is required");
    const auto mu = weight(a, b);
    auto r = std::make_unique<su3_report>();
    r->command = "eval";
    r->table.columns = {"mu_a", "mu_b", "theta1", "theta2", "theta3", "t1", "t2", "re", "im", "abs", "method",
                        "condition"};
    su3::Json values = su3::Json::array();
    for (size_t i = 0; i < n; ++i) {
      const auto h = point(theta + 3 * i);
      const auto v = evaluate(mu, h, method, wall);
      su3::Json j;
      j["theta"] = {h.theta()[0], h.theta()[1], h.theta()[2]};
      j["re"] = v.value.real();
      j["im"] = v.value.imag();
      j["abs"] = std::abs(v.value);
      j["method"] = method_label(v);
      j["condition"] = v.condition;
      values.push_back(j);
      r->table.rows.push_back({a, b, h.theta()[0], h.theta()[1], h.theta()[2], h.t1(), h.t2(), v.value.real(),
                               v.value.imag(), std::abs(v.value), method_label(v), v.condition});
    }
    r->summary["mu_a"] = a;
    r->summary["mu_b"] = b;
    r->summary["dim"] = su3::dim(mu);
    r->summary["values"] = values;
    *out = finish(std::move(r));
  });
}

su3_status su3_report_verdict(const su3_report* report) { return report ? report->verdict : SU3_ERR_INVALID_ARGUMENT; }

const char* su3_report_command(const su3_report* report) { return report ? report->command.c_str() : ""; }

const char* su3_report_summary(const su3_report* report) { return report ? report->summary_text.c_str() : ""; }

size_t su3_report_rows(const su3_report* report) { return report ? report->table.rows.size() : 0; }

su3_status su3_report_get(const su3_report* report, const char* pointer, double* out) {
  return guarded([&] {
    need(report, "report");
    need(pointer, "pointer");
    need(out, "out");
    const su3::Json::json_pointer ptr(pointer);
    if (!report->summary.contains(ptr))
      throw su3::Error(su3::ErrorCode::invalid_argument, std::string("no summary field ") + pointer);
    const auto& v = report->summary.at(ptr);
    if (v.is_boolean())
      *out = v.get<bool>() ? 1.0 : 0.0;
    else if (v.is_number())
      *out = v.get<double>();
    else
      throw su3::Error(su3::ErrorCode::invalid_argument, std::string("summary field ") + pointer + " is not numeric");
  });
}

su3_status su3_report_write_csv(const su3_report* report, const char* path, const char* config_json) {
  return guarded([&] {
    need(report, "report");
    need(path, "path");
    su3::write_csv(path, report->command, parse_config(config_json), report->table);
  });
}

su3_status su3_report_write_json(const su3_report* report, const char* path, const char* config_json) {
  return guarded([&] {
    need(report, "report");
    need(path, "path");
    su3::write_json(path, report->command, parse_config(config_json), report->summary);
  });
}

void su3_report_free(su3_report* report) { delete report; }

}  // extern "C"
