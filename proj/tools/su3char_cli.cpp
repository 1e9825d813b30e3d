#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "su3char.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit { kOk = 0, kIo = 1, kUsage = 2, kResource = 3, kNonConvergence = 4, kInvariant = 5 };

int exit_code(su3_status s) {
  switch (s) {
    case SU3_OK: return kOk;
    case SU3_ERR_INVALID_ARGUMENT:
    case SU3_ERR_SINGULAR: return kUsage;
    case SU3_ERR_RESOURCE: return kResource;
    case SU3_ERR_NONCONVERGENCE: return kNonConvergence;
    case SU3_ERR_INVARIANT: return kInvariant;
    default: return kIo;
  }
}

int diagnose(int code, const std::string& kind, const std::string& message, const std::string& command) {
  Json d;
  d["error"] = kind;
  d["command"] = command;
  d["message"] = message;
  d["exit_code"] = code;
  std::cerr << d.dump() << "\n";
  return code;
}

int fail(su3_status s, const std::string& command) {
  return diagnose(exit_code(s), su3_status_name(s), su3_last_error(), command);
}

struct Common {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string out_dir = ".";
  std::string name;
  bool no_files = false;
};

struct Quadrature {
  su3_quadrature q{};
  Quadrature() { su3_quadrature_default(&q); }

  void add(CLI::App* app) {
    app->add_option("--base-order", q.base_order, "Gauss-Legendre points per axis")->capture_default_str();
    app->add_option("--max-refinements", q.max_refinements, "subdivision doublings")->capture_default_str();
    app->add_option("--rel-tol", q.rel_tol, "relative tolerance")->capture_default_str();
    app->add_option("--subdivision", q.subdivision, "triangles per alcove edge, 0 = automatic")->capture_default_str();
    app->add_option("--max-evaluations", q.max_evaluations, "integrand evaluation budget")->capture_default_str();
  }

  Json json() const {
    return {{"base_order", q.base_order},
            {"max_refinements", q.max_refinements},
            {"rel_tol", q.rel_tol},
            {"subdivision", q.subdivision},
            {"max_evaluations", q.max_evaluations}};
  }
};

// Writes the artifacts, prints the summary and turns the verdict into an exit code.
int emit(su3_report* report, const Json& config, const Common& common) {
  const std::string command = su3_report_command(report);
  const std::string cfg = config.dump();
  int code = kOk;
  if (!common.no_files) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(common.out_dir, ec);
    const auto base = (fs::path(common.out_dir) / (common.name.empty() ? command : common.name)).string();
    for (const auto& [ext, writer] : std::vector<std::pair<std::string, decltype(&su3_report_write_csv)>>{
             {".csv", &su3_report_write_csv}, {".json", &su3_report_write_json}}) {
      const auto s = writer(report, (base + ext).c_str(), cfg.c_str());
      if (s != SU3_OK) {
        code = fail(s, command);
        break;
      }
    }
  }
  std::cout << su3_report_summary(report) << "\n";
  const auto verdict = su3_report_verdict(report);
  su3_report_free(report);
  if (code != kOk) return code;
  if (verdict != SU3_OK)
    return diagnose(exit_code(verdict), su3_status_name(verdict), "run finished with a failed check", command);
  return kOk;
}

int run(su3_status s, su3_report* report, const Json& config, const Common& common, const std::string& command) {
  if (s != SU3_OK) return fail(s, command);
  return emit(report, config, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters of SU(3): evaluation, envelope certification and Lp norms"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML file with option values; flags on the command line take precedence");

  Common common;
  app.add_option("--seed", common.seed, "random seed")->capture_default_str();
  app.add_option("--threads", common.threads, "worker threads, 0 = SU3_THREADS or hardware")->capture_default_str();
  app.add_option("--out-dir", common.out_dir, "directory for CSV and JSON artifacts")->capture_default_str();
  app.add_option("--name", common.name, "artifact base name (default: the subcommand)");
  app.add_flag("--no-files", common.no_files, "print the summary only");

  // eval
  std::vector<std::int64_t> mu{0, 0};
  std::vector<double> theta;
  std::string method = "auto";
  int wall = 0;
  auto* eval = app.add_subcommand("eval", "evaluate one character at torus points");
  eval->add_option("--mu", mu, "Dynkin labels a,b")->delimiter(',')->expected(2)->required();
  eval->add_option("--theta", theta, "angle triple(s) t1,t2,t3 summing to zero; repeat for more points")
      ->delimiter(',')
      ->required();
  eval->add_option("--method", method, "auto, weyl, descent or schur")
      ->check(CLI::IsMember({"auto", "weyl", "descent", "schur"}))
      ->capture_default_str();
  eval->add_option("--wall", wall, "wall index for --method descent")->check(CLI::Range(0, 2))->capture_default_str();

  // verify-envelope
  su3_sweep_config sweep;
  su3_sweep_config_default(&sweep);
  std::string grid = "stratified";
  bool all_records = false;
  auto* venv = app.add_subcommand("verify-envelope", "sweep |chi| / envelope over weights and alcove points");
  venv->add_option("--dense-shell", sweep.dense_shell, "all weights with a+b up to this")->capture_default_str();
  venv->add_option("--max-shell", sweep.max_shell, "largest a+b swept")->capture_default_str();
  venv->add_option("--stride", sweep.stride, "subsampling stride above the dense shell")->capture_default_str();
  venv->add_option("--grid", grid, "stratified or alpha0-wall")
      ->check(CLI::IsMember({"stratified", "alpha0-wall"}))
      ->capture_default_str();
  venv->add_option("--points", sweep.points, "alcove points")->capture_default_str();
  venv->add_option("--max-evaluations", sweep.max_evaluations, "character evaluation budget")->capture_default_str();
  venv->add_option("--shell-slack", sweep.shell_slack, "allowed high/low shell ratio")->capture_default_str();
  venv->add_flag("--all-records", all_records, "write every record instead of per-weight maxima");

  // lp
  std::vector<std::int64_t> lp_mu{0, 0};
  std::vector<double> lp_p{2.0};
  Quadrature lp_q;
  auto* lp = app.add_subcommand("lp", "Lp norm of a character over SU(3)");
  lp->add_option("--mu", lp_mu, "Dynkin labels a,b")->delimiter(',')->expected(2)->required();
  lp->add_option("--p", lp_p, "exponent(s), comma separated")->delimiter(',')->capture_default_str();
  lp_q.add(lp);

  // scaling
  std::string family = "axis";
  std::int64_t b0 = 0;
  double scaling_p = 4.0;
  std::vector<std::int64_t> ns{8, 16, 32, 64, 128, 256, 512};
  Quadrature sc_q;
  auto* scaling = app.add_subcommand("scaling", "fit log norm against log N along a weight family");
  scaling->add_option("--family", family, "axis (N,0), diagonal (N,N) or fixed-b (N,b0)")
      ->check(CLI::IsMember({"axis", "diagonal", "fixed-b"}))
      ->capture_default_str();
  scaling->add_option("--b0", b0, "second label of the fixed-b family")->capture_default_str();
  scaling->add_option("--p", scaling_p, "exponent")->capture_default_str();
  scaling->add_option("--n", ns, "family parameters, comma separated")->delimiter(',')->capture_default_str();
  sc_q.add(scaling);

  // prop-i
  double prop_p = 4.0;
  std::vector<double> magnitudes{1, 4, 16, 64, 256};
  double shell_limit = 1.2;
  Quadrature pr_q;
  auto* prop = app.add_subcommand("prop-i", "compare the alcove integral with its majorant");
  prop->add_option("--p", prop_p, "exponent")->capture_default_str();
  prop->add_option("--magnitudes", magnitudes, "values for a, b, c")->delimiter(',')->capture_default_str();
  prop->add_option("--shell-limit", shell_limit, "allowed upper/lower shell ratio")->capture_default_str();
  pr_q.add(prop);

  // rank1
  std::int64_t n_max = 200;
  std::size_t rank1_grid = 10000;
  auto* rank1 = app.add_subcommand("rank1", "check the SU(2) character bound on a theta grid");
  rank1->add_option("--n-max", n_max, "largest n")->capture_default_str();
  rank1->add_option("--grid", rank1_grid, "interior theta points in (0, pi)")->capture_default_str();

  // oracle-diff
  std::int64_t max_label = 12;
  std::size_t oracle_points = 100;
  auto* oracle = app.add_subcommand("oracle-diff", "compare Weyl and descent values with the Schur oracle");
  oracle->add_option("--max-label", max_label, "a, b up to this")->capture_default_str();
  oracle->add_option("--points", oracle_points, "points per check")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return diagnose(kUsage, "parse_error", e.what(), "");
  }

  if (common.threads) su3_set_threads(common.threads);
  const std::string command = app.get_subcommands().front()->get_name();
  su3_report* report = nullptr;
  Json config;

  if (command == "eval") {
    if (theta.empty() || theta.size() % 3 != 0)
      return diagnose(kUsage, "parse_error", "--theta needs groups of three angles", command);
    static const std::map<std::string, su3_method> methods{
        {"auto", SU3_METHOD_AUTO}, {"weyl", SU3_METHOD_WEYL}, {"descent", SU3_METHOD_DESCENT}, {"schur", SU3_METHOD_SCHUR}};
    config = {{"mu", mu}, {"theta", theta}, {"method", method}, {"wall", wall}};
    const auto s = su3_run_eval(mu[0], mu[1], theta.data(), theta.size() / 3, methods.at(method), wall, &report);
    return run(s, report, config, common, command);
  }
  if (command == "verify-envelope") {
    sweep.grid = grid == "alpha0-wall" ? SU3_GRID_ALPHA0_WALL : SU3_GRID_STRATIFIED;
    sweep.seed = common.seed;
    sweep.keep_all_records = all_records;
    config = {{"dense_shell", sweep.dense_shell}, {"max_shell", sweep.max_shell},
              {"stride", sweep.stride},           {"grid", grid},
              {"points", sweep.points},           {"seed", sweep.seed},
              {"max_evaluations", sweep.max_evaluations}, {"shell_slack", sweep.shell_slack},
              {"all_records", all_records}};
    const auto s = su3_run_sweep(&sweep, &report);
    return run(s, report, config, common, command);
  }
  if (command == "lp") {
    config = {{"mu", lp_mu}, {"p", lp_p}, {"quadrature", lp_q.json()}};
    const auto s = su3_run_lp(lp_mu[0], lp_mu[1], lp_p.data(), lp_p.size(), &lp_q.q, &report);
    return run(s, report, config, common, command);
  }
  if (command == "scaling") {
    const su3_family f = family == "axis" ? SU3_FAMILY_AXIS
                         : family == "diagonal" ? SU3_FAMILY_DIAGONAL
                                                : SU3_FAMILY_FIXED_B;
    config = {{"family", family}, {"b0", b0}, {"p", scaling_p}, {"n", ns}, {"quadrature", sc_q.json()}};
    const auto s = su3_run_scaling(f, b0, scaling_p, ns.data(), ns.size(), &sc_q.q, &report);
    return run(s, report, config, common, command);
  }
  if (command == "prop-i") {
    config = {{"p", prop_p}, {"magnitudes", magnitudes}, {"shell_limit", shell_limit}, {"quadrature", pr_q.json()}};
    const auto s = su3_run_prop(prop_p, magnitudes.data(), magnitudes.size(), shell_limit, &pr_q.q, &report);
    return run(s, report, config, common, command);
  }
  if (command == "rank1") {
    config = {{"n_max", n_max}, {"grid", rank1_grid}};
    const auto s = su3_run_rank1(n_max, rank1_grid, &report);
    return run(s, report, config, common, command);
  }
  config = {{"max_label", max_label}, {"points", oracle_points}, {"seed", common.seed}};
  const auto s = su3_run_oracle_diff(max_label, oracle_points, common.seed, &report);
  return run(s, report, config, common, command);
}
