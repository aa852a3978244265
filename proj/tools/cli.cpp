#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <map>
#include <sstream>
#include <tuple>

#include "CLI11.hpp"
#include "specvar/bounds.hpp"
#include "specvar/error.hpp"
#include "specvar/figures.hpp"
#include "specvar/json_io.hpp"
#include "specvar/suites.hpp"
#include "specvar/svg.hpp"

namespace specvar::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

template <class T>
T parse_number(const std::string& s, const char* what) {
  std::size_t used = 0;
  T v{};
  try {
    if constexpr (std::is_same_v<T, double>) {
      v = std::stod(s, &used);
    } else if constexpr (std::is_same_v<T, int>) {
      v = std::stoi(s, &used);
    } else {
      if (!s.empty() && s.front() == '-') throw std::invalid_argument("negative");
      v = std::stoull(s, &used);
    }
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ConfigError(std::string("invalid ") + what + " '" + s + "'");
  return v;
}

// Output paths must point into an existing directory.
void check_output_path(const std::string& path) {
  if (path.empty()) return;
  const fs::path parent = fs::absolute(path).parent_path();
  if (!fs::is_directory(parent)) throw ConfigError("output directory does not exist: " + parent.string());
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

struct SeedOption {
  std::string text;

  std::uint64_t resolve() const {
    if (!text.empty()) return parse_number<unsigned long long>(text, "seed");
    if (const char* env = std::getenv("SPECVAR_SEED"); env && *env) {
      return parse_number<unsigned long long>(env, "SPECVAR_SEED");
    }
    return 0;
  }
};

// ---------------------------------------------------------------------------

struct BoundArgs {
  std::string a;
  std::string b;
  std::string out;
  std::optional<int> m;
  bool estimate_m = false;
  double tol = 1e-9;
  double min_poly_tol = 1e-8;
  std::string constant = "bek";
};

int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  check_output_path(args.out);
  const ConstantChoice constant = ConstantChoice::parse(args.constant);
  const ComplexMatrix a = read_matrix_file(args.a);
  const ComplexMatrix b = read_matrix_file(args.b);
  ReportOptions opt;
  opt.m = args.m;
  opt.estimate_m = args.estimate_m;
  opt.tolerance = args.tol;
  opt.min_poly_tol = args.min_poly_tol;
  const BoundReport rep = make_bound_report(a, b, opt);
  json j = to_json(rep, constant);
  j["minPolyTolerance"] = args.min_poly_tol;
  j["mSource"] = args.m ? "override" : (args.estimate_m ? "estimated" : "dimension");
  emit(args.out, j.dump(2) + "\n", out);
  for (const auto& v : rep.verdicts) {
    if (!v.pass) err << "bound violated: " << v.bound << '\n';
  }
  return rep.all_pass() ? kOk : kViolation;
}

struct LocalizeArgs {
  std::string matrix;
  int random_n = 6;
  std::string preset;
  std::optional<double> eps;
  std::optional<double> norm_a;
  std::string mode = "both";
  std::string constant;
  bool use_norm_b = false;
  std::string svg;
  std::string json_path;
  std::string csv;
  SeedOption seed;
};

int cmd_localize(const LocalizeArgs& args, std::ostream& out, std::ostream& err) {
  for (const auto* p : {&args.svg, &args.json_path, &args.csv}) check_output_path(*p);
  SceneOptions opt;
  opt.n = args.random_n;
  opt.eps = 1e-10;
  opt.norm_a = 0.3;
  opt.seed = args.seed.resolve();
  opt.label = "localize";
  if (!args.preset.empty()) {
    static const std::map<std::string, std::tuple<int, double, double, const char*>> presets = {
        {"fig1a", {6, 1e-10, 0.3, "bek"}},
        {"fig1b", {6, 1e-10, 0.9, "bek"}},
        {"fig3a", {12, 1e-18, 0.5, "2.6543"}},
        {"fig3b", {12, 1e-18, 0.95, "2.6543"}}};
    const auto it = presets.find(args.preset);
    if (it == presets.end()) throw ConfigError("unknown preset '" + args.preset + "'");
    const auto& [n, eps, norm, c] = it->second;
    opt.n = n;
    opt.eps = eps;
    opt.norm_a = norm;
    opt.constant = ConstantChoice::parse(c);
    opt.label = args.preset;
  }
  if (args.eps) opt.eps = *args.eps;
  if (args.norm_a) opt.norm_a = *args.norm_a;
  if (!args.constant.empty()) opt.constant = ConstantChoice::parse(args.constant);
  opt.use_norm_b = args.use_norm_b;
  if (!(opt.eps >= 0.0)) throw ConfigError("--eps must be non-negative");
  if (!args.matrix.empty()) {
    opt.a = read_matrix_file(args.matrix);
  } else if (!(opt.norm_a > 0.0 && opt.norm_a <= 1.0)) {
    throw ConfigError("--norm-a must lie in (0, 1]");
  }
  const bool want_euclid = args.mode != "hyper";
  const bool want_hyper = args.mode != "euclid";
  if (want_hyper) {
    const double na = opt.a ? op_norm(*opt.a) : opt.norm_a;
    if (!(na + opt.eps < 1.0)) {
      throw ConfigError("hyperbolic mode needs ||A|| + eps < 1 (use --mode euclid)");
    }
  }

  LocalizationScene scene = make_scene(opt);
  if (!want_euclid) {
    scene.euclid.clear();
    scene.euclid_contains_b.clear();
  }
  if (!want_hyper) {
    scene.hyper.clear();
    scene.hyper_contains_b.clear();
  }

  const std::string twin = to_json(scene).dump(2) + "\n";
  if (!args.svg.empty()) emit(args.svg, render_svg(scene), out);
  if (!args.csv.empty()) emit(args.csv, to_csv(std::vector<LocalizationScene>{scene}), out);
  if (!args.json_path.empty()) {
    emit(args.json_path, twin, out);
  } else if (args.svg.empty() && args.csv.empty()) {
    out << twin;
  }
  if (scene.floor_applied) {
    err << "note: eps below " << kPerturbationFloor << ", sigma(B) taken as sigma(A)\n";
  }
  if (!hyper_disks_sound(scene)) {
    err << "a non-vacuous hyperbolic disk misses every eigenvalue of B\n";
    return kViolation;
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all";
  int trials = 100;
  SeedOption seed;
  int threads = 1;
  int n = 0;
  std::optional<double> eps;
  std::optional<double> norm_a;
  std::string constant = "bek";
  std::string out;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  check_output_path(args.out);
  ExperimentConfig cfg;
  cfg.suite = args.suite;
  cfg.trials = args.trials;
  cfg.masterSeed = args.seed.resolve();
  cfg.threads = args.threads;
  cfg.n = args.n;
  cfg.epsilon = args.eps;
  cfg.targetNormA = args.norm_a;
  cfg.constant = ConstantChoice::parse(args.constant);
  cfg.validate();
  const SuiteReport rep = run_suite(cfg);
  emit(args.out, to_json(rep).dump(2) + "\n", out);
  err << summarize(rep);
  return rep.total_violations() == 0 ? kOk : kViolation;
}

int cmd_table_alpha(const std::string& list, const std::string& path, std::ostream& out) {
  check_output_path(path);
  std::vector<int> ns;
  if (list.empty()) {
    ns = default_alpha_ns();
  } else {
    for (const auto& s : split_list(list)) ns.push_back(parse_number<int>(s, "n"));
    if (ns.empty()) throw ConfigError("empty n list");
  }
  emit(path, to_csv(table_alpha(ns)), out);
  return kOk;
}

int cmd_figure_k(const std::string& list, int n_max, const std::string& path, std::ostream& out) {
  check_output_path(path);
  std::vector<double> qs;
  for (const auto& s : split_list(list)) qs.push_back(parse_number<double>(s, "q"));
  if (qs.empty()) throw ConfigError("empty q list");
  if (n_max < 1) throw ConfigError("--n-max must be positive");
  emit(path, to_csv(figure_k(qs, n_max)), out);
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral variation bounds, localization figures and verification suites"};
  app.name("specvar");
  app.require_subcommand(1);

  BoundArgs bound;
  auto* sub_bound = app.add_subcommand("bound", "Compute all bounds for a matrix pair");
  sub_bound->add_option("A", bound.a, "Matrix JSON for A")->required()->check(CLI::ExistingFile);
  sub_bound->add_option("B", bound.b, "Matrix JSON for B")->required()->check(CLI::ExistingFile);
  sub_bound->add_option("--out", bound.out, "Write the report here instead of stdout");
  sub_bound->add_option("--m", bound.m, "Minimal-polynomial degree override")->check(CLI::PositiveNumber);
  sub_bound->add_flag("--estimate-m", bound.estimate_m, "Estimate the minimal-polynomial degree");
  sub_bound->add_option("--tol", bound.tol, "Verdict tolerance (default 1e-9)");
  sub_bound->add_option("--min-poly-tol", bound.min_poly_tol, "Relative tolerance for --estimate-m (default 1e-8)");
  sub_bound->add_option("--constant", bound.constant, "C_n for the generic Euclidean radius: bek, krause or a number");

  LocalizeArgs loc;
  auto* sub_loc = app.add_subcommand("localize", "Draw localization disks as SVG with a JSON twin");
  auto* opt_matrix = sub_loc->add_option("--matrix", loc.matrix, "Matrix JSON for A")->check(CLI::ExistingFile);
  sub_loc->add_option("--random", loc.random_n, "Dimension of a random A (default 6)")
      ->check(CLI::Range(1, 64))
      ->excludes(opt_matrix);
  sub_loc->add_option("--preset", loc.preset, "fig1a, fig1b, fig3a or fig3b");
  sub_loc->add_option("--eps", loc.eps, "Perturbation norm ||E||");
  sub_loc->add_option("--norm-a", loc.norm_a, "Operator norm of the random A");
  sub_loc->add_option("--mode", loc.mode, "euclid, hyper or both")
      ->check(CLI::IsMember({"euclid", "hyper", "both"}));
  sub_loc->add_option("--constant", loc.constant, "bek, krause or a number");
  sub_loc->add_flag("--use-norm-b", loc.use_norm_b, "Use ||B|| instead of rho(B) in the hyperbolic radius");
  sub_loc->add_option("--out", loc.svg, "SVG output path");
  sub_loc->add_option("--json", loc.json_path, "JSON output path");
  sub_loc->add_option("--csv", loc.csv, "CSV output path");
  sub_loc->add_option("--seed", loc.seed.text, "Master seed (falls back to SPECVAR_SEED)");

  VerifyArgs ver;
  auto* sub_ver = app.add_subcommand("verify", "Run randomized verification suites");
  sub_ver->add_option("--suite", ver.suite, "linalg, hypgeo, elliptic, blaschke, modelop, matching, bounds, curves or all");
  sub_ver->add_option("--trials", ver.trials, "Trials per suite (default 100)");
  sub_ver->add_option("--seed", ver.seed.text, "Master seed (falls back to SPECVAR_SEED)");
  sub_ver->add_option("--threads", ver.threads, "Worker threads (default 1)");
  sub_ver->add_option("--n", ver.n, "Fixed dimension (default: drawn per trial)");
  sub_ver->add_option("--eps", ver.eps, "Fixed perturbation norm");
  sub_ver->add_option("--norm-a", ver.norm_a, "Fixed operator norm of A");
  sub_ver->add_option("--constant", ver.constant, "bek, krause or a number");
  sub_ver->add_option("--out", ver.out, "Write the JSON report here instead of stdout");

  std::string n_list;
  std::string alpha_out;
  auto* sub_alpha = app.add_subcommand("table-alpha", "CSV of alpha_n and 1/alpha_n");
  sub_alpha->add_option("--n-list", n_list, "Comma-separated n values (default 1..12,100,1000)");
  sub_alpha->add_option("--out", alpha_out, "CSV output path");

  std::string q_list = "0.5,0.05,0.005";
  int n_max = 20;
  std::string k_out;
  auto* sub_k = app.add_subcommand("figure-k", "CSV of sqrt(k(q^n)) against 2^{1-n} k(q)^{n/2}");
  sub_k->add_option("--q-list", q_list, "Comma-separated nomes (default 0.5,0.05,0.005)");
  sub_k->add_option("--n-max", n_max, "Largest n (default 20)");
  sub_k->add_option("--out", k_out, "CSV output path");

  std::string which;
  SeedOption data_seed;
  std::string data_out;
  auto* sub_data = app.add_subcommand("figure-data", "CSV dataset for table1, fig1, fig2 or fig3");
  sub_data->add_option("--which", which, "table1, fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"table1", "fig1", "fig2", "fig3"}));
  sub_data->add_option("--seed", data_seed.text, "Master seed (falls back to SPECVAR_SEED)");
  sub_data->add_option("--out", data_out, "CSV output path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (sub_bound->parsed()) return cmd_bound(bound, out, err);
    if (sub_loc->parsed()) return cmd_localize(loc, out, err);
    if (sub_ver->parsed()) return cmd_verify(ver, out, err);
    if (sub_alpha->parsed()) return cmd_table_alpha(n_list, alpha_out, out);
    if (sub_k->parsed()) return cmd_figure_k(q_list, n_max, k_out, out);
    if (sub_data->parsed()) {
      check_output_path(data_out);
      emit(data_out, figure_data(which, data_seed.resolve()), out);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace specvar::cli
