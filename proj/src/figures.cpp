#include "specvar/figures.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/harness.hpp"
#include "specvar/json_io.hpp"
#include "specvar/random.hpp"

namespace specvar {

using nlohmann::json;

namespace {

// Shortest decimal that round-trips.
std::string num(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool contains_some(const LocalizationDisk& d, const Spectrum& pts) {
  const double reach = d.radius * (1.0 + 1e-12) + 1e-15;
  return std::ranges::any_of(pts, [&](cplx z) { return std::abs(z - d.center) <= reach; });
}

}  // namespace

std::vector<int> default_alpha_ns() { return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 100, 1000}; }

std::vector<AlphaRow> table_alpha(const std::vector<int>& ns) {
  std::vector<AlphaRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    if (n < 1) throw InvalidInputs("n must be positive, got " + std::to_string(n));
    const double a = krause_alpha(n);
    rows.push_back({n, a, 1.0 / a});
  }
  return rows;
}

std::string to_csv(const std::vector<AlphaRow>& rows) {
  std::string out = "n,alpha,inv_alpha\n";
  for (const auto& r : rows) out += std::to_string(r.n) + ',' + num(r.alpha) + ',' + num(r.inv_alpha) + '\n';
  return out;
}

std::vector<ModulusRow> figure_k(const std::vector<double>& qs, int n_max) {
  if (qs.empty()) throw InvalidInputs("empty nome list");
  if (n_max < 1) throw InvalidInputs("n_max must be positive");
  std::vector<ModulusRow> rows;
  for (double q : qs) {
    if (!(q > 0.0 && q < 1.0)) throw OutOfDomain("nome must lie in (0, 1)");
    for (int n = 1; n <= n_max; ++n) {
      const auto pr = modulus_power_pair(q, n);
      rows.push_back({q, n, pr.lhs, pr.rhs});
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ModulusRow>& rows) {
  std::string out = "q,n,sqrt_k_qn,chebyshev_rhs\n";
  for (const auto& r : rows) {
    out += num(r.q) + ',' + std::to_string(r.n) + ',' + num(r.sqrt_k_qn) + ',' + num(r.chebyshev_rhs) + '\n';
  }
  return out;
}

LocalizationScene make_scene(const SceneOptions& opt) {
  if (!(opt.eps >= 0.0)) throw InvalidInputs("perturbation norm must be non-negative");
  LocalizationScene s;
  s.options = opt;
  if (opt.a) {
    s.a = *opt.a;
  } else {
    if (opt.n < 1) throw InvalidInputs("dimension must be positive");
    Rng base(derive_seed(opt.seed, "scene-A", 0));
    s.a = random_contraction(opt.n, opt.norm_a, base);
  }
  const std::size_t n = s.a.dim();
  s.sigma_a = eigenvalues(s.a);

  auto& in = s.inputs;
  in.n = static_cast<int>(n);
  in.m = in.n;
  in.normA = op_norm(s.a);
  s.floor_applied = opt.eps < kPerturbationFloor;
  if (s.floor_applied) {
    s.sigma_b = s.sigma_a;
    in.normB = in.normA + opt.eps;
    in.rhoB = spectral_radius(s.a);
    in.diffNorm = opt.eps;
  } else {
    Rng pert(derive_seed(opt.seed, "scene-E", 0));
    const ComplexMatrix b = s.a + random_perturbation(n, opt.eps, pert);
    s.sigma_b = eigenvalues(b);
    in.normB = op_norm(b);
    in.rhoB = std::min(spectral_radius(b), in.normB);
    in.diffNorm = op_norm(s.a - b);
  }

  const LocalizationOptions lo{opt.constant, opt.use_norm_b};
  s.euclid = localization_disks(s.sigma_a, in, DiskMode::Euclid, lo);
  for (const auto& d : s.euclid) s.euclid_contains_b.push_back(contains_some(d, s.sigma_b));
  s.hyper_available = in.hyperbolic_admissible();
  if (s.hyper_available) {
    s.hyper = localization_disks(s.sigma_a, in, DiskMode::Hyper, lo);
    for (const auto& d : s.hyper) s.hyper_contains_b.push_back(contains_some(d, s.sigma_b));
  }
  return s;
}

bool hyper_disks_sound(const LocalizationScene& s) {
  for (std::size_t i = 0; i < s.hyper.size(); ++i) {
    if (!s.hyper[i].vacuous && !s.hyper_contains_b[i]) return false;
  }
  return true;
}

std::vector<std::size_t> large_modulus_indices(const LocalizationScene& s) {
  std::vector<double> mods;
  for (const cplx z : s.sigma_a) mods.push_back(std::abs(z));
  std::vector<double> sorted = mods;
  std::ranges::sort(sorted);
  const double median = sorted[sorted.size() / 2];
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mods.size(); ++i) {
    if (mods[i] >= median) idx.push_back(i);
  }
  return idx;
}

std::vector<LocalizationScene> figure_scenes(const std::string& which, std::uint64_t seed) {
  SceneOptions base;
  base.seed = seed;
  std::vector<double> norms;
  if (which == "fig1") {
    base.n = 6;
    base.eps = 1e-10;
    base.constant = ConstantChoice{};
    norms = {0.3, 0.9};
  } else if (which == "fig3") {
    base.n = 12;
    base.eps = 1e-18;
    base.constant = ConstantChoice::parse("2.6543");
    norms = {0.5, 0.95};
  } else {
    throw ConfigError("unknown localization figure '" + which + "'");
  }
  std::vector<LocalizationScene> out;
  const char panel[] = {'a', 'b'};
  for (std::size_t i = 0; i < norms.size(); ++i) {
    SceneOptions o = base;
    o.norm_a = norms[i];
    o.label = which + std::string(1, panel[i]);
    out.push_back(make_scene(o));
  }
  return out;
}

json to_json(const LocalizationScene& s) {
  json disks = json::array();
  auto add = [&](const std::vector<LocalizationDisk>& ds, const std::vector<bool>& hit) {
    for (std::size_t i = 0; i < ds.size(); ++i) {
      json d = to_json(ds[i]);
      d["contains_b"] = static_cast<bool>(hit[i]);
      disks.push_back(std::move(d));
    }
  };
  add(s.euclid, s.euclid_contains_b);
  add(s.hyper, s.hyper_contains_b);
  json sa = json::array();
  json sb = json::array();
  for (const cplx z : s.sigma_a) sa.push_back(json::array({z.real(), z.imag()}));
  for (const cplx z : s.sigma_b) sb.push_back(json::array({z.real(), z.imag()}));
  return json{{"label", s.options.label},
              {"seed", s.options.seed},
              {"eps", s.options.eps},
              {"constant", s.options.constant.name()},
              {"C_n", s.options.constant.value(s.inputs.n)},
              {"use_norm_b", s.options.use_norm_b},
              {"ensemble", "ginibre-rescaled"},
              {"perturbation_floor_applied", s.floor_applied},
              {"inputs", to_json(s.inputs)},
              {"A", to_json(s.a)},
              {"sigma_A", sa},
              {"sigma_B", sb},
              {"disks", disks},
              {"hyper_sound", hyper_disks_sound(s)}};
}

std::string to_csv(const std::vector<LocalizationScene>& scenes) {
  std::string out = "label,mode,eig_re,eig_im,center_re,center_im,radius,nominal_radius,vacuous,contains_b\n";
  for (const auto& s : scenes) {
    auto rows = [&](const std::vector<LocalizationDisk>& ds, const std::vector<bool>& hit) {
      for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto& d = ds[i];
        out += s.options.label + ',' + to_string(d.mode) + ',' + num(d.eigenvalue.real()) + ',' +
               num(d.eigenvalue.imag()) + ',' + num(d.center.real()) + ',' + num(d.center.imag()) + ',' +
               num(d.radius) + ',' + num(d.nominal_radius) + ',' + (d.vacuous ? "1" : "0") + ',' +
               (hit[i] ? "1" : "0") + '\n';
      }
    };
    rows(s.euclid, s.euclid_contains_b);
    rows(s.hyper, s.hyper_contains_b);
  }
  return out;
}

std::string figure_data(const std::string& which, std::uint64_t seed) {
  if (which == "table1") return to_csv(table_alpha(default_alpha_ns()));
  if (which == "fig2") return to_csv(figure_k({0.5, 0.05, 0.005}, 20));
  if (which == "fig1" || which == "fig3") return to_csv(figure_scenes(which, seed));
  throw ConfigError("unknown dataset '" + which + "' (expected table1, fig1, fig2 or fig3)");
}

}  // namespace specvar
