#include "specvar/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "specvar/blaschke.hpp"
#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/harness.hpp"
#include "specvar/hypgeo.hpp"
#include "specvar/json_io.hpp"
#include "specvar/matching.hpp"
#include "specvar/modelop.hpp"
#include "specvar/random.hpp"

namespace specvar {

using nlohmann::json;

namespace {

const std::vector<std::string> kSuites = {"linalg",  "hypgeo",   "elliptic", "blaschke", "modelop",
                                          "matching", "bounds",  "curves"};

int slack_bin(double slack) {
  if (!(slack > 1e-16)) return 0;
  const int k = static_cast<int>(std::floor(std::log10(slack / 1e-16))) + 1;
  return std::clamp(k, 1, kSlackBins - 1);
}

// Collects check outcomes of a single trial.
class Recorder {
 public:
  Recorder(std::string suite, int trial, std::uint64_t seed)
      : suite_(std::move(suite)), trial_(trial), seed_(seed) {}

  // slack > 0 means the inequality holds with room to spare.
  void check(const std::string& name, bool pass, double slack, const std::function<json()>& detail) {
    auto& s = stats(name);
    ++s.count;
    s.min_slack = s.count == 1 ? slack : std::min(s.min_slack, slack);
    ++s.histogram[slack_bin(slack)];
    if (!pass) {
      ++s.violations;
      violations_.push_back({suite_, name, trial_, seed_, detail()});
    }
  }

  void skip(const std::string& name) { ++stats(name).skipped; }

  std::map<std::string, CheckStats>& all() { return stats_; }
  std::vector<Violation>& violations() { return violations_; }

 private:
  CheckStats& stats(const std::string& name) {
    auto [it, fresh] = stats_.try_emplace(name);
    if (fresh) {
      it->second.suite = suite_;
      it->second.check = name;
    }
    return it->second;
  }

  std::string suite_;
  int trial_;
  std::uint64_t seed_;
  std::map<std::string, CheckStats> stats_;
  std::vector<Violation> violations_;
};

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

json cvec(std::span<const cplx> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(cjson(z));
  return out;
}

// ---------------------------------------------------------------------------

void trial_linalg(Rng& rng, const ExperimentConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n > 0 ? cfg.n : rng.uniform_int(1, 8);
  const ComplexMatrix a = ginibre(n, rng);
  const ComplexMatrix b = ginibre(n, rng);
  const double nab = op_norm(a * b);
  const double bound = op_norm(a) * op_norm(b);
  rec.check("op_norm_submultiplicative", nab <= bound + 1e-9, bound - nab,
            [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}}; });

  const double rho = spectral_radius(a);
  const double na = op_norm(a);
  rec.check("spectral_radius_le_norm", rho <= na + 1e-9, na - rho,
            [&] { return json{{"A", to_json(a)}}; });

  // S = I + G/(2||G||) has condition number at most 3.
  ComplexMatrix g = ginibre(n, rng);
  g *= 0.5 / op_norm(g);
  const ComplexMatrix s = ComplexMatrix::identity(n) + g;
  const ComplexMatrix similar = inverse(s) * a * s;
  const double drift = d_euclid(eigenvalues(a), eigenvalues(similar));
  rec.check("eigenvalues_similarity_invariant", drift <= 1e-6, 1e-6 - drift,
            [&] { return json{{"A", to_json(a)}, {"S", to_json(s)}, {"drift", drift}}; });

  const int deg = min_poly_degree(a);
  rec.check("min_poly_degree_generic", deg == static_cast<int>(n), 0.0,
            [&] { return json{{"A", to_json(a)}, {"degree", deg}}; });
}

void trial_hypgeo(Rng& rng, const ExperimentConfig&, Recorder& rec) {
  {
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const cplx c = rng.in_disk(0.95);
    const cplx a = rng.in_disk(0.95);
    const cplx b = rng.in_disk(0.95);
    auto phi = [&](cplx z) { return std::polar(1.0, theta) * (z - c) / (1.0 - std::conj(c) * z); };
    const double err = std::abs(pseudo_distance(phi(a), phi(b)) - pseudo_distance(a, b));
    rec.check("mobius_invariance", err <= 1e-12, 1e-12 - err, [&] {
      return json{{"theta", theta}, {"c", cjson(c)}, {"a", cjson(a)}, {"b", cjson(b)}};
    });
  }
  {
    const cplx a = rng.in_disk(0.99);
    const cplx b = rng.in_disk(0.99);
    const cplx c = rng.in_disk(0.99);
    const double pab = pseudo_distance(a, b);
    const double pbc = pseudo_distance(b, c);
    const double bound = (pab + pbc) / (1.0 + pab * pbc);
    const double pac = pseudo_distance(a, c);
    rec.check("strong_triangle", pac <= bound + 1e-12, bound - pac,
              [&] { return json{{"a", cjson(a)}, {"b", cjson(b)}, {"c", cjson(c)}}; });
  }
  {
    const cplx a = rng.in_disk(0.95);
    const double r = rng.uniform(0.01, 0.95);
    const EuclideanDisk d = to_euclidean({a, r});
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
      const cplx z = d.center + std::polar(d.radius, 2.0 * std::numbers::pi * k / 64.0);
      worst = std::max(worst, std::abs(pseudo_distance(a, z) - r));
    }
    rec.check("disk_equivalence", worst <= 1e-10, 1e-10 - worst,
              [&] { return json{{"a", cjson(a)}, {"r", r}, {"error", worst}}; });
  }
  {
    cplx ga = rng.in_disk(0.95);
    cplx gb = rng.in_disk(0.95);
    while (std::abs(ga - gb) < 1e-6) gb = rng.in_disk(0.95);
    const Geodesic g(ga, gb);
    const cplx z = rng.in_disk(0.95);
    const cplx w = rng.in_disk(0.95);
    const double before = pseudo_distance(z, w);
    const double after = pseudo_distance(project(g, z), project(g, w));
    rec.check("projection_contractive", after <= before + 1e-10, before - after, [&] {
      return json{{"geodesic", json::array({cjson(ga), cjson(gb)})}, {"z", cjson(z)}, {"w", cjson(w)}};
    });
  }
}

void trial_elliptic(Rng& rng, const ExperimentConfig&, Recorder& rec, int trial) {
  {
    const double q = trial % 2 == 0 ? rng.log_uniform(1e-6, 0.99) : rng.uniform(1e-6, 0.99);
    const double err = std::abs(modulus_k(q) - modulus_k_product(q));
    rec.check("series_product_agreement", err <= 1e-12, 1e-12 - err,
              [&] { return json{{"q", q}, {"error", err}}; });
  }
  {
    // k(q) is within an ulp of 1 beyond q ~ 0.6, so the inverse is only
    // conditioned well enough for 1e-9 below that.
    const double q = rng.uniform(1e-6, 0.5);
    const double err = std::abs(inverse_k(modulus_k(q)) - q);
    rec.check("inverse_round_trip", err <= 1e-9, 1e-9 - err,
              [&] { return json{{"q", q}, {"error", err}}; });
  }
  {
    double q1 = rng.uniform(0.0, kNomeMax);
    double q2 = rng.uniform(0.0, kNomeMax);
    if (q1 > q2) std::swap(q1, q2);
    const double k1 = modulus_k(q1);
    const double k2 = modulus_k(q2);
    // Within ~1e-12 of 1 the increments of k drown in rounding noise, so
    // strictness is demanded only below that and ordering up to a few ulps above.
    constexpr double kNoise = 16.0 * std::numeric_limits<double>::epsilon();
    const bool pass = q1 == q2 || (1.0 - k2 > 1e-12 ? k1 < k2 : k1 <= k2 + kNoise);
    rec.check("monotone", pass, k2 - k1, [&] { return json{{"q1", q1}, {"q2", q2}}; });
  }
  {
    static constexpr double kPanels[] = {0.5, 0.05, 0.005};
    const double q = kPanels[trial % 3];
    const int n = rng.uniform_int(1, 100);
    const auto pr = modulus_power_pair(q, n);
    const double slack = pr.lhs - pr.rhs;
    rec.check("modulus_power_inequality", slack >= -1e-12, slack,
              [&] { return json{{"q", q}, {"n", n}, {"lhs", pr.lhs}, {"rhs", pr.rhs}}; });
  }
}

// Max of |p| along a polyline, by dense sampling plus golden refinement.
double max_on_polyline(const std::function<cplx(cplx)>& p, const std::vector<cplx>& nodes) {
  double best = 0.0;
  for (std::size_t s = 0; s + 1 < nodes.size(); ++s) {
    const cplx u = nodes[s];
    const cplx v = nodes[s + 1];
    auto f = [&](double t) { return std::abs(p(u + t * (v - u))); };
    constexpr int kGrid = 1024;
    int arg = 0;
    double top = -1.0;
    for (int i = 0; i <= kGrid; ++i) {
      const double val = f(static_cast<double>(i) / kGrid);
      if (val > top) top = val, arg = i;
    }
    double lo = std::max(0.0, (arg - 1.0) / kGrid);
    double hi = std::min(1.0, (arg + 1.0) / kGrid);
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
      const double x1 = hi - r * (hi - lo);
      const double x2 = lo + r * (hi - lo);
      (f(x1) < f(x2) ? lo : hi) = f(x1) < f(x2) ? x1 : x2;
    }
    best = std::max({best, top, f(0.5 * (lo + hi))});
  }
  return best;
}

void trial_blaschke(Rng& rng, const ExperimentConfig&, Recorder& rec, int trial) {
  {
    static constexpr double kNomes[] = {0.3, 0.6, 0.9};
    const double q = kNomes[trial % 3];
    const int n = rng.uniform_int(1, 3);
    const double half = std::sqrt(modulus_k(q));
    std::vector<cplx> zeros(n);
    for (auto& z : zeros) z = rng.uniform() < 0.5 ? cplx(rng.uniform(-0.999, 0.999)) : rng.in_disk(0.999);
    const BlaschkeProduct b(zeros);
    const double mx = max_abs_on_segment(b, -half, half);
    const double target = cheb_blaschke_value(q, n);
    rec.check("minimax_lower_bound", mx >= target - 1e-9, mx - target,
              [&] { return json{{"q", q}, {"n", n}, {"zeros", cvec(zeros)}}; });
  }
  {
    const double q = rng.uniform(1e-4, 0.99);
    const int n = rng.uniform_int(1, 10);
    const double lhs = std::sqrt(modulus_k_from_log(2.0 * n * std::log(q)));
    const double rhs = std::exp(n * std::log(modulus_k(q)) - (2.0 * n - 1.0) * std::numbers::ln2);
    rec.check("blaschke_dominates_polynomial", lhs >= rhs - 1e-12, lhs - rhs,
              [&] { return json{{"q", q}, {"n", n}}; });
  }
  {
    const int n = rng.uniform_int(1, 4);
    std::vector<cplx> coeffs(n);
    for (auto& c : coeffs) c = rng.complex_normal();
    auto p = [&](cplx z) {
      cplx acc(1.0);
      for (int i = n - 1; i >= 0; --i) acc = acc * z + coeffs[i];
      return acc;
    };
    const cplx a = rng.complex_normal();
    const cplx b = rng.complex_normal();
    // Every curve joining a and b obeys the same bound; use a bent path on odd trials.
    std::vector<cplx> path{a, b};
    if (trial % 2 == 1) path = {a, 0.5 * (a + b) + rng.complex_normal(), b};
    const double mx = max_on_polyline(p, path);
    const double bound = cheb_poly_lower_bound(a, b, n);
    rec.check("chebyshev_polynomial_bound", mx >= bound - 1e-9, mx - bound, [&] {
      return json{{"coefficients", cvec(coeffs)}, {"path", cvec(path)}};
    });
  }
  {
    const int n = rng.uniform_int(1, 6);
    std::vector<cplx> zeros(n);
    for (auto& z : zeros) z = rng.in_disk(0.95);
    const BlaschkeProduct b(zeros);
    const cplx z = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    const double err = std::abs(std::abs(b(z)) - 1.0);
    rec.check("unimodular_on_circle", err <= 1e-12, 1e-12 - err,
              [&] { return json{{"zeros", cvec(zeros)}, {"z", cjson(z)}}; });
  }
}

std::vector<cplx> random_zeros(Rng& rng, int m, double min_mod, double max_mod) {
  std::vector<cplx> zeros(m);
  for (auto& z : zeros) {
    const double r = std::sqrt(rng.uniform(min_mod * min_mod, max_mod * max_mod));
    z = std::polar(r, rng.uniform(0.0, 2.0 * std::numbers::pi));
  }
  return zeros;
}

void trial_modelop(Rng& rng, const ExperimentConfig& cfg, Recorder& rec) {
  {
    const int m = cfg.n > 0 ? std::min(cfg.n, 8) : rng.uniform_int(1, 8);
    const auto zeros = random_zeros(rng, m, 0.0, 0.999);
    const ModelMatrix mm = build_model_matrix(zeros);
    const double nrm = op_norm(mm.matrix);
    rec.check("model_matrix_contraction", nrm <= 1.0 + 1e-9, 1.0 - nrm,
              [&] { return json{{"zeros", cvec(zeros)}}; });
    const double err = d_euclid(eigenvalues(mm.matrix), zeros);
    rec.check("model_matrix_spectrum", err <= 1e-8, 1e-8 - err,
              [&] { return json{{"zeros", cvec(zeros)}, {"error", err}}; });
  }

  const int m = cfg.n > 0 ? std::min(cfg.n, 5) : rng.uniform_int(1, 5);
  const auto zeros = random_zeros(rng, m, 0.05, 0.95);
  const ComplexMatrix a = prescribed_spectrum_contraction(zeros, rng);
  {
    RationalFunction psi;
    psi.numerator.resize(rng.uniform_int(1, 4));
    for (auto& c : psi.numerator) c = rng.complex_normal();
    const int poles = rng.uniform_int(0, 2);
    for (int i = 0; i < poles; ++i) {
      cplx p;
      bool clear = false;
      while (!clear) {
        p = rng.in_disk(1.5);
        clear = std::ranges::all_of(zeros, [&](cplx z) { return std::abs(z - p) >= 0.05; });
      }
      // Multiply the denominator by (z - p).
      std::vector<cplx> next(psi.denominator.size() + 1);
      for (std::size_t k = 0; k < psi.denominator.size(); ++k) {
        next[k] -= p * psi.denominator[k];
        next[k + 1] += psi.denominator[k];
      }
      psi.denominator = std::move(next);
    }
    try {
      const auto dc = rational_dominance_check(a, zeros, psi);
      rec.check("rational_dominance", dc.holds, dc.rhs_norm - dc.lhs_norm, [&] {
        return json{{"A", to_json(a)},
                    {"zeros", cvec(zeros)},
                    {"numerator", cvec(psi.numerator)},
                    {"denominator", cvec(psi.denominator)}};
      });
    } catch (const PoleEvaluation&) {
      rec.skip("rational_dominance");
    }
  }
  {
    const double bound = inverse_norm_bound(zeros);
    const double lhs = op_norm(inverse(a));
    const double tol = 1e-8 * std::max(1.0, bound);
    rec.check("inverse_norm_bound", lhs <= bound + tol, (bound - lhs) / std::max(1.0, bound),
              [&] { return json{{"A", to_json(a)}, {"zeros", cvec(zeros)}}; });
  }
  {
    cplx z;
    bool clear = false;
    while (!clear) {
      z = rng.in_disk(0.999);
      clear = std::ranges::all_of(zeros, [&](cplx l) { return std::abs(z - l) >= 1e-3; });
    }
    const std::size_t n = a.dim();
    const ComplexMatrix id = ComplexMatrix::identity(n);
    const ComplexMatrix r = inverse(z * id - a) * (id - std::conj(z) * a);
    const double lhs = op_norm(r);
    const double bound = mobius_resolvent_bound(zeros, z);
    const double tol = 1e-8 * std::max(1.0, bound);
    rec.check("mobius_resolvent_bound", lhs <= bound + tol, (bound - lhs) / std::max(1.0, bound),
              [&] { return json{{"A", to_json(a)}, {"zeros", cvec(zeros)}, {"z", cjson(z)}}; });
  }

  // Hadamard, Bauer-Fike and the strengthened chain on a contraction pair.
  const std::size_t n = cfg.n > 0 ? cfg.n : rng.uniform_int(1, 6);
  const ComplexMatrix x = random_contraction(n, rng.uniform(0.1, 1.0), rng);
  ComplexMatrix y(n);
  if (rng.uniform() < 0.5) {
    y = random_contraction(n, rng.uniform(0.1, 1.0), rng);
  } else {
    y = x + random_perturbation(n, rng.log_uniform(1e-10, 1e-1), rng);
  }
  const double diff = op_norm(x - y);
  const double nx = op_norm(x);
  const double ny = op_norm(y);
  const Spectrum sx = eigenvalues(x);
  const ComplexMatrix id = ComplexMatrix::identity(n);
  auto pair_detail = [&] { return json{{"X", to_json(x)}, {"Y", to_json(y)}}; };
  for (const cplx z : eigenvalues(y)) {
    const double det = std::abs(determinant(z * id - x));
    const double had = diff * std::pow(nx + ny, static_cast<double>(n) - 1.0);
    rec.check("hadamard_determinant", det <= had + 1e-8, had - det, pair_detail);

    const LuDecomposition lu(z * id - x);
    if (lu.singular() || diff == 0.0) {
      rec.skip("bauer_fike");
      rec.skip("strengthened_chain");
      continue;
    }
    const double res = op_norm(lu.inverse());
    const double inv_diff = 1.0 / diff;
    rec.check("bauer_fike", inv_diff <= res * (1.0 + 1e-8) + 1e-8, (res - inv_diff) / res, pair_detail);

    double prod = 1.0;
    for (const cplx l : sx) prod *= std::abs(z - l);
    const double shifted = op_norm(z * id - x);
    const double upper = std::pow(shifted, static_cast<double>(n) - 1.0) / prod;
    // The chain is an equality at n = 2, and both sides then carry a relative
    // rounding error of order eps * cond(zI - X).
    const double rel_tol = 1e-8 + 64.0 * std::numeric_limits<double>::epsilon() * shifted * res;
    rec.check("strengthened_chain", res <= upper * (1.0 + rel_tol), (upper - res) / upper, pair_detail);
  }
}

void trial_matching(Rng& rng, const ExperimentConfig&, Recorder& rec) {
  {
    const int n = rng.uniform_int(1, 7);
    std::vector<double> costs(n * n);
    const bool ties = rng.uniform() < 0.3;
    for (auto& c : costs) c = ties ? rng.uniform_int(0, 4) : rng.uniform();
    const CostMatrix cm(n, costs);
    const double fast = bottleneck_assignment(cm).value;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    double brute = INFINITY;
    do {
      double worst = 0.0;
      for (int i = 0; i < n; ++i) worst = std::max(worst, cm(i, perm[i]));
      brute = std::min(brute, worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
    rec.check("bottleneck_exact", fast == brute, brute - fast,
              [&] { return json{{"n", n}, {"costs", costs}}; });
  }
  {
    const int n = rng.uniform_int(1, 8);
    Spectrum s(n);
    Spectrum t(n);
    for (auto& z : s) z = rng.in_disk(0.999);
    for (auto& z : t) z = rng.in_disk(0.999);
    auto detail = [&] { return json{{"S", cvec(s)}, {"T", cvec(t)}}; };
    const double de = d_euclid(s, t);
    const double dh = d_hyper(s, t);
    const double sym = std::max(std::abs(de - d_euclid(t, s)), std::abs(dh - d_hyper(t, s)));
    rec.check("symmetry", sym <= 1e-14, 1e-14 - sym, detail);

    const cplx rot = std::polar(1.0, rng.uniform(0.0, 2.0 * std::numbers::pi));
    Spectrum rs(s);
    Spectrum rt(t);
    for (auto& z : rs) z *= rot;
    for (auto& z : rt) z *= rot;
    const double drift = std::max(std::abs(d_euclid(rs, rt) - de), std::abs(d_hyper(rs, rt) - dh));
    rec.check("rotation_invariance", drift <= 1e-12, 1e-12 - drift, detail);

    rec.check("range", de <= 2.0 && dh <= 1.0, std::min(2.0 - de, 1.0 - dh), detail);
  }
}

BoundInputs measure(const ComplexMatrix& a, const ComplexMatrix& b) {
  BoundInputs in;
  in.normA = op_norm(a);
  in.normB = op_norm(b);
  in.rhoB = std::min(spectral_radius(b), in.normB);
  in.diffNorm = op_norm(a - b);
  in.n = static_cast<int>(a.dim());
  in.m = in.n;
  return in;
}

void trial_bounds(Rng& rng, const ExperimentConfig& cfg, Recorder& rec, int trial) {
  {
    BoundInputs in;
    in.n = rng.uniform_int(1, 12);
    in.m = rng.uniform_int(1, in.n);
    in.normA = rng.uniform(0.0, 0.999);
    in.normB = rng.uniform(0.0, 0.999);
    in.rhoB = rng.uniform() * in.normB;
    in.diffNorm = rng.log_uniform(1e-14, 2.0);
    const double ex = hyper_bound_exact(in);
    const double si = hyper_bound_simple(in);
    rec.check("hyper_chain", ex <= si + 1e-12, si - ex, [&] { return to_json(in); });

    // Each bound is nondecreasing in diffNorm.
    std::vector<double> grid(16);
    for (auto& d : grid) d = rng.log_uniform(1e-14, 2.0);
    std::ranges::sort(grid);
    double worst = INFINITY;
    BoundInputs prev = in;
    prev.diffNorm = grid.front();
    for (std::size_t i = 1; i < grid.size(); ++i) {
      BoundInputs cur = in;
      cur.diffNorm = grid[i];
      auto step = [&](double lo, double hi) { worst = std::min(worst, hi - lo + 1e-15 * std::abs(hi)); };
      step(euclid_bound(prev), euclid_bound(cur));
      step(hyper_bound_exact(prev), hyper_bound_exact(cur));
      step(hyper_bound_simple(prev), hyper_bound_simple(cur));
      if (in.n >= 2) step(krause_bound(prev), krause_bound(cur));
      prev = cur;
    }
    rec.check("monotone_in_diff", worst >= 0.0, worst, [&] { return to_json(in); });
  }
  {
    const std::size_t n = cfg.n > 0 ? cfg.n : rng.uniform_int(2, 8);
    const ComplexMatrix a = random_contraction(n, cfg.targetNormA.value_or(rng.uniform(0.05, 1.0)), rng);
    ComplexMatrix b(n);
    if (cfg.epsilon) {
      b = a + random_perturbation(n, *cfg.epsilon, rng);
    } else if (rng.uniform() < 0.5) {
      b = random_contraction(n, rng.uniform(0.05, 1.0), rng);
    } else {
      b = a + random_perturbation(n, rng.log_uniform(1e-12, 0.5), rng);
    }
    const BoundInputs in = measure(a, b);
    const double de = d_euclid(eigenvalues(a), eigenvalues(b));
    const double eb = euclid_bound(in);
    rec.check("euclid_bound_holds", de <= eb + 1e-9, eb - de,
              [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}}; });
  }
  {
    static constexpr double kScales[] = {1e-2, 1e-6, 1e-10};
    const double eps = cfg.epsilon.value_or(kScales[trial % 3]);
    const std::size_t n = cfg.n > 0 ? cfg.n : rng.uniform_int(2, 8);
    const double target = cfg.targetNormA.value_or(rng.uniform(0.05, 0.95));
    const ComplexMatrix a = random_contraction(n, target, rng);
    const ComplexMatrix b = a + random_perturbation(n, eps, rng);
    const BoundInputs in = measure(a, b);
    auto detail = [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}, {"eps", eps}}; };
    if (!in.hyperbolic_admissible()) {
      rec.skip("hyper_bound_holds");
    } else {
      const double dh = d_hyper(eigenvalues(a), eigenvalues(b));
      const double hb = hyper_bound_exact(in);
      rec.check("hyper_bound_holds", dh <= hb + 1e-9, hb - dh, detail);
      const double hs = hyper_bound_simple(in);
      rec.check("hyper_exact_le_simple", hb <= hs + 1e-12, hs - hb, detail);
    }
  }
  {
    const std::size_t n = cfg.n >= 2 ? cfg.n : rng.uniform_int(2, 6);
    ComplexMatrix a = ginibre(n, rng);
    a *= rng.uniform(0.2, 3.0) / op_norm(a);
    const Spectrum sa = eigenvalues(a);
    double min_eig = INFINITY;
    for (const cplx l : sa) min_eig = std::min(min_eig, std::abs(l));
    BoundInputs probe = measure(a, a);
    probe.normB = probe.normA;
    const double thr = krause_threshold(probe, min_eig);
    const ComplexMatrix b = a + random_perturbation(n, rng.uniform(0.05, 0.9) * thr, rng);
    const BoundInputs in = measure(a, b);
    if (min_eig > 0.0 && krause_condition(in, min_eig)) {
      const double de = d_euclid(sa, eigenvalues(b));
      const double kb = krause_bound(in);
      rec.check("krause_bound_holds", de <= kb + 1e-9, kb - de,
                [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}}; });
    } else {
      rec.skip("krause_bound_holds");
    }
  }
  if (trial == 0) {
    // 1/alpha_n decreases towards 2 for n >= 2.
    double prev = 1.0 / krause_alpha(2);
    double worst = INFINITY;
    for (int n = 3; n <= 10000; ++n) {
      const double cur = 1.0 / krause_alpha(n);
      worst = std::min({worst, prev - cur, cur - 2.0});
      prev = cur;
    }
    const bool pass = worst > 0.0 && prev - 2.0 < 2.5e-3;
    rec.check("alpha_sequence", pass, worst, [&] { return json{{"inv_alpha_10000", prev}}; });
  }
}

void trial_curves(Rng& rng, const ExperimentConfig& cfg, Recorder& rec) {
  const std::size_t n = cfg.n > 0 ? cfg.n : 4;
  const ComplexMatrix a = random_contraction(n, cfg.targetNormA.value_or(rng.uniform(0.2, 0.95)), rng);
  ComplexMatrix b(n);
  if (cfg.epsilon) {
    b = a + random_perturbation(n, *cfg.epsilon, rng);
  } else {
    b = random_contraction(n, rng.uniform(0.2, 0.95), rng);
  }
  auto detail = [&] { return json{{"A", to_json(a)}, {"B", to_json(b)}}; };
  const Spectrum sa = eigenvalues(a);
  const Spectrum sb = eigenvalues(b);
  CurveFamily fam;
  try {
    fam = trace_curves(a, b, default_curve_delta(sa, sb));
  } catch (const CurveResolutionFailure& e) {
    rec.check("curve_resolution", false, -1.0, [&] {
      auto d = detail();
      d["error"] = e.what();
      return d;
    });
    return;
  }
  const double end_err = std::max(d_euclid(fam.points.front(), sa), d_euclid(fam.points.back(), sb));
  rec.check("curve_endpoints", end_err <= 1e-8, 1e-8 - end_err, detail);
  const auto report = curve_interpolation_check(fam, sa, static_cast<int>(n));
  rec.check("curve_interpolation", report.violations == 0, report.min_slack, detail);
}

using TrialFn = std::function<void(Rng&, const ExperimentConfig&, Recorder&, int)>;

TrialFn trial_function(const std::string& suite) {
  if (suite == "linalg") return [](Rng& r, const ExperimentConfig& c, Recorder& rec, int) { trial_linalg(r, c, rec); };
  if (suite == "hypgeo") return [](Rng& r, const ExperimentConfig& c, Recorder& rec, int) { trial_hypgeo(r, c, rec); };
  if (suite == "elliptic") return trial_elliptic;
  if (suite == "blaschke") return trial_blaschke;
  if (suite == "modelop") return [](Rng& r, const ExperimentConfig& c, Recorder& rec, int) { trial_modelop(r, c, rec); };
  if (suite == "matching") return [](Rng& r, const ExperimentConfig& c, Recorder& rec, int) { trial_matching(r, c, rec); };
  if (suite == "bounds") return trial_bounds;
  if (suite == "curves") return [](Rng& r, const ExperimentConfig& c, Recorder& rec, int) { trial_curves(r, c, rec); };
  throw ConfigError("unknown suite '" + suite + "'");
}

void merge(CheckStats& into, const CheckStats& from) {
  if (from.count > 0) {
    into.min_slack = into.count == 0 ? from.min_slack : std::min(into.min_slack, from.min_slack);
  }
  into.count += from.count;
  into.violations += from.violations;
  into.skipped += from.skipped;
  for (int k = 0; k < kSlackBins; ++k) into.histogram[k] += from.histogram[k];
}

struct SuiteResult {
  std::map<std::string, CheckStats> stats;
  std::vector<Violation> violations;
};

SuiteResult run_one(const std::string& suite, const ExperimentConfig& cfg) {
  const TrialFn fn = trial_function(suite);
  const int threads = std::max(1, std::min(cfg.threads, cfg.trials));
  std::vector<SuiteResult> partial(threads);

  auto worker = [&](int w) {
    for (int t = w; t < cfg.trials; t += threads) {
      const std::uint64_t seed = derive_seed(cfg.masterSeed, suite, static_cast<std::uint64_t>(t));
      Rng rng(seed);
      Recorder rec(suite, t, seed);
      try {
        fn(rng, cfg, rec, t);
      } catch (const std::exception& e) {
        rec.check("trial_completed", false, -1.0, [&] { return json{{"error", e.what()}}; });
      }
      for (auto& [name, s] : rec.all()) {
        auto [it, fresh] = partial[w].stats.try_emplace(name, s);
        if (!fresh) merge(it->second, s);
      }
      for (auto& v : rec.violations()) partial[w].violations.push_back(std::move(v));
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  SuiteResult out;
  for (auto& p : partial) {
    for (auto& [name, s] : p.stats) {
      auto [it, fresh] = out.stats.try_emplace(name, s);
      if (!fresh) merge(it->second, s);
    }
    for (auto& v : p.violations) out.violations.push_back(std::move(v));
  }
  // Sorting makes the report independent of how trials were scheduled.
  std::ranges::sort(out.violations, [](const Violation& x, const Violation& y) {
    return std::tie(x.trial, x.check) < std::tie(y.trial, y.check);
  });
  return out;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (suite != "all" && std::ranges::find(kSuites, suite) == kSuites.end()) {
    throw ConfigError("unknown suite '" + suite + "'");
  }
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (n < 0 || n > 64) throw ConfigError("dimension must lie in [1, 64] (0 for suite defaults)");
  if (epsilon && !(*epsilon >= 0.0)) throw ConfigError("perturbation norm must be non-negative");
  if (targetNormA && !(*targetNormA > 0.0 && *targetNormA < 1.0)) {
    throw ConfigError("target norm of A must lie in (0, 1)");
  }
  if (threads < 1) throw ConfigError("threads must be at least 1");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    auto v = kSuites;
    v.push_back("all");
    return v;
  }();
  return names;
}

std::size_t SuiteReport::total_violations() const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.violations;
  return total;
}

SuiteReport run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.config = cfg;
  const std::vector<std::string> todo =
      cfg.suite == "all" ? kSuites : std::vector<std::string>{cfg.suite};
  for (const auto& suite : todo) {
    auto res = run_one(suite, cfg);
    for (auto& [name, s] : res.stats) report.checks.push_back(std::move(s));
    for (auto& v : res.violations) report.violations.push_back(std::move(v));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

json to_json(const ExperimentConfig& cfg) {
  json j{{"suite", cfg.suite},
         {"trials", cfg.trials},
         {"masterSeed", cfg.masterSeed},
         {"n", cfg.n},
         {"constant", cfg.constant.name()},
         {"threads", cfg.threads},
         {"ensemble", "ginibre-rescaled"}};
  j["epsilon"] = cfg.epsilon ? json(*cfg.epsilon) : json(nullptr);
  j["targetNormA"] = cfg.targetNormA ? json(*cfg.targetNormA) : json(nullptr);
  return j;
}

json to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"suite", c.suite},
                      {"check", c.check},
                      {"count", c.count},
                      {"violations", c.violations},
                      {"skipped", c.skipped},
                      {"pass", c.violations == 0},
                      {"min_slack", c.count > 0 && std::isfinite(c.min_slack) ? json(c.min_slack) : json(nullptr)},
                      {"slack_histogram", c.histogram}});
  }
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"suite", v.suite},
                          {"check", v.check},
                          {"trial", v.trial},
                          {"seed", v.seed},
                          {"inputs", v.detail}});
  }
  std::vector<double> edges;
  for (int k = 0; k < kSlackBins - 1; ++k) edges.push_back(-16.0 + k);
  return json{{"config", to_json(report.config)},
              {"checks", checks},
              {"total_violations", report.total_violations()},
              {"violations", violations},
              {"slack_histogram_log10_edges", edges}};
}

std::string summarize(const SuiteReport& report) {
  std::ostringstream os;
  os.precision(3);
  for (const auto& c : report.checks) {
    os << (c.violations == 0 ? "ok   " : "FAIL ") << c.suite << '/' << c.check << ": " << c.count
       << " checked, " << c.violations << " violations";
    if (c.skipped > 0) os << ", " << c.skipped << " skipped";
    if (c.count > 0) os << ", min slack " << c.min_slack;
    os << '\n';
  }
  os << report.total_violations() << " violations in " << report.wall_seconds << " s\n";
  return os.str();
}

}  // namespace specvar
