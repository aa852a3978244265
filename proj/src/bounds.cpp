#include "specvar/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "specvar/elliptic.hpp"
#include "specvar/error.hpp"
#include "specvar/matching.hpp"

namespace specvar {

namespace {

double root(double x, int m) { return x == 0.0 ? 0.0 : std::exp(std::log(x) / m); }

double two_pow(double e) { return std::exp2(e); }

void require_hyperbolic(const BoundInputs& in) {
  if (!in.hyperbolic_admissible()) {
    throw InvalidInputs("hyperbolic bounds need ||A|| < 1 and ||B|| < 1");
  }
}

double hyper_argument(const BoundInputs& in) {
  const double gap = 1.0 - in.rhoB * in.normA;
  return (in.diffNorm / gap) * (in.diffNorm / gap);
}

}  // namespace

void BoundInputs::validate() const {
  auto bad = [](double x) { return !(std::isfinite(x) && x >= 0.0); };
  if (bad(normA) || bad(normB) || bad(rhoB) || bad(diffNorm)) {
    throw InvalidInputs("norms must be finite and non-negative");
  }
  if (n < 1 || m < 1 || m > n) throw InvalidInputs("need 1 <= m <= n");
  if (rhoB > normB + 1e-9) throw InvalidInputs("spectral radius exceeds the norm of B");
}

double euclid_bound(const BoundInputs& in) {
  in.validate();
  const int m = in.m;
  const double sum = in.normA + in.normB;
  if (in.diffNorm == 0.0) return 0.0;
  return two_pow(2.0 - 1.0 / m) * std::pow(sum, 1.0 - 1.0 / m) * root(in.diffNorm, m);
}

bool hyper_bound_vacuous(const BoundInputs& in) {
  require_hyperbolic(in);
  return hyper_argument(in) > 1.0;
}

double hyper_bound_exact(const BoundInputs& in) {
  in.validate();
  require_hyperbolic(in);
  const double x = hyper_argument(in);
  if (x > 1.0) return 1.0;
  if (x == 0.0) return 0.0;
  const double log_q = log_inverse_k(x) / (2.0 * in.m);
  return std::clamp(modulus_k_from_log(log_q), 0.0, 1.0);
}

double hyper_bound_simple(const BoundInputs& in) {
  in.validate();
  if (!(in.normA < 1.0)) throw InvalidInputs("||A|| must be below 1");
  const double gap = 1.0 - in.rhoB * in.normA;
  if (!(gap > 0.0)) throw InvalidInputs("rho(B) ||A|| must be below 1");
  return two_pow(2.0 - 1.0 / in.m) * root(in.diffNorm / gap, in.m);
}

double krause_alpha(int n) {
  if (n < 1) throw InvalidInputs("n must be positive");
  if (n == 1) return 0.5;
  const double dn = n;
  const double first = std::exp((std::log(2.0) - 0.5 * std::log(dn * dn - 1.0)) / dn);
  return 0.5 * first * std::sqrt((dn - 1.0) / (dn + 1.0));
}

double krause_threshold(const BoundInputs& in, double min_nonzero_eig) {
  in.validate();
  if (in.n == 1) throw InvalidInputs("the admissibility condition is undefined for n = 1");
  if (!(min_nonzero_eig > 0.0)) throw InvalidInputs("minimum nonzero eigenvalue modulus must be positive");
  const double m2 = in.max_norm();
  if (m2 == 0.0) return INFINITY;
  const double n = in.n;
  const double log_t = -(n - 1.0) * std::log(2.0 * m2) + n * std::log((n + 1.0) / (n - 1.0)) +
                       n * std::log(krause_alpha(in.n)) + n * std::log(min_nonzero_eig);
  return std::exp(log_t);
}

bool krause_condition(const BoundInputs& in, double min_nonzero_eig) {
  return in.diffNorm <= krause_threshold(in, min_nonzero_eig);
}

double krause_bound(const BoundInputs& in) {
  in.validate();
  const int n = in.n;
  if (in.diffNorm == 0.0) return 0.0;
  return (1.0 / krause_alpha(n)) * std::pow(2.0 * in.max_norm(), 1.0 - 1.0 / n) *
         root(in.diffNorm, n);
}

bool containment_condition(cplx a, double r_h, double r_e) {
  if (!(r_h >= 0.0 && r_h < 1.0)) throw InvalidInputs("hyperbolic radius must lie in [0, 1)");
  if (r_h == 0.0) return true;
  const double abs_a = std::abs(a);
  return 1.0 - abs_a * abs_a <= (r_e / r_h) * (1.0 - r_h * abs_a);
}

double ConstantChoice::value(int n) const {
  switch (kind) {
    case EuclidConstant::BhatiaElsnerKrause:
      return two_pow(2.0 - 1.0 / n);
    case EuclidConstant::Krause:
      return 16.0 / (3.0 * std::sqrt(3.0));
    case EuclidConstant::Tabulated:
      return tabulated;
  }
  return tabulated;
}

std::string ConstantChoice::name() const {
  switch (kind) {
    case EuclidConstant::BhatiaElsnerKrause:
      return "bek";
    case EuclidConstant::Krause:
      return "krause";
    case EuclidConstant::Tabulated: {
      std::ostringstream os;
      os.precision(17);
      os << tabulated;
      return os.str();
    }
  }
  return "?";
}

ConstantChoice ConstantChoice::parse(const std::string& text) {
  if (text == "bek") return {EuclidConstant::BhatiaElsnerKrause, 0.0};
  if (text == "krause") return {EuclidConstant::Krause, 0.0};
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("constant must be 'bek', 'krause' or a positive number, got '" + text + "'");
  }
  return {EuclidConstant::Tabulated, v};
}

double generic_euclid_radius(const BoundInputs& in, const ConstantChoice& c) {
  in.validate();
  const int n = in.n;
  if (in.diffNorm == 0.0) return 0.0;
  return c.value(n) * std::pow(in.normA + in.normB, 1.0 - 1.0 / n) * root(in.diffNorm, n);
}

double hyperbolic_radius(const BoundInputs& in, bool use_norm_b) {
  if (!use_norm_b) return hyper_bound_simple(in);
  in.validate();
  const double gap = 1.0 - in.normA * in.normB;
  if (!(gap > 0.0)) throw InvalidInputs("||A|| ||B|| must be below 1");
  return two_pow(2.0 - 1.0 / in.m) * root(in.diffNorm / gap, in.m);
}

std::vector<LocalizationDisk> localization_disks(const Spectrum& spec_a, const BoundInputs& in,
                                                 DiskMode mode, const LocalizationOptions& opt) {
  std::vector<LocalizationDisk> disks;
  disks.reserve(spec_a.size());
  if (mode == DiskMode::Euclid) {
    const double r = generic_euclid_radius(in, opt.constant);
    const bool vacuous = r > 0.0 && r >= 2.0 * in.max_norm();
    for (const auto& a : spec_a) disks.push_back({a, a, r, r, mode, vacuous});
    return disks;
  }
  require_hyperbolic(in);
  const double r = hyperbolic_radius(in, opt.use_norm_b);
  const bool vacuous = r >= 1.0;
  for (const auto& a : spec_a) {
    const auto e = to_euclidean({a, std::min(r, 1.0)});
    disks.push_back({a, e.center, e.radius, r, mode, vacuous});
  }
  return disks;
}

std::string to_string(DiskMode mode) { return mode == DiskMode::Euclid ? "euclid" : "hyper"; }

bool BoundReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

BoundReport make_bound_report(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ReportOptions& opt) {
  if (a.dim() != b.dim()) throw SizeMismatch("matrices have different dimensions");
  BoundReport rep;
  rep.tolerance = opt.tolerance;
  auto& in = rep.inputs;
  in.n = static_cast<int>(a.dim());
  in.normA = op_norm(a);
  in.normB = op_norm(b);
  const Spectrum sa = eigenvalues(a);
  const Spectrum sb = eigenvalues(b);
  for (const auto& z : sb) in.rhoB = std::max(in.rhoB, std::abs(z));
  in.rhoB = std::min(in.rhoB, in.normB);
  in.diffNorm = op_norm(a - b);
  if (opt.m) {
    in.m = *opt.m;
  } else if (opt.estimate_m) {
    in.m = min_poly_degree(a, opt.min_poly_tol);
  } else {
    in.m = in.n;
  }
  in.validate();

  rep.dE = d_euclid(sa, sb);
  rep.euclid = euclid_bound(in);
  rep.verdicts.push_back({"euclid_bound_holds", true, *rep.dE <= rep.euclid + opt.tolerance, ""});

  if (in.hyperbolic_admissible()) {
    rep.dH = d_hyper(sa, sb);
    rep.hyperExact = hyper_bound_exact(in);
    rep.hyperSimple = hyper_bound_simple(in);
    rep.hyperVacuous = hyper_bound_vacuous(in);
    rep.verdicts.push_back({"hyper_bound_holds", true, *rep.dH <= *rep.hyperExact + opt.tolerance,
                            rep.hyperVacuous ? "vacuous" : ""});
    rep.verdicts.push_back(
        {"hyper_exact_le_simple", true, *rep.hyperExact <= *rep.hyperSimple + 1e-12, ""});
  } else {
    rep.verdicts.push_back({"hyper_bound_holds", false, true, "inapplicable: norm >= 1"});
  }

  double min_eig = INFINITY;
  const double eig_floor = 1e-14 * std::max(1.0, in.normA);
  for (const auto& z : sa) {
    if (std::abs(z) > eig_floor) min_eig = std::min(min_eig, std::abs(z));
  }
  rep.krause = krause_bound(in);
  if (in.n >= 2 && std::isfinite(min_eig)) {
    rep.krauseThreshold = krause_threshold(in, min_eig);
    rep.krauseApplicable = in.diffNorm <= *rep.krauseThreshold;
  }
  if (rep.krauseApplicable) {
    rep.verdicts.push_back({"krause_bound_holds", true, *rep.dE <= *rep.krause + opt.tolerance, ""});
  } else {
    rep.verdicts.push_back({"krause_bound_holds", false, true, "advisory: admissibility condition fails"});
  }
  return rep;
}

}  // namespace specvar
