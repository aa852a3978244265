#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specvar/hypgeo.hpp"
#include "specvar/linalg.hpp"

namespace specvar {

/// Scalar data every bound is computed from.
struct BoundInputs {
  double normA = 0.0;
  double normB = 0.0;
  double rhoB = 0.0;  ///< spectral radius of B
  double diffNorm = 0.0;
  int m = 1;  ///< degree of the minimal polynomial of A
  int n = 1;  ///< dimension

  /// Throws InvalidInputs when the type invariants fail.
  void validate() const;
  /// normA < 1 and normB < 1.
  bool hyperbolic_admissible() const noexcept { return normA < 1.0 && normB < 1.0; }
  double max_norm() const noexcept { return normA > normB ? normA : normB; }
};

/// 2^{2-1/m} (||A|| + ||B||)^{1-1/m} ||A-B||^{1/m}.
double euclid_bound(const BoundInputs& in);

/// k( k^{-1}( ||A-B||^2 / (1 - rho(B)||A||)^2 )^{1/(2m)} ), clamped to [0, 1].
/// Returns 1 (vacuous) when the argument of k^{-1} exceeds 1. Throws
/// InvalidInputs unless ||A||, ||B|| < 1.
double hyper_bound_exact(const BoundInputs& in);

/// True when the argument of k^{-1} in hyper_bound_exact exceeds 1.
bool hyper_bound_vacuous(const BoundInputs& in);

/// 2^{2-1/m} ||A-B||^{1/m} / (1 - rho(B)||A||)^{1/m}. Throws InvalidInputs when
/// rho(B)||A|| >= 1 or ||A|| >= 1.
double hyper_bound_simple(const BoundInputs& in);

/// alpha_n = (1/2) (2 / sqrt(n^2-1))^{1/n} sqrt((n-1)/(n+1)); alpha_1 = 1/2.
double krause_alpha(int n);

/// Right-hand side of the admissibility condition,
///   (1/(2 M2))^{n-1} ((n+1)/(n-1))^n alpha_n^n minNonzeroEig^n.
double krause_threshold(const BoundInputs& in, double min_nonzero_eig);

/// ||A-B|| <= krause_threshold. Throws InvalidInputs for n = 1 or a
/// non-positive eigenvalue modulus.
bool krause_condition(const BoundInputs& in, double min_nonzero_eig);

/// (1/alpha_n) (2 M2)^{1-1/n} ||A-B||^{1/n}.
double krause_bound(const BoundInputs& in);

/// Whether the hyperbolic disk (a, r_h) lies inside the Euclidean disk
/// (a, r_e): 1 - |a|^2 <= (r_e / r_h) (1 - r_h |a|). r_h = 0 is always true.
bool containment_condition(cplx a, double r_h, double r_e);

/// Constants C_n for the generic bound C_n (||A||+||B||)^{1-1/n} ||A-B||^{1/n}.
enum class EuclidConstant { BhatiaElsnerKrause, Krause, Tabulated };

struct ConstantChoice {
  EuclidConstant kind = EuclidConstant::BhatiaElsnerKrause;
  double tabulated = 2.6543;  ///< used when kind == Tabulated

  double value(int n) const;
  std::string name() const;
  /// Parses "bek", "krause" or a positive decimal (tabulated value).
  static ConstantChoice parse(const std::string& text);
};

/// C_n (||A||+||B||)^{1-1/n} ||A-B||^{1/n}.
double generic_euclid_radius(const BoundInputs& in, const ConstantChoice& c);

/// Hyperbolic radius r_h with either rho(B)||A|| (default) or ||A|| ||B||
/// in the denominator.
double hyperbolic_radius(const BoundInputs& in, bool use_norm_b);

enum class DiskMode { Euclid, Hyper };

struct LocalizationDisk {
  cplx eigenvalue;      ///< eigenvalue of A the disk is built around
  cplx center;          ///< Euclidean center
  double radius = 0.0;  ///< Euclidean radius
  double nominal_radius = 0.0;  ///< r_e or r_h before conversion
  DiskMode mode = DiskMode::Euclid;
  bool vacuous = false;
};

struct LocalizationOptions {
  ConstantChoice constant;
  bool use_norm_b = false;
};

/// One disk per eigenvalue of A. Hyper mode converts (a, r_h) with
/// to_euclidean; radii >= 1 are flagged vacuous but still emitted.
std::vector<LocalizationDisk> localization_disks(const Spectrum& spec_a, const BoundInputs& in,
                                                 DiskMode mode, const LocalizationOptions& opt = {});

std::string to_string(DiskMode mode);

/// Everything computed for one (A, B) pair.
struct BoundReport {
  BoundInputs inputs;
  double euclid = 0.0;
  std::optional<double> hyperExact;
  std::optional<double> hyperSimple;
  bool hyperVacuous = false;
  std::optional<double> krause;
  bool krauseApplicable = false;
  std::optional<double> krauseThreshold;
  std::optional<double> dE;
  std::optional<double> dH;
  double tolerance = 1e-9;

  struct Verdict {
    std::string bound;
    bool evaluated = false;
    bool pass = true;
    std::string note;
  };
  std::vector<Verdict> verdicts;

  bool all_pass() const;
};

struct ReportOptions {
  std::optional<int> m;        ///< minimal-polynomial degree override
  bool estimate_m = false;     ///< use min_poly_degree instead of n
  double min_poly_tol = 1e-8;
  double tolerance = 1e-9;
};

/// Builds the full report for a matrix pair: norms, spectra, distances, every
/// applicable bound and per-bound verdicts.
BoundReport make_bound_report(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ReportOptions& opt = {});

}  // namespace specvar
