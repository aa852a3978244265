#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "specvar/bounds.hpp"
#include "specvar/linalg.hpp"

namespace specvar {

// ---------------------------------------------------------------------------
// 1/alpha_n table

struct AlphaRow {
  int n = 1;
  double alpha = 0.0;
  double inv_alpha = 0.0;
};

/// 1..12, 100, 1000.
std::vector<int> default_alpha_ns();
std::vector<AlphaRow> table_alpha(const std::vector<int>& ns);
/// Header: n,alpha,inv_alpha
std::string to_csv(const std::vector<AlphaRow>& rows);

// ---------------------------------------------------------------------------
// sqrt(k(q^n)) against 2^{1-n} k(q)^{n/2}

struct ModulusRow {
  double q = 0.0;
  int n = 1;
  double sqrt_k_qn = 0.0;
  double chebyshev_rhs = 0.0;
};

std::vector<ModulusRow> figure_k(const std::vector<double>& qs, int n_max);
/// Header: q,n,sqrt_k_qn,chebyshev_rhs
std::string to_csv(const std::vector<ModulusRow>& rows);

// ---------------------------------------------------------------------------
// Localization scenes

/// Below this perturbation size A + E == A in double precision, so the
/// scene uses sigma(B) := sigma(A) and analytic inputs.
inline constexpr double kPerturbationFloor = 1e-12;

struct SceneOptions {
  std::string label = "scene";
  int n = 6;
  double eps = 1e-10;
  double norm_a = 0.3;
  ConstantChoice constant;
  bool use_norm_b = false;
  std::uint64_t seed = 0;
  std::optional<ComplexMatrix> a;  ///< overrides the random draw; norm_a is then ignored
};

struct LocalizationScene {
  SceneOptions options;
  ComplexMatrix a{1};
  Spectrum sigma_a;
  Spectrum sigma_b;
  BoundInputs inputs;
  bool floor_applied = false;  ///< true when eps < kPerturbationFloor
  bool hyper_available = false;
  std::vector<LocalizationDisk> euclid;
  std::vector<LocalizationDisk> hyper;
  std::vector<bool> euclid_contains_b;
  std::vector<bool> hyper_contains_b;
};

/// A is a Ginibre draw rescaled to norm_a (the same base draw for every
/// norm at a given seed), B = A + E with ||E|| = eps.
LocalizationScene make_scene(const SceneOptions& opt);

/// Whether every non-vacuous hyper disk holds an eigenvalue of B.
bool hyper_disks_sound(const LocalizationScene& s);

/// Indices of eigenvalues of A whose modulus is at least the upper median.
std::vector<std::size_t> large_modulus_indices(const LocalizationScene& s);

/// The two "fig1" panels (n = 6, eps = 1e-10, ||A|| in {0.3, 0.9}, BEK
/// constant) or the two "fig3" panels (n = 12, eps = 1e-18, ||A|| in {0.5, 0.95},
/// C_12 = 2.6543) reproductions.
std::vector<LocalizationScene> figure_scenes(const std::string& which, std::uint64_t seed);

nlohmann::json to_json(const LocalizationScene& s);
/// Header: label,mode,eig_re,eig_im,center_re,center_im,radius,nominal_radius,vacuous,contains_b
std::string to_csv(const std::vector<LocalizationScene>& scenes);

/// CSV dataset for "table1", "fig1", "fig2" or "fig3"; throws ConfigError otherwise.
std::string figure_data(const std::string& which, std::uint64_t seed);

}  // namespace specvar
