#pragma once

#include "specvar/linalg.hpp"

namespace specvar {

/// Points with modulus in [1 - kBoundaryTol, 1] count as boundary points.
inline constexpr double kBoundaryTol = 1e-14;

/// Pseudo-hyperbolic distance |(a - b) / (1 - conj(a) b)| on the closed disk.
/// Throws DegenerateInput when conj(a) b = 1 (same boundary point), and
/// OutOfDomain when either point lies outside the closed disk.
double pseudo_distance(cplx a, cplx b);

struct EuclideanDisk {
  cplx center;
  double radius = 0.0;
};

/// The set {z : pseudo_distance(center, z) < radius}.
struct HyperbolicDisk {
  cplx center;
  double radius = 0.0;
};

/// Euclidean center and radius of a hyperbolic disk:
///   C = a (1 - r^2) / (1 - r^2 |a|^2),  R = r (1 - |a|^2) / (1 - r^2 |a|^2).
/// Throws DegenerateInput for r = 1 with a on the boundary.
EuclideanDisk to_euclidean(const HyperbolicDisk& d);

/// Hyperbolic geodesic through a (s = 0) and b (s = 1):
///   s -> (s C + a) / (1 + s conj(a) C),  C = (b - a) / (1 - conj(a) b),
/// defined for |s| < 1 / |C|.
class Geodesic {
 public:
  /// Requires a != b, both in the open disk.
  Geodesic(cplx a, cplx b);

  cplx a() const noexcept { return a_; }
  cplx b() const noexcept { return b_; }
  cplx coefficient() const noexcept { return coef_; }
  /// Half-width of the open parameter domain, 1 / |C(a,b)|.
  double parameter_bound() const noexcept { return 1.0 / std::abs(coef_); }

  /// Throws OutOfDomain for |s| >= 1/|C|.
  cplx point(double s) const;

  /// Moebius map sending the geodesic onto the real diameter, a -> 0 and
  /// b -> |C| > 0; Gamma(s) maps to s |C|.
  cplx to_model(cplx z) const;
  cplx from_model(cplx w) const;

 private:
  cplx a_;
  cplx b_;
  cplx coef_;
  cplx rot_;  // e^{-i arg C}
};

cplx geodesic_point(const Geodesic& g, double s);

/// Perpendicular projection of z onto g, returned as the geodesic parameter s.
double project_parameter(const Geodesic& g, cplx z);

/// Perpendicular projection of an interior point onto g. Points already on g
/// are fixed. Throws OutOfDomain for boundary or exterior points.
cplx project(const Geodesic& g, cplx z);

/// Foot of the hyperbolic perpendicular from w onto the real diameter (-1, 1).
double foot_on_real_diameter(cplx w);

}  // namespace specvar
