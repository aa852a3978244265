#include "specvar/hypgeo.hpp"

#include <cmath>

#include "specvar/error.hpp"

namespace specvar {

namespace {

void require_closed_disk(cplx z, const char* what) {
  if (!(std::abs(z) <= 1.0 + kBoundaryTol)) {
    throw OutOfDomain(std::string(what) + " lies outside the closed unit disk");
  }
}

void require_open_disk(cplx z, const char* what) {
  if (!(std::abs(z) < 1.0 - kBoundaryTol)) {
    throw OutOfDomain(std::string(what) + " must lie in the open unit disk");
  }
}

}  // namespace

double pseudo_distance(cplx a, cplx b) {
  require_closed_disk(a, "a");
  require_closed_disk(b, "b");
  const cplx den = 1.0 - std::conj(a) * b;
  const double num = std::abs(a - b);
  if (std::abs(den) <= 1e-300) {
    throw DegenerateInput("conj(a) b = 1: coincident boundary points");
  }
  return std::min(1.0, num / std::abs(den));
}

EuclideanDisk to_euclidean(const HyperbolicDisk& d) {
  const double r = d.radius;
  if (!(r >= 0.0 && r <= 1.0)) throw InvalidInputs("hyperbolic radius must lie in [0, 1]");
  require_closed_disk(d.center, "center");
  const double a2 = std::norm(d.center);
  const double den = 1.0 - r * r * a2;
  if (den <= 0.0) throw DegenerateInput("radius 1 around a boundary point");
  return {d.center * ((1.0 - r * r) / den), r * std::max(0.0, 1.0 - a2) / den};
}

Geodesic::Geodesic(cplx a, cplx b) : a_(a), b_(b) {
  require_open_disk(a, "a");
  require_open_disk(b, "b");
  if (a == b) throw DegenerateInput("geodesic endpoints coincide");
  coef_ = (b - a) / (1.0 - std::conj(a) * b);
  rot_ = std::conj(coef_) / std::abs(coef_);
}

cplx Geodesic::point(double s) const {
  if (!(std::abs(s) < parameter_bound())) {
    throw OutOfDomain("geodesic parameter outside (-1/|C|, 1/|C|)");
  }
  return (s * coef_ + a_) / (1.0 + s * std::conj(a_) * coef_);
}

cplx Geodesic::to_model(cplx z) const {
  return rot_ * (z - a_) / (1.0 - std::conj(a_) * z);
}

cplx Geodesic::from_model(cplx w) const {
  const cplx u = std::conj(rot_) * w;
  return (u + a_) / (1.0 + std::conj(a_) * u);
}

cplx geodesic_point(const Geodesic& g, double s) { return g.point(s); }

double foot_on_real_diameter(cplx w) {
  // The perpendicular through w is a circle orthogonal to the unit circle
  // centred on the real axis; its inner real intersection is the smaller root
  // of t^2 - 2ct + 1 = 0 with c = (1 + |w|^2) / (2 Re w).
  const double x = w.real();
  const double p = 1.0 + std::norm(w);
  return 2.0 * x / (p + std::sqrt(std::max(0.0, p * p - 4.0 * x * x)));
}

double project_parameter(const Geodesic& g, cplx z) {
  require_open_disk(z, "z");
  const cplx w = g.to_model(z);
  return foot_on_real_diameter(w) / std::abs(g.coefficient());
}

cplx project(const Geodesic& g, cplx z) {
  require_open_disk(z, "z");
  const cplx w = g.to_model(z);
  if (w.imag() == 0.0) return z;
  return g.from_model(cplx(foot_on_real_diameter(w), 0.0));
}

}  // namespace specvar
