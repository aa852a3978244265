#include "specvar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "specvar/error.hpp"

namespace specvar {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) {
    throw InvalidMatrix("dimension mismatch " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
  }
}

void require_valid(const ComplexMatrix& m) {
  if (m.dim() == 0) throw InvalidMatrix("empty matrix");
  if (!m.all_finite()) throw InvalidMatrix("non-finite entry");
}

// Unitary reduction to upper Hessenberg form by Householder reflections.
void reduce_to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.dim();
  if (n < 3) return;
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    double tail = 0.0;
    for (std::size_t i = 1; i < len; ++i) tail += std::norm(h(k + 1 + i, k));
    if (tail == 0.0) continue;
    const cplx x0 = h(k + 1, k);
    const double alpha = std::sqrt(tail + std::norm(x0));
    const cplx phase = std::abs(x0) == 0.0 ? cplx(1.0) : x0 / std::abs(x0);
    for (std::size_t i = 0; i < len; ++i) v[i] = h(k + 1 + i, k);
    v[0] += phase * alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) vnorm2 += std::norm(v[i]);
    const double beta = 2.0 / vnorm2;

    for (std::size_t j = k; j < n; ++j) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < len; ++i) dot += std::conj(v[i]) * h(k + 1 + i, j);
      dot *= beta;
      for (std::size_t i = 0; i < len; ++i) h(k + 1 + i, j) -= v[i] * dot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      cplx dot = 0.0;
      for (std::size_t i = 0; i < len; ++i) dot += h(r, k + 1 + i) * v[i];
      dot *= beta;
      for (std::size_t i = 0; i < len; ++i) h(r, k + 1 + i) -= dot * std::conj(v[i]);
    }
    for (std::size_t i = 2; i + k < n; ++i) h(k + i, k) = 0.0;
  }
}

// Eigenvalues of [[a, b], [c, d]], larger-modulus root computed first so the
// second can come from the determinant without cancellation.
std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
  const cplx mean = 0.5 * (a + d);
  const cplx half_diff = 0.5 * (a - d);
  const cplx disc = std::sqrt(half_diff * half_diff + b * c);
  const cplx l1 = std::abs(mean + disc) >= std::abs(mean - disc) ? mean + disc : mean - disc;
  const cplx det = a * d - b * c;
  const cplx l2 = std::abs(l1) == 0.0 ? cplx(0.0) : det / l1;
  return {l1, l2};
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n, cplx(0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<cplx> entries)
    : n_(n), a_(std::move(entries)) {
  if (n == 0) throw InvalidMatrix("dimension must be positive");
  if (a_.size() != n * n) {
    throw InvalidMatrix("expected " + std::to_string(n * n) + " entries, got " +
                        std::to_string(a_.size()));
  }
  if (!all_finite()) throw InvalidMatrix("non-finite entry");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

bool ComplexMatrix::all_finite() const noexcept {
  return std::all_of(a_.begin(), a_.end(), finite);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : a_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v) {
  const std::size_t n = m.dim();
  if (v.size() != n) throw InvalidMatrix("vector length does not match matrix dimension");
  std::vector<cplx> out(n, cplx(0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i] += m(i, j) * v[j];
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.entries()) s += std::norm(x);
  return std::sqrt(s);
}

double vector_norm(std::span<const cplx> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  require_valid(h);
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  // Symmetrize against rounding in the caller's Gram product.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  const double scale = frobenius_norm(a);
  if (scale > 0.0) {
    for (int sweep = 0; sweep < 64; ++sweep) {
      double off = 0.0;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
      if (std::sqrt(off) <= 1e-17 * scale) break;

      for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const cplx b = a(p, q);
          const double babs = std::abs(b);
          if (babs <= 1e-300) continue;
          const cplx e = b / babs;
          const double app = a(p, p).real();
          const double aqq = a(q, q).real();
          const double theta = (aqq - app) / (2.0 * babs);
          const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          // J = [[c, s], [-s conj(e), c conj(e)]] on (p, q); A <- J^H A J.
          for (std::size_t k = 0; k < n; ++k) {
            const cplx akp = a(k, p);
            const cplx akq = a(k, q);
            a(k, p) = c * akp - s * std::conj(e) * akq;
            a(k, q) = s * akp + c * std::conj(e) * akq;
          }
          for (std::size_t k = 0; k < n; ++k) {
            const cplx apk = a(p, k);
            const cplx aqk = a(q, k);
            a(p, k) = c * apk - s * e * aqk;
            a(q, k) = s * apk + c * e * aqk;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = app - t * babs;
          a(q, q) = aqq + t * babs;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i).real();
  std::sort(out.begin(), out.end());
  return out;
}

double op_norm(const ComplexMatrix& m) {
  require_valid(m);
  const auto gram = adjoint(m) * m;
  const auto ev = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(0.0, ev.back()));
}

Spectrum eigenvalues(const ComplexMatrix& m) {
  require_valid(m);
  const std::size_t n = m.dim();
  Spectrum eig(n);
  if (n == 1) {
    eig[0] = m(0, 0);
    return eig;
  }
  const double scale = frobenius_norm(m);
  if (scale == 0.0) return eig;
  const double deflate_abs = 1e-14 * scale;

  ComplexMatrix h = m;
  reduce_to_hessenberg(h);

  const int cap = 100 * static_cast<int>(n);
  int total = 0;
  int its = 0;
  std::vector<double> cs(n);
  std::vector<cplx> sn(n);

  int hi = static_cast<int>(n) - 1;
  while (hi >= 0) {
    int l = hi;
    for (; l > 0; --l) {
      const double sub = std::abs(h(l, l - 1));
      const double diag = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (sub <= kEps * diag || sub <= deflate_abs) {
        h(l, l - 1) = 0.0;
        break;
      }
    }
    if (l == hi) {
      eig[hi] = h(hi, hi);
      --hi;
      its = 0;
      continue;
    }
    if (l == hi - 1) {
      const auto [l1, l2] = eig2x2(h(l, l), h(l, hi), h(hi, l), h(hi, hi));
      eig[l] = l1;
      eig[hi] = l2;
      hi -= 2;
      its = 0;
      continue;
    }
    if (total >= cap) {
      throw SolverFailure("QR iteration did not converge after " + std::to_string(total) +
                          " steps (n=" + std::to_string(n) + ")");
    }

    cplx mu;
    if (its == 10 || its == 20) {
      mu = h(hi, hi) + cplx(std::abs(h(hi, hi - 1)) + std::abs(h(hi - 1, hi - 2)), 0.0);
    } else {
      const auto [r1, r2] = eig2x2(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
      mu = std::abs(r1 - h(hi, hi)) <= std::abs(r2 - h(hi, hi)) ? r1 : r2;
    }

    for (int k = l; k <= hi; ++k) h(k, k) -= mu;
    for (int k = l; k < hi; ++k) {
      const cplx x = h(k, k);
      const cplx y = h(k + 1, k);
      const double nrm = std::hypot(std::abs(x), std::abs(y));
      double c = 1.0;
      cplx s = 0.0;
      if (nrm > 0.0) {
        if (std::abs(x) == 0.0) {
          c = 0.0;
          s = std::conj(y) / std::abs(y);
        } else {
          const cplx alpha = x / std::abs(x);
          c = std::abs(x) / nrm;
          s = alpha * std::conj(y) / nrm;
        }
      }
      cs[k] = c;
      sn[k] = s;
      for (int j = k; j <= hi; ++j) {
        const cplx u = h(k, j);
        const cplx w = h(k + 1, j);
        h(k, j) = c * u + s * w;
        h(k + 1, j) = -std::conj(s) * u + c * w;
      }
    }
    for (int k = l; k < hi; ++k) {
      const double c = cs[k];
      const cplx s = sn[k];
      for (int r = l; r <= k + 1; ++r) {
        const cplx u = h(r, k);
        const cplx w = h(r, k + 1);
        h(r, k) = c * u + std::conj(s) * w;
        h(r, k + 1) = -s * u + c * w;
      }
    }
    for (int k = l; k <= hi; ++k) h(k, k) += mu;
    ++its;
    ++total;
  }
  return eig;
}

double spectral_radius(const ComplexMatrix& m) {
  double r = 0.0;
  for (const auto& z : eigenvalues(m)) r = std::max(r, std::abs(z));
  return r;
}

std::vector<double> singular_values_of_columns(std::vector<std::vector<cplx>> cols) {
  const std::size_t k = cols.size();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto& u = cols[i];
        auto& w = cols[j];
        double alpha = 0.0;
        double beta = 0.0;
        cplx gamma = 0.0;
        for (std::size_t r = 0; r < u.size(); ++r) {
          alpha += std::norm(u[r]);
          beta += std::norm(w[r]);
          gamma += std::conj(u[r]) * w[r];
        }
        const double gabs = std::abs(gamma);
        if (gabs == 0.0 || gabs <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx e = gamma / gabs;
        const double zeta = (beta - alpha) / (2.0 * gabs);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < u.size(); ++r) {
          const cplx ur = u[r];
          const cplx wr = w[r] * std::conj(e);
          u[r] = c * ur - s * wr;
          w[r] = s * ur + c * wr;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(k);
  for (std::size_t i = 0; i < k; ++i) sv[i] = vector_norm(cols[i]);
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

int min_poly_degree(const ComplexMatrix& m, double tol) {
  require_valid(m);
  if (!(tol > 0.0)) throw InvalidInputs("tolerance must be positive");
  const std::size_t n = m.dim();
  const double scale = frobenius_norm(m);
  if (scale == 0.0) return 1;
  const ComplexMatrix step = (1.0 / scale) * m;

  auto vec_normalized = [](const ComplexMatrix& p) {
    std::vector<cplx> v(p.entries().begin(), p.entries().end());
    const double nv = vector_norm(v);
    if (nv > 0.0)
      for (auto& x : v) x /= nv;
    return std::pair{v, nv};
  };

  std::vector<std::vector<cplx>> cols;
  ComplexMatrix power = ComplexMatrix::identity(n);
  cols.push_back(vec_normalized(power).first);
  for (std::size_t d = 1; d <= n; ++d) {
    power = power * step;
    auto [v, nv] = vec_normalized(power);
    if (nv == 0.0) return static_cast<int>(d);
    cols.push_back(std::move(v));
    const auto sv = singular_values_of_columns(cols);
    if (sv.back() < tol * sv.front()) return static_cast<int>(d);
  }
  return static_cast<int>(n);
}

LuDecomposition::LuDecomposition(ComplexMatrix m) : lu_(std::move(m)) {
  require_valid(lu_);
  const std::size_t n = lu_.dim();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu_(i, k)) > best) {
        best = std::abs(lu_(i, k));
        piv = i;
      }
    }
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[k], perm_[piv]);
      sign_ = -sign_;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu_(i, k) / lu_(k, k);
      lu_(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
    }
  }
}

cplx LuDecomposition::determinant() const {
  if (singular_) return 0.0;
  cplx d = static_cast<double>(sign_);
  for (std::size_t i = 0; i < lu_.dim(); ++i) d *= lu_(i, i);
  return d;
}

std::vector<cplx> LuDecomposition::solve(std::span<const cplx> rhs) const {
  if (singular_) throw InvalidMatrix("singular matrix");
  const std::size_t n = lu_.dim();
  if (rhs.size() != n) throw InvalidMatrix("right-hand side length mismatch");
  std::vector<cplx> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[perm_[i]];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu_(i, j) * x[j];
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t j = ii + 1; j < n; ++j) x[ii] -= lu_(ii, j) * x[j];
    x[ii] /= lu_(ii, ii);
  }
  return x;
}

ComplexMatrix LuDecomposition::solve(const ComplexMatrix& rhs) const {
  const std::size_t n = lu_.dim();
  if (rhs.dim() != n) throw InvalidMatrix("right-hand side dimension mismatch");
  ComplexMatrix out(n);
  std::vector<cplx> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = rhs(i, j);
    const auto x = solve(col);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = x[i];
  }
  return out;
}

ComplexMatrix LuDecomposition::inverse() const {
  return solve(ComplexMatrix::identity(lu_.dim()));
}

ComplexMatrix inverse(const ComplexMatrix& m) { return LuDecomposition(m).inverse(); }

cplx determinant(const ComplexMatrix& m) { return LuDecomposition(m).determinant(); }

}  // namespace specvar
