#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace specvar {

using cplx = std::complex<double>;

/// Dense square complex matrix stored row-major.
///
/// Construction validates that every entry is finite; arithmetic helpers
/// below keep that invariant for finite inputs.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  /// Zero matrix of dimension n (n >= 1).
  explicit ComplexMatrix(std::size_t n);
  /// Throws InvalidMatrix unless entries.size() == n*n and all are finite.
  ComplexMatrix(std::size_t n, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);

  std::size_t dim() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) noexcept { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const noexcept {
    return a_[i * n_ + j];
  }
  std::span<const cplx> entries() const noexcept { return a_; }

  bool all_finite() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);

ComplexMatrix adjoint(const ComplexMatrix& m);
std::vector<cplx> apply(const ComplexMatrix& m, std::span<const cplx> v);
double frobenius_norm(const ComplexMatrix& m);
double vector_norm(std::span<const cplx> v);

/// Multiset of eigenvalues, with algebraic multiplicity.
using Spectrum = std::vector<cplx>;

/// Largest singular value, from the Hermitian Gram matrix M^H M
/// diagonalized by cyclic Jacobi rotations.
double op_norm(const ComplexMatrix& m);

/// All eigenvalues of the Hermitian matrix h, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Eigenvalues by Householder-Hessenberg reduction and single-shift complex
/// QR. Throws SolverFailure after 100*n QR steps without convergence.
Spectrum eigenvalues(const ComplexMatrix& m);

double spectral_radius(const ComplexMatrix& m);

/// Singular values (descending) of the tall matrix whose columns are given,
/// by one-sided Jacobi. Accurate in the relative sense, unlike the Gram route.
std::vector<double> singular_values_of_columns(std::vector<std::vector<cplx>> cols);

/// Smallest d such that {I, M, ..., M^d} (each power normalized) is
/// numerically dependent, i.e. sigma_min / sigma_max < tol. Falls back to n.
int min_poly_degree(const ComplexMatrix& m, double tol = 1e-8);

/// LU factorization with partial pivoting.
class LuDecomposition {
 public:
  explicit LuDecomposition(ComplexMatrix m);
  bool singular() const noexcept { return singular_; }
  cplx determinant() const;
  /// Throws InvalidMatrix when the factorization is singular.
  std::vector<cplx> solve(std::span<const cplx> rhs) const;
  ComplexMatrix solve(const ComplexMatrix& rhs) const;
  ComplexMatrix inverse() const;

 private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  int sign_ = 1;
  bool singular_ = false;
};

ComplexMatrix inverse(const ComplexMatrix& m);
cplx determinant(const ComplexMatrix& m);

}  // namespace specvar
