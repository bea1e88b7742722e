#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tangle/errors.hpp"
#include "tangle/qudit.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

/// Square dense complex matrix, row-major. Only used for small blocks.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}
  DenseMatrix(std::size_t n, std::vector<Complex> row_major);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> values);
  static DenseMatrix from(const DensityMatrix& m) { return DenseMatrix(m.dim(), m.to_dense()); }

  std::size_t size() const noexcept { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  std::span<const Complex> data() const noexcept { return data_; }

  DenseMatrix adjoint() const;
  double max_abs() const;
  double frobenius() const;
  double hermiticity_defect() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

struct EigenResult {
  /// Ascending. For sparse inputs this covers the support only; see implicit_zeros.
  std::vector<double> eigenvalues;
  /// max ||M v - lambda v|| over the computed pairs.
  double residual = 0.0;
  /// Exact zero eigenvalues from rows and columns with no entries.
  std::size_t implicit_zeros = 0;
  /// Largest number of Jacobi sweeps any block needed.
  std::size_t sweeps = 0;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;  // column i pairs with eigenvalues[i]
  double residual = 0.0;
  std::size_t sweeps = 0;
};

/// Cyclic complex Jacobi. Throws DomainError if m is not Hermitian within tol.herm
/// (relative to its largest entry) and NumericalError if it fails to converge.
EigenDecomposition eigen_hermitian(const DenseMatrix& m, const Tolerances& tol = {});
EigenResult eigenvalues_hermitian(const DenseMatrix& m, const Tolerances& tol = {});

/// Spectrum of a sparse Hermitian matrix. The matrix is split into the
/// connected components of its nonzero pattern and each block is
/// diagonalised independently.
EigenResult spectrum(const DensityMatrix& m, const Tolerances& tol = {});

double trace_norm(const DenseMatrix& m, const Tolerances& tol = {});
double trace_norm(const DensityMatrix& m, const Tolerances& tol = {});

/// ||rho^{T_subsystem}||_1 - tr(rho). Not clamped.
double negativity(const DensityMatrix& rho, std::size_t subsystem, const Tolerances& tol = {});

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  /// Geometric estimate of the neglected tail from the last term ratio.
  double tail_bound = 0.0;
};

/// Sums term(0) + term(1) + ... until the geometric tail estimate
/// |t_n| q / (1 - q), q = |t_n / t_{n-1}|, drops below tol * |sum|.
/// Terms must eventually decrease monotonically in magnitude.
template <typename Term>
  requires std::invocable<Term, std::size_t>
SeriesResult sum_series(Term&& term, double tol, std::size_t max_terms = kMaxSeriesTerms) {
  // Neumaier-compensated running sum.
  double sum = 0.0;
  double carry = 0.0;
  double previous = 0.0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const double t = static_cast<double>(term(n));
    if (!std::isfinite(t)) throw NumericalError("sum_series: non-finite term at n=" + std::to_string(n));
    const double next = sum + t;
    carry += std::abs(sum) >= std::abs(t) ? (sum - next) + t : (t - next) + sum;
    sum = next;

    const double total = std::abs(sum + carry);
    if (t == 0.0) {
      if (n == 0 || previous == 0.0) return {sum + carry, n + 1, 0.0};
      previous = t;
      continue;
    }
    if (n > 0 && previous != 0.0) {
      const double q = std::abs(t / previous);
      if (q < 1.0) {
        const double tail = std::abs(t) * q / (1.0 - q);
        if (tail <= tol * total) return {sum + carry, n + 1, tail};
      }
    }
    previous = t;
  }
  throw NumericalError("sum_series: no convergence within " + std::to_string(max_terms) +
                       " terms (partial sum " + std::to_string(sum + carry) + ", last term " +
                       std::to_string(previous) + ")");
}

/// Li_{-1/2}(x) = sum_{k>=1} sqrt(k) x^k for 0 <= x < 1.
double polylog_neg_half(double x, double tol = 1e-14);

}  // namespace tangle
