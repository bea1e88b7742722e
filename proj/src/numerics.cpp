#include "tangle/numerics.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace tangle {

DenseMatrix::DenseMatrix(std::size_t n, std::vector<Complex> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw DomainError("DenseMatrix: data size is not n*n");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> values) {
  DenseMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::frobenius() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

double DenseMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r; c < n_; ++c) d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  }
  return d;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw DomainError("DenseMatrix product: size mismatch");
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxSweeps = 100;

void require_hermitian(double defect, double scale, const Tolerances& tol) {
  if (defect > tol.herm * std::max(scale, 1e-300)) {
    throw DomainError("matrix is not Hermitian: defect " + std::to_string(defect) + " exceeds " +
                      std::to_string(tol.herm) + " x max entry " + std::to_string(scale));
  }
}

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (p != q) s += std::norm(a(p, q));
    }
  }
  return std::sqrt(s);
}

double residual_of(const DenseMatrix& m, const std::vector<double>& values, const DenseMatrix& vectors) {
  const std::size_t n = m.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      Complex mv{};
      for (std::size_t k = 0; k < n; ++k) mv += m(r, k) * vectors(k, i);
      s += std::norm(mv - values[i] * vectors(r, i));
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

}  // namespace

EigenDecomposition eigen_hermitian(const DenseMatrix& m, const Tolerances& tol) {
  const std::size_t n = m.size();
  require_hermitian(m.hermiticity_defect(), m.max_abs(), tol);

  DenseMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  }
  DenseMatrix v = DenseMatrix::identity(n);
  const double threshold = tol.eig * a.frobenius();

  std::size_t sweep = 0;
  for (; off_diagonal_norm(a) > threshold; ++sweep) {
    if (sweep == kMaxSweeps) {
      throw NumericalError("eigen_hermitian: Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                           " sweeps (off-diagonal " + std::to_string(off_diagonal_norm(a)) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Rotate the phase of a_pq onto the real axis, then apply a real
        // Jacobi rotation: J = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const Complex phase = apq / mag;
        const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = std::isinf(theta * theta) ? 0.5 / theta
                                                   : std::copysign(1.0, theta) /
                                                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex sp = s * phase;
        const Complex cp = c * phase;
        const Complex sq = s * std::conj(phase);
        const Complex cq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A J
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - sq * akq;
          a(k, q) = s * akp + cq * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- J^dagger A
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - sp * aqk;
          a(q, k) = s * apk + cp * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V J
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - sq * vkq;
          v(k, q) = s * vkp + cq * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.eigenvalues[i] = a(order[i], order[i]).real();
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, i) = v(k, order[i]);
  }
  out.residual = residual_of(m, out.eigenvalues, out.eigenvectors);
  out.sweeps = sweep;
  return out;
}

EigenResult eigenvalues_hermitian(const DenseMatrix& m, const Tolerances& tol) {
  auto d = eigen_hermitian(m, tol);
  return {std::move(d.eigenvalues), d.residual, 0, d.sweeps};
}

// ---------------------------------------------------------------------------

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

EigenResult spectrum(const DensityMatrix& m, const Tolerances& tol) {
  require_hermitian(m.hermiticity_defect(), m.max_abs(), tol);
  const auto entries = m.entries();

  std::vector<Index> nodes;
  nodes.reserve(2 * entries.size());
  for (const auto& e : entries) {
    nodes.push_back(e.row);
    nodes.push_back(e.col);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto local = [&](Index i) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), i) - nodes.begin());
  };

  DisjointSets sets(nodes.size());
  for (const auto& e : entries) sets.unite(local(e.row), local(e.col));

  // Position of each node inside its block, and block membership lists.
  std::vector<std::size_t> block_of(nodes.size());
  std::vector<std::size_t> slot(nodes.size());
  std::vector<std::vector<std::size_t>> members;
  std::unordered_map<std::size_t, std::size_t> block_index;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto root = sets.find(i);
    auto [it, inserted] = block_index.try_emplace(root, members.size());
    if (inserted) members.emplace_back();
    block_of[i] = it->second;
    slot[i] = members[it->second].size();
    members[it->second].push_back(i);
  }

  std::vector<DenseMatrix> blocks;
  blocks.reserve(members.size());
  for (const auto& mem : members) blocks.emplace_back(mem.size());
  for (const auto& e : entries) {
    const auto r = local(e.row);
    const auto c = local(e.col);
    blocks[block_of[r]](slot[r], slot[c]) = e.value;
  }

  EigenResult out;
  out.eigenvalues.reserve(nodes.size());
  for (const auto& block : blocks) {
    if (block.size() == 1) {
      out.eigenvalues.push_back(block(0, 0).real());
      continue;
    }
    auto part = eigen_hermitian(block, tol);
    out.eigenvalues.insert(out.eigenvalues.end(), part.eigenvalues.begin(), part.eigenvalues.end());
    out.residual = std::max(out.residual, part.residual);
    out.sweeps = std::max(out.sweeps, part.sweeps);
  }
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.implicit_zeros = static_cast<std::size_t>(m.dim() - nodes.size());
  return out;
}

namespace {

double sum_abs(const std::vector<double>& values) {
  // Ascending magnitude keeps the rounding error of long spectra small.
  std::vector<double> mags(values.size());
  std::transform(values.begin(), values.end(), mags.begin(), [](double x) { return std::abs(x); });
  std::sort(mags.begin(), mags.end());
  double sum = 0.0;
  double carry = 0.0;
  for (double x : mags) {
    const double next = sum + x;
    carry += sum >= x ? (sum - next) + x : (x - next) + sum;
    sum = next;
  }
  return sum + carry;
}

}  // namespace

double trace_norm(const DenseMatrix& m, const Tolerances& tol) { return sum_abs(eigenvalues_hermitian(m, tol).eigenvalues); }

double trace_norm(const DensityMatrix& m, const Tolerances& tol) { return sum_abs(spectrum(m, tol).eigenvalues); }

double negativity(const DensityMatrix& rho, std::size_t subsystem, const Tolerances& tol) {
  return trace_norm(partial_transpose(rho, subsystem), tol) - rho.trace().real();
}

double polylog_neg_half(double x, double tol) {
  if (!(x >= 0.0) || x >= 1.0) {
    throw DomainError("polylog_neg_half: argument " + std::to_string(x) + " outside [0, 1)");
  }
  if (x == 0.0) return 0.0;
  return sum_series([x](std::size_t n) { return std::sqrt(static_cast<double>(n + 1)) * std::pow(x, static_cast<double>(n + 1)); },
                    tol)
      .value;
}

}  // namespace tangle
