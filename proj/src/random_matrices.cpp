#include "tangle/random_matrices.hpp"

#include <cmath>
#include <vector>

namespace tangle {

namespace {

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

}  // namespace

DenseMatrix random_unitary(std::size_t n, Rng& rng) {
  DenseMatrix q(n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) q(r, c) = gaussian(rng);
  }
  // Modified Gram-Schmidt on columns, twice for orthogonality to round-off.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t p = 0; p < c; ++p) {
        Complex dot{};
        for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, p)) * q(r, c);
        for (std::size_t r = 0; r < n; ++r) q(r, c) -= dot * q(r, p);
      }
      double norm = 0.0;
      for (std::size_t r = 0; r < n; ++r) norm += std::norm(q(r, c));
      norm = std::sqrt(norm);
      for (std::size_t r = 0; r < n; ++r) q(r, c) /= norm;
    }
  }
  return q;
}

DenseMatrix planted_hermitian(std::span<const double> spectrum, Rng& rng) {
  const std::size_t n = spectrum.size();
  const DenseMatrix q = random_unitary(n, rng);
  DenseMatrix m(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      Complex sum{};
      for (std::size_t k = 0; k < n; ++k) sum += q(r, k) * spectrum[k] * std::conj(q(c, k));
      m(r, c) = sum;
      m(c, r) = std::conj(sum);
    }
    m(r, r) = m(r, r).real();
  }
  return m;
}

StateVector random_pure_state(const SubsystemLayout& layout, Rng& rng) {
  std::vector<Complex> amps(layout.total());
  double norm = 0.0;
  for (auto& a : amps) {
    a = gaussian(rng);
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (auto& a : amps) a /= norm;
  return StateVector(layout, amps);
}

DensityMatrix random_density_matrix(const SubsystemLayout& layout, std::size_t rank, Rng& rng) {
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<double> weights(rank);
  double total = 0.0;
  for (auto& w : weights) total += (w = weight(rng));

  std::vector<Entry> entries;
  for (std::size_t k = 0; k < rank; ++k) {
    const auto psi = random_pure_state(layout, rng);
    for (const auto& a : psi.amplitudes()) {
      for (const auto& b : psi.amplitudes()) {
        entries.push_back({a.index, b.index, weights[k] / total * a.value * std::conj(b.value)});
      }
    }
  }
  return DensityMatrix::from_entries(layout, std::move(entries)).hermitized();
}

}  // namespace tangle
