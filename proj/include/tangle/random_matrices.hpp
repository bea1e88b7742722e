#pragma once

// Seeded generators for property checks.

#include <cstddef>
#include <random>
#include <span>

#include "tangle/numerics.hpp"
#include "tangle/qudit.hpp"

namespace tangle {

using Rng = std::mt19937_64;

/// Haar-ish unitary from Gram-Schmidt on a complex Gaussian matrix.
DenseMatrix random_unitary(std::size_t n, Rng& rng);

/// Q diag(spectrum) Q^dagger for a random unitary Q, made exactly Hermitian.
DenseMatrix planted_hermitian(std::span<const double> spectrum, Rng& rng);

StateVector random_pure_state(const SubsystemLayout& layout, Rng& rng);

/// Normalised mixture of `rank` random pure states.
DensityMatrix random_density_matrix(const SubsystemLayout& layout, std::size_t rank, Rng& rng);

}  // namespace tangle
