#pragma once

// Multipartite kets and density matrices over a fixed tensor-factor layout.
//
// Storage is sparse (sorted coordinate lists). Truncated bosonic states at
// large acceleration need hundreds of thousands of Fock levels, while only a
// handful of amplitudes per level are nonzero, so dense storage is not an
// option for them. Small matrices can always be densified with to_dense().
//
// Index convention: row-major over the ordered subsystem list, leftmost
// subsystem slowest-varying, so |a b c d> has flat index
// ((a*d1 + b)*d2 + c)*d3 + d.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tangle {

using Complex = std::complex<double>;
using Index = std::uint64_t;

class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Index> dims);
  SubsystemLayout(std::initializer_list<Index> dims)
      : SubsystemLayout(std::vector<Index>(dims)) {}

  std::size_t size() const noexcept { return dims_.size(); }
  Index dim(std::size_t subsystem) const { return dims_.at(subsystem); }
  const std::vector<Index>& dims() const noexcept { return dims_; }
  Index total() const noexcept { return total_; }

  Index flatten(std::span<const Index> levels) const;
  std::vector<Index> unflatten(Index flat) const;
  /// Level of one subsystem inside a flat index.
  Index level(Index flat, std::size_t subsystem) const {
    return (flat / strides_[subsystem]) % dims_[subsystem];
  }
  Index stride(std::size_t subsystem) const { return strides_.at(subsystem); }

  /// Layout of the listed subsystems, in the order given.
  SubsystemLayout select(std::span<const std::size_t> subsystems) const;

  bool operator==(const SubsystemLayout& other) const { return dims_ == other.dims_; }

 private:
  std::vector<Index> dims_;
  std::vector<Index> strides_;
  Index total_ = 1;
};

struct Amplitude {
  Index index;
  Complex value;
};

struct Entry {
  Index row;
  Index col;
  Complex value;
};

/// Pure state. Only nonzero amplitudes are stored, sorted by index.
class StateVector {
 public:
  StateVector() = default;
  /// Dense constructor; amplitudes.size() must equal layout.total().
  StateVector(SubsystemLayout layout, std::span<const Complex> amplitudes);
  /// Sparse constructor; repeated indices are summed, exact zeros dropped.
  static StateVector from_amplitudes(SubsystemLayout layout, std::vector<Amplitude> amplitudes);

  const SubsystemLayout& layout() const noexcept { return layout_; }
  Index dim() const noexcept { return layout_.total(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
  Complex amplitude(Index index) const;
  double squared_norm() const;
  std::vector<Complex> to_dense() const;

 private:
  SubsystemLayout layout_;
  std::vector<Amplitude> amplitudes_;
};

/// Square complex matrix on a tensor layout. Used both for physical states
/// and for partially transposed operators, which need not be positive.
class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// Dense row-major constructor.
  DensityMatrix(SubsystemLayout layout, std::span<const Complex> row_major);
  /// Sparse constructor; duplicate coordinates are summed, exact zeros dropped.
  static DensityMatrix from_entries(SubsystemLayout layout, std::vector<Entry> entries);

  const SubsystemLayout& layout() const noexcept { return layout_; }
  Index dim() const noexcept { return layout_.total(); }
  /// Nonzero entries sorted by (row, col).
  std::span<const Entry> entries() const noexcept { return entries_; }
  Complex at(Index row, Index col) const;

  Complex trace() const;
  double max_abs() const;
  /// max |M_ij - conj(M_ji)|.
  double hermiticity_defect() const;
  /// (M + M^dagger) / 2.
  DensityMatrix hermitized() const;
  DensityMatrix adjoint() const;
  std::vector<Complex> to_dense() const;

 private:
  SubsystemLayout layout_;
  std::vector<Entry> entries_;
};

struct Ket {
  Index dim;
  Index level;
};

StateVector tensor(std::span<const Ket> kets);
inline StateVector tensor(std::initializer_list<Ket> kets) {
  return tensor(std::span<const Ket>(kets.begin(), kets.size()));
}

/// |psi><psi|.
DensityMatrix outer(const StateVector& psi);

/// Trace out every subsystem not listed in `keep`. Kept subsystems stay in
/// their original order regardless of the order in `keep`.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep);
inline DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}
inline DensityMatrix partial_trace(const StateVector& psi, std::initializer_list<std::size_t> keep) {
  return partial_trace(psi, std::span<const std::size_t>(keep.begin(), keep.size()));
}

/// Transpose the indices of one tensor factor. Exact involution.
DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem);

DensityMatrix kron(const DensityMatrix& lhs, const DensityMatrix& rhs);
StateVector kron(const StateVector& lhs, const StateVector& rhs);

/// Sparse product lhs * rhs on a common layout.
DensityMatrix multiply(const DensityMatrix& lhs, const DensityMatrix& rhs);

}  // namespace tangle
