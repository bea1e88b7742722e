#include "tangle/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

// Anything bigger cannot be densified in memory anyway.
constexpr Index kMaxDenseDim = Index{1} << 14;

void sort_and_merge(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.row, a.col) < std::tie(b.row, b.col);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries.size();) {
    Entry merged = entries[i];
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].row == merged.row && entries[j].col == merged.col; ++j) {
      merged.value += entries[j].value;
    }
    if (merged.value != Complex{}) entries[out++] = merged;
    i = j;
  }
  entries.resize(out);
}

std::vector<std::size_t> normalized_keep(const SubsystemLayout& layout, std::span<const std::size_t> keep) {
  if (keep.empty()) throw DomainError("partial_trace: keep set is empty");
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("partial_trace: repeated subsystem in keep set");
  }
  if (sorted.back() >= layout.size()) {
    throw DomainError("partial_trace: subsystem " + std::to_string(sorted.back()) + " out of range");
  }
  return sorted;
}

// Splits flat indices into (kept, traced) flat indices of the two sublayouts.
class Splitter {
 public:
  Splitter(const SubsystemLayout& layout, const std::vector<std::size_t>& keep) : layout_(layout) {
    std::vector<bool> kept(layout.size(), false);
    for (auto k : keep) kept[k] = true;
    for (std::size_t s = 0; s < layout.size(); ++s) (kept[s] ? keep_ : trace_).push_back(s);
  }

  std::pair<Index, Index> operator()(Index flat) const {
    Index k = 0;
    for (auto s : keep_) k = k * layout_.dim(s) + layout_.level(flat, s);
    Index t = 0;
    for (auto s : trace_) t = t * layout_.dim(s) + layout_.level(flat, s);
    return {k, t};
  }

 private:
  const SubsystemLayout& layout_;
  std::vector<std::size_t> keep_;
  std::vector<std::size_t> trace_;
};

}  // namespace

SubsystemLayout::SubsystemLayout(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("SubsystemLayout: no subsystems");
  strides_.assign(dims_.size(), 1);
  total_ = 1;
  for (std::size_t i = dims_.size(); i-- > 0;) {
    if (dims_[i] < 1) throw DomainError("SubsystemLayout: dimension must be >= 1");
    strides_[i] = total_;
    if (total_ > std::numeric_limits<Index>::max() / dims_[i]) {
      throw DomainError("SubsystemLayout: total dimension overflows");
    }
    total_ *= dims_[i];
  }
}

Index SubsystemLayout::flatten(std::span<const Index> levels) const {
  if (levels.size() != dims_.size()) throw DomainError("flatten: wrong number of levels");
  Index flat = 0;
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (levels[i] >= dims_[i]) throw DomainError("flatten: level out of range");
    flat = flat * dims_[i] + levels[i];
  }
  return flat;
}

std::vector<Index> SubsystemLayout::unflatten(Index flat) const {
  if (flat >= total_) throw DomainError("unflatten: index out of range");
  std::vector<Index> levels(dims_.size());
  for (std::size_t i = dims_.size(); i-- > 0;) {
    levels[i] = flat % dims_[i];
    flat /= dims_[i];
  }
  return levels;
}

SubsystemLayout SubsystemLayout::select(std::span<const std::size_t> subsystems) const {
  std::vector<Index> dims;
  dims.reserve(subsystems.size());
  for (auto s : subsystems) dims.push_back(dim(s));
  return SubsystemLayout(std::move(dims));
}

// ---------------------------------------------------------------------------

StateVector::StateVector(SubsystemLayout layout, std::span<const Complex> amplitudes)
    : layout_(std::move(layout)) {
  if (amplitudes.size() != layout_.total()) throw DomainError("StateVector: size does not match layout");
  for (Index i = 0; i < amplitudes.size(); ++i) {
    if (amplitudes[i] != Complex{}) amplitudes_.push_back({i, amplitudes[i]});
  }
}

StateVector StateVector::from_amplitudes(SubsystemLayout layout, std::vector<Amplitude> amplitudes) {
  StateVector psi;
  psi.layout_ = std::move(layout);
  std::sort(amplitudes.begin(), amplitudes.end(),
            [](const Amplitude& a, const Amplitude& b) { return a.index < b.index; });
  for (const auto& a : amplitudes) {
    if (a.index >= psi.layout_.total()) throw DomainError("StateVector: index out of range");
    if (!psi.amplitudes_.empty() && psi.amplitudes_.back().index == a.index) {
      psi.amplitudes_.back().value += a.value;
    } else {
      psi.amplitudes_.push_back(a);
    }
  }
  std::erase_if(psi.amplitudes_, [](const Amplitude& a) { return a.value == Complex{}; });
  return psi;
}

Complex StateVector::amplitude(Index index) const {
  auto it = std::lower_bound(amplitudes_.begin(), amplitudes_.end(), index,
                             [](const Amplitude& a, Index i) { return a.index < i; });
  return (it != amplitudes_.end() && it->index == index) ? it->value : Complex{};
}

double StateVector::squared_norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a.value);
  return sum;
}

std::vector<Complex> StateVector::to_dense() const {
  if (dim() > kMaxDenseDim * kMaxDenseDim) throw DomainError("StateVector::to_dense: too large");
  std::vector<Complex> out(dim());
  for (const auto& a : amplitudes_) out[a.index] = a.value;
  return out;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(SubsystemLayout layout, std::span<const Complex> row_major)
    : layout_(std::move(layout)) {
  const Index n = layout_.total();
  if (row_major.size() != n * n) throw DomainError("DensityMatrix: size does not match layout");
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      if (row_major[r * n + c] != Complex{}) entries_.push_back({r, c, row_major[r * n + c]});
    }
  }
}

DensityMatrix DensityMatrix::from_entries(SubsystemLayout layout, std::vector<Entry> entries) {
  DensityMatrix m;
  m.layout_ = std::move(layout);
  for (const auto& e : entries) {
    if (e.row >= m.dim() || e.col >= m.dim()) throw DomainError("DensityMatrix: entry out of range");
  }
  sort_and_merge(entries);
  m.entries_ = std::move(entries);
  return m;
}

Complex DensityMatrix::at(Index row, Index col) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{row, col},
                             [](const Entry& e, const std::pair<Index, Index>& key) {
                               return std::tie(e.row, e.col) < std::tie(key.first, key.second);
                             });
  return (it != entries_.end() && it->row == row && it->col == col) ? it->value : Complex{};
}

Complex DensityMatrix::trace() const {
  // Compensated: bosonic traces run over up to ~10^6 diagonal entries.
  double sum = 0.0;
  double carry = 0.0;
  double imag = 0.0;
  for (const auto& e : entries_) {
    if (e.row != e.col) continue;
    const double x = e.value.real();
    const double next = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - next) + x : (x - next) + sum;
    sum = next;
    imag += e.value.imag();
  }
  return {sum + carry, imag};
}

double DensityMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
  return m;
}

double DensityMatrix::hermiticity_defect() const {
  double defect = 0.0;
  for (const auto& e : entries_) {
    defect = std::max(defect, std::abs(e.value - std::conj(at(e.col, e.row))));
  }
  return defect;
}

DensityMatrix DensityMatrix::hermitized() const {
  std::vector<Entry> sym;
  sym.reserve(2 * entries_.size());
  for (const auto& e : entries_) {
    sym.push_back({e.row, e.col, 0.5 * e.value});
    sym.push_back({e.col, e.row, 0.5 * std::conj(e.value)});
  }
  return from_entries(layout_, std::move(sym));
}

DensityMatrix DensityMatrix::adjoint() const {
  std::vector<Entry> adj;
  adj.reserve(entries_.size());
  for (const auto& e : entries_) adj.push_back({e.col, e.row, std::conj(e.value)});
  return from_entries(layout_, std::move(adj));
}

std::vector<Complex> DensityMatrix::to_dense() const {
  if (dim() > kMaxDenseDim) throw DomainError("DensityMatrix::to_dense: too large");
  std::vector<Complex> out(dim() * dim());
  for (const auto& e : entries_) out[e.row * dim() + e.col] = e.value;
  return out;
}

// ---------------------------------------------------------------------------

StateVector tensor(std::span<const Ket> kets) {
  std::vector<Index> dims;
  std::vector<Index> levels;
  for (const auto& k : kets) {
    if (k.level >= k.dim) {
      throw DomainError("tensor: level " + std::to_string(k.level) + " out of range for dimension " +
                        std::to_string(k.dim));
    }
    dims.push_back(k.dim);
    levels.push_back(k.level);
  }
  SubsystemLayout layout(std::move(dims));
  const Index flat = layout.flatten(levels);
  return StateVector::from_amplitudes(std::move(layout), {{flat, Complex{1.0}}});
}

DensityMatrix outer(const StateVector& psi) {
  const auto amps = psi.amplitudes();
  std::vector<Entry> entries;
  entries.reserve(amps.size() * amps.size());
  for (const auto& a : amps) {
    for (const auto& b : amps) entries.push_back({a.index, b.index, a.value * std::conj(b.value)});
  }
  return DensityMatrix::from_entries(psi.layout(), std::move(entries)).hermitized();
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const auto kept = normalized_keep(rho.layout(), keep);
  const Splitter split(rho.layout(), kept);
  std::vector<Entry> out;
  for (const auto& e : rho.entries()) {
    const auto [kr, tr] = split(e.row);
    const auto [kc, tc] = split(e.col);
    if (tr == tc) out.push_back({kr, kc, e.value});
  }
  return DensityMatrix::from_entries(rho.layout().select(kept), std::move(out)).hermitized();
}

DensityMatrix partial_trace(const StateVector& psi, std::span<const std::size_t> keep) {
  const auto kept = normalized_keep(psi.layout(), keep);
  const Splitter split(psi.layout(), kept);

  struct Keyed {
    Index traced;
    Index kept;
    Complex value;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(psi.amplitudes().size());
  for (const auto& a : psi.amplitudes()) {
    const auto [k, t] = split(a.index);
    keyed.push_back({t, k, a.value});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) { return a.traced < b.traced; });

  // rho_keep = sum over traced basis states t of |psi_t><psi_t|.
  std::vector<Entry> out;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i;
    while (j < keyed.size() && keyed[j].traced == keyed[i].traced) ++j;
    for (std::size_t p = i; p < j; ++p) {
      for (std::size_t q = i; q < j; ++q) {
        out.push_back({keyed[p].kept, keyed[q].kept, keyed[p].value * std::conj(keyed[q].value)});
      }
    }
    i = j;
  }
  return DensityMatrix::from_entries(psi.layout().select(kept), std::move(out)).hermitized();
}

DensityMatrix partial_transpose(const DensityMatrix& rho, std::size_t subsystem) {
  const auto& layout = rho.layout();
  if (subsystem >= layout.size()) {
    throw DomainError("partial_transpose: subsystem " + std::to_string(subsystem) + " out of range");
  }
  const Index stride = layout.stride(subsystem);
  std::vector<Entry> out;
  out.reserve(rho.entries().size());
  for (const auto& e : rho.entries()) {
    const Index lr = layout.level(e.row, subsystem);
    const Index lc = layout.level(e.col, subsystem);
    out.push_back({e.row - lr * stride + lc * stride, e.col - lc * stride + lr * stride, e.value});
  }
  return DensityMatrix::from_entries(layout, std::move(out));
}

DensityMatrix kron(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  std::vector<Index> dims = lhs.layout().dims();
  dims.insert(dims.end(), rhs.layout().dims().begin(), rhs.layout().dims().end());
  const Index n = rhs.dim();
  std::vector<Entry> out;
  out.reserve(lhs.entries().size() * rhs.entries().size());
  for (const auto& a : lhs.entries()) {
    for (const auto& b : rhs.entries()) out.push_back({a.row * n + b.row, a.col * n + b.col, a.value * b.value});
  }
  return DensityMatrix::from_entries(SubsystemLayout(std::move(dims)), std::move(out));
}

StateVector kron(const StateVector& lhs, const StateVector& rhs) {
  std::vector<Index> dims = lhs.layout().dims();
  dims.insert(dims.end(), rhs.layout().dims().begin(), rhs.layout().dims().end());
  const Index n = rhs.dim();
  std::vector<Amplitude> out;
  for (const auto& a : lhs.amplitudes()) {
    for (const auto& b : rhs.amplitudes()) out.push_back({a.index * n + b.index, a.value * b.value});
  }
  return StateVector::from_amplitudes(SubsystemLayout(std::move(dims)), std::move(out));
}

DensityMatrix multiply(const DensityMatrix& lhs, const DensityMatrix& rhs) {
  if (!(lhs.layout() == rhs.layout())) throw DomainError("multiply: layouts differ");
  // rhs entries are sorted by row, so each lhs column finds its rhs row range by bisection.
  const auto right = rhs.entries();
  std::vector<Entry> out;
  for (const auto& a : lhs.entries()) {
    auto first = std::lower_bound(right.begin(), right.end(), a.col,
                                  [](const Entry& e, Index row) { return e.row < row; });
    for (auto it = first; it != right.end() && it->row == a.col; ++it) {
      out.push_back({a.row, it->col, a.value * it->value});
    }
  }
  return DensityMatrix::from_entries(lhs.layout(), std::move(out));
}

}  // namespace tangle
