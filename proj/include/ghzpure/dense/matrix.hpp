#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ghzpure::dense {

using cx = std::complex<double>;

// Qubit/index convention used everywhere in the dense layer: qubit 0 is the
// most significant bit of the basis index, so bit_of(i, t, m) reads qubit t
// of an m-qubit index i.
inline int bit_of(std::size_t idx, int qubit, int num_qubits) {
  return static_cast<int>((idx >> (num_qubits - 1 - qubit)) & 1u);
}
inline std::size_t mask_of(int qubit, int num_qubits) {
  return std::size_t{1} << (num_qubits - 1 - qubit);
}

// Dense, row-major complex matrix over num_qubits qubits.  Sub-normalized
// traces are allowed (post-selected states).
class DensityMatrix {
public:
  DensityMatrix() = default;
  explicit DensityMatrix(int num_qubits);

  static DensityMatrix identity(int num_qubits, double scale);

  int num_qubits() const { return nq_; }
  std::size_t dim() const { return dim_; }

  cx& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
  const cx& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

  cx* data() { return a_.data(); }
  const cx* data() const { return a_.data(); }

  cx trace() const;
  double trace_real() const;
  double max_abs() const;
  double hermiticity_error() const;  // max |a_ij - conj(a_ji)|

private:
  int nq_ = 0;
  std::size_t dim_ = 0;
  std::vector<cx> a_;
};

struct PureState {
  int num_qubits = 0;
  std::vector<cx> amp;
};

// (|0...0> + |1...1>) / sqrt(2) on n qubits; phi_plus() is the n = 2 case.
PureState ghz_state(int n);
PureState phi_plus();
PureState basis_state(int n, std::size_t index);

DensityMatrix outer(const PureState& psi);

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

// Re <psi|rho|psi>.  Throws if the imaginary part exceeds 1e-12.
double fidelity(const DensityMatrix& rho, const PureState& psi);

}  // namespace ghzpure::dense
