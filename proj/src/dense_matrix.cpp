#include "ghzpure/dense/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace ghzpure::dense {

DensityMatrix::DensityMatrix(int num_qubits)
    : nq_(num_qubits),
      dim_(std::size_t{1} << num_qubits),
      a_(dim_ * dim_, cx{0.0, 0.0}) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw std::domain_error("unsupported qubit count for a dense matrix");
  }
}

DensityMatrix DensityMatrix::identity(int num_qubits, double scale) {
  DensityMatrix m(num_qubits);
  for (std::size_t i = 0; i < m.dim_; ++i) {
    m.at(i, i) = scale;
  }
  return m;
}

cx DensityMatrix::trace() const {
  cx t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) {
    t += at(i, i);
  }
  return t;
}

double DensityMatrix::trace_real() const { return trace().real(); }

double DensityMatrix::max_abs() const {
  double m = 0.0;
  for (const cx& v : a_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

double DensityMatrix::hermiticity_error() const {
  double m = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      m = std::max(m, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return m;
}

PureState ghz_state(int n) {
  PureState psi;
  psi.num_qubits = n;
  psi.amp.assign(std::size_t{1} << n, cx{0.0, 0.0});
  const double a = 1.0 / std::sqrt(2.0);
  psi.amp.front() = a;
  psi.amp.back() = a;
  return psi;
}

PureState phi_plus() { return ghz_state(2); }

PureState basis_state(int n, std::size_t index) {
  PureState psi;
  psi.num_qubits = n;
  psi.amp.assign(std::size_t{1} << n, cx{0.0, 0.0});
  psi.amp.at(index) = 1.0;
  return psi;
}

DensityMatrix outer(const PureState& psi) {
  DensityMatrix m(psi.num_qubits);
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m.at(i, j) = psi.amp[i] * std::conj(psi.amp[j]);
    }
  }
  return m;
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  double m = 0.0;
  const std::size_t total = a.dim() * a.dim();
  const cx* pa = a.data();
  const cx* pb = b.data();
  for (std::size_t i = 0; i < total; ++i) {
    m = std::max(m, std::abs(pa[i] - pb[i]));
  }
  return m;
}

double fidelity(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.amp.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  cx acc{0.0, 0.0};
  const std::size_t d = rho.dim();
  for (std::size_t i = 0; i < d; ++i) {
    cx row{0.0, 0.0};
    for (std::size_t j = 0; j < d; ++j) {
      row += rho.at(i, j) * psi.amp[j];
    }
    acc += std::conj(psi.amp[i]) * row;
  }
  if (std::abs(acc.imag()) > 1e-12) {
    throw std::logic_error("fidelity has a non-negligible imaginary part");
  }
  return acc.real();
}

}  // namespace ghzpure::dense
