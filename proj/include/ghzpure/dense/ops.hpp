#pragma once

#include <array>
#include <vector>

#include "ghzpure/dense/matrix.hpp"

// OpenMP-parallel kernels.  Every output entry is produced by exactly one
// thread and inner reductions run in a fixed order, so results are identical
// across thread counts.  Serial counterparts live in ghzpure::dense::ref
// (reference.hpp) and the two are cross-checked by the test suite.
namespace ghzpure::dense {

using Gate1Q = std::array<cx, 4>;  // row-major 2x2

inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr Gate1Q kGateH = {cx{kInvSqrt2, 0}, cx{kInvSqrt2, 0},
                                  cx{kInvSqrt2, 0}, cx{-kInvSqrt2, 0}};
inline constexpr Gate1Q kGateX = {cx{0, 0}, cx{1, 0}, cx{1, 0}, cx{0, 0}};
inline constexpr Gate1Q kGateZ = {cx{1, 0}, cx{0, 0}, cx{0, 0}, cx{-1, 0}};

// Kronecker product; qubits of `a` become 0..a.nq-1, qubits of `b` follow.
DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);

// In-place conjugation by CNOT(control -> target).
void apply_cnot(DensityMatrix& rho, int control, int target);

// In-place conjugation by a single-qubit gate on qubit t.
void apply_1q(DensityMatrix& rho, int t, const Gate1Q& u);

// In-place unnormalized projection of qubit t onto |outcome>.
void project_qubit(DensityMatrix& rho, int t, int outcome);

// Trace out the qubits in `drop` (ascending); remaining qubits keep their
// relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop);

// Reorder qubits: result qubit k is input qubit new_to_old[k].
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& new_to_old);

// q * rho + (1 - q) * (I_t / 2) (x) tr_t(rho): the channel a qubit undergoes
// when teleported through an isotropic pair of weight q.
DensityMatrix depolarize_qubit(const DensityMatrix& rho, int t, double q);

}  // namespace ghzpure::dense
