#pragma once

#include <vector>

#include "ghzpure/dense/ops.hpp"

// Serial reference implementations of the dense kernels, written as plain
// loops with no in-place tricks.  Kept for testing and benchmarking against
// the parallel versions.
namespace ghzpure::dense::ref {

DensityMatrix kron(const DensityMatrix& a, const DensityMatrix& b);
DensityMatrix apply_cnot(const DensityMatrix& rho, int control, int target);
DensityMatrix apply_1q(const DensityMatrix& rho, int t, const Gate1Q& u);
DensityMatrix project_qubit(const DensityMatrix& rho, int t, int outcome);
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& drop);
DensityMatrix permute_qubits(const DensityMatrix& rho, const std::vector<int>& new_to_old);
DensityMatrix depolarize_qubit(const DensityMatrix& rho, int t, double q);

}  // namespace ghzpure::dense::ref
