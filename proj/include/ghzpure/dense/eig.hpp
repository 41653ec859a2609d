#pragma once

#include <vector>

#include "ghzpure/dense/matrix.hpp"

namespace ghzpure::dense {

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// ascending.  Intended for the small matrices the oracle emits (dim <= 64).
std::vector<double> hermitian_eigenvalues(DensityMatrix a);

double min_eigenvalue(const DensityMatrix& a);

}  // namespace ghzpure::dense
