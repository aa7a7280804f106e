#pragma once

#include "mtae/matrix.hpp"

namespace mtae {

// Singular values of m, descending, length min(rows, cols). Computed as the
// square roots of the eigenvalues of the smaller Gram matrix (m^T m or
// m m^T), which is all the spectra and filter diagnostics here need.
Vector singular_values(const Matrix& m);

// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.
// Sweeps stop once the off-diagonal Frobenius norm drops below
// 1e-12 * trace(|diag|).
Vector symmetric_eigenvalues(Matrix a);

}  // namespace mtae
