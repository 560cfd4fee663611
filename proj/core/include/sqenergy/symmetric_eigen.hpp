#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sqe {

/// Eigenvalues of a dense real symmetric matrix (row-major, n x n), sorted
/// non-increasing. Householder reduction to tridiagonal form followed by
/// implicit-shift QL. Only the lower triangle is read. Reentrant; all
/// workspace is local. Throws NumericalError if QL fails to converge.
std::vector<double> symmetric_eigenvalues(std::span<const double> a, std::size_t n);

}  // namespace sqe
