// Tridiagonal linear solves used by the implicit step and the equilibrium
// solvers.
#pragma once

#include <span>
#include <vector>

namespace plap::tridiag {

/// Solves the symmetric tridiagonal system (diag, off) x = rhs with an LDL^T
/// factorisation. Returns false, leaving x unspecified, when a pivot is not
/// strictly positive (matrix not positive definite).
bool solve_spd(std::span<const double> diag, std::span<const double> off, std::span<const double> rhs,
               std::span<double> x);

/// Gaussian elimination with partial pivoting for a general tridiagonal
/// matrix given by sub (n-1), diag (n) and super (n-1) diagonals. Returns
/// false when the matrix is numerically singular.
bool solve_general(std::span<const double> sub, std::span<const double> diag, std::span<const double> super,
                   std::span<const double> rhs, std::span<double> x);

}  // namespace plap::tridiag
