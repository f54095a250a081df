#pragma once

#include "movnorm/matrix.hpp"

#include <vector>

namespace movnorm {

/// [lo, hi] = [min eigenvalue, max eigenvalue] of a Hermitian element; the
/// convex hull of its spectrum.
struct SpectralRange {
  double lo;
  double hi;

  /// Operator norm of any Hermitian element with this range.
  double norm() const noexcept;
  friend bool operator==(const SpectralRange&, const SpectralRange&) = default;
};

/// Hermiticity tolerance: ||x - x*|| <= kHermitianTol * max(1, ||x||).
inline constexpr double kHermitianTol = 1e-10;
/// Unitarity tolerance: ||x*x - 1|| <= kUnitaryTol.
inline constexpr double kUnitaryTol = 1e-10;

/// Eigenvalues of the Hermitian part (x + x*)/2, ascending.
///
/// Cyclic complex Jacobi: each rotation first removes the phase of the pivot
/// a_pq, then applies the real symmetric rotation that annihilates it. Sweeps
/// continue until the off-diagonal squared Frobenius mass is at most
/// 1e-28 times the total squared Frobenius mass. No randomness, so the result
/// is a deterministic function of the input bits.
std::vector<double> hermitian_eigenvalues(const Matrix& x);

/// Largest singular value, sqrt of the top eigenvalue of x*x.
double operator_norm(const Matrix& x);

/// x*x
Matrix gram(const Matrix& x);
/// (x + x*)/2
Matrix hermitian_part(const Matrix& x);

bool is_hermitian(const Matrix& x);
bool is_unitary(const Matrix& x);

/// Throws NotHermitian if x is not Hermitian within kHermitianTol.
SpectralRange hermitian_range(const Matrix& x);

} // namespace movnorm
