#pragma once

#include "movnorm/linalg.hpp"
#include "movnorm/matrix.hpp"

#include <span>

namespace movnorm {

// Tolerances for the Hermitian and unitary facts checked by the harness.
inline constexpr double kHermitianAmTol = 1e-8;      // bisection-free am vs closed form
inline constexpr double kHermitianHorizonTol = 1e-7; // horizon vs (1 + lo)/2
inline constexpr double kHermitianCriteriaBand = 1e-7;
inline constexpr double kScalarIdentityTol = 1e-8;
inline constexpr double kUnitaryLowerTol = 1e-9;     // am(u, lambda) >= 1 - tol
inline constexpr double kUnitaryFlatTol = 1e-9;      // am(u, lambda) <= 1 + tol on [0, Hor(u)]
/// Hor(B) = 1 forces B*B = c 1; ||B*B - ||B||^2 1|| <= tol once Hor(B) >= 1 - kScalarIdentityTol.
inline constexpr double kScalarUnitaryTol = 1e-7;

/// Augmented moving norm of any Hermitian element with spectral range
/// `range`: max(|lo - lambda|, |hi - lambda|) + lambda.
double hermitian_am_closed_form(const SpectralRange& range, double lambda);

/// The same quantity in piecewise form: hi for lambda <= (lo + hi)/2, and
/// 2 lambda - lo beyond. Kept separate so tests can confirm it against the
/// direct max formula.
double hermitian_am_two_branch(const SpectralRange& range, double lambda);

/// Horizon of a nonexpansive Hermitian element: (1 + lo)/2. Throws
/// NotNonexpansive unless the range lies in [-1, 1].
double hermitian_horizon_closed_form(const SpectralRange& range);

/// min over the grid of am(u, lambda) - 1. Nonnegative (up to rounding) for
/// every unitary u and lambda >= 0. Throws NotUnitary / NegativeLambda / BadGrid.
double unitary_am_lower_bound_check(const Matrix& u, std::span<const double> lambdas);

/// max over `points` evenly spaced lambdas in [0, Hor(u)] of am(u, lambda) - 1.
/// Unitaries are flat at 1 on that interval, so this is <= kUnitaryFlatTol.
double unitary_flatness_check(const Matrix& u, int points);

} // namespace movnorm
