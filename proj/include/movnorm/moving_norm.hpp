#pragma once

#include "movnorm/matrix.hpp"

#include <vector>

namespace movnorm {

/// Sampled moving-norm curve on a uniform grid starting at 0.
struct MovingNormCurve {
  std::vector<double> lambdas;
  std::vector<double> m_values;
  std::vector<double> am_values; // am_values[i] == m_values[i] + lambdas[i]
};

struct HorizonResult {
  double value = 0.0;      // in [0, 1]
  double bracket_lo = 0.0;
  double bracket_hi = 0.0; // bracket_hi - bracket_lo <= kHorizonBracketTol
  bool flat_at_one = false;
  int iterations = 0;
};

/// am values within this absolute distance of 1 count as "equal to 1".
inline constexpr double kFlatTol = 1e-9;
inline constexpr double kHorizonBracketTol = 1e-10;
/// Elements with norm in (1, 1 + kNormSlack] are accepted as norm 1.
inline constexpr double kNormSlack = 1e-10;

// Tolerances of the inequalities this module guarantees; the verification
// harness reads them from here.
inline constexpr double kScalingTol = 1e-9;      // times max(1, c)
inline constexpr double kSumTol = 1e-9;
inline constexpr double kProductTol = 1e-9;
inline constexpr double kConvexityTol = 1e-9;
inline constexpr double kLowerBoundTol = 1e-12;  // am(lambda) >= lambda - tol
inline constexpr double kHorizonIneqTol = 1e-7;  // horizon sum / product
inline constexpr double kAdjointHorizonTol = 1e-8;
inline constexpr double kDichotomyMinHorizon = 1e-6;
inline constexpr double kDichotomyStrictTol = 1e-9;
inline constexpr double kDichotomyFlatNormTol = 1e-8;

/// ||x - lambda 1||; throws NegativeLambda unless lambda >= 0.
double moving_norm(const Matrix& x, double lambda);
/// moving_norm(x, lambda) + lambda; convex in lambda.
double augmented_moving_norm(const Matrix& x, double lambda);

/// Uniform grid of `steps` points on [0, lambda_max]. Throws BadGrid unless
/// lambda_max > 0 and steps >= 2.
MovingNormCurve sample_curve(const Matrix& x, double lambda_max, int steps);

/// Largest lambda in [0, 1] with am(lambda) <= 1 + kFlatTol, by bisection on
/// the monotone predicate am(lambda) > 1 + kFlatTol.
///
/// The predicate is monotone because am is convex with am(0) = ||x|| <= 1:
/// once it exceeds 1 it stays above. The bracket starts at [0, 1] since the
/// horizon never exceeds 1 (am(lambda) >= lambda). Throws NotNonexpansive if
/// ||x|| > 1 + kNormSlack.
HorizonResult horizon(const Matrix& x);

} // namespace movnorm
