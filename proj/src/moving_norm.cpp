#include "movnorm/moving_norm.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"

#include <cmath>
#include <string>

namespace movnorm {

namespace {

void require_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw NegativeLambda("lambda must be a finite value >= 0, got " + std::to_string(lambda));
  }
}

} // namespace

double moving_norm(const Matrix& x, double lambda) {
  require_lambda(lambda);
  return operator_norm(shift(x, lambda));
}

double augmented_moving_norm(const Matrix& x, double lambda) {
  return moving_norm(x, lambda) + lambda;
}

MovingNormCurve sample_curve(const Matrix& x, double lambda_max, int steps) {
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw BadGrid("lambda_max must be positive and finite");
  }
  if (steps < 2) throw BadGrid("steps must be at least 2");

  MovingNormCurve curve;
  const auto n = static_cast<std::size_t>(steps);
  curve.lambdas.resize(n);
  curve.m_values.resize(n);
  curve.am_values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lambda =
        i + 1 == n ? lambda_max : lambda_max * static_cast<double>(i) / static_cast<double>(n - 1);
    const double m = moving_norm(x, lambda);
    curve.lambdas[i] = lambda;
    curve.m_values[i] = m;
    curve.am_values[i] = m + lambda;
  }
  return curve;
}

HorizonResult horizon(const Matrix& x) {
  const double norm = operator_norm(x);
  if (norm > 1.0 + kNormSlack) {
    throw NotNonexpansive("horizon: element has norm " + std::to_string(norm) + " > 1");
  }
  // am - 1 is exact for am in [0.5, 2], so the excess is compared to kFlatTol
  // without the rounding of 1 + kFlatTol.
  auto above_one = [&](double lambda) { return augmented_moving_norm(x, lambda) - 1.0 > kFlatTol; };

  HorizonResult r;
  if (!above_one(1.0)) {
    r.value = r.bracket_lo = r.bracket_hi = 1.0;
  } else {
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > kHorizonBracketTol) {
      const double mid = 0.5 * (lo + hi);
      if (above_one(mid)) {
        hi = mid;
      } else {
        lo = mid;
      }
      ++r.iterations;
    }
    r.value = lo;
    r.bracket_lo = lo;
    r.bracket_hi = hi;
  }
  r.flat_at_one = r.value > 1e-8 && augmented_moving_norm(x, 0.5 * r.value) - 1.0 >= -kFlatTol;
  return r;
}

} // namespace movnorm
