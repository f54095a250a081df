#include "movnorm/spectral_hermitian.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/moving_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace movnorm {

namespace {

void require_valid(const SpectralRange& r) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo > r.hi) {
    throw Error("spectral range must satisfy lo <= hi");
  }
}

void require_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw NegativeLambda("lambda must be >= 0");
}

} // namespace

double hermitian_am_closed_form(const SpectralRange& range, double lambda) {
  require_valid(range);
  require_lambda(lambda);
  return std::max(std::abs(range.lo - lambda), std::abs(range.hi - lambda)) + lambda;
}

double hermitian_am_two_branch(const SpectralRange& range, double lambda) {
  require_valid(range);
  require_lambda(lambda);
  if (lambda <= 0.5 * (range.lo + range.hi)) return range.hi;
  return 2.0 * lambda - range.lo;
}

double hermitian_horizon_closed_form(const SpectralRange& range) {
  require_valid(range);
  if (range.lo < -1.0 - kNormSlack || range.hi > 1.0 + kNormSlack) {
    throw NotNonexpansive("spectral range is not inside [-1, 1]");
  }
  return std::clamp(0.5 * (1.0 + range.lo), 0.0, 1.0);
}

double unitary_am_lower_bound_check(const Matrix& u, std::span<const double> lambdas) {
  if (!is_unitary(u)) throw NotUnitary("unitary_am_lower_bound_check: element is not unitary");
  if (lambdas.empty()) throw BadGrid("lambda grid is empty");
  double worst = std::numeric_limits<double>::infinity();
  for (double lambda : lambdas) worst = std::min(worst, augmented_moving_norm(u, lambda) - 1.0);
  return worst;
}

double unitary_flatness_check(const Matrix& u, int points) {
  if (!is_unitary(u)) throw NotUnitary("unitary_flatness_check: element is not unitary");
  if (points < 2) throw BadGrid("need at least two grid points");
  const double hor = horizon(u).value;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double lambda = hor * static_cast<double>(i) / static_cast<double>(points - 1);
    worst = std::max(worst, augmented_moving_norm(u, lambda) - 1.0);
  }
  return worst;
}

} // namespace movnorm
