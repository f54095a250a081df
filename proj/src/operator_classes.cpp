#include "movnorm/operator_classes.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"
#include "movnorm/moving_norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace movnorm {

namespace {

double min_sym_eigenvalue(const Matrix& a) { return hermitian_eigenvalues(a).front(); }

Matrix reflection(const Matrix& a) { return shift(scale(2.0, a), 1.0); } // 2A - 1

std::vector<Complex> normalized(std::span<const Complex> v) {
  const double n = norm2(v);
  std::vector<Complex> out(v.begin(), v.end());
  for (Complex& z : out) z /= n;
  return out;
}

} // namespace

bool is_nonexpansive(const Matrix& a) { return operator_norm(a) <= 1.0 + kClassTol; }

bool is_monotone(const Matrix& a) { return min_sym_eigenvalue(a) >= -kClassTol; }

bool is_fne(const Matrix& a) {
  return is_nonexpansive(a) && operator_norm(reflection(a)) <= 1.0 + kClassTol;
}

bool is_fne_via_horizon(const Matrix& a) {
  if (!is_nonexpansive(a)) throw NotNonexpansive("is_fne_via_horizon: element has norm > 1");
  return horizon(a).value >= 0.5 - kFneViaHorizonTol;
}

double fne_inner_product_check(const Matrix& a, std::span<const std::vector<Complex>> trial_vectors) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& raw : trial_vectors) {
    if (norm2(raw) == 0.0) continue;
    const auto x = normalized(raw);
    const auto ax = matvec(a, x);
    const double n = norm2(ax);
    worst = std::max(worst, n * n - inner(ax, x).real());
  }
  return worst;
}

double fne_cosine_check(const Matrix& a, std::span<const std::vector<Complex>> trial_vectors) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& raw : trial_vectors) {
    if (norm2(raw) == 0.0) continue;
    const auto x = normalized(raw);
    const auto ax = matvec(a, x);
    const double n = norm2(ax);
    const double cosine = n == 0.0 ? 0.0 : inner(ax, x).real() / n;
    worst = std::max(worst, n - cosine);
  }
  return worst;
}

double fne_matrix_gap(const Matrix& a) {
  return hermitian_eigenvalues(subtract(hermitian_part(a), gram(a))).front();
}

bool fne_matrix_criterion(const Matrix& a) { return fne_matrix_gap(a) >= -kFneGapTol; }

ClassReport classify(const Matrix& a) {
  ClassReport r;
  r.norm = operator_norm(a);
  r.ne = r.norm <= 1.0 + kClassTol;
  r.min_sym_eig = min_sym_eigenvalue(a);
  r.monotone = r.min_sym_eig >= -kClassTol;
  r.fne = r.ne && operator_norm(reflection(a)) <= 1.0 + kClassTol;
  r.fne_gap = fne_matrix_gap(a);
  if (r.ne) {
    r.horizon = horizon(a).value;
    r.fne_via_horizon = r.horizon >= 0.5 - kFneViaHorizonTol;
  }
  return r;
}

} // namespace movnorm
