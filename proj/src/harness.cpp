#include "movnorm/harness.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"
#include "movnorm/moving_norm.hpp"
#include "movnorm/operator_classes.hpp"
#include "movnorm/spectral_hermitian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace movnorm {

// ---------------------------------------------------------------------------
// Element sources

ElementSource ElementSource::ensembles(double norm_cap) {
  if (!(norm_cap > 0.0 && norm_cap <= 1.0)) throw BadSpec("norm_cap must lie in (0, 1]");
  ElementSource s;
  s.norm_cap_ = norm_cap;
  return s;
}

ElementSource ElementSource::pool(std::vector<Matrix> elements) {
  if (elements.empty()) throw BadSpec("element pool is empty");
  ElementSource s;
  for (Matrix& m : elements) {
    const bool ne = is_nonexpansive(m);
    const bool herm = is_hermitian(m);
    s.pool_.push_back({std::move(m), ne, ne && herm, false, false});
    Entry& e = s.pool_.back();
    e.unitary = is_unitary(e.element);
    e.fne = is_fne(e.element);
  }
  return s;
}

std::vector<std::size_t> ElementSource::pool_dims() const {
  std::set<std::size_t> dims;
  for (const Entry& e : pool_) dims.insert(e.element.dim());
  return {dims.begin(), dims.end()};
}

std::optional<Matrix> ElementSource::draw(Role role, std::size_t dim, Rng& rng) const {
  if (!is_pool()) {
    switch (role) {
    case Role::any_ne: {
      const auto pick = rng.uniform_int(0, std::size(kAllEnsembleKinds) - 1);
      return sample(kAllEnsembleKinds[pick], dim, norm_cap_, rng);
    }
    case Role::hermitian_ne: return sample(EnsembleKind::hermitian, dim, norm_cap_, rng);
    case Role::unitary: return sample(EnsembleKind::unitary, dim, norm_cap_, rng);
    case Role::ginibre_ne: return sample(EnsembleKind::ginibre, dim, norm_cap_, rng);
    case Role::fne: return sample(EnsembleKind::fne, dim, norm_cap_, rng);
    }
    return std::nullopt;
  }

  std::vector<const Matrix*> candidates;
  for (const Entry& e : pool_) {
    if (e.element.dim() != dim) continue;
    bool ok = false;
    switch (role) {
    case Role::any_ne:
    case Role::ginibre_ne: ok = e.ne; break;
    case Role::hermitian_ne: ok = e.hermitian_ne; break;
    case Role::unitary: ok = e.unitary; break;
    case Role::fne: ok = e.fne; break;
    }
    if (ok) candidates.push_back(&e.element);
  }
  if (candidates.empty()) return std::nullopt;
  return *candidates[rng.uniform_int(0, candidates.size() - 1)];
}

// ---------------------------------------------------------------------------
// Decomposition checks

double decomposition_slack(const Matrix& x, double lambda, const Matrix& y, double mu) {
  return augmented_moving_norm(y, mu) + augmented_moving_norm(subtract(x, y), lambda - mu) -
         augmented_moving_norm(x, lambda);
}

namespace {

template <typename Norm>
double infimum_check(const Matrix& x, double lambda, std::size_t trials, Rng& rng, Norm norm) {
  const double base = norm(x, lambda);
  // Trivial split y = x, z = 0, mu = lambda: its value is exactly base.
  double best = norm(x, lambda) + norm(Matrix::zero(x.dim()), 0.0) - base;
  for (std::size_t k = 0; k < trials; ++k) {
    const double t = rng.uniform(-0.5, 1.5);
    const Matrix e = rescale_to_norm(ginibre(x.dim(), rng), rng.uniform());
    const double s = rng.uniform();
    const Matrix y = add(scale(t, x), e);
    const double mu = s * lambda;
    const double nu = std::max(0.0, lambda - mu);
    best = std::min(best, norm(y, mu) + norm(subtract(x, y), nu) - base);
  }
  return best;
}

} // namespace

double infimum_decomposition_check(const Matrix& x, double lambda, std::size_t trials, Rng& rng) {
  return infimum_check(x, lambda, trials, rng,
                       [](const Matrix& m, double l) { return augmented_moving_norm(m, l); });
}

double infimum_decomposition_check_m(const Matrix& x, double lambda, std::size_t trials, Rng& rng) {
  return infimum_check(x, lambda, trials, rng, [](const Matrix& m, double l) { return moving_norm(m, l); });
}

// ---------------------------------------------------------------------------
// Checks

namespace {

using CheckFn = TrialResult (*)(const ElementSource&, std::size_t, Rng&);

struct CheckDef {
  CheckInfo info;
  CheckFn run;
};

TrialResult value(double v) { return {true, v, 0}; }

constexpr int kLambdaGridPoints = 64;
constexpr double kLambdaGridMax = 2.0;
constexpr std::size_t kDecompositionsPerTrial = 16;
constexpr std::size_t kTrialVectors = 200;

double grid_lambda(int i) { return kLambdaGridMax * i / (kLambdaGridPoints - 1); }

std::vector<std::vector<Complex>> random_vectors(std::size_t dim, std::size_t count, Rng& rng) {
  std::vector<std::vector<Complex>> vs(count, std::vector<Complex>(dim));
  for (auto& v : vs)
    for (Complex& z : v) z = rng.complex_normal();
  return vs;
}

// Hermitian V diag(eigs) V* with V Haar.
Matrix hermitian_with_spectrum(const std::vector<double>& eigs, Rng& rng) {
  const std::size_t n = eigs.size();
  const Matrix v = haar_unitary(n, rng);
  std::vector<Complex> d(eigs.begin(), eigs.end());
  return mul(mul(v, Matrix::diagonal(std::span<const Complex>(d))), adjoint(v));
}

// Indicator violations for boolean checks.
constexpr double kMismatch = 1.0;

TrialResult check_scaling_m(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double c = rng.uniform(0.0, 2.0);
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double diff = std::abs(moving_norm(scale(c, *x), c * lambda) - c * moving_norm(*x, lambda));
  return value(diff / std::max(1.0, c));
}

TrialResult check_scaling_am(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double c = rng.uniform(0.0, 2.0);
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double diff =
      std::abs(augmented_moving_norm(scale(c, *x), c * lambda) - c * augmented_moving_norm(*x, lambda));
  return value(diff / std::max(1.0, c));
}

TrialResult check_sum_m(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  const auto y = src.draw(Role::any_ne, dim, rng);
  if (!x || !y) return {};
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double mu = rng.uniform(0.0, kLambdaGridMax);
  return value(moving_norm(add(*x, *y), lambda + mu) - moving_norm(*x, lambda) - moving_norm(*y, mu));
}

TrialResult check_sum_am(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  const auto y = src.draw(Role::any_ne, dim, rng);
  if (!x || !y) return {};
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double mu = rng.uniform(0.0, kLambdaGridMax);
  return value(augmented_moving_norm(add(*x, *y), lambda + mu) - augmented_moving_norm(*x, lambda) -
               augmented_moving_norm(*y, mu));
}

TrialResult check_infimum(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double slack_m = infimum_decomposition_check_m(*x, lambda, kDecompositionsPerTrial, rng);
  const double slack_am = infimum_decomposition_check(*x, lambda, kDecompositionsPerTrial, rng);
  return value(std::max(-slack_m, -slack_am));
}

TrialResult check_product(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  const auto y = src.draw(Role::any_ne, dim, rng);
  if (!x || !y) return {};
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double mu = rng.uniform(0.0, kLambdaGridMax);
  return value(augmented_moving_norm(mul(*x, *y), lambda * mu) -
               augmented_moving_norm(*x, lambda) * augmented_moving_norm(*y, mu));
}

TrialResult check_convexity(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  double l1 = rng.uniform(0.0, kLambdaGridMax);
  double l2 = rng.uniform(0.0, kLambdaGridMax);
  if (l1 > l2) std::swap(l1, l2);
  const double t = rng.uniform();
  const double mid = augmented_moving_norm(*x, t * l1 + (1.0 - t) * l2);
  return value(mid - (t * augmented_moving_norm(*x, l1) + (1.0 - t) * augmented_moving_norm(*x, l2)));
}

TrialResult check_lower_bound(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double lambda = rng.uniform(0.0, 2.0 * kLambdaGridMax);
  return value(lambda - augmented_moving_norm(*x, lambda));
}

TrialResult check_horizon_definition(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const HorizonResult h = horizon(*x);
  double v = std::max({-h.value, h.value - 1.0, augmented_moving_norm(*x, h.value) - 1.0});
  if (h.value < 1.0) v = std::max(v, 1.0 - augmented_moving_norm(*x, h.value + 1e-6));
  if (h.bracket_hi - h.bracket_lo > kHorizonBracketTol) v = std::max(v, kMismatch);
  return value(v);
}

TrialResult check_dichotomy_strict(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const HorizonResult h = horizon(*x);
  if (!(h.value > kDichotomyMinHorizon &&
        augmented_moving_norm(*x, 0.5 * h.value) < 1.0 - kDichotomyStrictTol)) {
    return {};
  }
  const double norm = operator_norm(*x);
  // The conclusion is strict: norm == 1 already violates it.
  if (norm >= 1.0) return value(std::max(norm - 1.0, std::numeric_limits<double>::min()));
  return value(norm - 1.0);
}

TrialResult check_dichotomy_flat(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const HorizonResult h = horizon(*x);
  if (!h.flat_at_one) return {};
  return value(std::abs(operator_norm(*x) - 1.0));
}

TrialResult check_horizon_sum(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  const auto y = src.draw(Role::any_ne, dim, rng);
  if (!x || !y) return {};
  const double t = rng.uniform();
  const Matrix combo = add(scale(t, *x), scale(1.0 - t, *y));
  return value(t * horizon(*x).value + (1.0 - t) * horizon(*y).value - horizon(combo).value);
}

TrialResult check_horizon_product(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  const auto y = src.draw(Role::any_ne, dim, rng);
  if (!x || !y) return {};
  return value(horizon(*x).value * horizon(*y).value - horizon(mul(*x, *y)).value);
}

TrialResult check_cstar_am(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  const double bound = std::pow(augmented_moving_norm(*x, lambda), 2);
  const double l2 = lambda * lambda;
  return value(std::max(augmented_moving_norm(gram(*x), l2), augmented_moving_norm(gram(adjoint(*x)), l2)) -
               bound);
}

TrialResult check_cstar_horizon(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const double h = horizon(*x).value;
  const double lower = std::min(horizon(gram(*x)).value, horizon(gram(adjoint(*x))).value);
  return value(h * h - lower);
}

TrialResult check_adjoint_symmetry(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto x = src.draw(Role::any_ne, dim, rng);
  if (!x) return {};
  const Matrix xs = adjoint(*x);
  const double lambda = rng.uniform(0.0, kLambdaGridMax);
  return value(std::max(std::abs(horizon(*x).value - horizon(xs).value),
                        std::abs(moving_norm(*x, lambda) - moving_norm(xs, lambda))));
}

TrialResult check_unitary(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto u = src.draw(Role::unitary, dim, rng);
  if (!u) return {};
  std::vector<double> grid(kLambdaGridPoints);
  for (int i = 0; i < kLambdaGridPoints; ++i) grid[static_cast<std::size_t>(i)] = grid_lambda(i);
  const double lower_slack = unitary_am_lower_bound_check(*u, grid);
  const double flat_excess = unitary_flatness_check(*u, kLambdaGridPoints);
  return value(std::max(-lower_slack, flat_excess));
}

TrialResult check_hermitian_closed_form(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto h = src.draw(Role::hermitian_ne, dim, rng);
  if (!h) return {};
  const SpectralRange range = hermitian_range(*h);
  double worst = 0.0;
  for (int i = 0; i < kLambdaGridPoints; ++i) {
    const double lambda = grid_lambda(i);
    const double closed = hermitian_am_closed_form(range, lambda);
    worst = std::max({worst, std::abs(augmented_moving_norm(*h, lambda) - closed),
                      std::abs(hermitian_am_two_branch(range, lambda) - closed)});
  }
  return value(worst);
}

TrialResult check_hermitian_horizon(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto h = src.draw(Role::hermitian_ne, dim, rng);
  if (!h) return {};
  return value(std::abs(horizon(*h).value - hermitian_horizon_closed_form(hermitian_range(*h))));
}

// Hor(H) > 0 iff lo > -1, and Hor(H) = 1 iff H = 1. Random spectra almost
// never reach either boundary, so ensemble runs also build Hermitian
// elements with a pinned spectrum.
TrialResult check_hermitian_criteria(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto variant = src.is_pool() ? 0 : rng.uniform_int(0, 3);
  std::optional<Matrix> h;
  if (variant == 0) {
    h = src.draw(Role::hermitian_ne, dim, rng);
    if (!h) return {};
  } else {
    std::vector<double> eigs(dim);
    for (double& e : eigs) e = rng.uniform(-1.0, 1.0);
    if (variant == 1) eigs[0] = -1.0;                      // Hor = 0
    if (variant == 2) std::fill(eigs.begin(), eigs.end(), 1.0); // unitarily similar to 1
    if (variant == 3) eigs[0] = 1.0;                       // flat, 0 < Hor < 1
    h = hermitian_with_spectrum(eigs, rng);
  }
  const SpectralRange range = hermitian_range(*h);
  const double hor = horizon(*h).value;
  const double dist_to_identity = operator_norm(shift(*h, 1.0));

  // Outside the band, lo is either -1 up to rounding or clearly above it.
  TrialResult r{true, 0.0, 0};
  const double margin = 1.0 + range.lo;
  if (margin >= 1e-8 && margin <= 1e-6) {
    ++r.skipped;
  } else if ((hor > kHermitianCriteriaBand) != (margin > 1e-6)) {
    r.violation = kMismatch;
  }
  if (dist_to_identity >= 1e-9 && dist_to_identity <= 1e-6) {
    ++r.skipped;
  } else if ((hor >= 1.0 - kScalarIdentityTol) != (dist_to_identity <= kScalarIdentityTol)) {
    r.violation = kMismatch;
  }
  return r;
}

// Hor(B) > 0 => Hor(B*B), Hor(BB*) > 0; Hor(B) = 1 => B*B is scalar.
TrialResult check_ne_corollary(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto variant = src.is_pool() ? 0 : rng.uniform_int(0, 3);
  std::optional<Matrix> b;
  if (variant == 0) {
    b = src.draw(Role::any_ne, dim, rng);
    if (!b) return {};
  } else {
    const Matrix v = haar_unitary(dim, rng);
    b = mul(v, adjoint(v));
  }
  const double hb = horizon(*b).value;
  const Matrix bsb = gram(*b);
  const Matrix bbs = gram(adjoint(*b));
  double v = 0.0;
  if (hb > kHermitianCriteriaBand) {
    const bool positive = horizon(bsb).value > 0.0 && horizon(bbs).value > 0.0 &&
                          hermitian_range(bsb).lo > -1.0 && hermitian_range(bbs).lo > -1.0;
    if (!positive) v = kMismatch;
  }
  if (hb >= 1.0 - kScalarIdentityTol) {
    const double c = std::pow(operator_norm(*b), 2);
    v = std::max(v, operator_norm(shift(bsb, c)));
  }
  return value(v);
}

struct FneVerdict {
  bool skipped;
  bool mismatch;
};

FneVerdict fne_verdict(const Matrix& a) {
  const double reflection_norm = operator_norm(shift(scale(2.0, a), 1.0));
  const double hor = horizon(a).value;
  if (std::abs(reflection_norm - 1.0) <= kClassBoundaryBand || std::abs(hor - 0.5) <= kClassBoundaryBand) {
    return {true, false};
  }
  const bool by_definition = is_fne(a);
  const bool by_horizon = is_fne_via_horizon(a);
  const bool by_matrix = fne_matrix_criterion(a);
  bool mismatch = by_definition != by_horizon || by_definition != by_matrix;
  if (by_definition) {
    mismatch = mismatch || operator_norm(a) > 1.0 + kFneImpliesTol ||
               hermitian_eigenvalues(a).front() < -kFneImpliesTol;
  }
  return {false, mismatch};
}

TrialResult check_fne_equivalence(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto g = src.draw(Role::ginibre_ne, dim, rng);
  const auto f = src.draw(Role::fne, dim, rng);
  TrialResult r;
  for (const auto* a : {&g, &f}) {
    if (!*a) continue;
    const FneVerdict verdict = fne_verdict(**a);
    if (verdict.skipped) {
      ++r.skipped;
      continue;
    }
    r.evaluated = true;
    if (verdict.mismatch) r.violation = kMismatch;
  }
  return r;
}

// Vector forms of the FNE inequality: <Ax, Ax> <= Re<Ax, x> and its cosine
// rewrite, on a known FNE sample. For a generic sample the sampled maximum may
// never exceed the matrix bound -fne_matrix_gap.
TrialResult check_fne_vectors(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto f = src.draw(Role::fne, dim, rng);
  const auto g = src.draw(Role::ginibre_ne, dim, rng);
  if (!f) return {};
  const auto vs = random_vectors(dim, kTrialVectors, rng);
  double v = std::max(fne_inner_product_check(*f, vs), fne_cosine_check(*f, vs));
  if (g) v = std::max(v, fne_inner_product_check(*g, vs) + fne_matrix_gap(*g));
  return value(v);
}

TrialResult check_fne_hermitian(const ElementSource& src, std::size_t dim, Rng& rng) {
  const auto h0 = src.draw(Role::hermitian_ne, dim, rng);
  if (!h0) return {};
  // Half the trials use (1 + H)/2, which is positive semidefinite.
  const Matrix h = rng.uniform_int(0, 1) == 0 ? *h0 : scale(0.5, shift(*h0, -1.0));
  const double lo = hermitian_range(h).lo;
  if (std::abs(lo) <= kClassBoundaryBand) return {false, 0.0, 1};
  return value(is_fne(h) != (lo >= -kFneImpliesTol) ? kMismatch : 0.0);
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {{"eq4_scaling_m", kScalingTol, "m(cx, c l) = c m(x, l)"}, check_scaling_m},
      {{"eq8_scaling_am", kScalingTol, "am(cx, c l) = c am(x, l)"}, check_scaling_am},
      {{"eq5_sum_m", kSumTol, "m(x+y, l+u) <= m(x, l) + m(y, u)"}, check_sum_m},
      {{"eq9_sum_am", kSumTol, "am(x+y, l+u) <= am(x, l) + am(y, u)"}, check_sum_am},
      {{"eq6_eq10_infimum", kSumTol, "m and am are below every decomposition sum"}, check_infimum},
      {{"eq12_product", kProductTol, "am(xy, l u) <= am(x, l) am(y, u)"}, check_product},
      {{"am_convexity", kConvexityTol, "l -> am(x, l) is convex"}, check_convexity},
      {{"am_lower_bound", kLowerBoundTol, "am(x, l) >= l"}, check_lower_bound},
      {{"eq13_eq16_horizon_definition", 1e-8, "am(Hor) = 1, am > 1 beyond, 0 <= Hor <= 1"},
       check_horizon_definition},
      {{"eq14_strict_branch", 0.0, "am < 1 before Hor > 0 forces ||x|| < 1"}, check_dichotomy_strict},
      {{"eq15_flat_branch", kDichotomyFlatNormTol, "am flat at 1 forces ||x|| = 1"}, check_dichotomy_flat},
      {{"eq17_hor_sum", kHorizonIneqTol, "Hor(tx + (1-t)y) >= t Hor(x) + (1-t) Hor(y)"}, check_horizon_sum},
      {{"eq18_hor_product", kHorizonIneqTol, "Hor(xy) >= Hor(x) Hor(y)"}, check_horizon_product},
      {{"eq19_cstar_am", kCstarAmTol, "am(x*x, l^2), am(xx*, l^2) <= am(x, l)^2"}, check_cstar_am},
      {{"eq20_cstar_horizon", kCstarHorizonTol, "Hor(x*x), Hor(xx*) >= Hor(x)^2"}, check_cstar_horizon},
      {{"adjoint_symmetry", kAdjointHorizonTol, "m and Hor agree on x and x*"}, check_adjoint_symmetry},
      {{"thm_unitary", kUnitaryLowerTol, "am(u, l) >= 1, and = 1 on [0, Hor(u)]"}, check_unitary},
      {{"thm_hermitian_closed_form", kHermitianAmTol, "am(H, l) = max(|lo-l|, |hi-l|) + l"},
       check_hermitian_closed_form},
      {{"thm_hermitian_horizon", kHermitianHorizonTol, "Hor(H) = (1 + lo)/2"}, check_hermitian_horizon},
      {{"thm_hermitian_criteria", 0.0, "Hor(H) > 0 iff lo > -1; Hor(H) = 1 iff H = 1"},
       check_hermitian_criteria},
      {{"thm_ne_corollary", kScalarUnitaryTol, "Hor(B) > 0 => Hor(B*B) > 0; Hor(B) = 1 => B*B scalar"},
       check_ne_corollary},
      {{"thm_fne_equiv", 0.0, "FNE iff Hor >= 1/2 iff (A + A*)/2 >= A*A"}, check_fne_equivalence},
      {{"eq29_eq30_fne_vectors", kFneVectorTol, "||Ax||^2 <= Re<Ax, x> for FNE A"}, check_fne_vectors},
      {{"thm_fne_hermitian", 0.0, "Hermitian NE H is FNE iff H >= 0"}, check_fne_hermitian},
  };
  return defs;
}

const CheckDef* find_check(std::string_view id) {
  for (const CheckDef& d : registry())
    if (d.info.id == id) return &d;
  return nullptr;
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

TrialResult run_trial(const CheckDef& def, std::size_t dim, std::uint64_t seed, const ElementSource& source) {
  Rng rng(seed);
  try {
    return def.run(source, dim, rng);
  } catch (const Error&) {
    // A library error inside a trial is a failed trial, not an aborted run.
    return {true, std::numeric_limits<double>::infinity(), 0};
  }
}

} // namespace

const std::vector<CheckInfo>& all_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

std::uint64_t trial_seed(std::uint64_t seed, std::string_view check_id, std::size_t dim, std::size_t trial) {
  return derive_seed(seed, {fnv1a(check_id), dim, trial});
}

TrialResult replay_trial(std::string_view check_id, std::size_t dim, std::uint64_t seed,
                         const ElementSource& source) {
  const CheckDef* def = find_check(check_id);
  if (!def) throw BadSpec("unknown check id: " + std::string(check_id));
  return run_trial(*def, dim, seed, source);
}

std::vector<TheoremReport> run_all(const VerifyConfig& config, const ElementSource& source) {
  std::vector<const CheckDef*> selected;
  if (config.checks.empty()) {
    for (const CheckDef& d : registry()) selected.push_back(&d);
  } else {
    for (const std::string& id : config.checks) {
      const CheckDef* d = find_check(id);
      if (!d) throw BadSpec("unknown check id: " + id);
      selected.push_back(d);
    }
  }
  const std::vector<std::size_t> dims = source.is_pool() ? source.pool_dims() : config.dims;
  for (std::size_t d : dims)
    if (d == 0) throw BadSpec("dims must be positive");

  struct Task {
    std::size_t check;
    std::size_t dim;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  tasks.reserve(selected.size() * dims.size() * config.trials);
  for (std::size_t c = 0; c < selected.size(); ++c)
    for (std::size_t dim : dims)
      for (std::size_t t = 0; t < config.trials; ++t)
        tasks.push_back({c, dim, trial_seed(config.seed, selected[c]->info.id, dim, t)});

  std::vector<TrialResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = run_trial(*selected[tasks[i].check], tasks[i].dim, tasks[i].seed, source);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TheoremReport> reports(selected.size());
  for (std::size_t c = 0; c < selected.size(); ++c) {
    reports[c].check_id = std::string(selected[c]->info.id);
    reports[c].tolerance = selected[c]->info.tolerance;
    reports[c].worst_violation = -std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    TheoremReport& rep = reports[tasks[i].check];
    const TrialResult& r = results[i];
    rep.skipped += r.skipped;
    if (!r.evaluated) continue;
    ++rep.trials;
    const double v = std::isnan(r.violation) ? std::numeric_limits<double>::infinity() : r.violation;
    if (v > rep.tolerance) ++rep.failures;
    if (v > rep.worst_violation) {
      rep.worst_violation = v;
      rep.worst_seed = tasks[i].seed;
      rep.worst_dim = tasks[i].dim;
    }
  }
  for (TheoremReport& rep : reports)
    if (rep.trials == 0) rep.worst_violation = 0.0;
  return reports;
}

std::vector<TheoremReport> run_all(const VerifyConfig& config) {
  return run_all(config, ElementSource::ensembles());
}

bool any_failures(const std::vector<TheoremReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.failures > 0; });
}

nlohmann::json reports_to_json(const std::vector<TheoremReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const TheoremReport& r : reports) {
    nlohmann::json j = {{"check_id", r.check_id},   {"trials", r.trials},         {"failures", r.failures},
                        {"skipped", r.skipped},     {"tolerance", r.tolerance},   {"worst_seed", r.worst_seed},
                        {"worst_dim", r.worst_dim}};
    if (std::isfinite(r.worst_violation)) {
      j["worst_violation"] = r.worst_violation;
    } else {
      j["worst_violation"] = "inf";
    }
    out.push_back(std::move(j));
  }
  return out;
}

} // namespace movnorm
