#include "oracles.hpp"

#include "movnorm/ensembles.hpp"
#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"
#include "movnorm/moving_norm.hpp"

#include <doctest.h>

#include <cmath>

using namespace movnorm;

namespace {

const Matrix kNilpotent = Matrix::from_rows({{0, 1}, {0, 0}});

// am of [[0,1],[0,0]] from the closed-form 2x2 singular values.
double nilpotent_am(double lambda) {
  return std::sqrt(((1 + 2 * lambda * lambda) + std::sqrt(1 + 4 * lambda * lambda)) / 2) + lambda;
}

Matrix any_ne(std::size_t dim, Rng& rng) {
  const auto k = kAllEnsembleKinds[rng.uniform_int(0, std::size(kAllEnsembleKinds) - 1)];
  return sample(k, dim, 1.0, rng);
}

} // namespace

TEST_CASE("moving norm examples") {
  CHECK(moving_norm(identity(2), 0.3) == doctest::Approx(0.7).epsilon(1e-15));
  CHECK(moving_norm(Matrix::zero(2), 0.4) == doctest::Approx(0.4).epsilon(1e-15));
  const Matrix d = Matrix::diagonal({0.5, -0.5});
  const std::vector<Complex> eig{0.5, -0.5};
  CHECK(oracle::normal_am(eig, 0.25) - 0.25 == 0.75);
  CHECK(moving_norm(d, 0.25) == doctest::Approx(0.75).epsilon(1e-15));

  CHECK(augmented_moving_norm(identity(2), 0.3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(augmented_moving_norm(Matrix::zero(2), 0.4) == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(augmented_moving_norm(d, 0.25) == doctest::Approx(oracle::normal_am(eig, 0.25)).epsilon(1e-15));
}

TEST_CASE("negative lambda is rejected") {
  CHECK_THROWS_AS(moving_norm(identity(2), -0.1), NegativeLambda);
  CHECK_THROWS_AS(augmented_moving_norm(identity(2), -1e-300), NegativeLambda);
  CHECK_THROWS_AS(moving_norm(identity(2), std::nan("")), NegativeLambda);
  CHECK_NOTHROW(moving_norm(identity(2), 0.0));
}

TEST_CASE("sample_curve") {
  const auto c1 = sample_curve(identity(2), 1.0, 3);
  CHECK(c1.lambdas == std::vector<double>{0.0, 0.5, 1.0});
  for (double am : c1.am_values) CHECK(am == doctest::Approx(1.0).epsilon(1e-15));

  const auto c0 = sample_curve(Matrix::zero(2), 1.0, 3);
  CHECK(c0.am_values == std::vector<double>{0.0, 1.0, 2.0});

  // am(lambda) = 0.5 + 2 lambda for diag(0.5, -0.5).
  const auto cd = sample_curve(Matrix::diagonal({0.5, -0.5}), 0.5, 3);
  const std::vector<double> expected{0.5, 1.0, 1.5};
  for (std::size_t i = 0; i < 3; ++i) CHECK(cd.am_values[i] == doctest::Approx(expected[i]).epsilon(1e-15));

  CHECK_THROWS_AS(sample_curve(identity(2), 0.0, 3), BadGrid);
  CHECK_THROWS_AS(sample_curve(identity(2), -1.0, 3), BadGrid);
  CHECK_THROWS_AS(sample_curve(identity(2), 1.0, 1), BadGrid);
}

TEST_CASE("curve invariants on random elements") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const Matrix x = any_ne(3, rng);
    const auto c = sample_curve(x, 2.5, 41);
    REQUIRE(c.lambdas.back() == 2.5);
    for (std::size_t i = 0; i < c.lambdas.size(); ++i) {
      CHECK(c.am_values[i] == c.m_values[i] + c.lambdas[i]);
      CHECK(c.am_values[i] >= c.lambdas[i] - 1e-12);
      if (i > 0) CHECK(c.lambdas[i] > c.lambdas[i - 1]);
      if (i > 0 && i + 1 < c.lambdas.size()) {
        CHECK(c.am_values[i] <= 0.5 * (c.am_values[i - 1] + c.am_values[i + 1]) + 1e-9);
      }
    }
  }
}

TEST_CASE("horizon fixtures") {
  const auto hi = horizon(identity(2));
  CHECK(hi.value == 1.0);
  CHECK(hi.flat_at_one);

  const auto h0 = horizon(Matrix::zero(2));
  CHECK(std::abs(h0.value - 0.5) <= 1e-8);
  CHECK_FALSE(h0.flat_at_one);

  const auto hm = horizon(scale(-1.0, identity(2)));
  CHECK(hm.value <= 1e-8);
  CHECK_FALSE(hm.flat_at_one);

  const auto hp = horizon(Matrix::diagonal({1, 0}));
  CHECK(std::abs(hp.value - 0.5) <= 1e-8);
  CHECK(hp.flat_at_one);

  CHECK(std::abs(horizon(Matrix::diagonal({0.5, -0.5})).value - 0.25) <= 1e-8);
  CHECK(std::abs(horizon(scale(0.5, identity(3))).value - 0.75) <= 1e-8);
}

TEST_CASE("horizon of the 2x2 nilpotent against its singular-value formula") {
  // Oracle: bisection on the closed form, independent of the library kernel.
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (nilpotent_am(mid) > 1.0 ? hi : lo) = mid;
  }
  CHECK(lo <= 1e-15);
  for (double l : {0.0, 0.1, 0.37, 0.9}) {
    CHECK(std::abs(augmented_moving_norm(kNilpotent, l) - nilpotent_am(l)) <= 1e-13);
  }
  const auto h = horizon(kNilpotent);
  CHECK(h.value <= 1e-8);
  CHECK_FALSE(h.flat_at_one);
}

TEST_CASE("horizon bracket and result invariants") {
  Rng rng(22);
  for (std::size_t dim : {1u, 2u, 5u}) {
    for (int t = 0; t < 25; ++t) {
      const Matrix x = any_ne(dim, rng);
      const auto h = horizon(x);
      CHECK(h.value >= 0.0);
      CHECK(h.value <= 1.0);
      CHECK(h.bracket_hi - h.bracket_lo <= kHorizonBracketTol);
      CHECK(augmented_moving_norm(x, h.value) <= 1.0 + 1e-8);
      if (h.value < 1.0) CHECK(augmented_moving_norm(x, h.value + 1e-6) >= 1.0 - 1e-8);
      if (h.flat_at_one) CHECK(std::abs(operator_norm(x) - 1.0) <= 1e-8);
    }
  }
}

TEST_CASE("horizon agrees with the eigenvalue formula on normal elements") {
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    // Random diagonal complex matrix inside the unit disc, or a unitary.
    std::vector<Complex> eig(3);
    for (Complex& z : eig) z = std::polar(std::sqrt(rng.uniform()), rng.uniform(0.0, 6.283185307179586));
    if (t % 3 == 0)
      for (Complex& z : eig) z /= std::abs(z);
    const Matrix d = Matrix::diagonal(std::span<const Complex>(eig));
    const Matrix u = haar_unitary(3, rng);
    const Matrix x = mul(mul(u, d), adjoint(u));
    CHECK(std::abs(horizon(x).value - oracle::normal_horizon(eig)) <= 1e-8);
  }
}

TEST_CASE("norm slack and rejection") {
  CHECK_THROWS_AS(horizon(scale(1.5, identity(2))), NotNonexpansive);
  CHECK_THROWS_AS(horizon(scale(1.0 + 1e-9, identity(2))), NotNonexpansive);
  CHECK_NOTHROW(horizon(scale(1.0 + 5e-11, identity(2))));
}

TEST_CASE("moving norm inequalities on random pairs") {
  Rng rng(24);
  for (std::size_t dim : {2u, 4u}) {
    for (int t = 0; t < 60; ++t) {
      const Matrix x = any_ne(dim, rng);
      const Matrix y = any_ne(dim, rng);
      const double c = rng.uniform(0.0, 2.0);
      const double l = rng.uniform(0.0, 2.0);
      const double mu = rng.uniform(0.0, 2.0);
      CHECK(std::abs(moving_norm(scale(c, x), c * l) - c * moving_norm(x, l)) <= 1e-9 * std::max(1.0, c));
      CHECK(std::abs(augmented_moving_norm(scale(c, x), c * l) - c * augmented_moving_norm(x, l)) <=
            1e-9 * std::max(1.0, c));
      CHECK(moving_norm(add(x, y), l + mu) <= moving_norm(x, l) + moving_norm(y, mu) + 1e-9);
      CHECK(augmented_moving_norm(add(x, y), l + mu) <=
            augmented_moving_norm(x, l) + augmented_moving_norm(y, mu) + 1e-9);
      CHECK(augmented_moving_norm(mul(x, y), l * mu) <=
            augmented_moving_norm(x, l) * augmented_moving_norm(y, mu) + 1e-9);

      const double s = rng.uniform();
      CHECK(horizon(add(scale(s, x), scale(1 - s, y))).value >=
            s * horizon(x).value + (1 - s) * horizon(y).value - 1e-7);
      CHECK(horizon(mul(x, y)).value >= horizon(x).value * horizon(y).value - 1e-7);
      CHECK(std::abs(horizon(x).value - horizon(adjoint(x)).value) <= 1e-8);
    }
  }
}

TEST_CASE("dichotomy between strict and flat horizons") {
  Rng rng(25);
  int strict = 0, flat = 0;
  for (int t = 0; t < 120; ++t) {
    const Matrix x = any_ne(3, rng);
    const auto h = horizon(x);
    if (h.value > 1e-6 && augmented_moving_norm(x, h.value / 2) < 1 - 1e-9) {
      ++strict;
      CHECK(operator_norm(x) < 1.0);
    }
    if (h.flat_at_one) {
      ++flat;
      CHECK(std::abs(operator_norm(x) - 1.0) <= 1e-8);
    }
  }
  CHECK(strict > 0);
  CHECK(flat > 0);
}
