#include "movnorm/ensembles.hpp"
#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"
#include "movnorm/operator_classes.hpp"
#include "movnorm/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace movnorm;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == Philox4x32Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        Philox4x32Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        Philox4x32Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("rng streams are reproducible and independent") {
  Rng a(42, 3), b(42, 3), c(42, 4), d(43, 3);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 100; ++i) {
    const auto va = a();
    CHECK(va == b());
    differs_stream = differs_stream || va != c();
    differs_seed = differs_seed || va != d();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);

  CHECK(derive_seed(1, {2, 3}) == derive_seed(1, {2, 3}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
  CHECK(derive_seed(1, {2, 3}) != derive_seed(2, {2, 3}));
}

TEST_CASE("rng distributions") {
  Rng rng(7);
  double sum = 0, sumsq = 0, csq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    const double o = rng.uniform_open_low();
    REQUIRE(o > 0.0);
    REQUIRE(o <= 1.0);
    const double z = rng.normal();
    sum += z;
    sumsq += z * z;
    csq += std::norm(rng.complex_normal());
  }
  CHECK(std::abs(sum / n) < 0.01);
  CHECK(std::abs(sumsq / n - 1.0) < 0.02);
  CHECK(std::abs(csq / n - 1.0) < 0.02);

  int hits[4] = {0, 0, 0, 0};
  for (int i = 0; i < 40000; ++i) ++hits[rng.uniform_int(1, 4) - 1];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("ensemble samples have their defining properties") {
  Rng rng(8);
  for (std::size_t dim : {1u, 2u, 3u, 8u}) {
    for (int t = 0; t < 10; ++t) {
      const Matrix g = sample(EnsembleKind::ginibre, dim, 0.8, rng);
      CHECK(operator_norm(g) <= 0.8 + 1e-12);

      const Matrix h = sample(EnsembleKind::hermitian, dim, 1.0, rng);
      CHECK(is_hermitian(h));
      CHECK(operator_norm(h) <= 1.0 + 1e-12);

      const Matrix u = sample(EnsembleKind::unitary, dim, 1.0, rng);
      CHECK(is_unitary(u));

      const Matrix p = sample(EnsembleKind::projection, dim, 1.0, rng);
      CHECK(is_hermitian(p));
      CHECK(operator_norm(subtract(mul(p, p), p)) <= 1e-12);

      const Matrix f = sample(EnsembleKind::fne, dim, 1.0, rng);
      CHECK(is_fne(f));

      const Matrix n = sample(EnsembleKind::nilpotent_like, dim, 1.0, rng);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j) CHECK(n(i, j) == Complex{});
    }
  }
}

TEST_CASE("rank-one projection in dimension 2") {
  Rng rng(9);
  const Matrix p = random_projection(2, 1, rng);
  CHECK(operator_norm(subtract(mul(p, p), p)) <= 1e-14);
  CHECK(operator_norm(subtract(p, adjoint(p))) <= 1e-14);
  const SpectralRange r = hermitian_range(p);
  CHECK(std::abs(r.lo) <= 1e-14);
  CHECK(std::abs(r.hi - 1.0) <= 1e-14);
  CHECK_THROWS_AS(random_projection(2, 3, rng), BadSpec);
}

TEST_CASE("Haar unitaries have uniformly distributed eigenphases") {
  // For Haar U(n), E[tr U] = 0 and E|tr U|^2 = 1.
  Rng rng(10);
  Complex mean{};
  double second = 0;
  const int n = 4000;
  for (int t = 0; t < n; ++t) {
    const Matrix u = haar_unitary(3, rng);
    const Complex tr = u(0, 0) + u(1, 1) + u(2, 2);
    mean += tr;
    second += std::norm(tr);
  }
  CHECK(std::abs(mean / double(n)) < 0.05);
  CHECK(std::abs(second / n - 1.0) < 0.08);
}

TEST_CASE("generate") {
  const EnsembleSpec spec{EnsembleKind::unitary, 3, 5, 1234, 1.0};
  const auto a = generate(spec);
  const auto b = generate(spec);
  REQUIRE(a.size() == 5);
  CHECK(a == b);
  for (const Matrix& u : a) CHECK(is_unitary(u));

  // Sample j is reproducible from substream j alone.
  Rng rng(1234, 3);
  CHECK(sample(EnsembleKind::unitary, 3, 1.0, rng) == a[3]);

  for (const Matrix& f : generate({EnsembleKind::fne, 4, 20, 5, 1.0})) CHECK(is_fne(f));

  CHECK_THROWS_AS(generate({EnsembleKind::ginibre, 0, 1, 0, 1.0}), BadSpec);
  CHECK_THROWS_AS(generate({EnsembleKind::ginibre, 2, 0, 0, 1.0}), BadSpec);
  CHECK_THROWS_AS(generate({EnsembleKind::ginibre, 2, 1, 0, 0.0}), BadSpec);
  CHECK_THROWS_AS(generate({EnsembleKind::ginibre, 2, 1, 0, 1.5}), BadSpec);
}

TEST_CASE("ensemble kind names") {
  for (EnsembleKind k : kAllEnsembleKinds) CHECK(parse_ensemble_kind(to_string(k)) == k);
  CHECK(parse_ensemble_kind("nilpotent-like") == EnsembleKind::nilpotent_like);
  CHECK_FALSE(parse_ensemble_kind("wishart").has_value());
}
