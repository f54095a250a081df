#include "movnorm/errors.hpp"
#include "movnorm/harness.hpp"
#include "movnorm/moving_norm.hpp"

#include <doctest.h>

#include <cmath>

using namespace movnorm;

namespace {

VerifyConfig small_config(std::uint64_t seed) {
  VerifyConfig c;
  c.dims = {2, 3};
  c.trials = 6;
  c.seed = seed;
  c.threads = 1;
  return c;
}

} // namespace

TEST_CASE("decomposition slack examples") {
  const Matrix x = identity(2);
  // Trivial split: z = 0, nu = 0.
  CHECK(decomposition_slack(x, 0.7, x, 0.7) == 0.0);
  // y = z = I/2, mu = nu = 1/4.
  CHECK(decomposition_slack(x, 0.5, scale(0.5, x), 0.25) == doctest::Approx(0.0).epsilon(1e-15));

  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix y = sample(EnsembleKind::ginibre, 3, 1.0, rng);
    const double slack = infimum_decomposition_check(y, rng.uniform(0.0, 2.0), 100, rng);
    CHECK(slack <= 0.0);
    CHECK(slack >= -1e-9);
    CHECK(infimum_decomposition_check_m(y, 0.4, 50, rng) >= -1e-9);
  }
}

TEST_CASE("identity-only pool passes every check") {
  const auto source = ElementSource::pool({identity(2), identity(3)});
  const auto reports = run_all(small_config(1), source);
  REQUIRE(reports.size() == all_checks().size());
  for (const TheoremReport& r : reports) {
    INFO(r.check_id);
    CHECK(r.failures == 0);
    CHECK(r.worst_violation <= 1e-12);
  }
  CHECK_FALSE(any_failures(reports));
}

TEST_CASE("pool of 0, 1 and -1") {
  const std::vector<Matrix> pool{Matrix::zero(2), identity(2), scale(-1.0, identity(2))};
  const std::vector<double> expected{0.5, 1.0, 0.0};
  for (std::size_t i = 0; i < pool.size(); ++i) CHECK(std::abs(horizon(pool[i]).value - expected[i]) <= 1e-8);
  CHECK(horizon(identity(2)).value == 1.0);

  const auto reports = run_all(small_config(2), ElementSource::pool(pool));
  CHECK_FALSE(any_failures(reports));
}

TEST_CASE("pool draws respect roles") {
  const auto source = ElementSource::pool({identity(2), scale(2.0, identity(2)), Matrix::from_rows({{0, 1}, {0, 0}})});
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto u = source.draw(Role::unitary, 2, rng);
    REQUIRE(u);
    CHECK(*u == identity(2));
    const auto ne = source.draw(Role::any_ne, 2, rng);
    REQUIRE(ne);
    CHECK_FALSE(*ne == scale(2.0, identity(2)));
  }
  CHECK_FALSE(source.draw(Role::any_ne, 3, rng).has_value());
  CHECK(source.pool_dims() == std::vector<std::size_t>{2});
  CHECK_THROWS_AS(ElementSource::pool({}), BadSpec);
}

TEST_CASE("run_all is deterministic and independent of threading") {
  VerifyConfig c = small_config(77);
  const auto a = run_all(c);
  const auto b = run_all(c);
  CHECK(a == b);
  c.threads = 4;
  CHECK(run_all(c) == a);
  CHECK(reports_to_json(a).dump() == reports_to_json(run_all(c)).dump());

  c.seed = 78;
  CHECK_FALSE(run_all(c) == a);
}

TEST_CASE("worst seed replays the worst trial bit for bit") {
  VerifyConfig c = small_config(9);
  c.trials = 10;
  const auto source = ElementSource::ensembles();
  for (const TheoremReport& r : run_all(c, source)) {
    if (r.trials == 0) continue;
    INFO(r.check_id);
    const TrialResult t = replay_trial(r.check_id, r.worst_dim, r.worst_seed, source);
    CHECK(t.evaluated);
    CHECK(t.violation == r.worst_violation);
  }
  CHECK_THROWS_AS(replay_trial("no_such_check", 2, 0, source), BadSpec);
}

TEST_CASE("check selection and report fields") {
  VerifyConfig c = small_config(4);
  c.checks = {"eq12_product", "thm_fne_equiv"};
  const auto reports = run_all(c);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].check_id == "eq12_product");
  CHECK(reports[0].tolerance == 1e-9);
  CHECK(reports[0].trials == 12);
  CHECK(reports[1].check_id == "thm_fne_equiv");

  const auto j = reports_to_json(reports);
  REQUIRE(j.is_array());
  for (const char* key : {"check_id", "trials", "failures", "skipped", "tolerance", "worst_violation",
                          "worst_seed", "worst_dim"}) {
    CHECK(j[0].contains(key));
  }

  c.checks = {"bogus"};
  CHECK_THROWS_AS(run_all(c), BadSpec);
  c.checks.clear();
  c.dims = {0};
  CHECK_THROWS_AS(run_all(c), BadSpec);
}

TEST_CASE("every check id is unique") {
  const auto& checks = all_checks();
  for (std::size_t i = 0; i < checks.size(); ++i)
    for (std::size_t j = i + 1; j < checks.size(); ++j) CHECK(checks[i].id != checks[j].id);
}

TEST_CASE("trial seeds differ across check, dim and trial") {
  const auto s = trial_seed(1, "eq12_product", 2, 0);
  CHECK(s == trial_seed(1, "eq12_product", 2, 0));
  CHECK(s != trial_seed(1, "eq9_sum_am", 2, 0));
  CHECK(s != trial_seed(1, "eq12_product", 3, 0));
  CHECK(s != trial_seed(1, "eq12_product", 2, 1));
}
