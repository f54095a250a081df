#pragma once

#include "movnorm/ensembles.hpp"
#include "movnorm/matrix.hpp"
#include "movnorm/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace movnorm {

/// Outcome of one named check, reduced over all dims and trials.
struct TheoremReport {
  std::string check_id;
  std::size_t trials = 0;   // trials with at least one evaluated sample
  std::size_t failures = 0; // trials whose violation exceeded `tolerance`
  std::size_t skipped = 0;  // samples excluded by a boundary band
  double tolerance = 0.0;
  double worst_violation = 0.0; // max over trials; negative means slack
  std::uint64_t worst_seed = 0; // trial seed reproducing worst_violation
  std::size_t worst_dim = 0;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// What a check asks its element source for.
enum class Role {
  any_ne,       // any nonexpansive element
  hermitian_ne, // Hermitian with spectrum in [-1, 1]
  unitary,
  ginibre_ne,   // generic (non-normal) nonexpansive element
  fne,          // firmly nonexpansive
};

/// Supplies elements to the checks: either fresh samples from the random
/// ensembles, or picks from a fixed pool of elements.
class ElementSource {
public:
  static ElementSource ensembles(double norm_cap = 1.0);
  /// Elements are sorted into roles once, by the library predicates.
  static ElementSource pool(std::vector<Matrix> elements);

  /// nullopt when a pool has no element of that role and dimension.
  std::optional<Matrix> draw(Role role, std::size_t dim, Rng& rng) const;
  bool is_pool() const noexcept { return !pool_.empty(); }
  /// Distinct dims present in the pool, ascending (empty for ensembles).
  std::vector<std::size_t> pool_dims() const;

private:
  struct Entry {
    Matrix element;
    bool ne, hermitian_ne, unitary, fne;
  };
  double norm_cap_ = 1.0;
  std::vector<Entry> pool_;
};

struct VerifyConfig {
  std::vector<std::size_t> dims{2, 3, 4, 8};
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  unsigned threads = 0;            // 0: hardware concurrency
  std::vector<std::string> checks; // empty: all checks
};

/// Per-trial result; `violation` is only meaningful when evaluated.
struct TrialResult {
  bool evaluated = false;
  double violation = 0.0;
  std::size_t skipped = 0;
};

struct CheckInfo {
  std::string_view id;
  double tolerance;
  std::string_view statement;
};

/// Every check the harness knows, in report order.
const std::vector<CheckInfo>& all_checks();

/// Seed of trial `trial` of `check_id` at `dim` under run seed `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::string_view check_id, std::size_t dim, std::size_t trial);

/// Re-runs one trial in isolation. Throws BadSpec for an unknown check id.
TrialResult replay_trial(std::string_view check_id, std::size_t dim, std::uint64_t seed,
                         const ElementSource& source);

/// Runs every selected check over every dim; one report per check id.
/// Deterministic in (config, source); the reduction is done in trial order
/// regardless of how trials are scheduled across threads.
std::vector<TheoremReport> run_all(const VerifyConfig& config, const ElementSource& source);
std::vector<TheoremReport> run_all(const VerifyConfig& config);

bool any_failures(const std::vector<TheoremReport>& reports);

/// JSON array of report records. A non-finite worst_violation (a trial that
/// threw) is written as the string "inf".
nlohmann::json reports_to_json(const std::vector<TheoremReport>& reports);

/// am(y, mu) + am(x - y, lambda - mu) - am(x, lambda) for one decomposition.
double decomposition_slack(const Matrix& x, double lambda, const Matrix& y, double mu);

/// Minimum decomposition slack over the trivial split (y = x, mu = lambda)
/// and `trials` random splits y = t x + E, mu = s lambda. Never positive;
/// the infimum inequality says it is also never below zero.
double infimum_decomposition_check(const Matrix& x, double lambda, std::size_t trials, Rng& rng);

/// Same as above for the plain moving norm.
double infimum_decomposition_check_m(const Matrix& x, double lambda, std::size_t trials, Rng& rng);

} // namespace movnorm
