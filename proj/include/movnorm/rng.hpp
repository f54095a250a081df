#pragma once

#include "movnorm/matrix.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace movnorm {

using Philox4x32Block = std::array<std::uint32_t, 4>;
using Philox4x32Key = std::array<std::uint32_t, 2>;

/// The Philox4x32-10 bijection (Salmon et al.), exposed for known-answer tests.
Philox4x32Block philox4x32_10(Philox4x32Block counter, Philox4x32Key key);

/// SplitMix64-style hash of a path of integers; used to derive independent
/// per-trial seeds from (run seed, check, dim, trial) without any shared state.
std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> path);

/// Counter-based generator: the key is the seed, the upper half of the counter
/// names a substream and the lower half counts blocks. Two generators with the
/// same (seed, stream) produce the same sequence regardless of what any other
/// generator has done.
class Rng {
public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : seed_(seed), stream_(stream) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept;
  /// Uniform on (0, 1].
  double uniform_open_low() noexcept { return 1.0 - uniform(); }
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi) noexcept;
  /// Standard normal via Box-Muller (own transform, so results do not depend
  /// on the standard library's distribution implementation).
  double normal() noexcept;
  /// Standard complex normal: E|z|^2 = 1.
  Complex complex_normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

} // namespace movnorm
