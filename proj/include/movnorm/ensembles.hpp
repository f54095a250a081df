#pragma once

#include "movnorm/matrix.hpp"
#include "movnorm/rng.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace movnorm {

enum class EnsembleKind { ginibre, hermitian, unitary, projection, fne, nilpotent_like };

inline constexpr EnsembleKind kAllEnsembleKinds[] = {
    EnsembleKind::ginibre, EnsembleKind::hermitian, EnsembleKind::unitary,
    EnsembleKind::projection, EnsembleKind::fne, EnsembleKind::nilpotent_like};

std::string_view to_string(EnsembleKind kind);
std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name);

struct EnsembleSpec {
  EnsembleKind kind = EnsembleKind::ginibre;
  std::size_t dim = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double norm_cap = 1.0; // rescale target for the NE ensembles, in (0, 1]
};

/// i.i.d. standard complex normal entries.
Matrix ginibre(std::size_t dim, Rng& rng);
/// x scaled to operator norm `target` (zero stays zero).
Matrix rescale_to_norm(const Matrix& x, double target);
/// Haar-distributed unitary: Householder QR of a Ginibre matrix, with the
/// columns of Q multiplied by the phases of diag(R).
Matrix haar_unitary(std::size_t dim, Rng& rng);
/// Orthogonal projection onto the span of the first k columns of a Haar unitary.
Matrix random_projection(std::size_t dim, std::size_t k, Rng& rng);

/// One sample of the given kind. NE kinds (ginibre, hermitian, nilpotent-like,
/// and the inner C of fne = (1 + C)/2) are rescaled to norm norm_cap * u with
/// u uniform on (0, 1].
Matrix sample(EnsembleKind kind, std::size_t dim, double norm_cap, Rng& rng);

/// `count` samples; sample j is drawn from substream j of spec.seed, so any
/// single sample can be regenerated alone. Throws BadSpec on an invalid spec.
std::vector<Matrix> generate(const EnsembleSpec& spec);

} // namespace movnorm
