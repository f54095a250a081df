#pragma once

#include "movnorm/matrix.hpp"

#include <span>
#include <vector>

namespace movnorm {

/// Norm / monotonicity / firm-nonexpansiveness diagnostics of one operator.
struct ClassReport {
  bool ne = false;
  bool monotone = false;
  bool fne = false;
  bool fne_via_horizon = false; // false whenever !ne
  double norm = 0.0;
  double min_sym_eig = 0.0;     // min eigenvalue of (A + A*)/2
  double fne_gap = 0.0;         // min eigenvalue of (A + A*)/2 - A*A
  double horizon = -1.0;        // -1 when !ne
};

inline constexpr double kClassTol = 1e-10;         // NE, monotone and FNE predicates
inline constexpr double kFneViaHorizonTol = 1e-8;  // Hor(A) >= 1/2 - tol
inline constexpr double kFneGapTol = 1e-9;         // matrix form of <Ax,Ax> <= Re<Ax,x>
inline constexpr double kFneVectorTol = 1e-9;      // sampled vectors, known FNE operator
inline constexpr double kFneEquivVectorTol = 1e-8; // sampled vectors in the equivalence check
inline constexpr double kFneImpliesTol = 1e-9;     // FNE => NE and monotone
inline constexpr double kClassBoundaryBand = 1e-6;
inline constexpr double kCstarAmTol = 1e-9;        // am(x*x, l^2) <= am(x, l)^2 + tol
inline constexpr double kCstarHorizonTol = 1e-7;   // Hor(x*x) >= Hor(x)^2 - tol

/// ||A|| <= 1 (+kClassTol).
bool is_nonexpansive(const Matrix& a);
/// Re<Ax, x> >= 0 for all x, i.e. the Hermitian part is positive semidefinite.
bool is_monotone(const Matrix& a);
/// A and 2A - 1 both nonexpansive.
bool is_fne(const Matrix& a);
/// Hor(A) >= 1/2. Throws NotNonexpansive for ||A|| > 1.
bool is_fne_via_horizon(const Matrix& a);

/// max over unit-normalized trial vectors x of ||Ax||^2 - Re<Ax, x>.
/// Nonpositive (up to rounding) exactly when A is FNE. Zero vectors are skipped.
double fne_inner_product_check(const Matrix& a, std::span<const std::vector<Complex>> trial_vectors);
/// Cosine form: max over unit x of ||Ax|| - cos(angle(Ax, x)), taking the
/// angle term as 0 when Ax = 0.
double fne_cosine_check(const Matrix& a, std::span<const std::vector<Complex>> trial_vectors);
/// min eigenvalue of (A + A*)/2 - A*A: the same inequality over all x at once.
double fne_matrix_gap(const Matrix& a);
bool fne_matrix_criterion(const Matrix& a);

ClassReport classify(const Matrix& a);

} // namespace movnorm
