#include "movnorm/ensembles.hpp"

#include "movnorm/errors.hpp"
#include "movnorm/linalg.hpp"

#include <cmath>

namespace movnorm {

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
  case EnsembleKind::ginibre: return "ginibre";
  case EnsembleKind::hermitian: return "hermitian";
  case EnsembleKind::unitary: return "unitary";
  case EnsembleKind::projection: return "projection";
  case EnsembleKind::fne: return "fne";
  case EnsembleKind::nilpotent_like: return "nilpotent-like";
  }
  return "?";
}

std::optional<EnsembleKind> parse_ensemble_kind(std::string_view name) {
  for (EnsembleKind k : kAllEnsembleKinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

Matrix ginibre(std::size_t dim, Rng& rng) {
  std::vector<Complex> e(dim * dim);
  for (Complex& z : e) z = rng.complex_normal();
  return Matrix(dim, std::move(e));
}

Matrix rescale_to_norm(const Matrix& x, double target) {
  const double n = operator_norm(x);
  if (n == 0.0) return x;
  return scale(target / n, x);
}

Matrix haar_unitary(std::size_t dim, Rng& rng) {
  const std::size_t n = dim;
  const Matrix g = ginibre(n, rng);
  std::vector<Complex> a(g.entries().begin(), g.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  std::vector<std::vector<Complex>> reflectors(n);
  std::vector<Complex> phases(n, Complex(1.0));
  for (std::size_t k = 0; k < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k; i < n; ++i) xnorm += std::norm(at(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const Complex x0 = at(k, k);
    const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0) : x0 / std::abs(x0);
    const Complex alpha = -phase * xnorm; // becomes R(k, k)
    std::vector<Complex> v(n - k);
    for (std::size_t i = k; i < n; ++i) v[i - k] = at(i, k);
    v[0] -= alpha;
    double vnorm = 0.0;
    for (const Complex& z : v) vnorm += std::norm(z);
    vnorm = std::sqrt(vnorm);
    for (Complex& z : v) z /= vnorm;
    // A[k:, k:] -= 2 v (v* A[k:, k:])
    for (std::size_t j = k; j < n; ++j) {
      Complex s{};
      for (std::size_t i = k; i < n; ++i) s += std::conj(v[i - k]) * at(i, j);
      for (std::size_t i = k; i < n; ++i) at(i, j) -= 2.0 * v[i - k] * s;
    }
    phases[k] = alpha / std::abs(alpha);
    reflectors[k] = std::move(v);
  }

  // Q = H_0 H_1 ... H_{n-1}, accumulated right to left onto the identity.
  std::vector<Complex> q(n * n);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  for (std::size_t kk = n; kk-- > 0;) {
    const auto& v = reflectors[kk];
    if (v.empty()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t i = kk; i < n; ++i) s += std::conj(v[i - kk]) * q[i * n + j];
      for (std::size_t i = kk; i < n; ++i) q[i * n + j] -= 2.0 * v[i - kk] * s;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q[i * n + j] *= phases[j];
  return Matrix(n, std::move(q));
}

Matrix random_projection(std::size_t dim, std::size_t k, Rng& rng) {
  if (k > dim) throw BadSpec("projection rank exceeds dimension");
  const Matrix u = haar_unitary(dim, rng);
  std::vector<Complex> p(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Complex s{};
      for (std::size_t c = 0; c < k; ++c) s += u(i, c) * std::conj(u(j, c));
      p[i * dim + j] = s;
    }
  }
  return Matrix(dim, std::move(p));
}

Matrix sample(EnsembleKind kind, std::size_t dim, double norm_cap, Rng& rng) {
  switch (kind) {
  case EnsembleKind::ginibre: {
    const Matrix g = ginibre(dim, rng);
    return rescale_to_norm(g, norm_cap * rng.uniform_open_low());
  }
  case EnsembleKind::hermitian: {
    const Matrix g = ginibre(dim, rng);
    const Matrix h = hermitian_part(g);
    return rescale_to_norm(h, norm_cap * rng.uniform_open_low());
  }
  case EnsembleKind::unitary:
    return haar_unitary(dim, rng);
  case EnsembleKind::projection: {
    const auto k = static_cast<std::size_t>(rng.uniform_int(1, dim));
    return random_projection(dim, k, rng);
  }
  case EnsembleKind::fne: {
    const Matrix c = sample(EnsembleKind::ginibre, dim, norm_cap, rng);
    return scale(0.5, add(Matrix::identity(dim), c));
  }
  case EnsembleKind::nilpotent_like: {
    std::vector<Complex> e(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) e[i * dim + j] = rng.complex_normal();
    return rescale_to_norm(Matrix(dim, std::move(e)), norm_cap * rng.uniform_open_low());
  }
  }
  throw BadSpec("unknown ensemble kind");
}

std::vector<Matrix> generate(const EnsembleSpec& spec) {
  if (spec.dim < 1) throw BadSpec("ensemble dim must be >= 1");
  if (spec.count < 1) throw BadSpec("ensemble count must be >= 1");
  if (!(spec.norm_cap > 0.0 && spec.norm_cap <= 1.0)) throw BadSpec("norm_cap must lie in (0, 1]");
  std::vector<Matrix> out;
  out.reserve(spec.count);
  for (std::size_t j = 0; j < spec.count; ++j) {
    Rng rng(spec.seed, j);
    out.push_back(sample(spec.kind, spec.dim, spec.norm_cap, rng));
  }
  return out;
}

} // namespace movnorm
