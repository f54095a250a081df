#include "movnorm/linalg.hpp"

#include "movnorm/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace movnorm {

namespace {

constexpr double kOffDiagonalStop = 1e-28;
constexpr int kMaxSweeps = 100;

// In-place eigenvalues of a Hermitian n x n matrix stored row-major. Only the
// diagonal is meaningful on return.
void jacobi_diagonalize(std::vector<Complex>& a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> Complex& { return a[i * n + j]; };

  double total = 0.0;
  for (const Complex& z : a) total += std::norm(z);
  if (total == 0.0) return;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += std::norm(at(i, j));
    if (off <= kOffDiagonalStop * total) return;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = at(p, q);
        const double g = std::abs(apq);
        if (g == 0.0) continue;
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const Complex e = apq / g;

        const double theta = (aqq - app) / (2.0 * g);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex ce = std::conj(e);

        // a <- a U with U = [[c, s], [-s conj(e), c conj(e)]] on (p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = at(k, p);
          const Complex akq = at(k, q);
          at(k, p) = c * akp - s * ce * akq;
          at(k, q) = s * akp + c * ce * akq;
        }
        // a <- U* a
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = at(p, k);
          const Complex aqk = at(q, k);
          at(p, k) = c * apk - s * e * aqk;
          at(q, k) = s * apk + c * e * aqk;
        }
        at(p, q) = Complex{};
        at(q, p) = Complex{};
        at(p, p) = app - t * g;
        at(q, q) = aqq + t * g;
      }
    }
  }
}

std::vector<double> eigenvalues_of_hermitian_storage(std::vector<Complex> a, std::size_t n) {
  jacobi_diagonalize(a, n);
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i].real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

} // namespace

double SpectralRange::norm() const noexcept { return std::max(std::abs(lo), std::abs(hi)); }

Matrix gram(const Matrix& x) {
  const std::size_t n = x.dim();
  std::vector<Complex> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(x(k, i)) * x(k, j);
      if (i == j) {
        g[i * n + i] = s.real();
      } else {
        g[i * n + j] = s;
        g[j * n + i] = std::conj(s);
      }
    }
  }
  return Matrix(n, std::move(g));
}

Matrix hermitian_part(const Matrix& x) {
  const std::size_t n = x.dim();
  std::vector<Complex> h(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    h[i * n + i] = x(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (x(i, j) + std::conj(x(j, i)));
      h[i * n + j] = v;
      h[j * n + i] = std::conj(v);
    }
  }
  return Matrix(n, std::move(h));
}

std::vector<double> hermitian_eigenvalues(const Matrix& x) {
  const Matrix h = hermitian_part(x);
  return eigenvalues_of_hermitian_storage({h.entries().begin(), h.entries().end()}, h.dim());
}

double operator_norm(const Matrix& x) {
  if (x.dim() == 1) return std::abs(x(0, 0));
  const Matrix g = gram(x);
  const auto ev = eigenvalues_of_hermitian_storage({g.entries().begin(), g.entries().end()}, g.dim());
  return std::sqrt(std::max(0.0, ev.back()));
}

bool is_hermitian(const Matrix& x) {
  const double skew = operator_norm(subtract(x, adjoint(x)));
  return skew <= kHermitianTol * std::max(1.0, operator_norm(x));
}

bool is_unitary(const Matrix& x) {
  return operator_norm(subtract(gram(x), Matrix::identity(x.dim()))) <= kUnitaryTol;
}

SpectralRange hermitian_range(const Matrix& x) {
  if (!is_hermitian(x)) throw NotHermitian("hermitian_range: element is not Hermitian");
  const auto ev = hermitian_eigenvalues(x);
  return {ev.front(), ev.back()};
}

} // namespace movnorm
