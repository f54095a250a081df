#include "movnorm/matrix.hpp"

#include "movnorm/errors.hpp"

#include <cmath>
#include <string>

namespace movnorm {

namespace {

void require_same_dim(const Matrix& x, const Matrix& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(x.dim()) +
                            " and " + std::to_string(y.dim()) + " differ");
  }
}

} // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
}

Matrix::Matrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), data_(std::move(entries)) {
  if (dim == 0) throw DimensionMismatch("matrix dimension must be positive");
  if (data_.size() != dim * dim) {
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(data_.size()));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NonFiniteEntry("matrix entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return Matrix(dim, std::move(e));
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  const std::size_t n = diag.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Matrix(n, std::move(e));
}

Matrix Matrix::diagonal(std::initializer_list<double> diag) {
  std::vector<Complex> d(diag.begin(), diag.end());
  return diagonal(std::span<const Complex>(d));
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t n = rows.size();
  std::vector<Complex> e;
  e.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw DimensionMismatch("from_rows: matrix is not square");
    for (double v : row) e.emplace_back(v);
  }
  return Matrix(n, std::move(e));
}

Matrix add(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y, "add");
  std::vector<Complex> e(x.entries().begin(), x.entries().end());
  auto ye = y.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += ye[k];
  return Matrix(x.dim(), std::move(e));
}

Matrix subtract(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y, "subtract");
  std::vector<Complex> e(x.entries().begin(), x.entries().end());
  auto ye = y.entries();
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= ye[k];
  return Matrix(x.dim(), std::move(e));
}

Matrix scale(Complex c, const Matrix& x) {
  std::vector<Complex> e(x.entries().begin(), x.entries().end());
  for (Complex& z : e) z *= c;
  return Matrix(x.dim(), std::move(e));
}

Matrix mul(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y, "mul");
  const std::size_t n = x.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex xik = x(i, k);
      if (xik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += xik * y(k, j);
    }
  }
  return Matrix(n, std::move(e));
}

Matrix adjoint(const Matrix& x) {
  const std::size_t n = x.dim();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[j * n + i] = std::conj(x(i, j));
  return Matrix(n, std::move(e));
}

Matrix shift(const Matrix& x, Complex lambda) {
  const std::size_t n = x.dim();
  std::vector<Complex> e(x.entries().begin(), x.entries().end());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] -= lambda;
  return Matrix(n, std::move(e));
}

double frobenius_norm(const Matrix& x) {
  double s = 0.0;
  for (const Complex& z : x.entries()) s += std::norm(z);
  return std::sqrt(s);
}

std::vector<Complex> matvec(const Matrix& x, std::span<const Complex> v) {
  const std::size_t n = x.dim();
  if (v.size() != n) throw DimensionMismatch("apply: vector length does not match matrix");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += x(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw DimensionMismatch("inner: vector lengths differ");
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) s += std::norm(z);
  return std::sqrt(s);
}

} // namespace movnorm
