#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace movnorm {

using Complex = std::complex<double>;

/// A dim x dim complex matrix, stored row-major. The concrete element of the
/// normed algebra; immutable once constructed, every entry finite.
class Matrix {
public:
  /// dim x dim zero matrix.
  explicit Matrix(std::size_t dim);
  /// Throws DimensionMismatch unless entries.size() == dim*dim, and
  /// NonFiniteEntry on NaN/Inf.
  Matrix(std::size_t dim, std::vector<Complex> entries);

  static Matrix identity(std::size_t dim);
  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix diagonal(std::span<const Complex> diag);
  static Matrix diagonal(std::initializer_list<double> diag);
  /// Real matrix from nested rows; throws DimensionMismatch if not square.
  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * dim_ + j];
  }
  std::span<const Complex> entries() const noexcept { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

Matrix add(const Matrix& x, const Matrix& y);
Matrix subtract(const Matrix& x, const Matrix& y);
Matrix scale(Complex c, const Matrix& x);
Matrix mul(const Matrix& x, const Matrix& y);
/// Conjugate transpose.
Matrix adjoint(const Matrix& x);
/// x - lambda * 1
Matrix shift(const Matrix& x, Complex lambda);

inline Matrix identity(std::size_t dim) { return Matrix::identity(dim); }

inline Matrix operator+(const Matrix& x, const Matrix& y) { return add(x, y); }
inline Matrix operator-(const Matrix& x, const Matrix& y) { return subtract(x, y); }
inline Matrix operator*(const Matrix& x, const Matrix& y) { return mul(x, y); }
inline Matrix operator*(Complex c, const Matrix& x) { return scale(c, x); }
inline Matrix operator*(double c, const Matrix& x) { return scale(Complex(c), x); }

/// Frobenius norm; cheap, used for tolerance scaling and comparisons.
double frobenius_norm(const Matrix& x);

/// Complex vector helpers for the inner-product characterizations.
std::vector<Complex> matvec(const Matrix& x, std::span<const Complex> v);
Complex inner(std::span<const Complex> u, std::span<const Complex> v); // <u, v> = sum conj(u_i) v_i
double norm2(std::span<const Complex> v);

} // namespace movnorm
