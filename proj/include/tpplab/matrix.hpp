#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tpplab/errors.hpp"

namespace tpplab {

// Dense row-major matrix over an exact integer type or complex doubles.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, R fill = R{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<R>& data() const noexcept { return data_; }
  std::vector<R>& data() noexcept { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<R> data_;
};

// Plain cubic-time product, the reference all other paths are checked against.
template <class R>
Matrix<R> schoolbook_multiply(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.cols() != b.rows()) throw domain_error("schoolbook_multiply: dimension mismatch");
  Matrix<R> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const R aik = a(i, k);
      if (aik == R{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class R>
double max_abs_difference(const Matrix<R>& a, const Matrix<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw domain_error("max_abs_difference: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    m = std::max(m, static_cast<double>(std::abs(a.data()[i] - b.data()[i])));
  return m;
}

using ExactMatrix = Matrix<std::int64_t>;
using ComplexMatrix = Matrix<std::complex<double>>;

}  // namespace tpplab
