#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tpplab/matrix.hpp"

namespace tpplab {

struct OpStats {
  std::uint64_t multiplications = 0;
  std::uint64_t additions = 0;
};

// Bilinear scheme for the 2x2 product: r terms, each a pair of linear forms
// over the A and B entries (coefficients in row-major entry order) and a
// target matrix the scalar product is scattered into.
struct BilinearScheme {
  struct Term {
    std::array<std::int64_t, 4> left;    // coefficients over A11,A12,A21,A22
    std::array<std::int64_t, 4> right;   // coefficients over B11,B12,B21,B22
    Matrix<std::int64_t> target{2, 2};
  };
  std::vector<Term> terms;
  std::size_t rank() const noexcept { return terms.size(); }
};

// The rank-7 scheme; reconstructs every 2x2 product with 7 multiplications.
const BilinearScheme& strassen_scheme();

// Rank-8 entrywise scheme, the trivial baseline.
BilinearScheme schoolbook_2x2_scheme();

// Exhaustive 0/1 check plus random integer samples of AB = sum f(A) g(B) C.
bool verify_scheme(const BilinearScheme& scheme);

namespace detail {

template <class R>
void add_block(const Matrix<R>& src, std::size_t r0, std::size_t c0, std::size_t h, R sign,
               Matrix<R>& dst, OpStats* stats) {
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      dst(i, j) += sign * src(r0 + i, c0 + j);
      if (stats) ++stats->additions;
    }
}

template <class R>
Matrix<R> strassen_pow2(const Matrix<R>& a, const Matrix<R>& b, std::size_t cutoff,
                        OpStats* stats) {
  const std::size_t n = a.rows();
  if (n <= cutoff) {
    if (stats) {
      stats->multiplications += n * n * n;
      stats->additions += n * n * (n - 1);
    }
    return schoolbook_multiply(a, b);
  }
  const std::size_t h = n / 2;
  auto block = [&](const Matrix<R>& m, std::size_t r0, std::size_t c0) {
    Matrix<R> out(h, h);
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) out(i, j) = m(r0 + i, c0 + j);
    return out;
  };
  auto combine = [&](const Matrix<R>& m, std::size_t r0, std::size_t c0, R s1,
                     const Matrix<R>& m2, std::size_t r1, std::size_t c1, R s2) {
    Matrix<R> out(h, h);
    add_block(m, r0, c0, h, s1, out, nullptr);
    add_block(m2, r1, c1, h, s2, out, stats);  // count one addition per entry
    return out;
  };

  // p1 = (a11+a22)(b11+b22), p2 = (a21+a22) b11, p3 = a11 (b12-b22),
  // p4 = (a21-a11)(b11+b12), p5 = (a11+a12) b22, p6 = a22 (b21-b11),
  // p7 = (a12-a22)(b21+b22)
  Matrix<R> p1 = strassen_pow2(combine(a, 0, 0, R{1}, a, h, h, R{1}),
                               combine(b, 0, 0, R{1}, b, h, h, R{1}), cutoff, stats);
  Matrix<R> p2 = strassen_pow2(combine(a, h, 0, R{1}, a, h, h, R{1}), block(b, 0, 0), cutoff,
                               stats);
  Matrix<R> p3 = strassen_pow2(block(a, 0, 0), combine(b, 0, h, R{1}, b, h, h, R{-1}), cutoff,
                               stats);
  Matrix<R> p4 = strassen_pow2(combine(a, h, 0, R{1}, a, 0, 0, R{-1}),
                               combine(b, 0, 0, R{1}, b, 0, h, R{1}), cutoff, stats);
  Matrix<R> p5 = strassen_pow2(combine(a, 0, 0, R{1}, a, 0, h, R{1}), block(b, h, h), cutoff,
                               stats);
  Matrix<R> p6 = strassen_pow2(block(a, h, h), combine(b, h, 0, R{1}, b, 0, 0, R{-1}), cutoff,
                               stats);
  Matrix<R> p7 = strassen_pow2(combine(a, 0, h, R{1}, a, h, h, R{-1}),
                               combine(b, h, 0, R{1}, b, h, h, R{1}), cutoff, stats);

  Matrix<R> c(n, n);
  // The first term written into each quadrant is a copy; the remaining
  // eight block writes are the additions, keeping the per-level cost at
  // 10 + 8 = 18 half-size additions.
  auto scatter = [&](const Matrix<R>& p, std::size_t r0, std::size_t c0, R sign, bool counts) {
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) c(r0 + i, c0 + j) += sign * p(i, j);
    if (counts && stats) stats->additions += h * h;
  };
  // c11 = p1+p6-p5+p7, c12 = p3+p5, c21 = p2+p6, c22 = p1-p2+p3+p4
  scatter(p1, 0, 0, R{1}, false);
  scatter(p6, 0, 0, R{1}, true);
  scatter(p5, 0, 0, R{-1}, true);
  scatter(p7, 0, 0, R{1}, true);
  scatter(p3, 0, h, R{1}, false);
  scatter(p5, 0, h, R{1}, true);
  scatter(p2, h, 0, R{1}, false);
  scatter(p6, h, 0, R{1}, true);
  scatter(p1, h, h, R{1}, false);
  scatter(p2, h, h, R{-1}, true);
  scatter(p3, h, h, R{1}, true);
  scatter(p4, h, h, R{1}, true);
  return c;
}

}  // namespace detail

// 2x2 product by the seven-multiplication scheme.
template <class R>
Matrix<R> strassen_2x2(const Matrix<R>& a, const Matrix<R>& b, OpStats* stats = nullptr) {
  if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2)
    throw domain_error("strassen_2x2 requires 2x2 operands");
  return detail::strassen_pow2(a, b, 1, stats);
}

// Square product of any size: zero-pads to the next power of two, recurses
// down to the cutoff, crops. cutoff = 1 runs the recursion all the way down.
template <class R>
Matrix<R> strassen_multiply(const Matrix<R>& a, const Matrix<R>& b, std::size_t cutoff = 1,
                            OpStats* stats = nullptr) {
  if (a.cols() != b.rows() || a.rows() != a.cols() || b.rows() != b.cols())
    throw domain_error("strassen_multiply requires square matrices of equal size");
  const std::size_t n = a.rows();
  if (n == 0) return Matrix<R>(0, 0);
  std::size_t full = 1;
  while (full < n) full *= 2;
  if (full == n) return detail::strassen_pow2(a, b, std::max<std::size_t>(cutoff, 1), stats);
  Matrix<R> ap(full, full), bp(full, full);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ap(i, j) = a(i, j);
      bp(i, j) = b(i, j);
    }
  Matrix<R> cp = detail::strassen_pow2(ap, bp, std::max<std::size_t>(cutoff, 1), stats);
  Matrix<R> c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) = cp(i, j);
  return c;
}

// Exact operation-count recursion t(n) = 7 t(n/2) + 18 (n/2)^2, t(1) = 1,
// for n a power of two.
std::uint64_t strassen_op_count(std::uint64_t n);

}  // namespace tpplab
