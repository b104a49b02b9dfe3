#include "tpplab/strassen.hpp"

#include <random>

namespace tpplab {

const BilinearScheme& strassen_scheme() {
  auto make = [] {
    BilinearScheme s;
    auto term = [&](std::array<std::int64_t, 4> l, std::array<std::int64_t, 4> r,
                    std::array<std::int64_t, 4> c) {
      BilinearScheme::Term t;
      t.left = l;
      t.right = r;
      t.target(0, 0) = c[0];
      t.target(0, 1) = c[1];
      t.target(1, 0) = c[2];
      t.target(1, 1) = c[3];
      s.terms.push_back(std::move(t));
    };
    // entry order: 11, 12, 21, 22
    term({1, 0, 0, 1}, {1, 0, 0, 1}, {1, 0, 0, 1});     // (a11+a22)(b11+b22)
    term({0, 0, 1, 1}, {1, 0, 0, 0}, {0, 0, 1, -1});    // (a21+a22) b11
    term({1, 0, 0, 0}, {0, 1, 0, -1}, {0, 1, 0, 1});    // a11 (b12-b22)
    term({-1, 0, 1, 0}, {1, 1, 0, 0}, {0, 0, 0, 1});    // (a21-a11)(b11+b12)
    term({1, 1, 0, 0}, {0, 0, 0, 1}, {-1, 1, 0, 0});    // (a11+a12) b22
    term({0, 0, 0, 1}, {-1, 0, 1, 0}, {1, 0, 1, 0});    // a22 (b21-b11)
    term({0, 1, 0, -1}, {0, 0, 1, 1}, {1, 0, 0, 0});    // (a12-a22)(b21+b22)
    return s;
  };
  static const BilinearScheme scheme = make();
  return scheme;
}

BilinearScheme schoolbook_2x2_scheme() {
  BilinearScheme s;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        BilinearScheme::Term t;
        t.left = {0, 0, 0, 0};
        t.right = {0, 0, 0, 0};
        t.left[static_cast<std::size_t>(i * 2 + k)] = 1;
        t.right[static_cast<std::size_t>(k * 2 + j)] = 1;
        t.target(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
        s.terms.push_back(std::move(t));
      }
  return s;
}

namespace {

ExactMatrix apply_scheme(const BilinearScheme& s, const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix c(2, 2);
  for (const auto& t : s.terms) {
    std::int64_t fa = t.left[0] * a(0, 0) + t.left[1] * a(0, 1) + t.left[2] * a(1, 0) +
                      t.left[3] * a(1, 1);
    std::int64_t gb = t.right[0] * b(0, 0) + t.right[1] * b(0, 1) + t.right[2] * b(1, 0) +
                      t.right[3] * b(1, 1);
    std::int64_t prod = fa * gb;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) c(i, j) += prod * t.target(i, j);
  }
  return c;
}

}  // namespace

bool verify_scheme(const BilinearScheme& scheme) {
  // All 0/1 operand pairs, then random integer samples.
  for (unsigned bits = 0; bits < 256; ++bits) {
    ExactMatrix a(2, 2), b(2, 2);
    for (unsigned i = 0; i < 4; ++i) {
      a(i / 2, i % 2) = (bits >> i) & 1u;
      b(i / 2, i % 2) = (bits >> (i + 4)) & 1u;
    }
    if (apply_scheme(scheme, a, b) != schoolbook_multiply(a, b)) return false;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> dist(-99, 99);
  for (int trial = 0; trial < 200; ++trial) {
    ExactMatrix a(2, 2), b(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        a(i, j) = dist(rng);
        b(i, j) = dist(rng);
      }
    if (apply_scheme(scheme, a, b) != schoolbook_multiply(a, b)) return false;
  }
  return true;
}

std::uint64_t strassen_op_count(std::uint64_t n) {
  if (n == 0 || (n & (n - 1)) != 0) throw domain_error("op count defined for powers of two");
  if (n > (std::uint64_t{1} << 21)) throw too_large_error("op count overflows past n = 2^21");
  if (n == 1) return 1;
  std::uint64_t half = n / 2;
  return 7 * strassen_op_count(half) + 18 * half * half;
}

}  // namespace tpplab
