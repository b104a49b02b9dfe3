#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "tpplab/strassen.hpp"

using namespace tpplab;
using namespace tpplab::testing;

TEST_CASE("2x2 spot values") {
  ExactMatrix id = ExactMatrix::identity(2);
  CHECK(strassen_2x2(id, id) == id);

  ExactMatrix a(2, 2), b(2, 2);
  a(0, 0) = 1; a(0, 1) = 2; a(1, 0) = 3; a(1, 1) = 4;
  b(0, 0) = 5; b(0, 1) = 6; b(1, 0) = 7; b(1, 1) = 8;
  ExactMatrix c = strassen_2x2(a, b);
  CHECK(c(0, 0) == 19);
  CHECK(c(0, 1) == 22);
  CHECK(c(1, 0) == 43);
  CHECK(c(1, 1) == 50);
}

TEST_CASE("all 0/1 pairs match the schoolbook product") {
  for (unsigned bits = 0; bits < 256; ++bits) {
    ExactMatrix a(2, 2), b(2, 2);
    for (unsigned i = 0; i < 4; ++i) {
      a(i / 2, i % 2) = (bits >> i) & 1u;
      b(i / 2, i % 2) = (bits >> (i + 4)) & 1u;
    }
    CHECK(strassen_2x2(a, b) == schoolbook_multiply(a, b));
  }
}

TEST_CASE("exactly seven multiplications at the base size") {
  OpStats stats;
  ExactMatrix a = ExactMatrix::identity(2), b = ExactMatrix::identity(2);
  strassen_2x2(a, b, &stats);
  CHECK(stats.multiplications == 7);
  CHECK(stats.additions == 18);
}

TEST_CASE("recursive product matches schoolbook across sizes") {
  std::mt19937_64 rng(1234);
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    for (int trial = 0; trial < 200; ++trial) {
      ExactMatrix a = random_exact_matrix(rng, n, n);
      ExactMatrix b = random_exact_matrix(rng, n, n);
      REQUIRE(strassen_multiply(a, b) == schoolbook_multiply(a, b));
    }
  }
}

TEST_CASE("scalar and padded sizes") {
  std::mt19937_64 rng(99);
  ExactMatrix a1(1, 1), b1(1, 1);
  a1(0, 0) = -4;
  b1(0, 0) = 6;
  CHECK(strassen_multiply(a1, b1)(0, 0) == -24);

  for (std::size_t n : {3u, 5u, 6u, 7u}) {
    ExactMatrix a = random_exact_matrix(rng, n, n);
    ExactMatrix b = random_exact_matrix(rng, n, n);
    CHECK(strassen_multiply(a, b) == schoolbook_multiply(a, b));
  }
}

TEST_CASE("operation count recursion") {
  CHECK(strassen_op_count(1) == 1);
  CHECK(strassen_op_count(2) == 25);
  CHECK(strassen_op_count(4) == 247);
  // closed form 7*7^k - 6*4^k
  std::uint64_t n = 1;
  for (unsigned k = 0; k <= 10; ++k) {
    std::uint64_t sevens = 1, fours = 1;
    for (unsigned i = 0; i < k; ++i) {
      sevens *= 7;
      fours *= 4;
    }
    CHECK(strassen_op_count(n) == 7 * sevens - 6 * fours);
    n *= 2;
  }
  CHECK_THROWS_AS(strassen_op_count(3), domain_error);
  CHECK_THROWS_AS(strassen_op_count(std::uint64_t{1} << 22), too_large_error);
}

TEST_CASE("instrumented counts stay consistent with the recursion") {
  std::mt19937_64 rng(77);
  std::uint64_t sevens = 7;
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    OpStats stats;
    ExactMatrix a = random_exact_matrix(rng, n, n);
    ExactMatrix b = random_exact_matrix(rng, n, n);
    strassen_multiply(a, b, 1, &stats);
    CHECK(stats.multiplications == sevens);
    // additions may not exceed the recursion's additive budget
    std::uint64_t budget = strassen_op_count(n) - sevens;
    CHECK(stats.additions <= budget);
    sevens *= 7;
  }
}

TEST_CASE("growth exponent approaches log2 of seven") {
  // ln T(2^k) / (k ln 2) decreases toward log2(7); the doubling ratio
  // converges much faster and pins the limit.
  double prev = 10.0;
  for (unsigned k = 4; k <= 20; k += 4) {
    double ratio = std::log(static_cast<double>(strassen_op_count(std::uint64_t{1} << k))) /
                   (k * std::log(2.0));
    CHECK(ratio < prev);
    CHECK(ratio > std::log2(7.0));
    prev = ratio;
  }
  double doubling = std::log2(static_cast<double>(strassen_op_count(1 << 20)) /
                              static_cast<double>(strassen_op_count(1 << 19)));
  CHECK(doubling == doctest::Approx(std::log2(7.0)).epsilon(1e-4));
}

TEST_CASE("scheme verification") {
  CHECK(verify_scheme(strassen_scheme()));
  CHECK(strassen_scheme().rank() == 7);
  CHECK(verify_scheme(schoolbook_2x2_scheme()));
  CHECK(schoolbook_2x2_scheme().rank() == 8);

  BilinearScheme crippled = strassen_scheme();
  crippled.terms.pop_back();
  CHECK_FALSE(verify_scheme(crippled));
}

TEST_CASE("cutoff changes cost, not results") {
  std::mt19937_64 rng(31);
  ExactMatrix a = random_exact_matrix(rng, 16, 16);
  ExactMatrix b = random_exact_matrix(rng, 16, 16);
  ExactMatrix expected = schoolbook_multiply(a, b);
  for (std::size_t cutoff : {1u, 2u, 4u, 16u}) {
    OpStats stats;
    CHECK(strassen_multiply(a, b, cutoff, &stats) == expected);
  }
}
