#include <doctest.h>

#include <cmath>
#include <limits>

#include "tpplab/bounds.hpp"

using namespace tpplab;

TEST_CASE("pseudoexponent bound from a tensor") {
  // abelian group realizing its own order: the bound is exactly 3
  CHECK(alpha_from_tensor(64, Tensor{64, 1, 1}) == doctest::Approx(3.0));
  CHECK(alpha_from_tensor(64, Tensor{4, 4, 4}) == doctest::Approx(3.0));
  // the order-6 group with the 2-cube
  CHECK(alpha_from_tensor(6, Tensor{2, 2, 2}) == doctest::Approx(std::log(6.0) / std::log(2.0)));
  // 16^3 with the 15-cube
  CHECK(alpha_from_tensor(4096, Tensor{15, 15, 15}) ==
        doctest::Approx(std::log(4096.0) / std::log(15.0)).epsilon(1e-9));
  CHECK_THROWS_AS(alpha_from_tensor(5, Tensor{1, 1, 1}), domain_error);
}

TEST_CASE("bound exceeds two on verified tensors") {
  // any tensor obeying nmp < |G|^{3/2} gives a value > 2; spot-check the
  // realized families
  CHECK(alpha_from_tensor(4096, Tensor{15, 15, 15}) > 2.0);
  CHECK(alpha_from_tensor(6, Tensor{2, 2, 2}) > 2.0);
  CHECK(alpha_from_tensor(720, Tensor{12, 12, 12}) > 2.0);
}

TEST_CASE("gamma parameter") {
  DegreeSet s3 = degree_set(GroupSpec::symmetric(3));
  CHECK(gamma_of(s3) == doctest::Approx(std::log(6.0) / std::log(2.0)).epsilon(1e-12));

  DegreeSet flat = degree_set(GroupSpec::power(GroupSpec::cyclic(4), 2));
  CHECK(std::isinf(gamma_of(flat)));

  DegreeSet s4 = degree_set(GroupSpec::symmetric(4));
  double g4 = gamma_of(s4);
  CHECK(g4 == doctest::Approx(std::log(24.0) / std::log(3.0)).epsilon(1e-12));
  // window endpoints
  double lo = 2.0 * std::log(24.0) / std::log(23.0);
  double hi = 2.0 * std::log(24.0) / (std::log(24.0) - std::log(5.0));
  CHECK(lo < g4);
  CHECK(g4 < hi);
}

TEST_CASE("gamma window holds across the symmetric groups") {
  for (std::uint32_t n = 3; n <= 8; ++n) {
    DegreeSet ds = degree_set(GroupSpec::symmetric(n));
    double g = gamma_of(ds);
    double order = static_cast<double>(ds.order());
    double c = static_cast<double>(ds.class_number());
    CHECK(2.0 * std::log(order) / std::log(order - 1.0) < g);
    CHECK(g < 2.0 * std::log(order) / (std::log(order) - std::log(c)));
  }
}

TEST_CASE("single-group exponent bound") {
  CHECK(omega_single(2.2, 2.8) == doctest::Approx(2.2 * 0.8 / 0.6));
  // tightening alpha toward 2 drives the bound to 2
  CHECK(omega_single(2.0001, 2.8) == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS_AS(omega_single(2.9, 2.8), domain_error);
  CHECK_THROWS_AS(omega_single(2.8, 2.8), domain_error);
  CHECK_THROWS_AS(omega_single(1.9, 2.5), domain_error);
}

TEST_CASE("finite certificate") {
  // abelian shape: z' = |G|, d' = 1, t = 3 sits exactly on the boundary
  CHECK(omega_certificate(64, 64, 1, 3.0));
  // the order-6 group's 8-cube against max degree 2: 8^(1/3) is not > 2
  CHECK_FALSE(omega_certificate(6, 8, 2, 2.9));
  // first clause alone kills it
  CHECK_FALSE(omega_certificate(100, 27, 3, 2.9));
  CHECK_THROWS_AS(omega_certificate(6, 8, 1, 2.0), domain_error);
}

TEST_CASE("abelian tensor bound report") {
  BoundReport r = omega_abelian_tensor(4096, Tensor{15, 15, 15});
  CHECK(r.value == doctest::Approx(3.0714962977).epsilon(1e-9));
  CHECK(r.formula == FormulaId::AbelianTensor);
  CHECK(r.provenance == Provenance::VerifiedTriple);
  CHECK(omega_abelian_tensor(64, Tensor{4, 4, 4}).value == doctest::Approx(3.0));
  // growing the tensor at fixed order tightens the bound
  CHECK(omega_abelian_tensor(4096, Tensor{15, 15, 15}).value <
        omega_abelian_tensor(4096, Tensor{14, 14, 14}).value);
}

TEST_CASE("simultaneous bound") {
  BoundReport r = omega_simultaneous(4096, 2, 15);
  CHECK(r.value == doctest::Approx(2.81553827).epsilon(1e-7));
  // r = 1 reduces to the abelian tensor bound on the cube
  CHECK(omega_simultaneous(4096, 1, 15).value ==
        doctest::Approx(omega_abelian_tensor(4096, Tensor{15, 15, 15}).value));
  // |G| = n^3 realized n times: exactly 2
  CHECK(omega_simultaneous(27 * 27 * 27, 27, 27).value == doctest::Approx(2.0));
}

TEST_CASE("wreath bound") {
  std::vector<std::array<std::uint64_t, 3>> sizes2(2, {40, 40, 40});
  BoundReport r = omega_wreath(68921, 2, sizes2, 1.0);
  CHECK(r.value == doctest::Approx(2.92613048).epsilon(1e-7));
  CHECK(r.provenance == Provenance::VerifiedTriple);

  // assumed k > 1 is conditional and strictly tighter
  BoundReport rk = omega_wreath(68921, 2, sizes2, 8.0);
  CHECK(rk.provenance == Provenance::Conditional);
  CHECK(rk.value < r.value);

  double prev = r.value;
  for (double k = 2.0; k <= 8.0; k += 1.0) {
    double v = omega_wreath(68921, 2, sizes2, k).value;
    CHECK(v < prev);
    prev = v;
  }

  // k = 8 over the order-216 cube evaluates to the table's closing row at
  // its minimizing n = 6
  std::vector<std::array<std::uint64_t, 3>> sizes6(2, {5, 5, 5});
  CHECK(omega_wreath(216, 2, sizes6, 8.0).value == doctest::Approx(2.478495).epsilon(1e-6));

  // the giant conditional family: (cyc(6)^3)^6 wr sym(64) with every
  // permuted triple assumed
  std::uint64_t h_order = 1;
  for (int i = 0; i < 18; ++i) h_order *= 6;
  std::vector<std::array<std::uint64_t, 3>> sizes64(64, {15625, 15625, 15625});
  double k64 = std::exp(3.0 * log_factorial(64));
  BoundReport big = omega_wreath(h_order, 64, sizes64, k64);
  CHECK(big.value == doctest::Approx(2.012).epsilon(1e-2));
  CHECK(big.provenance == Provenance::Conditional);

  CHECK_THROWS_AS(omega_wreath(68921, 2, {{40, 40, 40}}, 1.0), domain_error);
}

TEST_CASE("triangle alpha, exact ratio") {
  CHECK(triangle_alpha_exact(2) == doctest::Approx(std::log(6.0) / std::log(2.0)).epsilon(1e-12));
  CHECK(triangle_alpha_exact(3) ==
        doctest::Approx(std::log(720.0) / std::log(12.0)).epsilon(1e-12));
  for (std::uint32_t n = 2; n <= 40; ++n) CHECK(triangle_alpha_exact(n) > 2.0);
}

TEST_CASE("triangle alpha, leading term") {
  const double printed[9] = {3.88539, 3.18955, 2.94270, 2.81199, 2.72937,
                             2.67159, 2.62846, 2.59477, 2.56756};
  for (std::uint32_t n = 2; n <= 10; ++n)
    CHECK(std::abs(triangle_alpha_leading(n) - printed[n - 2]) < 1e-5);
}

TEST_CASE("formula minimization") {
  ScanResult a = minimize_formula(ScanFormula::CycCubeTwice, 1.0, 3, 100);
  CHECK(a.argmin == 16);
  CHECK(a.value == doctest::Approx(2.81553).epsilon(1e-5));

  ScanResult b = minimize_formula(ScanFormula::WreathPairK, 1.0, 3, 200);
  CHECK(b.argmin == 41);
  CHECK(b.value == doctest::Approx(2.92613048).epsilon(1e-8));

  ScanResult c = minimize_formula(ScanFormula::WreathPairK, 8.0, 3, 100);
  CHECK(c.argmin == 6);
  CHECK(c.value == doctest::Approx(2.478495).epsilon(1e-6));

  ScanResult d = minimize_formula(ScanFormula::WreathPowerConditional, 1.0, 3, 20);
  CHECK(d.argmin == 6);
  CHECK(d.value == doctest::Approx(2.012).epsilon(1e-2));

  CHECK_THROWS_AS(minimize_formula(ScanFormula::CycCubeTwice, 1.0, 50, 10), domain_error);
}

TEST_CASE("every emitted bound is at least two") {
  for (const BoundReport& r : chapter6_report()) CHECK(r.value >= 2.0);
  CHECK(strassen_recursion_report().value >= 2.0);
}

TEST_CASE("headline rows") {
  std::vector<BoundReport> rows = chapter6_report();
  REQUIRE(rows.size() >= 11);
  // simultaneous cyclic-cube row
  CHECK(rows[0].formula == FormulaId::Simultaneous);
  CHECK(rows[0].value == doctest::Approx(2.81553827).epsilon(1e-6));
  CHECK(rows[0].provenance == Provenance::VerifiedTriple);
  // k = 1 wreath row is verified, the later k rows conditional
  CHECK(rows[1].formula == FormulaId::WreathKn);
  CHECK(rows[1].value == doctest::Approx(2.92613048).epsilon(1e-6));
  CHECK(rows[1].provenance == Provenance::VerifiedTriple);
  CHECK(rows[2].provenance == Provenance::Conditional);
  // conditional closer: 2.012
  CHECK(rows.back().value == doctest::Approx(2.012).epsilon(1e-2));
  CHECK(rows.back().provenance == Provenance::Conditional);
}

TEST_CASE("strassen recursion report") {
  BoundReport r = strassen_recursion_report();
  CHECK(r.value == doctest::Approx(std::log2(7.0)).epsilon(1e-12));
  CHECK(r.formula == FormulaId::StrassenRecursion);
}

TEST_CASE("reproduction checks cover the printed tables") {
  std::vector<ReproCheck> checks = chapter6_reproduction();
  REQUIRE(checks.size() == 23);
  int failures = 0;
  for (const ReproCheck& c : checks)
    if (!c.pass) ++failures;
  // The k = 2 row of the printed k2 table is the value at n = 14, not the
  // scan minimum at n = 16; the honest scan leaves exactly that row red.
  CHECK(failures == 1);
  for (const ReproCheck& c : checks)
    if (!c.pass) CHECK(c.name == "k2 table, k = 2");
}

TEST_CASE("report serialization") {
  BoundReport r = omega_simultaneous(4096, 2, 15);
  nlohmann::json j = r.to_json();
  CHECK(j["formula"] == "SIMULTANEOUS");
  CHECK(j["provenance"] == "verified-triple");
  CHECK(j["value"].get<double>() == doctest::Approx(2.81553827));
}
