#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tpplab/chars.hpp"
#include "tpplab/tpp.hpp"

namespace tpplab {

enum class FormulaId {
  AbelianTensor,
  Simultaneous,
  WreathKn,
  SingleAlphaGamma,
  CertificateT,
  TriangleAlpha,
  StrassenRecursion,
};

enum class Provenance { VerifiedTriple, PaperTable, Conditional };

std::string to_string(FormulaId id);
std::string to_string(Provenance p);

// One upper bound on the matrix multiplication exponent: which formula,
// with which parameters, what it evaluates to, and how trustworthy it is.
struct BoundReport {
  FormulaId formula;
  nlohmann::json params;
  double value = 0.0;
  Provenance provenance = Provenance::VerifiedTriple;

  nlohmann::json to_json() const;
};

// 3 ln|G| / ln(nmp): with a found (not certified-maximal) tensor this upper
// bounds the group's pseudoexponent. Exceeds 2 for every TPP tensor.
double alpha_from_tensor(std::uint64_t group_order, const Tensor& tensor);

// ln|G| / ln d'(G); +infinity for abelian groups (d' = 1).
double gamma_of(const DegreeSet& ds);

// alpha (gamma - 2) / (gamma - alpha); requires 2 < alpha < gamma.
double omega_single(double alpha, double gamma);

// Finite certificate that omega <= t: z'^(1/3) > d' and |G| <= z'^(t/3) / d'^(t-2).
bool omega_certificate(std::uint64_t group_order, std::uint64_t z_prime, std::uint64_t d_prime,
                       double t);

// omega <= 3 ln|G| / ln(nmp) for an abelian group realizing the tensor.
BoundReport omega_abelian_tensor(std::uint64_t group_order, const Tensor& tensor);

// omega <= (ln|G| - ln r)/ln n for an abelian group realizing <n,n,n> r
// times simultaneously.
BoundReport omega_simultaneous(std::uint64_t group_order, std::uint64_t r, std::uint64_t n);

// omega <= (n ln|H| - ln n! - ln k_n) / ln (prod m_i p_i q_i)^(1/3) for an
// abelian base with an n-member simultaneous family. k_n = 1 is uncondi-
// tionally verified by the wreath construction; larger k_n is conditional
// unless the caller certifies a verified permuted family.
BoundReport omega_wreath(std::uint64_t h_order, std::uint32_t n,
                         const std::vector<std::array<std::uint64_t, 3>>& triple_sizes,
                         double k_n, bool k_verified = false);

// ln((n(n+1)/2)!) / ln(n!(n-1)!...1!), the pseudoexponent bound carried by
// the coordinate-fixing subgroups of the triangle's symmetric group.
double triangle_alpha_exact(std::uint32_t n);

// Leading term 2 + (2 - ln 2)/ln n of the same bound.
double triangle_alpha_leading(std::uint32_t n);

// Families scanned by minimize_formula; n is the scan variable.
enum class ScanFormula {
  CycCubeTwice,          // (3 ln n - ln 2) / ln(n-1)
  WreathPairK,           // (6 ln n - ln 2 - ln k) / (2 ln(n-1))
  WreathPowerConditional // (2^n 3n ln n - 4 ln(2^n !)) / (2^n n ln(n-1))
};

struct ScanResult {
  std::uint64_t argmin = 0;
  double value = 0.0;
};

// Exhaustive integer scan; no unimodality assumed. k feeds WreathPairK.
ScanResult minimize_formula(ScanFormula formula, double k, std::uint64_t lo, std::uint64_t hi);

double evaluate_formula(ScanFormula formula, double k, std::uint64_t n);

// ln(n!), exact summation for small n, lgamma beyond.
double log_factorial(std::uint64_t n);

// Headline bounds: the simultaneous cyclic-cube bound, the order-2 wreath
// bound (both backed by live STPP verification), the k2 table, the
// asymptotic wreath-power family value, and the conditional 2.012 row.
std::vector<BoundReport> chapter6_report();

// omega <= log2 7 from the rank-7 recursion.
BoundReport strassen_recursion_report();

// One quantitative reproduction check: a computed quantity against the
// value printed in the source tables, with its tolerance.
struct ReproCheck {
  std::string name;
  double expected = 0.0;
  double got = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// The quantitative table reproductions: the two headline minimizations, the
// k2 table, the conditional wreath-power minimum and the leading-term
// triangle table. Rows that the printed tables get wrong stay red here.
std::vector<ReproCheck> chapter6_reproduction();

}  // namespace tpplab
