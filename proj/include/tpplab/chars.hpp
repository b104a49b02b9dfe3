#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tpplab/group.hpp"

namespace tpplab {

// Multiset of irreducible character degrees of a group, with the group
// order it must square-sum to.
class DegreeSet {
 public:
  DegreeSet(std::uint64_t order, std::map<std::uint64_t, std::uint64_t> multiplicities);

  std::uint64_t order() const noexcept { return order_; }
  const std::map<std::uint64_t, std::uint64_t>& multiplicities() const noexcept { return mult_; }

  std::uint64_t max_degree() const;      // d'
  std::uint64_t class_number() const;    // number of irreducibles
  double power_sum(double r) const;      // sum of d^r with multiplicity

 private:
  std::uint64_t order_;
  std::map<std::uint64_t, std::uint64_t> mult_;
};

// Degrees for abelian cyclic products (all ones), symmetric groups up to
// degree 20 (hook lengths over partitions), triangle-symmetric groups within
// that range, and direct products of supported parts. Wreath products are
// not expanded; only wreath_domega_bound is available for them.
DegreeSet degree_set(const GroupSpec& spec);

// Hook-length degrees of the symmetric group of the given degree, one entry
// per partition; exact in 64 bits for degree <= 20.
std::vector<std::uint64_t> symmetric_group_degrees(std::uint32_t degree);

// Free-function forms of the DegreeSet accessors.
double d_r_sum(const DegreeSet& ds, double r);
std::uint64_t d_prime(const DegreeSet& ds);

// (n!)^(omega-1) * |H|^n: upper bound on the omega-th degree power sum of
// H wr Sym_n for abelian H.
double wreath_domega_bound(std::uint64_t h_order, std::uint32_t n, double omega);

}  // namespace tpplab
