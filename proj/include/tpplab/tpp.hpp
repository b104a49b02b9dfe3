#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tpplab/group.hpp"

namespace tpplab {

// Matrix multiplication tensor <n,m,p>: n x m by m x p.
struct Tensor {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  std::uint64_t p = 1;

  std::uint64_t size() const;       // n*m*p, checked
  double mean_size() const;         // (n*m*p)^(1/3)
  bool operator==(const Tensor&) const = default;
};

// Three subsets (S,T,U) of one group, the candidate for the triple product
// property; |S| x |T| matrices times |T| x |U| matrices ride on it.
class IndexTriple {
 public:
  IndexTriple(Subset s, Subset t, Subset u);

  const Group& group() const noexcept { return s_.group(); }
  const Subset& s() const noexcept { return s_; }
  const Subset& t() const noexcept { return t_; }
  const Subset& u() const noexcept { return u_; }
  Tensor tensor() const;

 private:
  Subset s_, t_, u_;
};

class TripleFamily {
 public:
  TripleFamily(Group group, std::vector<IndexTriple> triples);

  const Group& group() const noexcept { return group_; }
  const std::vector<IndexTriple>& triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  const IndexTriple& operator[](std::size_t i) const { return triples_[i]; }

 private:
  Group group_;
  std::vector<IndexTriple> triples_;
};

// Q(S) = { s' s^-1 : s, s' in S }, deduplicated, sorted canonically.
// Always contains the identity and |Q(S)| >= |S|.
Subset quotient_set(const Subset& s);

// Q(X,Y) = { x y^-1 : x in X, y in Y }; Q(S,S) coincides with Q(S).
Subset pair_quotient_set(const Subset& x, const Subset& y);

// A nontrivial solution q1 q2 q3 = 1 over the quotient sets; for family
// checks, indices identifies the offending (i,j,k).
struct TppWitness {
  GroupElement q1, q2, q3;
  std::array<std::size_t, 3> indices{0, 0, 0};
};

struct TppResult {
  bool ok = false;
  std::optional<TppWitness> witness;
  explicit operator bool() const noexcept { return ok; }
};

// Triple product property: q1 q2 q3 = 1 with q1 in Q(S), q2 in Q(T),
// q3 in Q(U) forces q1 = q2 = q3 = 1. Materializes the quotient sets and
// scans q1,q2 pairs against a hash set of Q(U).
TppResult check_tpp(const IndexTriple& t);

// Injectivity of (s,t,u) -> s t u; equivalent to check_tpp on abelian
// groups and used as an independent cross-check. Throws unsupported_error
// for non-abelian groups.
bool check_tpp_abelian_oracle(const IndexTriple& t);

// Simultaneous triple product property for a family: every member passes
// check_tpp and cross products q1 q2 q3 = 1 with q1 in Q(S_i,S_j),
// q2 in Q(T_j,T_k), q3 in Q(U_k,U_i) force i = j = k.
TppResult check_stpp(const TripleFamily& fam);

// Reorders the three subsets; TPP status is invariant under all six
// arrangements. perm maps position -> source component index.
IndexTriple permute_triple(const IndexTriple& t, const std::array<int, 3>& perm);

// Componentwise Cartesian triple in G1 x G2; realizes the pointwise product
// tensor. TPP of the inputs is the caller's responsibility.
IndexTriple product_triple(const IndexTriple& a, const IndexTriple& b);

// All r1*r2 componentwise products of two families, row-major in the first
// family's index.
TripleFamily product_family(const TripleFamily& a, const TripleFamily& b);

// Lifts an n-member family in H into H wr Sym_n: each component becomes
// { (h1..hn, sigma) : h_i from the i-th member, sigma arbitrary }, of size
// n! * prod |.|. The result has the TPP whenever the family has the STPP.
IndexTriple wreath_triple(const TripleFamily& fam);

// The two size-(n-1,n-1,n-1) triples of Cyc_n^3 supported on the nonzero
// residues of one coordinate each; together they satisfy the STPP.
TripleFamily cyc_stpp_triples(std::uint32_t n);

// Points (x1,x2,x3) >= 0 with x1+x2+x3 = n-1, in descending lexicographic
// order: (n-1,0,0) first, (0,0,n-1) last; n(n+1)/2 points.
std::vector<std::array<std::uint32_t, 3>> triangle_set(std::uint32_t n);

// The three coordinate-fixing subgroups of Sym of the triangle of side n;
// each has order n!(n-1)!...1! and the triple has the TPP.
IndexTriple triangle_subgroup_triple(std::uint32_t n);

struct SearchOptions {
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
};

// Best TPP triple found by seeded randomized growth with greedy repair;
// exhaustive over identity-normalized subsets when the group is small.
// Deterministic for a fixed seed independent of TPPLAB_THREADS.
IndexTriple search_triples(const Group& group, const SearchOptions& options);

}  // namespace tpplab
