#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tpplab/group.hpp"
#include "tpplab/matrix.hpp"
#include "tpplab/tpp.hpp"

namespace tpplab {

// Element of the group algebra: a finitely supported coefficient map over
// group elements. Exact integer coefficients for bit-exact runs, complex
// doubles for the transform paths. Zero coefficients are never stored.
template <class R>
class AlgebraElement {
 public:
  using CoeffMap = std::unordered_map<GroupElement, R, ElementHash>;

  explicit AlgebraElement(Group group) : group_(std::move(group)) {}

  const Group& group() const noexcept { return group_; }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  std::size_t support_size() const noexcept { return coeffs_.size(); }

  R coeff(const GroupElement& g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? R{} : it->second;
  }

  void add(const GroupElement& g, R c) {
    if (c == R{}) return;
    auto [it, inserted] = coeffs_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (it->second == R{}) coeffs_.erase(it);
    }
  }

  static AlgebraElement basis(const Group& group, const GroupElement& g, R c = R{1}) {
    AlgebraElement e(group);
    e.add(g, c);
    return e;
  }

 private:
  Group group_;
  CoeffMap coeffs_;
};

// (x*y)(g) = sum over ab = g of x(a) y(b).
template <class R>
AlgebraElement<R> convolve(const AlgebraElement<R>& x, const AlgebraElement<R>& y) {
  if (!(x.group() == y.group())) throw domain_error("convolve: operands over different groups");
  const Group& g = x.group();
  AlgebraElement<R> out(g);
  for (const auto& [a, xa] : x.coeffs())
    for (const auto& [b, yb] : y.coeffs()) out.add(g.mul_unchecked(a, b), xa * yb);
  return out;
}

// A -> sum A_{s,t} s^-1 t and B -> sum B_{t,u} t^-1 u, rows and columns
// bound to the stored subset order. Injective whenever the triple has the
// TPP, so the support size equals the number of nonzero entries.
template <class R>
std::pair<AlgebraElement<R>, AlgebraElement<R>> embed_pair(const Matrix<R>& a, const Matrix<R>& b,
                                                           const IndexTriple& t) {
  if (a.rows() != t.s().size() || a.cols() != t.t().size() || b.rows() != t.t().size() ||
      b.cols() != t.u().size())
    throw domain_error("embed_pair: matrix dimensions do not match the triple");
  const Group& g = t.group();
  AlgebraElement<R> abar(g), bbar(g);
  for (std::size_t i = 0; i < t.s().size(); ++i) {
    GroupElement sinv = g.inv_unchecked(t.s()[i]);
    for (std::size_t j = 0; j < t.t().size(); ++j)
      abar.add(g.mul_unchecked(sinv, t.t()[j]), a(i, j));
  }
  for (std::size_t j = 0; j < t.t().size(); ++j) {
    GroupElement tinv = g.inv_unchecked(t.t()[j]);
    for (std::size_t k = 0; k < t.u().size(); ++k)
      bbar.add(g.mul_unchecked(tinv, t.u()[k]), b(j, k));
  }
  return {std::move(abar), std::move(bbar)};
}

// Reads the product back off the coefficients of s^-1 u.
template <class R>
Matrix<R> extract_product(const AlgebraElement<R>& z, const IndexTriple& t) {
  if (!(z.group() == t.group()))
    throw domain_error("extract_product: element and triple over different groups");
  const Group& g = t.group();
  Matrix<R> c(t.s().size(), t.u().size());
  for (std::size_t i = 0; i < t.s().size(); ++i) {
    GroupElement sinv = g.inv_unchecked(t.s()[i]);
    for (std::size_t k = 0; k < t.u().size(); ++k)
      c(i, k) = z.coeff(g.mul_unchecked(sinv, t.u()[k]));
  }
  return c;
}

enum class ConvolvePath { Naive, AbelianDft };

// Forward transform of f against the characters of a product of cyclic
// groups, indexed in enumeration order of the character tuple; and its
// inverse. Throws unsupported_error unless the group decomposes into
// cyclic factors.
std::vector<std::complex<double>> abelian_dft(const Group& group,
                                              const AlgebraElement<std::complex<double>>& f);
AlgebraElement<std::complex<double>> abelian_dft_inverse(
    const Group& group, const std::vector<std::complex<double>>& fhat);

// Convolution through the transform domain: forward both operands,
// multiply pointwise, transform back.
AlgebraElement<std::complex<double>> convolve_abelian_dft(
    const AlgebraElement<std::complex<double>>& x, const AlgebraElement<std::complex<double>>& y);

// embed -> convolve -> extract. The DFT path is available for complex
// coefficients on cyclic-product groups.
template <class R>
Matrix<R> matmul_via_group(const IndexTriple& t, const Matrix<R>& a, const Matrix<R>& b,
                           ConvolvePath path = ConvolvePath::Naive) {
  auto [abar, bbar] = embed_pair(a, b, t);
  AlgebraElement<R> z(t.group());
  if constexpr (std::is_same_v<R, std::complex<double>>) {
    z = path == ConvolvePath::AbelianDft ? convolve_abelian_dft(abar, bbar)
                                         : convolve(abar, bbar);
  } else {
    if (path != ConvolvePath::Naive)
      throw unsupported_error("transform path requires complex coefficients");
    z = convolve(abar, bbar);
  }
  return extract_product(z, t);
}

// All products of a simultaneous family from one convolution: the embeddings
// are summed, multiplied once, and each product extracted from its own
// triple's coefficients.
template <class R>
std::vector<Matrix<R>> simultaneous_matmul(const TripleFamily& fam,
                                           const std::vector<std::pair<Matrix<R>, Matrix<R>>>& pairs) {
  if (pairs.size() != fam.size())
    throw domain_error("simultaneous_matmul: one matrix pair per family member required");
  AlgebraElement<R> abar(fam.group()), bbar(fam.group());
  for (std::size_t v = 0; v < fam.size(); ++v) {
    auto [av, bv] = embed_pair(pairs[v].first, pairs[v].second, fam[v]);
    for (const auto& [g, c] : av.coeffs()) abar.add(g, c);
    for (const auto& [g, c] : bv.coeffs()) bbar.add(g, c);
  }
  AlgebraElement<R> z = convolve(abar, bbar);
  std::vector<Matrix<R>> out;
  out.reserve(fam.size());
  for (std::size_t v = 0; v < fam.size(); ++v) out.push_back(extract_product(z, fam[v]));
  return out;
}

// Block-diagonal image of the symmetric-group-on-3-letters transform:
// one 1x1 block for the trivial representation, one for the sign, one 2x2
// standard block. Sizes satisfy 1^2 + 1^2 + 2^2 = 6.
struct Sym3Blocks {
  std::complex<double> trivial{};
  std::complex<double> sign{};
  ComplexMatrix standard{2, 2};
};

Sym3Blocks sym3_dft(const AlgebraElement<std::complex<double>>& f);
AlgebraElement<std::complex<double>> sym3_dft_inverse(const Sym3Blocks& fhat);
Sym3Blocks multiply(const Sym3Blocks& a, const Sym3Blocks& b);

// The 6x6 transform matrix with rows (trivial; sign; standard 11,12,21,22)
// and columns in element enumeration order.
ComplexMatrix sym3_dft_matrix();

}  // namespace tpplab
