#include "tpplab/algebra.hpp"

#include <cmath>
#include <numbers>

namespace tpplab {
namespace {

using Complex = std::complex<double>;

struct CyclicShape {
  std::vector<std::uint64_t> moduli;
  std::uint64_t order;
  // roots[j][r] = exp(2*pi*i * r / n_j)
  std::vector<std::vector<Complex>> roots;
};

CyclicShape cyclic_shape(const Group& group) {
  auto moduli = cyclic_decomposition(group.spec());
  if (!moduli)
    throw unsupported_error("transform requires a direct product of cyclic groups, got " +
                            group.spec().to_string());
  CyclicShape shape;
  shape.moduli = std::move(*moduli);
  shape.order = group.order();
  shape.roots.reserve(shape.moduli.size());
  for (std::uint64_t n : shape.moduli) {
    std::vector<Complex> r(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      r[k] = Complex(std::cos(ang), std::sin(ang));
    }
    shape.roots.push_back(std::move(r));
  }
  return shape;
}

// Mixed-radix decode; index order matches element enumeration (first factor
// most significant).
Word word_of_index(const CyclicShape& shape, std::uint64_t idx) {
  Word w(shape.moduli.size());
  for (std::size_t j = shape.moduli.size(); j-- > 0;) {
    w[j] = static_cast<Slot>(idx % shape.moduli[j]);
    idx /= shape.moduli[j];
  }
  return w;
}

// chi_k(g) = prod_j roots[j][(k_j * g_j) mod n_j]
Complex character_value(const CyclicShape& shape, const Word& k, const Word& g) {
  Complex v{1.0, 0.0};
  for (std::size_t j = 0; j < shape.moduli.size(); ++j)
    v *= shape.roots[j][(static_cast<std::uint64_t>(k[j]) * g[j]) % shape.moduli[j]];
  return v;
}

}  // namespace

std::vector<Complex> abelian_dft(const Group& group, const AlgebraElement<Complex>& f) {
  if (!(group == f.group())) throw domain_error("abelian_dft: element over a different group");
  if (!group.abelian()) throw unsupported_error("abelian_dft requires an abelian group");
  CyclicShape shape = cyclic_shape(group);
  std::vector<Complex> fhat(shape.order, Complex{0.0, 0.0});
  for (std::uint64_t ki = 0; ki < shape.order; ++ki) {
    Word k = word_of_index(shape, ki);
    Complex acc{0.0, 0.0};
    for (const auto& [g, c] : f.coeffs()) acc += c * character_value(shape, k, g.w);
    fhat[ki] = acc;
  }
  return fhat;
}

AlgebraElement<Complex> abelian_dft_inverse(const Group& group, const std::vector<Complex>& fhat) {
  if (!group.abelian()) throw unsupported_error("abelian_dft requires an abelian group");
  CyclicShape shape = cyclic_shape(group);
  if (fhat.size() != shape.order)
    throw domain_error("abelian_dft_inverse: coefficient count does not match the group order");
  AlgebraElement<Complex> f(group);
  const double scale = 1.0 / static_cast<double>(shape.order);
  for (std::uint64_t gi = 0; gi < shape.order; ++gi) {
    Word g = word_of_index(shape, gi);
    Complex acc{0.0, 0.0};
    for (std::uint64_t ki = 0; ki < shape.order; ++ki)
      acc += fhat[ki] * std::conj(character_value(shape, word_of_index(shape, ki), g));
    f.add(GroupElement{g}, acc * scale);
  }
  return f;
}

AlgebraElement<Complex> convolve_abelian_dft(const AlgebraElement<Complex>& x,
                                             const AlgebraElement<Complex>& y) {
  if (!(x.group() == y.group()))
    throw domain_error("convolve_abelian_dft: operands over different groups");
  std::vector<Complex> xf = abelian_dft(x.group(), x);
  std::vector<Complex> yf = abelian_dft(y.group(), y);
  for (std::size_t i = 0; i < xf.size(); ++i) xf[i] *= yf[i];
  return abelian_dft_inverse(x.group(), xf);
}

// ---- transform on the six permutations of three letters --------------------

namespace {

int permutation_sign(const Word& w) {
  std::uint32_t n = static_cast<std::uint32_t>(w.size());
  std::uint64_t seen = 0;
  int sign = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    if ((seen >> i) & 1u) continue;
    std::uint32_t j = i, len = 0;
    while (!((seen >> j) & 1u)) {
      seen |= std::uint64_t{1} << j;
      j = w[j];
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

// Standard two-dimensional representation, tabulated on image arrays.
// Multiplicative for the left-action composition (ab)(x) = a(b(x)).
struct StandardRep {
  Word perm;
  double m[2][2];
};

const StandardRep kStandardRep[6] = {
    {{0, 1, 2}, {{1, 0}, {0, 1}}},    // identity
    {{1, 0, 2}, {{0, 1}, {1, 0}}},    // swap first two letters
    {{2, 1, 0}, {{-1, 0}, {-1, 1}}},  // swap outer letters
    {{0, 2, 1}, {{1, -1}, {0, -1}}},  // swap last two letters
    {{1, 2, 0}, {{0, -1}, {1, -1}}},  // forward 3-cycle
    {{2, 0, 1}, {{-1, 1}, {-1, 0}}},  // backward 3-cycle
};

const StandardRep& standard_rep(const Word& w) {
  for (const StandardRep& r : kStandardRep)
    if (r.perm == w) return r;
  throw domain_error("not an element of the degree-3 symmetric group");
}

Group sym3_group() { return Group(GroupSpec::symmetric(3)); }

void require_sym3(const Group& g) {
  if (!(g.spec().kind() == GroupSpec::Kind::Symmetric && g.spec().param() == 3))
    throw domain_error("sym3_dft requires the symmetric group on 3 letters");
}

}  // namespace

Sym3Blocks sym3_dft(const AlgebraElement<Complex>& f) {
  require_sym3(f.group());
  Sym3Blocks out;
  for (const auto& [g, c] : f.coeffs()) {
    const StandardRep& rep = standard_rep(g.w);
    out.trivial += c;
    out.sign += c * static_cast<double>(permutation_sign(g.w));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.standard(i, j) += c * rep.m[i][j];
  }
  return out;
}

AlgebraElement<Complex> sym3_dft_inverse(const Sym3Blocks& fhat) {
  // f(g) = |G|^-1 sum_rho d_rho Tr[fhat(rho) rho(g^-1)]
  Group g3 = sym3_group();
  AlgebraElement<Complex> f(g3);
  for (const StandardRep& r : kStandardRep) {
    GroupElement g{r.perm};
    GroupElement ginv = g3.inv_unchecked(g);
    const StandardRep& rinv = standard_rep(ginv.w);
    Complex trace{0.0, 0.0};
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) trace += fhat.standard(i, k) * rinv.m[k][i];
    Complex val = fhat.trivial + fhat.sign * static_cast<double>(permutation_sign(ginv.w)) +
                  2.0 * trace;
    f.add(g, val / 6.0);
  }
  return f;
}

Sym3Blocks multiply(const Sym3Blocks& a, const Sym3Blocks& b) {
  Sym3Blocks out;
  out.trivial = a.trivial * b.trivial;
  out.sign = a.sign * b.sign;
  out.standard = schoolbook_multiply(a.standard, b.standard);
  return out;
}

ComplexMatrix sym3_dft_matrix() {
  Group g3 = sym3_group();
  std::vector<GroupElement> elems = g3.enumerate();
  ComplexMatrix m(6, 6);
  for (std::size_t col = 0; col < 6; ++col) {
    const StandardRep& rep = standard_rep(elems[col].w);
    m(0, col) = 1.0;
    m(1, col) = static_cast<double>(permutation_sign(elems[col].w));
    m(2, col) = rep.m[0][0];
    m(3, col) = rep.m[0][1];
    m(4, col) = rep.m[1][0];
    m(5, col) = rep.m[1][1];
  }
  return m;
}

}  // namespace tpplab
