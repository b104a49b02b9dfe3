#include <doctest.h>

#include <complex>
#include <random>

#include "test_helpers.hpp"
#include "tpplab/algebra.hpp"

using namespace tpplab;
using namespace tpplab::testing;
using Complex = std::complex<double>;

namespace {

ComplexMatrix to_complex(const ExactMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = static_cast<double>(m(i, j));
  return c;
}

AlgebraElement<Complex> random_algebra_element(std::mt19937_64& rng, const Group& g,
                                               const std::vector<GroupElement>& all,
                                               std::size_t support) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  AlgebraElement<Complex> f(g);
  for (std::size_t i = 0; i < support; ++i)
    f.add(all[pick(rng)], Complex(coeff(rng), coeff(rng)));
  return f;
}

}  // namespace

TEST_CASE("convolution basics") {
  Group c2(GroupSpec::cyclic(2));
  GroupElement e = cyc_el(0), g = cyc_el(1);

  // identity basis element is neutral
  auto delta_e = AlgebraElement<std::int64_t>::basis(c2, e);
  auto x = AlgebraElement<std::int64_t>::basis(c2, g, 5);
  x.add(e, 3);
  auto conv = convolve(delta_e, x);
  CHECK(conv.coeff(e) == 3);
  CHECK(conv.coeff(g) == 5);

  // (e + g)(e - g) = 0 in the order-2 group algebra
  auto plus = AlgebraElement<std::int64_t>::basis(c2, e, 1);
  plus.add(g, 1);
  auto minus = AlgebraElement<std::int64_t>::basis(c2, e, 1);
  minus.add(g, -1);
  CHECK(convolve(plus, minus).support_size() == 0);

  // basis elements multiply by the group law
  Group s3(GroupSpec::symmetric(3));
  GroupElement a = perm(3, {{1, 2}}), b = perm(3, {{1, 3}});
  auto da = AlgebraElement<std::int64_t>::basis(s3, a);
  auto db = AlgebraElement<std::int64_t>::basis(s3, b);
  auto dab = convolve(da, db);
  CHECK(dab.support_size() == 1);
  CHECK(dab.coeff(s3.mul(a, b)) == 1);
}

TEST_CASE("convolution support bound and group mismatch") {
  std::mt19937_64 rng(4);
  Group g(GroupSpec::power(GroupSpec::cyclic(4), 2));
  auto all = g.enumerate();
  for (int trial = 0; trial < 30; ++trial) {
    auto x = random_algebra_element(rng, g, all, 5);
    auto y = random_algebra_element(rng, g, all, 4);
    CHECK(convolve(x, y).support_size() <= x.support_size() * y.support_size());
  }
  Group other(GroupSpec::cyclic(16));
  auto z = AlgebraElement<std::int64_t>::basis(other, other.identity());
  auto w = AlgebraElement<std::int64_t>::basis(Group(GroupSpec::cyclic(15)),
                                               Group(GroupSpec::cyclic(15)).identity());
  CHECK_THROWS_AS(convolve(z, w), domain_error);
}

TEST_CASE("embedding injectivity and edge cases") {
  TripleFamily fam = cyc_stpp_triples(4);
  const IndexTriple& t = fam[0];
  const Group& g = t.group();

  // zero matrices embed to the zero element
  ExactMatrix zero(3, 3);
  auto [za, zb] = embed_pair(zero, zero, t);
  CHECK(za.support_size() == 0);
  CHECK(zb.support_size() == 0);

  // 1x1 identity-only triple: the embedding is a scalar at the identity
  Subset one(g, {g.identity()});
  IndexTriple tiny(one, one, one);
  ExactMatrix m11(1, 1);
  m11(0, 0) = 7;
  auto [ta, tb] = embed_pair(m11, m11, tiny);
  CHECK(ta.coeff(g.identity()) == 7);

  // dense 2x2 block embeds with full support (the pair map is injective)
  Subset s2(g, {t.s()[0], t.s()[1]});
  Subset t2(g, {t.t()[0], t.t()[1]});
  Subset u1(g, {t.u()[0]});
  IndexTriple small(s2, t2, u1);
  std::mt19937_64 rng(8);
  ExactMatrix a = random_exact_matrix(rng, 2, 2, 1, 9);  // nonzero entries
  ExactMatrix b = random_exact_matrix(rng, 2, 1, 1, 9);
  auto [ea, eb] = embed_pair(a, b, small);
  CHECK(ea.support_size() == 4);
  CHECK(eb.support_size() == 2);

  CHECK_THROWS_AS(embed_pair(ExactMatrix(2, 2), ExactMatrix(2, 2), t), domain_error);
}

TEST_CASE("extraction recovers the product exactly") {
  std::mt19937_64 rng(17);

  // identity in, identity out
  TripleFamily fam = cyc_stpp_triples(4);
  ExactMatrix id3 = ExactMatrix::identity(3);
  CHECK(matmul_via_group(fam[0], id3, id3) == id3);

  // random integer products against the schoolbook reference
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix a = random_exact_matrix(rng, 3, 3);
    ExactMatrix b = random_exact_matrix(rng, 3, 3);
    CHECK(matmul_via_group(fam[0], a, b) == schoolbook_multiply(a, b));
  }

  // 15x15 through the order-4096 cube
  TripleFamily big = cyc_stpp_triples(16);
  ExactMatrix a = random_exact_matrix(rng, 15, 15);
  ExactMatrix b = random_exact_matrix(rng, 15, 15);
  CHECK(matmul_via_group(big[0], a, b) == schoolbook_multiply(a, b));

  // non-abelian carrier: the coordinate-fixing subgroups of the side-2
  // triangle give a 2x2 product inside an order-6 group
  IndexTriple tri = triangle_subgroup_triple(2);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix a2 = random_exact_matrix(rng, 2, 2);
    ExactMatrix b2 = random_exact_matrix(rng, 2, 2);
    CHECK(matmul_via_group(tri, a2, b2) == schoolbook_multiply(a2, b2));
  }
}

TEST_CASE("transform path agrees with the naive path") {
  std::mt19937_64 rng(23);
  for (std::uint32_t n : {4u, 8u}) {
    TripleFamily fam = cyc_stpp_triples(n);
    std::size_t dim = n - 1;
    ExactMatrix a = random_exact_matrix(rng, dim, dim);
    ExactMatrix b = random_exact_matrix(rng, dim, dim);
    ComplexMatrix ca = to_complex(a), cb = to_complex(b);
    ComplexMatrix naive = matmul_via_group(fam[0], ca, cb, ConvolvePath::Naive);
    ComplexMatrix dft = matmul_via_group(fam[0], ca, cb, ConvolvePath::AbelianDft);
    CHECK(max_abs_difference(naive, dft) < 1e-9);
    CHECK(max_abs_difference(dft, to_complex(schoolbook_multiply(a, b))) < 1e-9);
  }
}

TEST_CASE("simultaneous embedding recovers every product from one convolution") {
  std::mt19937_64 rng(29);
  TripleFamily fam = cyc_stpp_triples(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::pair<ExactMatrix, ExactMatrix>> pairs;
    pairs.emplace_back(random_exact_matrix(rng, 3, 3), random_exact_matrix(rng, 3, 3));
    pairs.emplace_back(random_exact_matrix(rng, 3, 3), random_exact_matrix(rng, 3, 3));
    auto products = simultaneous_matmul(fam, pairs);
    REQUIRE(products.size() == 2);
    CHECK(products[0] == schoolbook_multiply(pairs[0].first, pairs[0].second));
    CHECK(products[1] == schoolbook_multiply(pairs[1].first, pairs[1].second));
  }

  // zero pair stays zero, the other is untouched
  std::vector<std::pair<ExactMatrix, ExactMatrix>> pairs;
  pairs.emplace_back(ExactMatrix(3, 3), ExactMatrix(3, 3));
  ExactMatrix a = random_exact_matrix(rng, 3, 3), b = random_exact_matrix(rng, 3, 3);
  pairs.emplace_back(a, b);
  auto products = simultaneous_matmul(fam, pairs);
  CHECK(products[0] == ExactMatrix(3, 3));
  CHECK(products[1] == schoolbook_multiply(a, b));

  // singleton family reduces to the single-triple path
  TripleFamily single(fam.group(), {fam[0]});
  std::vector<std::pair<ExactMatrix, ExactMatrix>> one_pair{{a, b}};
  auto lone = simultaneous_matmul(single, one_pair);
  CHECK(lone[0] == matmul_via_group(fam[0], a, b));

  CHECK_THROWS_AS(simultaneous_matmul(fam, one_pair), domain_error);
}

TEST_CASE("abelian transform") {
  Group c2(GroupSpec::cyclic(2));

  // the identity delta transforms to the all-ones vector
  auto delta = AlgebraElement<Complex>::basis(c2, c2.identity());
  auto ones = abelian_dft(c2, delta);
  REQUIRE(ones.size() == 2);
  CHECK(std::abs(ones[0] - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(ones[1] - Complex(1, 0)) < 1e-12);

  // constant function concentrates at the trivial character
  auto flat = AlgebraElement<Complex>::basis(c2, c2.identity());
  flat.add(cyc_el(1), Complex(1, 0));
  auto hat = abelian_dft(c2, flat);
  CHECK(std::abs(hat[0] - Complex(2, 0)) < 1e-12);
  CHECK(std::abs(hat[1]) < 1e-12);

  Group s3(GroupSpec::symmetric(3));
  auto f3 = AlgebraElement<Complex>::basis(s3, s3.identity());
  CHECK_THROWS_AS(abelian_dft(s3, f3), unsupported_error);
}

TEST_CASE("abelian transform round-trip, convolution and norm identities") {
  std::mt19937_64 rng(31);
  for (GroupSpec spec : {GroupSpec::cyclic(16), GroupSpec::power(GroupSpec::cyclic(5), 2),
                         GroupSpec::power(GroupSpec::cyclic(3), 3),
                         GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(6)})}) {
    Group g(spec);
    auto all = g.enumerate();
    auto f = random_algebra_element(rng, g, all, all.size() / 2 + 1);
    auto h = random_algebra_element(rng, g, all, 4);

    auto fhat = abelian_dft(g, f);
    auto back = abelian_dft_inverse(g, fhat);
    double round_err = 0;
    for (const auto& e : all) round_err = std::max(round_err, std::abs(back.coeff(e) - f.coeff(e)));
    CHECK(round_err < 1e-9);

    // transform of a convolution is the pointwise product
    auto conv = convolve(f, h);
    auto chat = abelian_dft(g, conv);
    auto fh = abelian_dft(g, h);
    double conv_err = 0;
    for (std::size_t i = 0; i < chat.size(); ++i)
      conv_err = std::max(conv_err, std::abs(chat[i] - fhat[i] * fh[i]));
    CHECK(conv_err < 1e-9);

    // |G| sum |f|^2 = sum |fhat|^2
    double lhs = 0, rhs = 0;
    for (const auto& [e, c] : f.coeffs()) lhs += std::norm(c);
    for (const auto& c : fhat) rhs += std::norm(c);
    CHECK(std::abs(lhs * static_cast<double>(g.order()) - rhs) < 1e-6);
  }
}

TEST_CASE("degree-3 symmetric transform of deltas") {
  Group s3(GroupSpec::symmetric(3));

  Sym3Blocks id_hat = sym3_dft(AlgebraElement<Complex>::basis(s3, s3.identity()));
  CHECK(std::abs(id_hat.trivial - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(id_hat.sign - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(id_hat.standard(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(id_hat.standard(0, 1)) < 1e-12);
  CHECK(std::abs(id_hat.standard(1, 0)) < 1e-12);
  CHECK(std::abs(id_hat.standard(1, 1) - Complex(1, 0)) < 1e-12);

  Sym3Blocks t_hat = sym3_dft(AlgebraElement<Complex>::basis(s3, perm(3, {{1, 2}})));
  CHECK(std::abs(t_hat.trivial - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(t_hat.sign - Complex(-1, 0)) < 1e-12);
  CHECK(std::abs(t_hat.standard(0, 0)) < 1e-12);
  CHECK(std::abs(t_hat.standard(0, 1) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(t_hat.standard(1, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(t_hat.standard(1, 1)) < 1e-12);
}

TEST_CASE("degree-3 symmetric transform is invertible and multiplicative") {
  std::mt19937_64 rng(37);
  Group s3(GroupSpec::symmetric(3));
  auto all = s3.enumerate();
  for (int trial = 0; trial < 200; ++trial) {
    auto f = random_algebra_element(rng, s3, all, 4);
    auto h = random_algebra_element(rng, s3, all, 4);

    auto back = sym3_dft_inverse(sym3_dft(f));
    double err = 0;
    for (const auto& e : all) err = std::max(err, std::abs(back.coeff(e) - f.coeff(e)));
    CHECK(err < 1e-9);

    Sym3Blocks lhs = sym3_dft(convolve(f, h));
    Sym3Blocks rhs = multiply(sym3_dft(f), sym3_dft(h));
    CHECK(std::abs(lhs.trivial - rhs.trivial) < 1e-9);
    CHECK(std::abs(lhs.sign - rhs.sign) < 1e-9);
    CHECK(max_abs_difference(lhs.standard, rhs.standard) < 1e-9);
  }
}

TEST_CASE("transform matrix block dimensions square-sum to the order") {
  ComplexMatrix m = sym3_dft_matrix();
  CHECK(m.rows() == 6);
  CHECK(m.cols() == 6);
  // block sizes 1, 1, 2: 1 + 1 + 4 = 6
  CHECK(1 * 1 + 1 * 1 + 2 * 2 == 6);
  // every column is the transform of the corresponding delta
  Group s3(GroupSpec::symmetric(3));
  auto all = s3.enumerate();
  for (std::size_t col = 0; col < 6; ++col) {
    Sym3Blocks hat = sym3_dft(AlgebraElement<Complex>::basis(s3, all[col]));
    CHECK(std::abs(m(0, col) - hat.trivial) < 1e-12);
    CHECK(std::abs(m(1, col) - hat.sign) < 1e-12);
    CHECK(std::abs(m(2, col) - hat.standard(0, 0)) < 1e-12);
    CHECK(std::abs(m(3, col) - hat.standard(0, 1)) < 1e-12);
    CHECK(std::abs(m(4, col) - hat.standard(1, 0)) < 1e-12);
    CHECK(std::abs(m(5, col) - hat.standard(1, 1)) < 1e-12);
  }
}

TEST_CASE("float products on unit-scaled entries stay within tolerance") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  TripleFamily fam = cyc_stpp_triples(8);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexMatrix a(7, 7), b(7, 7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        a(i, j) = Complex(unit(rng), unit(rng));
        b(i, j) = Complex(unit(rng), unit(rng));
      }
    ComplexMatrix via_group = matmul_via_group(fam[0], a, b);
    CHECK(max_abs_difference(via_group, schoolbook_multiply(a, b)) < 1e-9);
  }
}

TEST_CASE("exact products across several carriers") {
  std::mt19937_64 rng(41);
  struct Case {
    IndexTriple triple;
    std::size_t dim;
  };
  std::vector<Case> cases;
  cases.push_back({cyc_stpp_triples(4)[0], 3});
  cases.push_back({cyc_stpp_triples(8)[0], 7});
  cases.push_back({cyc_stpp_triples(16)[1], 15});
  cases.push_back({triangle_subgroup_triple(2), 2});
  int total = 0;
  for (const Case& c : cases) {
    for (int trial = 0; trial < 26; ++trial) {
      ExactMatrix a = random_exact_matrix(rng, c.dim, c.dim);
      ExactMatrix b = random_exact_matrix(rng, c.dim, c.dim);
      CHECK(matmul_via_group(c.triple, a, b) == schoolbook_multiply(a, b));
      ++total;
    }
  }
  CHECK(total >= 100);
}
