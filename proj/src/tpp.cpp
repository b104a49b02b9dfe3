#include "tpplab/tpp.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <thread>
#include <tuple>
#include <unordered_set>

namespace tpplab {
namespace {

using ElementSet = std::unordered_set<GroupElement, ElementHash>;

ElementSet to_set(const std::vector<GroupElement>& v) {
  ElementSet s;
  s.reserve(v.size() * 2);
  for (const auto& e : v) s.insert(e);
  return s;
}

std::vector<GroupElement> sorted_unique(std::vector<GroupElement> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<GroupElement> quotient_elements(const Group& g, const std::vector<GroupElement>& x,
                                            const std::vector<GroupElement>& y) {
  std::vector<GroupElement> out;
  out.reserve(x.size() * y.size());
  for (const GroupElement& b : y) {
    GroupElement binv = g.inv_unchecked(b);
    for (const GroupElement& a : x) out.push_back(g.mul_unchecked(a, binv));
  }
  return sorted_unique(std::move(out));
}

// Scans q1 in A, q2 in B for a solution q1 q2 q3 = 1 with q3 in C.
// skip_all_identity drops the trivial all-identity solution (single-triple
// checks); cross-index checks treat any solution as a violation.
std::optional<TppWitness> find_triple_solution(const Group& g,
                                               const std::vector<GroupElement>& a,
                                               const std::vector<GroupElement>& b,
                                               const ElementSet& c, bool skip_all_identity) {
  const GroupElement id = g.identity();
  for (const GroupElement& q1 : a) {
    for (const GroupElement& q2 : b) {
      GroupElement q3 = g.inv_unchecked(g.mul_unchecked(q1, q2));
      if (!c.count(q3)) continue;
      if (skip_all_identity && q1 == id && q2 == id) continue;
      return TppWitness{q1, q2, q3};
    }
  }
  return std::nullopt;
}

void require_same_group(const Group& a, const Group& b, const char* what) {
  if (!(a == b)) throw domain_error(std::string(what) + ": operands live in different groups");
}

}  // namespace

// ---- Tensor / IndexTriple / TripleFamily ----------------------------------

std::uint64_t Tensor::size() const {
  std::uint64_t nm, nmp;
  if (__builtin_mul_overflow(n, m, &nm) || __builtin_mul_overflow(nm, p, &nmp))
    throw too_large_error("tensor size exceeds 64-bit range");
  return nmp;
}

double Tensor::mean_size() const { return std::cbrt(static_cast<double>(size())); }

IndexTriple::IndexTriple(Subset s, Subset t, Subset u)
    : s_(std::move(s)), t_(std::move(t)), u_(std::move(u)) {
  require_same_group(s_.group(), t_.group(), "index triple");
  require_same_group(s_.group(), u_.group(), "index triple");
  if (s_.size() == 0 || t_.size() == 0 || u_.size() == 0)
    throw domain_error("index triple components must be nonempty");
}

Tensor IndexTriple::tensor() const { return Tensor{s_.size(), t_.size(), u_.size()}; }

TripleFamily::TripleFamily(Group group, std::vector<IndexTriple> triples)
    : group_(std::move(group)), triples_(std::move(triples)) {
  if (triples_.empty()) throw domain_error("triple family must be nonempty");
  for (const IndexTriple& t : triples_) require_same_group(group_, t.group(), "triple family");
}

// ---- quotient sets ---------------------------------------------------------

Subset quotient_set(const Subset& s) {
  if (s.size() == 0) throw domain_error("quotient set of an empty subset");
  return Subset(s.group(), quotient_elements(s.group(), s.elements(), s.elements()));
}

Subset pair_quotient_set(const Subset& x, const Subset& y) {
  require_same_group(x.group(), y.group(), "pair quotient set");
  return Subset(x.group(), quotient_elements(x.group(), x.elements(), y.elements()));
}

// ---- property checks -------------------------------------------------------

TppResult check_tpp(const IndexTriple& t) {
  const Group& g = t.group();
  auto qs = quotient_elements(g, t.s().elements(), t.s().elements());
  auto qt = quotient_elements(g, t.t().elements(), t.t().elements());
  auto qu = quotient_elements(g, t.u().elements(), t.u().elements());
  ElementSet qu_set = to_set(qu);
  if (auto w = find_triple_solution(g, qs, qt, qu_set, /*skip_all_identity=*/true))
    return TppResult{false, std::move(w)};
  return TppResult{true, std::nullopt};
}

bool check_tpp_abelian_oracle(const IndexTriple& t) {
  const Group& g = t.group();
  if (!g.abelian())
    throw unsupported_error("abelian triple-product oracle requires an abelian group");
  ElementSet seen;
  seen.reserve(t.s().size() * t.t().size() * t.u().size() * 2);
  for (const GroupElement& s : t.s().elements())
    for (const GroupElement& x : t.t().elements()) {
      GroupElement sx = g.mul_unchecked(s, x);
      for (const GroupElement& u : t.u().elements())
        if (!seen.insert(g.mul_unchecked(sx, u)).second) return false;
    }
  return true;
}

TppResult check_stpp(const TripleFamily& fam) {
  const Group& g = fam.group();
  for (std::size_t i = 0; i < fam.size(); ++i) {
    TppResult r = check_tpp(fam[i]);
    if (!r.ok) {
      r.witness->indices = {i, i, i};
      return r;
    }
  }
  const std::size_t r = fam.size();
  // Cache pair quotients; diagonal entries are the plain quotient sets.
  std::vector<std::vector<GroupElement>> qs(r * r), qt(r * r), qu(r * r);
  std::vector<ElementSet> qu_set(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      qs[i * r + j] = quotient_elements(g, fam[i].s().elements(), fam[j].s().elements());
      qt[i * r + j] = quotient_elements(g, fam[i].t().elements(), fam[j].t().elements());
      qu[i * r + j] = quotient_elements(g, fam[i].u().elements(), fam[j].u().elements());
      qu_set[i * r + j] = to_set(qu[i * r + j]);
    }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        if (i == j && j == k) continue;  // delegated to per-triple checks
        if (auto w = find_triple_solution(g, qs[i * r + j], qt[j * r + k], qu_set[k * r + i],
                                          /*skip_all_identity=*/false)) {
          w->indices = {i, j, k};
          return TppResult{false, std::move(w)};
        }
      }
  return TppResult{true, std::nullopt};
}

// ---- constructions ---------------------------------------------------------

IndexTriple permute_triple(const IndexTriple& t, const std::array<int, 3>& perm) {
  std::array<bool, 3> seen{false, false, false};
  for (int i : perm) {
    if (i < 0 || i > 2 || seen[i]) throw domain_error("permute_triple: not a permutation of {0,1,2}");
    seen[i] = true;
  }
  const Subset* comps[3] = {&t.s(), &t.t(), &t.u()};
  return IndexTriple(*comps[perm[0]], *comps[perm[1]], *comps[perm[2]]);
}

namespace {
Subset product_subset(const Group& prod, const Subset& a, const Subset& b) {
  std::vector<GroupElement> out;
  out.reserve(a.size() * b.size());
  for (const GroupElement& x : a.elements())
    for (const GroupElement& y : b.elements()) {
      GroupElement e;
      e.w.reserve(x.w.size() + y.w.size());
      e.w.insert(e.w.end(), x.w.begin(), x.w.end());
      e.w.insert(e.w.end(), y.w.begin(), y.w.end());
      out.push_back(std::move(e));
    }
  return Subset(prod, std::move(out));
}
}  // namespace

IndexTriple product_triple(const IndexTriple& a, const IndexTriple& b) {
  Group prod(GroupSpec::direct_product({a.group().spec(), b.group().spec()}));
  return IndexTriple(product_subset(prod, a.s(), b.s()), product_subset(prod, a.t(), b.t()),
                     product_subset(prod, a.u(), b.u()));
}

TripleFamily product_family(const TripleFamily& a, const TripleFamily& b) {
  Group prod(GroupSpec::direct_product({a.group().spec(), b.group().spec()}));
  std::vector<IndexTriple> triples;
  triples.reserve(a.size() * b.size());
  for (const IndexTriple& x : a.triples())
    for (const IndexTriple& y : b.triples()) triples.push_back(product_triple(x, y));
  return TripleFamily(std::move(prod), std::move(triples));
}

namespace {
// { (h_1..h_n, sigma) : h_i in pick_i, sigma in Sym_n }, odometer over the
// base components (first component most significant), permutations innermost;
// this is ascending word order.
Subset wreath_component(const Group& wg, const std::vector<const Subset*>& picks,
                        const std::vector<GroupElement>& perms) {
  const std::size_t n = picks.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<GroupElement> out;
  std::size_t total = perms.size();
  for (const Subset* p : picks) total *= p->size();
  out.reserve(total);
  while (true) {
    Word base;
    for (std::size_t i = 0; i < n; ++i) {
      const Word& w = picks[i]->elements()[idx[i]].w;
      base.insert(base.end(), w.begin(), w.end());
    }
    for (const GroupElement& sigma : perms) {
      GroupElement e;
      e.w.reserve(base.size() + n);
      e.w = base;
      e.w.insert(e.w.end(), sigma.w.begin(), sigma.w.end());
      out.push_back(std::move(e));
    }
    std::size_t i = n;
    while (i-- > 0) {
      if (++idx[i] < picks[i]->size()) break;
      idx[i] = 0;
      if (i == 0) {
        return Subset(wg, std::move(out));
      }
    }
  }
}
}  // namespace

IndexTriple wreath_triple(const TripleFamily& fam) {
  const std::size_t n = fam.size();
  Group wg(GroupSpec::wreath(fam.group().spec(), static_cast<std::uint32_t>(n)));
  Group sym(GroupSpec::symmetric(static_cast<std::uint32_t>(n)));
  std::vector<GroupElement> perms = sym.enumerate();
  std::vector<const Subset*> ss, ts, us;
  for (const IndexTriple& t : fam.triples()) {
    ss.push_back(&t.s());
    ts.push_back(&t.t());
    us.push_back(&t.u());
  }
  return IndexTriple(wreath_component(wg, ss, perms), wreath_component(wg, ts, perms),
                     wreath_component(wg, us, perms));
}

TripleFamily cyc_stpp_triples(std::uint32_t n) {
  if (n < 2) throw invalid_spec_error("cyc_stpp_triples requires n >= 2");
  Group g(GroupSpec::power(GroupSpec::cyclic(n), 3));
  auto axis = [&](int coord) {
    std::vector<GroupElement> out;
    out.reserve(n - 1);
    for (std::uint32_t a = 1; a < n; ++a) {
      GroupElement e{Word{0, 0, 0}};
      e.w[coord] = a;
      out.push_back(std::move(e));
    }
    return Subset(g, std::move(out));
  };
  std::vector<IndexTriple> triples;
  triples.emplace_back(axis(0), axis(1), axis(2));
  triples.emplace_back(axis(1), axis(2), axis(0));
  return TripleFamily(g, std::move(triples));
}

std::vector<std::array<std::uint32_t, 3>> triangle_set(std::uint32_t n) {
  if (n < 1) throw invalid_spec_error("triangle_set requires n >= 1");
  std::vector<std::array<std::uint32_t, 3>> pts;
  pts.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (std::uint32_t x1 = n; x1-- > 0;)
    for (std::uint32_t x2 = n - x1; x2-- > 0;) pts.push_back({x1, x2, n - 1 - x1 - x2});
  return pts;
}

IndexTriple triangle_subgroup_triple(std::uint32_t n) {
  Group g(GroupSpec::triangle_symmetric(n));
  const auto pts = triangle_set(n);
  const std::uint32_t m = static_cast<std::uint32_t>(pts.size());

  auto fixing_subgroup = [&](int coord) {
    // Point indices grouped by the value of the fixed coordinate; the
    // subgroup is the direct product of the within-block symmetric groups.
    std::vector<std::vector<std::uint32_t>> blocks(n);
    for (std::uint32_t i = 0; i < m; ++i) blocks[pts[i][coord]].push_back(i);
    std::vector<GroupElement> elems;
    std::vector<std::vector<std::uint32_t>> arrangement;
    arrangement.reserve(n);
    for (const auto& b : blocks) arrangement.push_back(b);
    while (true) {
      GroupElement e{Word(m)};
      for (std::uint32_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < blocks[k].size(); ++j) e.w[blocks[k][j]] = arrangement[k][j];
      elems.push_back(std::move(e));
      std::uint32_t k = n;
      bool advanced = false;
      while (k-- > 0) {
        if (std::next_permutation(arrangement[k].begin(), arrangement[k].end())) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    return Subset(g, std::move(elems));
  };

  return IndexTriple(fixing_subgroup(0), fixing_subgroup(1), fixing_subgroup(2));
}

// ---- search ----------------------------------------------------------------

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

int worker_limit() {
  if (const char* env = std::getenv("TPPLAB_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct Candidate {
  std::vector<GroupElement> s, t, u;
  std::uint64_t nmp() const {
    return static_cast<std::uint64_t>(s.size()) * t.size() * u.size();
  }
};

// Deterministic preference: bigger tensor first, canonical encoding as the
// tie-break so merges are order-independent.
bool better(const Candidate& a, const Candidate& b) {
  if (a.nmp() != b.nmp()) return a.nmp() > b.nmp();
  auto key = [](const Candidate& c) { return std::tie(c.s, c.t, c.u); };
  return key(a) < key(b);
}

bool candidate_tpp(const Group& g, const Candidate& c) {
  return check_tpp(IndexTriple(Subset(g, c.s), Subset(g, c.t), Subset(g, c.u))).ok;
}

Candidate baseline(const Group& g, const std::vector<GroupElement>& all) {
  return Candidate{all, {g.identity()}, {g.identity()}};
}

Candidate grow_unit(const Group& g, const std::vector<GroupElement>& all, std::uint64_t iterations,
                    std::uint64_t unit_seed) {
  std::mt19937_64 rng(unit_seed);
  const GroupElement id = g.identity();
  Candidate cur{{id}, {id}, {id}};
  Candidate best = cur;
  for (std::uint64_t it = 0; it < iterations; ++it) {
    std::vector<GroupElement>* comp[3] = {&cur.s, &cur.t, &cur.u};
    std::size_t c = rng() % 3;
    // Occasionally shed a non-identity element to escape a stuck state.
    if (comp[c]->size() > 1 && rng() % 8 == 0) {
      std::size_t at = 1 + rng() % (comp[c]->size() - 1);
      comp[c]->erase(comp[c]->begin() + static_cast<std::ptrdiff_t>(at));
      continue;
    }
    const GroupElement& pick = all[rng() % all.size()];
    if (std::find(comp[c]->begin(), comp[c]->end(), pick) != comp[c]->end()) continue;
    comp[c]->push_back(pick);
    if (!candidate_tpp(g, cur)) {
      comp[c]->pop_back();  // greedy repair: drop the offender
      continue;
    }
    if (better(cur, best)) best = cur;
  }
  return best;
}

constexpr std::uint64_t kExhaustiveOrderLimit = 12;
constexpr std::size_t kExhaustiveSubsetLimit = 4;

Candidate exhaustive_best(const Group& g, const std::vector<GroupElement>& all) {
  // TPP status and the tensor are invariant under right translation, so it
  // suffices to scan subsets containing the identity.
  const std::uint32_t n = static_cast<std::uint32_t>(all.size());
  const std::size_t id_at = static_cast<std::size_t>(
      std::find(all.begin(), all.end(), g.identity()) - all.begin());
  std::vector<std::vector<GroupElement>> subsets;
  std::vector<std::uint32_t> stack;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
    std::vector<GroupElement> v;
    v.push_back(all[id_at]);
    for (std::uint32_t i : stack) v.push_back(all[i]);
    subsets.push_back(std::move(v));
    if (stack.size() + 1 >= kExhaustiveSubsetLimit) return;
    for (std::uint32_t i = from; i < n; ++i) {
      if (i == id_at) continue;
      stack.push_back(i);
      rec(i + 1);
      stack.pop_back();
    }
  };
  rec(0);
  std::sort(subsets.begin(), subsets.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });

  Candidate best = baseline(g, all);
  for (const auto& s : subsets) {
    if (s.size() * subsets.front().size() * subsets.front().size() <= best.nmp()) break;
    for (const auto& t : subsets) {
      if (s.size() * t.size() * subsets.front().size() <= best.nmp()) break;
      for (const auto& u : subsets) {
        if (s.size() * t.size() * u.size() <= best.nmp()) break;
        Candidate c{s, t, u};
        if (candidate_tpp(g, c) && better(c, best)) best = c;
      }
    }
  }
  return best;
}

}  // namespace

IndexTriple search_triples(const Group& group, const SearchOptions& options) {
  if (options.budget == 0) throw invalid_spec_error("search budget must be positive");
  std::vector<GroupElement> all = group.enumerate(options.enumeration_cap);

  Candidate best = baseline(group, all);
  if (group.order() <= kExhaustiveOrderLimit) {
    Candidate ex = exhaustive_best(group, all);
    if (better(ex, best)) best = ex;
  } else {
    constexpr std::uint64_t kUnits = 8;
    std::uint64_t per_unit = std::max<std::uint64_t>(1, options.budget / kUnits);
    int workers = std::min<int>(worker_limit(), kUnits);
    std::vector<Candidate> results(kUnits);
    std::atomic<std::uint64_t> next_unit{0};
    auto run = [&]() {
      for (std::uint64_t u = next_unit.fetch_add(1); u < kUnits; u = next_unit.fetch_add(1))
        results[u] = grow_unit(group, all, per_unit, splitmix64(options.seed ^ (u + 1)));
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
    for (const Candidate& c : results)
      if (better(c, best)) best = c;
  }
  return IndexTriple(Subset(group, best.s), Subset(group, best.t), Subset(group, best.u));
}

}  // namespace tpplab
