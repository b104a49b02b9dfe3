#include "tpplab/chars.hpp"

#include <cmath>
#include <functional>

namespace tpplab {
namespace {

constexpr std::uint32_t kMaxSymmetricDegree = 20;  // 20! still fits in 64 bits

std::uint64_t factorial_u64(std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t k = 2; k <= n; ++k) r *= k;
  return r;
}

// Partitions of n in descending part order, lexicographically descending.
void for_each_partition(std::uint32_t n, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  std::vector<std::uint32_t> parts;
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t left, std::uint32_t maxpart) {
    if (left == 0) {
      fn(parts);
      return;
    }
    for (std::uint32_t p = std::min(left, maxpart); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

std::uint64_t hook_length_degree(std::uint32_t n, const std::vector<std::uint32_t>& lambda) {
  // conjugate partition gives column lengths
  std::vector<std::uint32_t> conj(lambda.empty() ? 0 : lambda[0], 0);
  for (std::uint32_t len : lambda)
    for (std::uint32_t j = 0; j < len; ++j) ++conj[j];
  unsigned __int128 hooks = 1;
  for (std::uint32_t i = 0; i < lambda.size(); ++i)
    for (std::uint32_t j = 0; j < lambda[i]; ++j) {
      std::uint64_t hook = (lambda[i] - j) + (conj[j] - i) - 1;
      hooks *= hook;
    }
  return static_cast<std::uint64_t>(factorial_u64(n) / hooks);
}

void accumulate(std::map<std::uint64_t, std::uint64_t>& m, std::uint64_t degree,
                std::uint64_t count) {
  m[degree] += count;
}

}  // namespace

DegreeSet::DegreeSet(std::uint64_t order, std::map<std::uint64_t, std::uint64_t> multiplicities)
    : order_(order), mult_(std::move(multiplicities)) {
  unsigned __int128 sum = 0;
  for (const auto& [d, m] : mult_) {
    if (d == 0 || m == 0) throw domain_error("degree set entries must be positive");
    sum += static_cast<unsigned __int128>(d) * d * m;
  }
  if (sum != order_) throw domain_error("degree squares do not sum to the group order");
}

std::uint64_t DegreeSet::max_degree() const { return mult_.rbegin()->first; }

std::uint64_t DegreeSet::class_number() const {
  std::uint64_t c = 0;
  for (const auto& [d, m] : mult_) c += m;
  return c;
}

double DegreeSet::power_sum(double r) const {
  if (r < 0) throw domain_error("degree power sum requires r >= 0");
  double s = 0.0;
  for (const auto& [d, m] : mult_)
    s += static_cast<double>(m) * std::pow(static_cast<double>(d), r);
  return s;
}

std::vector<std::uint64_t> symmetric_group_degrees(std::uint32_t degree) {
  if (degree < 1 || degree > kMaxSymmetricDegree)
    throw unsupported_error("symmetric group degrees supported for degree 1..20");
  std::vector<std::uint64_t> out;
  for_each_partition(degree, [&](const std::vector<std::uint32_t>& lambda) {
    out.push_back(hook_length_degree(degree, lambda));
  });
  return out;
}

DegreeSet degree_set(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupSpec::Kind::Cyclic:
      return DegreeSet(spec.order(), {{1, spec.order()}});
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric: {
      std::map<std::uint64_t, std::uint64_t> m;
      for (std::uint64_t d : symmetric_group_degrees(spec.degree())) accumulate(m, d, 1);
      return DegreeSet(spec.order(), std::move(m));
    }
    case GroupSpec::Kind::DirectProduct: {
      std::map<std::uint64_t, std::uint64_t> acc{{1, 1}};
      for (const GroupSpec& part : spec.parts()) {
        DegreeSet ds = degree_set(part);
        std::map<std::uint64_t, std::uint64_t> next;
        for (const auto& [d1, m1] : acc)
          for (const auto& [d2, m2] : ds.multiplicities()) accumulate(next, d1 * d2, m1 * m2);
        acc = std::move(next);
      }
      return DegreeSet(spec.order(), std::move(acc));
    }
    case GroupSpec::Kind::Wreath:
      throw unsupported_error(
          "wreath-product degree sets are not expanded; use wreath_domega_bound");
  }
  throw unsupported_error("unsupported group family");
}

double d_r_sum(const DegreeSet& ds, double r) { return ds.power_sum(r); }

std::uint64_t d_prime(const DegreeSet& ds) { return ds.max_degree(); }

double wreath_domega_bound(std::uint64_t h_order, std::uint32_t n, double omega) {
  double fact = static_cast<double>(factorial_u64(n));
  return std::pow(fact, omega - 1.0) * std::pow(static_cast<double>(h_order), n);
}

}  // namespace tpplab
