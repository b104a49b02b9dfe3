#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpplab/errors.hpp"

namespace tpplab {

// Canonical element encoding: a flat word of slots whose meaning is fixed by
// the group structure. Cyclic groups use one residue slot, symmetric groups
// an image array of length n (perm[i] = image of point i, 0-based), direct
// products the concatenation of their parts, and wreath products n base
// words followed by one image array. Words compare lexicographically, so
// elements are totally ordered and hashable.
using Slot = std::uint32_t;
using Word = std::vector<Slot>;

struct GroupElement {
  Word w;
  auto operator<=>(const GroupElement&) const = default;
};

struct ElementHash {
  std::size_t operator()(const GroupElement& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Slot s : e.w) {
      h ^= s;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Structural description of a finite group. Immutable; all derived data
// (word size, order, abelianness) is computed at construction.
class GroupSpec {
 public:
  enum class Kind { Cyclic, Symmetric, TriangleSymmetric, DirectProduct, Wreath };

  static GroupSpec cyclic(std::uint64_t n);
  static GroupSpec symmetric(std::uint32_t n);
  // Sym(points of the discrete triangle of side n); arithmetic is
  // Symmetric(n(n+1)/2) with points labeled by triangle_point_labels().
  static GroupSpec triangle_symmetric(std::uint32_t n);
  // Flattens nested products; a single part collapses to that part.
  static GroupSpec direct_product(std::vector<GroupSpec> parts);
  static GroupSpec power(const GroupSpec& base, std::uint32_t k);
  static GroupSpec wreath(GroupSpec base, std::uint32_t n);

  Kind kind() const noexcept { return kind_; }
  // n for Cyclic, degree for Symmetric, side for TriangleSymmetric,
  // copies of the base for Wreath.
  std::uint64_t param() const noexcept { return param_; }
  // Permutation degree for Symmetric/TriangleSymmetric kinds.
  std::uint32_t degree() const;
  const std::vector<GroupSpec>& parts() const noexcept { return parts_; }
  const GroupSpec& wreath_base() const { return parts_.front(); }

  std::size_t word_size() const noexcept { return word_size_; }
  bool order_fits() const noexcept { return order_.has_value(); }
  std::uint64_t order() const;  // throws too_large_error past 2^64
  double log_order() const noexcept { return log_order_; }
  bool abelian() const noexcept { return abelian_; }

  bool operator==(const GroupSpec& other) const;

  // Grammar: cyc(N), sym(N), tri(N), A x B, A^K, A wr sym(N); parentheses
  // and arbitrary whitespace allowed. parse() reports the offending position.
  std::string to_string() const;
  static GroupSpec parse(std::string_view text);

 private:
  GroupSpec() = default;

  Kind kind_ = Kind::Cyclic;
  std::uint64_t param_ = 1;
  std::vector<GroupSpec> parts_;
  std::size_t word_size_ = 1;
  std::optional<std::uint64_t> order_;
  double log_order_ = 0.0;
  bool abelian_ = true;

  void finalize();
};

constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// Arithmetic handle for a finite group. Cheap to copy; all operations are
// pure and safe to share across threads.
class Group {
 public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const noexcept { return *spec_; }
  std::size_t word_size() const noexcept { return spec_->word_size(); }
  bool order_fits() const noexcept { return spec_->order_fits(); }
  std::uint64_t order() const { return spec_->order(); }
  double log_order() const noexcept { return spec_->log_order(); }
  bool abelian() const noexcept { return spec_->abelian(); }

  GroupElement identity() const;
  bool contains(const GroupElement& a) const;

  // Group law; throws domain_error on elements not in the group.
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;

  // Validation-free variants for inner loops over pre-validated elements.
  GroupElement mul_unchecked(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv_unchecked(const GroupElement& a) const;

  // All elements in lexicographic word order (identity first for cyclic,
  // symmetric and their products). Throws too_large_error if order > cap.
  std::vector<GroupElement> enumerate(std::uint64_t cap = kDefaultEnumerationCap) const;

  // Canonical element text: c:3, p:[2,0,1], (a,b,...), w:([h1,...],p:[...]).
  std::string format(const GroupElement& a) const;
  GroupElement parse_element(std::string_view text) const;

  bool operator==(const Group& other) const { return *spec_ == *other.spec_; }

 private:
  std::shared_ptr<const GroupSpec> spec_;
};

// If the group is (isomorphic to) a direct product of cyclic groups with the
// element word equal to the residue tuple, returns the moduli; otherwise
// nullopt. This is the shape the character formulas are defined on.
std::optional<std::vector<std::uint64_t>> cyclic_decomposition(const GroupSpec& spec);

// Ordered set of distinct group elements. Order is significant: matrix
// rows/columns bind to subset positions.
class Subset {
 public:
  Subset(Group group, std::vector<GroupElement> elements);

  const Group& group() const noexcept { return group_; }
  const std::vector<GroupElement>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }

 private:
  Group group_;
  std::vector<GroupElement> elements_;
};

}  // namespace tpplab
