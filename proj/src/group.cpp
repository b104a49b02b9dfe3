#include "tpplab/group.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_set>

namespace tpplab {
namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    auto m = checked_mul(r, base);
    if (!m) return std::nullopt;
    r = *m;
  }
  return r;
}

std::optional<std::uint64_t> checked_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t k = 2; k <= n; ++k) {
    auto m = checked_mul(r, k);
    if (!m) return std::nullopt;
    r = *m;
  }
  return r;
}

double log_factorial_small(std::uint64_t n) {
  double s = 0.0;
  for (std::uint64_t k = 2; k <= n; ++k) s += std::log(static_cast<double>(k));
  return s;
}

// ---- element arithmetic over raw slot ranges ---------------------------

void identity_rec(const GroupSpec& s, Slot* out) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic:
      out[0] = 0;
      return;
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric:
      for (std::uint32_t i = 0; i < s.degree(); ++i) out[i] = i;
      return;
    case GroupSpec::Kind::DirectProduct: {
      std::size_t off = 0;
      for (const GroupSpec& p : s.parts()) {
        identity_rec(p, out + off);
        off += p.word_size();
      }
      return;
    }
    case GroupSpec::Kind::Wreath: {
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      for (std::uint32_t i = 0; i < n; ++i) identity_rec(base, out + i * bw);
      for (std::uint32_t i = 0; i < n; ++i) out[n * bw + i] = i;
      return;
    }
  }
}

bool valid_image_array(const Slot* a, std::uint32_t n) {
  if (n <= 64) {
    std::uint64_t seen = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (a[i] >= n || (seen >> a[i]) & 1u) return false;
      seen |= std::uint64_t{1} << a[i];
    }
    return true;
  }
  std::vector<bool> hit(n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] >= n || hit[a[i]]) return false;
    hit[a[i]] = true;
  }
  return true;
}

bool valid_rec(const GroupSpec& s, const Slot* a) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic:
      return a[0] < s.param();
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric:
      return valid_image_array(a, s.degree());
    case GroupSpec::Kind::DirectProduct: {
      std::size_t off = 0;
      for (const GroupSpec& p : s.parts()) {
        if (!valid_rec(p, a + off)) return false;
        off += p.word_size();
      }
      return true;
    }
    case GroupSpec::Kind::Wreath: {
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      for (std::uint32_t i = 0; i < n; ++i)
        if (!valid_rec(base, a + i * bw)) return false;
      return valid_image_array(a + n * bw, n);
    }
  }
  return false;
}

// Permutations act on the left: (mu nu)(x) = mu(nu(x)), so the image array
// of a product is out[i] = a[b[i]].
void mul_rec(const GroupSpec& s, const Slot* a, const Slot* b, Slot* out) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic: {
      const std::uint64_t n = s.param();
      out[0] = static_cast<Slot>((static_cast<std::uint64_t>(a[0]) + b[0]) % n);
      return;
    }
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric: {
      const std::uint32_t n = s.degree();
      for (std::uint32_t i = 0; i < n; ++i) out[i] = a[b[i]];
      return;
    }
    case GroupSpec::Kind::DirectProduct: {
      std::size_t off = 0;
      for (const GroupSpec& p : s.parts()) {
        mul_rec(p, a + off, b + off, out + off);
        off += p.word_size();
      }
      return;
    }
    case GroupSpec::Kind::Wreath: {
      // (h mu)(h' mu') = (h . h'^{mu^-1})(mu mu'): base slot i picks up the
      // partner's component at mu^-1(i).
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      const Slot* amu = a + n * bw;
      const Slot* bmu = b + n * bw;
      std::vector<Slot> mu_inv(n);
      for (std::uint32_t i = 0; i < n; ++i) mu_inv[amu[i]] = i;
      for (std::uint32_t i = 0; i < n; ++i)
        mul_rec(base, a + i * bw, b + mu_inv[i] * bw, out + i * bw);
      for (std::uint32_t i = 0; i < n; ++i) out[n * bw + i] = amu[bmu[i]];
      return;
    }
  }
}

void inv_rec(const GroupSpec& s, const Slot* a, Slot* out) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic: {
      const std::uint64_t n = s.param();
      out[0] = static_cast<Slot>((n - a[0]) % n);
      return;
    }
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric: {
      const std::uint32_t n = s.degree();
      for (std::uint32_t i = 0; i < n; ++i) out[a[i]] = i;
      return;
    }
    case GroupSpec::Kind::DirectProduct: {
      std::size_t off = 0;
      for (const GroupSpec& p : s.parts()) {
        inv_rec(p, a + off, out + off);
        off += p.word_size();
      }
      return;
    }
    case GroupSpec::Kind::Wreath: {
      // (h mu)^-1 = ((h^-1)^mu, mu^-1): base slot i holds h_{mu(i)}^-1.
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      const Slot* amu = a + n * bw;
      for (std::uint32_t i = 0; i < n; ++i) inv_rec(base, a + amu[i] * bw, out + i * bw);
      for (std::uint32_t i = 0; i < n; ++i) out[n * bw + a[n * bw + i]] = i;
      return;
    }
  }
}

// Advances the word to the next element in lexicographic order; false at end.
bool next_rec(const GroupSpec& s, Slot* a) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic:
      if (a[0] + 1 < s.param()) {
        ++a[0];
        return true;
      }
      a[0] = 0;
      return false;
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric:
      return std::next_permutation(a, a + s.degree());
    case GroupSpec::Kind::DirectProduct: {
      const auto& parts = s.parts();
      std::size_t off = s.word_size();
      for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        off -= it->word_size();
        if (next_rec(*it, a + off)) return true;
        // next_rec wrapped this part back to its identity/first element;
        // make sure "first" means lexicographically least (identity for all
        // families here), then carry on.
        identity_rec(*it, a + off);
      }
      return false;
    }
    case GroupSpec::Kind::Wreath: {
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      if (std::next_permutation(a + n * bw, a + n * bw + n)) return true;
      for (std::uint32_t i = 0; i < n; ++i) a[n * bw + i] = i;
      for (std::uint32_t i = n; i-- > 0;) {
        if (next_rec(base, a + i * bw)) return true;
        identity_rec(base, a + i * bw);
      }
      return false;
    }
  }
  return false;
}

// ---- element text ------------------------------------------------------

void format_rec(const GroupSpec& s, const Slot* a, std::string& out) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic:
      out += "c:";
      out += std::to_string(a[0]);
      return;
    case GroupSpec::Kind::Symmetric:
    case GroupSpec::Kind::TriangleSymmetric: {
      out += "p:[";
      for (std::uint32_t i = 0; i < s.degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(a[i]);
      }
      out += ']';
      return;
    }
    case GroupSpec::Kind::DirectProduct: {
      out += '(';
      std::size_t off = 0;
      bool first = true;
      for (const GroupSpec& p : s.parts()) {
        if (!first) out += ',';
        first = false;
        format_rec(p, a + off, out);
        off += p.word_size();
      }
      out += ')';
      return;
    }
    case GroupSpec::Kind::Wreath: {
      const GroupSpec& base = s.wreath_base();
      const std::size_t bw = base.word_size();
      const std::uint32_t n = static_cast<std::uint32_t>(s.param());
      out += "w:([";
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i) out += ',';
        format_rec(base, a + i * bw, out);
      }
      out += "],p:[";
      for (std::uint32_t i = 0; i < n; ++i) {
        if (i) out += ',';
        out += std::to_string(a[n * bw + i]);
      }
      out += "])";
      return;
    }
  }
}

class ElementParser {
 public:
  ElementParser(std::string_view text, const GroupSpec& spec) : text_(text), spec_(spec) {}

  Word run() {
    Word w(spec_.word_size());
    parse(spec_, w.data());
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after element");
    return w;
  }

 private:
  void parse(const GroupSpec& s, Slot* out) {
    skip_ws();
    switch (s.kind()) {
      case GroupSpec::Kind::Cyclic: {
        expect("c:");
        out[0] = static_cast<Slot>(number());
        return;
      }
      case GroupSpec::Kind::Symmetric:
      case GroupSpec::Kind::TriangleSymmetric: {
        expect("p:");
        image_array(s.degree(), out);
        return;
      }
      case GroupSpec::Kind::DirectProduct: {
        expect("(");
        std::size_t off = 0;
        bool first = true;
        for (const GroupSpec& p : s.parts()) {
          if (!first) expect(",");
          first = false;
          parse(p, out + off);
          off += p.word_size();
        }
        expect(")");
        return;
      }
      case GroupSpec::Kind::Wreath: {
        const GroupSpec& base = s.wreath_base();
        const std::size_t bw = base.word_size();
        const std::uint32_t n = static_cast<std::uint32_t>(s.param());
        expect("w:([");
        for (std::uint32_t i = 0; i < n; ++i) {
          if (i) expect(",");
          parse(base, out + i * bw);
        }
        expect("]");
        expect(",");
        expect("p:");
        image_array(n, out + n * bw);
        expect(")");
        return;
      }
    }
  }

  void image_array(std::uint32_t n, Slot* out) {
    expect("[");
    for (std::uint32_t i = 0; i < n; ++i) {
      if (i) expect(",");
      out[i] = static_cast<Slot>(number());
    }
    expect("]");
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void expect(std::string_view lit) {
    for (char c : lit) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != c)
        fail(std::string("expected '") + c + "'");
      ++pos_;
    }
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw invalid_spec_error("element parse error at position " + std::to_string(pos_) +
                                 ": " + msg,
                             pos_);
  }

  std::string_view text_;
  const GroupSpec& spec_;
  std::size_t pos_ = 0;
};

// ---- spec grammar ------------------------------------------------------

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec run() {
    GroupSpec s = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  // expr    := product ( 'wr' 'sym' '(' N ')' )*
  // product := power ( 'x' power )*
  // power   := atom ( '^' N )*
  // atom    := 'cyc(N)' | 'sym(N)' | 'tri(N)' | '(' expr ')'
  GroupSpec expr() {
    GroupSpec s = product();
    while (try_keyword("wr")) {
      if (!try_keyword("sym")) fail("expected 'sym' after 'wr'");
      expect('(');
      std::uint64_t n = number();
      expect(')');
      s = GroupSpec::wreath(std::move(s), require_u32(n));
    }
    return s;
  }

  GroupSpec product() {
    std::vector<GroupSpec> parts;
    parts.push_back(power());
    while (try_keyword("x")) parts.push_back(power());
    if (parts.size() == 1) return std::move(parts.front());
    return GroupSpec::direct_product(std::move(parts));
  }

  GroupSpec power() {
    GroupSpec s = atom();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        s = GroupSpec::power(s, require_u32(number()));
      } else {
        break;
      }
    }
    return s;
  }

  GroupSpec atom() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      GroupSpec s = expr();
      expect(')');
      return s;
    }
    if (try_keyword("cyc")) {
      expect('(');
      std::uint64_t n = number();
      expect(')');
      return GroupSpec::cyclic(n);
    }
    if (try_keyword("sym")) {
      expect('(');
      std::uint64_t n = number();
      expect(')');
      return GroupSpec::symmetric(require_u32(n));
    }
    if (try_keyword("tri")) {
      expect('(');
      std::uint64_t n = number();
      expect(')');
      return GroupSpec::triangle_symmetric(require_u32(n));
    }
    fail("expected cyc(N), sym(N), tri(N) or '('");
  }

  std::uint32_t require_u32(std::uint64_t v) {
    if (v > 0xffffffffull) fail("parameter too large");
    return static_cast<std::uint32_t>(v);
  }

  // After a complete atom only an operator can follow, so operator keywords
  // need no identifier boundary: "cyc(2)xcyc(3)" is a product.
  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (text_.substr(pos_).substr(0, kw.size()) != kw) return false;
    pos_ += kw.size();
    return true;
  }

  std::uint64_t number() {
    skip_ws();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 0x1999999999999999ull) fail("number too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw invalid_spec_error(
        "group spec parse error at position " + std::to_string(pos_) + ": " + msg, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const GroupSpec& s) {
  return s.kind() == GroupSpec::Kind::Wreath;
}

}  // namespace

// ---- GroupSpec ----------------------------------------------------------

GroupSpec GroupSpec::cyclic(std::uint64_t n) {
  if (n < 1) throw invalid_spec_error("cyclic group size must be >= 1");
  if (n > 0xffffffffull) throw invalid_spec_error("cyclic group size exceeds slot range");
  GroupSpec s;
  s.kind_ = Kind::Cyclic;
  s.param_ = n;
  s.finalize();
  return s;
}

GroupSpec GroupSpec::symmetric(std::uint32_t n) {
  if (n < 1) throw invalid_spec_error("symmetric group degree must be >= 1");
  GroupSpec s;
  s.kind_ = Kind::Symmetric;
  s.param_ = n;
  s.finalize();
  return s;
}

GroupSpec GroupSpec::triangle_symmetric(std::uint32_t n) {
  if (n < 1) throw invalid_spec_error("triangle side must be >= 1");
  if (n > 65535) throw invalid_spec_error("triangle side too large");
  GroupSpec s;
  s.kind_ = Kind::TriangleSymmetric;
  s.param_ = n;
  s.finalize();
  return s;
}

GroupSpec GroupSpec::direct_product(std::vector<GroupSpec> parts) {
  if (parts.empty()) throw invalid_spec_error("direct product needs at least one part");
  std::vector<GroupSpec> flat;
  for (GroupSpec& p : parts) {
    if (p.kind_ == Kind::DirectProduct) {
      for (GroupSpec& q : p.parts_) flat.push_back(std::move(q));
    } else {
      flat.push_back(std::move(p));
    }
  }
  if (flat.size() == 1) return std::move(flat.front());
  GroupSpec s;
  s.kind_ = Kind::DirectProduct;
  s.param_ = 0;
  s.parts_ = std::move(flat);
  s.finalize();
  return s;
}

GroupSpec GroupSpec::power(const GroupSpec& base, std::uint32_t k) {
  if (k < 1) throw invalid_spec_error("direct power exponent must be >= 1");
  std::vector<GroupSpec> parts(k, base);
  return direct_product(std::move(parts));
}

GroupSpec GroupSpec::wreath(GroupSpec base, std::uint32_t n) {
  if (n < 1) throw invalid_spec_error("wreath copy count must be >= 1");
  GroupSpec s;
  s.kind_ = Kind::Wreath;
  s.param_ = n;
  s.parts_.push_back(std::move(base));
  s.finalize();
  return s;
}

std::uint32_t GroupSpec::degree() const {
  switch (kind_) {
    case Kind::Symmetric:
      return static_cast<std::uint32_t>(param_);
    case Kind::TriangleSymmetric:
      return static_cast<std::uint32_t>(param_ * (param_ + 1) / 2);
    default:
      throw domain_error("degree() requires a symmetric-kind group");
  }
}

void GroupSpec::finalize() {
  switch (kind_) {
    case Kind::Cyclic:
      word_size_ = 1;
      order_ = param_;
      log_order_ = std::log(static_cast<double>(param_));
      abelian_ = true;
      break;
    case Kind::Symmetric:
    case Kind::TriangleSymmetric: {
      const std::uint32_t n = degree();
      word_size_ = n;
      order_ = checked_factorial(n);
      log_order_ = log_factorial_small(n);
      abelian_ = n <= 2;
      break;
    }
    case Kind::DirectProduct: {
      word_size_ = 0;
      order_ = 1;
      log_order_ = 0.0;
      abelian_ = true;
      for (const GroupSpec& p : parts_) {
        word_size_ += p.word_size_;
        log_order_ += p.log_order_;
        abelian_ = abelian_ && p.abelian_;
        if (order_ && p.order_) {
          order_ = checked_mul(*order_, *p.order_);
        } else {
          order_.reset();
        }
      }
      break;
    }
    case Kind::Wreath: {
      const GroupSpec& base = parts_.front();
      const std::uint64_t n = param_;
      word_size_ = n * base.word_size_ + n;
      log_order_ = static_cast<double>(n) * base.log_order_ + log_factorial_small(n);
      order_.reset();
      if (base.order_) {
        if (auto bn = checked_pow(*base.order_, n)) {
          if (auto f = checked_factorial(n)) order_ = checked_mul(*bn, *f);
        }
      }
      // H wr Sym_1 is H itself; a trivial base leaves just Sym_n.
      abelian_ = (n == 1 && base.abelian_) ||
                 (base.order_ && *base.order_ == 1 && n <= 2);
      break;
    }
  }
}

std::uint64_t GroupSpec::order() const {
  if (!order_) throw too_large_error("group order exceeds 64-bit range");
  return *order_;
}

bool GroupSpec::operator==(const GroupSpec& other) const {
  if (kind_ != other.kind_ || param_ != other.param_) return false;
  return parts_ == other.parts_;
}

std::string GroupSpec::to_string() const {
  switch (kind_) {
    case Kind::Cyclic:
      return "cyc(" + std::to_string(param_) + ")";
    case Kind::Symmetric:
      return "sym(" + std::to_string(param_) + ")";
    case Kind::TriangleSymmetric:
      return "tri(" + std::to_string(param_) + ")";
    case Kind::DirectProduct: {
      // Runs of equal parts print as powers: cyc(3)^3 x sym(2).
      std::string out;
      std::size_t i = 0;
      while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        std::string piece = parts_[i].to_string();
        if (needs_parens_in_product(parts_[i])) piece = "(" + piece + ")";
        if (!out.empty()) out += " x ";
        out += piece;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
      }
      return out;
    }
    case Kind::Wreath: {
      std::string base = wreath_base().to_string();
      if (wreath_base().kind_ == Kind::Wreath) base = "(" + base + ")";
      return base + " wr sym(" + std::to_string(param_) + ")";
    }
  }
  return {};
}

GroupSpec GroupSpec::parse(std::string_view text) { return SpecParser(text).run(); }

// ---- Group ---------------------------------------------------------------

Group::Group(GroupSpec spec) : spec_(std::make_shared<const GroupSpec>(std::move(spec))) {}

GroupElement Group::identity() const {
  GroupElement e;
  e.w.resize(word_size());
  identity_rec(*spec_, e.w.data());
  return e;
}

bool Group::contains(const GroupElement& a) const {
  return a.w.size() == word_size() && valid_rec(*spec_, a.w.data());
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
  if (!contains(a) || !contains(b))
    throw domain_error("mul: element does not belong to " + spec_->to_string());
  return mul_unchecked(a, b);
}

GroupElement Group::inv(const GroupElement& a) const {
  if (!contains(a))
    throw domain_error("inv: element does not belong to " + spec_->to_string());
  return inv_unchecked(a);
}

GroupElement Group::mul_unchecked(const GroupElement& a, const GroupElement& b) const {
  GroupElement out;
  out.w.resize(word_size());
  mul_rec(*spec_, a.w.data(), b.w.data(), out.w.data());
  return out;
}

GroupElement Group::inv_unchecked(const GroupElement& a) const {
  GroupElement out;
  out.w.resize(word_size());
  inv_rec(*spec_, a.w.data(), out.w.data());
  return out;
}

std::vector<GroupElement> Group::enumerate(std::uint64_t cap) const {
  if (!order_fits() || order() > cap)
    throw too_large_error("enumerate: group order exceeds cap of " + std::to_string(cap));
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order()));
  GroupElement cur = identity();
  do {
    out.push_back(cur);
  } while (next_rec(*spec_, cur.w.data()));
  return out;
}

std::string Group::format(const GroupElement& a) const {
  if (!contains(a)) throw domain_error("format: element does not belong to the group");
  std::string out;
  format_rec(*spec_, a.w.data(), out);
  return out;
}

GroupElement Group::parse_element(std::string_view text) const {
  GroupElement e{ElementParser(text, *spec_).run()};
  if (!contains(e)) throw invalid_spec_error("element is not a member of " + spec_->to_string());
  return e;
}

// ---- cyclic decomposition -------------------------------------------------

namespace {
bool collect_cyclic(const GroupSpec& s, std::vector<std::uint64_t>& moduli) {
  switch (s.kind()) {
    case GroupSpec::Kind::Cyclic:
      moduli.push_back(s.param());
      return true;
    case GroupSpec::Kind::DirectProduct:
      for (const GroupSpec& p : s.parts())
        if (!collect_cyclic(p, moduli)) return false;
      return true;
    default:
      return false;
  }
}
}  // namespace

std::optional<std::vector<std::uint64_t>> cyclic_decomposition(const GroupSpec& spec) {
  std::vector<std::uint64_t> moduli;
  if (!collect_cyclic(spec, moduli)) return std::nullopt;
  return moduli;
}

// ---- Subset ---------------------------------------------------------------

Subset::Subset(Group group, std::vector<GroupElement> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::unordered_set<GroupElement, ElementHash> seen;
  seen.reserve(elements_.size());
  for (const GroupElement& e : elements_) {
    if (!group_.contains(e))
      throw domain_error("subset element does not belong to " + group_.spec().to_string());
    if (!seen.insert(e).second) throw domain_error("subset contains a duplicate element");
  }
}

}  // namespace tpplab
