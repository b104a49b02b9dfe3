#pragma once

#include <stdexcept>
#include <string>

namespace tpplab {

// Malformed group spec or unparseable input. Carries a character position
// when the error came from a parser.
class invalid_spec_error : public std::invalid_argument {
 public:
  explicit invalid_spec_error(const std::string& what, std::size_t pos = npos)
      : std::invalid_argument(what), pos_(pos) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool has_position() const noexcept { return pos_ != npos; }
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

// Element/subset/matrix handed to an operation it does not belong to.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Requested computation exceeds a resource cap (enumeration, search, ...).
class too_large_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Operation not defined for this group family (non-abelian DFT, wreath
// degree sets, ...).
class unsupported_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tpplab
