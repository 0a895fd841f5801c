#pragma once

#include "cycloseq/errors.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cycloseq {

/// An ordered binary string searched cyclically inside sequences.
class Pattern {
 public:
  explicit Pattern(std::string_view bits) {
    if (bits.empty()) throw DomainError(ErrorKind::InvalidArgument, "empty pattern");
    for (char c : bits) {
      if (c != '0' && c != '1')
        throw DomainError(ErrorKind::InvalidArgument,
                          "pattern must contain only 0 and 1, got '" + std::string(bits) + "'");
      digits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
  }

  std::size_t size() const noexcept { return digits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return digits_[i]; }
  const std::vector<std::uint8_t>& digits() const noexcept { return digits_; }

  unsigned zeros() const {
    unsigned z = 0;
    for (auto d : digits_) z += d == 0;
    return z;
  }
  unsigned ones() const { return static_cast<unsigned>(size()) - zeros(); }

  /// Exchanges 0 and 1.
  Pattern flipped() const {
    std::string s = str();
    for (char& c : s) c = c == '0' ? '1' : '0';
    return Pattern(s);
  }

  Pattern reversed() const {
    std::string s = str();
    return Pattern(std::string(s.rbegin(), s.rend()));
  }

  std::string str() const {
    std::string s;
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  /// Digit t sits at bit t.
  std::uint64_t bits() const {
    std::uint64_t w = 0;
    for (std::size_t t = 0; t < digits_.size(); ++t) w |= std::uint64_t(digits_[t]) << t;
    return w;
  }

  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  std::vector<std::uint8_t> digits_;
};

}  // namespace cycloseq
