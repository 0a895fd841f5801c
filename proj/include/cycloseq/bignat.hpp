#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycloseq {

/// Arbitrary-precision integer used for every exact count. Values handed out by
/// the library are never negative; `to_natural` guards the places where a
/// signed intermediate is converted back.
using BigNat = boost::multiprecision::cpp_int;

/// Exact rational, used where a printed formula is not integral.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigNat& v) { return v.str(); }

inline BigNat parse_bignat(std::string_view text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
    throw std::invalid_argument("not a decimal natural number: '" + std::string(text) + "'");
  return BigNat(std::string(text));
}

/// Exact quotient; throws if `den` does not divide `num`.
inline BigNat divide_exact(const BigNat& num, const BigNat& den) {
  if (den == 0) throw std::logic_error("divide_exact: division by zero");
  BigNat q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error("divide_exact: " + num.str() + " / " + den.str() + " is not integral");
  return q;
}

inline BigNat to_natural(const BigNat& v) {
  if (v < 0) throw std::logic_error("to_natural: negative value " + v.str());
  return v;
}

inline double to_double(const BigNat& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace cycloseq
