#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cpt {

// Arbitrary-precision scalars. Every certificate in this library is decided
// by exact comparisons, so there is no floating point anywhere in the core.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Integer numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}
inline Integer denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

inline bool is_integer(const Rational& value) { return denominator(value) == 1; }
inline bool is_nonneg_integer(const Rational& value) {
  return value >= 0 && is_integer(value);
}
inline bool is_binary_value(const Rational& value) { return value == 0 || value == 1; }

Integer pow(const Integer& base, unsigned exponent);
Rational pow(const Rational& base, unsigned exponent);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts an optional sign, digits, and an optional "/digits" part.
std::optional<Rational> parse_rational(std::string_view text);

/// floor(value^(1/m)) for value >= 0.
Integer floor_nth_root(const Integer& value, unsigned m);

/// The exact m-th root when `value` is a perfect m-th power of a rational.
std::optional<Rational> exact_nth_root(const Rational& value, unsigned m);

/// value^(1/m) for value >= 0, either exactly or bracketed by dyadic
/// rationals no more than 2^-50 apart.
struct RootEnclosure {
  std::optional<Rational> exact;
  Rational lo;
  Rational hi;

  bool is_exact() const { return exact.has_value(); }
};

RootEnclosure nth_root_enclosure(const Rational& value, unsigned m);

/// C(n, k) as an exact integer; zero when k < 0 or k > n.
Integer binomial(long long n, long long k);

/// C(n, k) narrowed to size_t; throws ErrorKind::capacity_exceeded on overflow.
std::size_t binomial_size(long long n, long long k);

}  // namespace cpt
