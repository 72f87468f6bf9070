#include "cpt/scalar.hpp"

#include <limits>

#include "cpt/error.hpp"
#include "cpt/outcome.hpp"

namespace cpt {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::negative_factor: return "negative factor";
    case ErrorKind::dimension_mismatch: return "dimension mismatch";
    case ErrorKind::order_mismatch: return "order mismatch";
    case ErrorKind::empty_family: return "empty family";
    case ErrorKind::undefined_norm: return "undefined norm";
    case ErrorKind::wrong_dimension: return "wrong dimension";
    case ErrorKind::bad_subset: return "bad subset";
    case ErrorKind::domain_error: return "domain error";
    case ErrorKind::not_diagonal: return "not diagonal";
    case ErrorKind::invalid_decomposition: return "invalid decomposition";
    case ErrorKind::search_space_too_large: return "search space too large";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::capacity_exceeded: return "capacity exceeded";
    case ErrorKind::parse_error: return "parse error";
  }
  return "unknown error";
}

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::positive: return "positive";
    case Outcome::negative: return "negative";
    case Outcome::inconclusive: return "inconclusive";
    case Outcome::not_applicable: return "not-applicable";
  }
  return "unknown";
}

Integer pow(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

Rational pow(const Rational& base, unsigned exponent) {
  if (exponent == 0) return Rational(1);
  Integer num = pow(numerator(base), exponent);
  Integer den = pow(denominator(base), exponent);
  return Rational(num, den);
}

std::string to_string(const Integer& value) { return value.str(); }

std::string to_string(const Rational& value) {
  Integer den = denominator(value);
  if (den == 1) return numerator(value).str();
  return numerator(value).str() + "/" + den.str();
}

namespace {

std::optional<Integer> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return std::nullopt;
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto num = parse_integer(text);
    if (!num) return std::nullopt;
    return Rational(*num);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

Integer floor_nth_root(const Integer& value, unsigned m) {
  if (value < 0) fail(ErrorKind::invalid_argument, "floor_nth_root of a negative integer");
  if (m == 0) fail(ErrorKind::invalid_argument, "floor_nth_root with m = 0");
  if (value == 0 || value == 1 || m == 1) return value;
  // Newton iteration from a power-of-two overestimate.
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
  Integer x = Integer(1) << (bits / m + 1);
  while (true) {
    Integer xm1 = pow(x, m - 1);
    Integer next = ((m - 1) * x + value / xm1) / m;
    if (next >= x) break;
    x = next;
  }
  while (pow(x, m) > value) --x;
  while (pow(x + 1, m) <= value) ++x;
  return x;
}

std::optional<Rational> exact_nth_root(const Rational& value, unsigned m) {
  if (value < 0) return std::nullopt;
  Integer num = numerator(value);
  Integer den = denominator(value);
  Integer rn = floor_nth_root(num, m);
  if (pow(rn, m) != num) return std::nullopt;
  Integer rd = floor_nth_root(den, m);
  if (pow(rd, m) != den) return std::nullopt;
  return Rational(rn, rd);
}

RootEnclosure nth_root_enclosure(const Rational& value, unsigned m) {
  if (value < 0) fail(ErrorKind::undefined_norm, "m-th root of a negative value");
  if (m == 0) fail(ErrorKind::invalid_argument, "root with m = 0");
  RootEnclosure result;
  if (auto exact = exact_nth_root(value, m)) {
    result.exact = *exact;
    result.lo = *exact;
    result.hi = *exact;
    return result;
  }
  // Scale so that a floor integer root yields a dyadic bracket of width 2^-50:
  // with N = floor(value * 2^(50 m)) and r = floor(N^(1/m)),
  //   r <= value^(1/m) * 2^50 < r + 1.
  const unsigned kShift = 50;
  Integer scaled_num = numerator(value) << (kShift * m);
  Integer n = scaled_num / denominator(value);
  Integer r = floor_nth_root(n, m);
  Integer unit = Integer(1) << kShift;
  result.lo = Rational(r, unit);
  result.hi = Rational(r + 1, unit);
  return result;
}

Integer binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

std::size_t binomial_size(long long n, long long k) {
  Integer value = binomial(n, k);
  if (value > std::numeric_limits<std::size_t>::max() / 2) {
    fail(ErrorKind::capacity_exceeded, "binomial coefficient exceeds addressable size");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace cpt
