#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include "parabi/errors.hpp"

namespace parabi {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend, boost::multiprecision::et_off>;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw ArgumentError("zero denominator");
  return Rational(Integer(num), Integer(den));
}

/// Parses "p/q" or "p" with an optional leading minus.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw ArgumentError("malformed rational literal '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-') {
    negative = true;
    pos = 1;
  }
  auto read_digits = [&](std::size_t start, std::size_t end) -> std::optional<Integer> {
    if (start >= end) return std::nullopt;
    for (std::size_t i = start; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
    }
    return Integer(std::string(text.substr(start, end - start)));
  };
  std::size_t slash = text.find('/', pos);
  auto num = read_digits(pos, slash == std::string_view::npos ? text.size() : slash);
  if (!num) return fail();
  Integer den = 1;
  if (slash != std::string_view::npos) {
    auto d = read_digits(slash + 1, text.size());
    if (!d) return fail();
    if (*d == 0) throw ArgumentError("zero denominator in '" + std::string(text) + "'");
    den = *d;
  }
  Rational r(*num, den);
  return negative ? Rational(-r) : r;
}

/// Formats as "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline int sign(const Rational& r) { return r.sign(); }

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long double to_long_double(const Rational& r) {
  return r.convert_to<long double>();
}

/// Exact square root of a non-negative rational, or nullopt if it is not a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  Integer sn = boost::multiprecision::sqrt(num);
  Integer sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

/// Rising factorial (base)(base+1)...(base+length-1).
inline Rational poch(const Rational& base, int length) {
  if (length < 0) throw ArgumentError("Pochhammer symbol with negative length");
  Rational result = 1;
  for (int i = 0; i < length; ++i) {
    result *= base + i;
    if (result == 0) break;
  }
  return result;
}

inline Rational pow2(int exponent) {
  Integer p = 1;
  p <<= (exponent < 0 ? -exponent : exponent);
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

}  // namespace parabi
