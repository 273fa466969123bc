#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "ellcov/error.hpp"

namespace ellcov {

// Expression templates are disabled so that `auto` always yields a value.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  return Rational(Integer(num), Integer(den));
}

inline bool is_integer(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

/// Returns the numerator of an integral rational; throws otherwise.
inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) {
    throw Error(ErrorCode::InvalidArgument,
                "expected an integer, got " + r.str());
  }
  return boost::multiprecision::numerator(r);
}

/// Canonical text form: "p" for integers, "p/q" otherwise, q > 0.
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return Rational(Integer(text.substr(0, slash)),
                    Integer(text.substr(slash + 1)));
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
}

}  // namespace ellcov
