#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>

#include "pne/error.hpp"

namespace pne {

using Int = boost::multiprecision::cpp_int;

// All costs, distances, weights, penalties and potentials are exact
// rationals. Strict-improvement tests and convergence step bounds compare
// exactly; floating point would mask or invent improving moves.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw Error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

// Largest integer <= r. Integer division of cpp_int truncates toward zero,
// so negative non-exact quotients need one step down.
inline Int rational_floor(const Rational& r) {
  Int num = numerator(r);
  const Int den = denominator(r);  // > 0 by normalization
  Int q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

inline Int rational_ceil(const Rational& r) { return -rational_floor(-r); }

inline bool fits_int64(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Accepts "p", "-p" or "p/q" with integer p, q.
inline Rational parse_rational(const std::string& text) {
  const auto parse_int = [&text](const std::string& part) -> Int {
    const std::size_t start = !part.empty() && part[0] == '-' ? 1 : 0;
    if (start == part.size()) throw Error("rational: cannot parse '" + text + "'");
    for (std::size_t i = start; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') throw Error("rational: cannot parse '" + text + "'");
    return Int(part);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace pne
