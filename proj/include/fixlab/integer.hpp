#ifndef FIXLAB_INTEGER_HPP_
#define FIXLAB_INTEGER_HPP_

#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace fixlab {

// Exponents grow without bound under composition, so every coordinate is
// an arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

inline bool is_odd(const Integer& x) { return (x % 2) != 0; }

inline Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Division rounding towards negative infinity (b != 0).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0)))
    --q;
  return q;
}

// Representative of a modulo b in [0, |b|).
inline Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs_value(a), y = abs_value(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

inline std::string to_string(const Integer& x) { return x.str(); }

} // namespace fixlab

#endif
