#ifndef COXCOMB_NUMERIC_HPP
#define COXCOMB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace coxcomb {

/// Exact arbitrary-precision integer and rational scalars.
/// Everything in the library is computed over these; no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Int lcm_int(const Int& a, const Int& b) {
  return boost::multiprecision::lcm(a, b);
}

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

/// Quotient rounded to the nearest integer (ties toward zero). Used for
/// remainder-size control in normal-form eliminations.
inline Int rounded_div(const Int& a, const Int& b) {
  Int q = a / b;
  Int r = a - q * b;
  if (abs_int(r) * 2 > abs_int(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
  return q;
}

std::string to_string(const Int& v);

/// Canonical rational rendering: reduced "p/q", plain integer when q = 1.
std::string to_string(const Rat& v);

/// Parses an integer from decimal text (optional leading '-').
Int parse_int(const std::string& text);

/// Parses "p", "-p" or "p/q" with nonzero q.
Rat parse_rat(const std::string& text);

}  // namespace coxcomb

#endif
