#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace qg {

// Exact scalars. BigInt is unbounded; Rational stays in canonical form
// (denominator > 0, gcd(num, den) = 1), maintained by the backend.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  // Two-argument construction requires a positive denominator upstream;
  // dividing normalizes sign and content in one step.
  return Rational(num) / Rational(den);
}

std::string to_string(const BigInt& v);
std::string to_string(const Rational& r);  // "p" or "p/q"

// Accepts the to_string output. Throws Errc::ParseError on malformed input.
Rational rational_from_string(const std::string& s);

}  // namespace qg
