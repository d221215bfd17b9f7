#ifndef STRUCTMAT_RATIONAL_HPP_
#define STRUCTMAT_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace structmat {

// Exact arithmetic backend. Class-membership verdicts for matrices with
// rational entries are decided over Q, so they cannot flip with rounding.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

Int binomial(long n, long k);

// Accepts "p/q", plain integers, and finite decimals ("0.25" -> 1/4).
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);

// x_+ := max(x, 0), the truncation the minor formulas are written in.
inline long pospart(long x) { return x > 0 ? x : 0; }

}  // namespace structmat

#endif  // STRUCTMAT_RATIONAL_HPP_
