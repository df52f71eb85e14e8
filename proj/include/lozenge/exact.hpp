#pragma once

// Exact arithmetic kernels: arbitrary-precision integers and rationals
// (backed by boost::multiprecision) plus the combinatorial primitives the
// enumeration formulas are built from: factorials, binomial coefficients,
// double factorials and shifted factorials (Pochhammer symbols), the latter
// extended to negative length by the gamma-ratio convention
//
//     (a)_k = a(a+1)...(a+k-1)   for k >= 0,   (a)_0 = 1,
//     (a)_{-k} = 1 / (a-k)_k     for k >= 1.
//
// All operations are pure and all values immutable once constructed, so
// everything here is safe for unrestricted concurrent use.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lozenge {

using Integer = boost::multiprecision::cpp_int;
// cpp_rational keeps values in lowest terms with a positive denominator
// after every operation, which is exactly the representation we want for
// the dense eliminations later on.
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// n! for n >= 0; throws std::domain_error for negative n.
Integer factorial(long n);

// 1/n! with the convention 1/n! = 0 for negative integers n (the value the
// binomial-style matrix entries rely on).
Rational reciprocal_factorial(long n);

// n(n-2)(n-4)...; 0!! = (-1)!! = 1.  n < -1 is rejected.
Integer double_factorial(long n);

// Shifted factorial (a)_k, with the gamma-ratio extension for k < 0.
// Throws std::domain_error when a negative-length extension hits a zero
// factor in its denominator.
Rational pochhammer(const Rational& a, long k);

// Binomial coefficient via the falling factorial: n(n-1)...(n-k+1)/k!.
// Defined for every integer n (including negative); k < 0 yields 0.
Integer binomial(const Integer& n, long k);
Integer binomial(long n, long k);

// base^e for integer e of either sign; throws on 0^negative.
Rational pow_rational(const Rational& base, long e);

// Conversion helpers.  to_integer_exact throws std::domain_error when the
// rational is not an integer (used to assert integrality of counts).
Integer to_integer_exact(const Rational& r, const std::string& what = "value");
double to_double(const Rational& r);

// True if r is an integer.
inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace lozenge
