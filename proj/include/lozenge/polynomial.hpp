#pragma once

// Dense univariate polynomials over exact rationals, in ascending coefficient
// order with trailing zeros trimmed.  Degrees in this project stay small
// (at most binom(N+1,2)-1 for the determinant polynomials), so no attempt is
// made at asymptotically clever arithmetic.

#include "lozenge/exact.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lozenge {

class RationalPolynomial {
public:
    RationalPolynomial() = default;  // the zero polynomial
    explicit RationalPolynomial(std::vector<Rational> ascending_coefficients);

    static RationalPolynomial constant(const Rational& c);
    // The monic linear polynomial x + c.
    static RationalPolynomial linear(const Rational& c);

    // Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    const std::vector<Rational>& coefficients() const { return coef_; }
    Rational coefficient(std::size_t k) const;

    Rational operator()(const Rational& x) const;  // Horner evaluation

    RationalPolynomial operator+(const RationalPolynomial& o) const;
    RationalPolynomial operator-(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const RationalPolynomial& o) const;
    RationalPolynomial operator*(const Rational& s) const;
    bool operator==(const RationalPolynomial& o) const { return coef_ == o.coef_; }

    // p(scale*x + shift), used for the m -> -N-m reflection identities.
    RationalPolynomial composed_linear(const Rational& scale, const Rational& shift) const;

    // Synthetic division by the monic linear factor (x + c).
    bool divisible_by_linear(const Rational& c) const;
    // Throws std::domain_error when the division is not exact.
    RationalPolynomial divide_linear_exact(const Rational& c) const;

    // "3 + 3*m" style rendering: ascending powers, zero terms skipped.
    std::string to_string(const std::string& var = "m") const;

private:
    void trim();
    std::vector<Rational> coef_;
};

// Unique polynomial of degree < #points through all points, exactly.
// Throws std::domain_error on duplicate abscissae or an empty point list.
RationalPolynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace lozenge
