#include "lozenge/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace lozenge {

RationalPolynomial::RationalPolynomial(std::vector<Rational> ascending_coefficients)
    : coef_(std::move(ascending_coefficients)) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::linear(const Rational& c) {
    return RationalPolynomial(std::vector<Rational>{c, Rational(1)});
}

Rational RationalPolynomial::coefficient(std::size_t k) const {
    return k < coef_.size() ? coef_[k] : Rational(0);
}

Rational RationalPolynomial::operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) r = r * x + *it;
    return r;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coef_.size(), o.coef_.size()), Rational(0));
    for (std::size_t k = 0; k < coef_.size(); ++k) c[k] += coef_[k];
    for (std::size_t k = 0; k < o.coef_.size(); ++k) c[k] += o.coef_[k];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
    std::vector<Rational> c(std::max(coef_.size(), o.coef_.size()), Rational(0));
    for (std::size_t k = 0; k < coef_.size(); ++k) c[k] += coef_[k];
    for (std::size_t k = 0; k < o.coef_.size(); ++k) c[k] -= o.coef_[k];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(coef_.size() + o.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coef_.size(); ++i)
        for (std::size_t j = 0; j < o.coef_.size(); ++j) c[i + j] += coef_[i] * o.coef_[j];
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
    std::vector<Rational> c(coef_);
    for (auto& x : c) x *= s;
    return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::composed_linear(const Rational& scale,
                                                       const Rational& shift) const {
    RationalPolynomial inner(std::vector<Rational>{shift, scale});
    RationalPolynomial result;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it)
        result = result * inner + constant(*it);
    return result;
}

bool RationalPolynomial::divisible_by_linear(const Rational& c) const {
    return (*this)(-c) == 0;
}

RationalPolynomial RationalPolynomial::divide_linear_exact(const Rational& c) const {
    if (is_zero()) return {};
    // Synthetic division at root -c.
    std::vector<Rational> q(coef_.size() - 1, Rational(0));
    Rational carry = 0;
    for (std::size_t k = coef_.size(); k-- > 0;) {
        Rational v = coef_[k] + carry;
        if (k == 0) {
            if (v != 0)
                throw std::domain_error("polynomial division by (x + " + c.str() +
                                        ") is not exact");
            break;
        }
        q[k - 1] = v;
        carry = v * (-c);
    }
    return RationalPolynomial(std::move(q));
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (coef_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coef_.size(); ++k) {
        const Rational& c = coef_[k];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        out << a.str();
        if (k >= 1) out << "*" << var;
        if (k >= 2) out << "^" << k;
    }
    return out.str();
}

RationalPolynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
    if (points.empty()) throw std::domain_error("lagrange_interpolate: no points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::domain_error("lagrange_interpolate: duplicate abscissa " +
                                        points[i].first.str());

    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * RationalPolynomial::linear(-points[j].first);
            denom *= points[i].first - points[j].first;
        }
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

}  // namespace lozenge
