#include "lozenge/exact.hpp"

namespace lozenge {

Integer factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument " + std::to_string(n));
    Integer r = 1;
    for (long t = 2; t <= n; ++t) r *= t;
    return r;
}

Rational reciprocal_factorial(long n) {
    if (n < 0) return Rational(0);
    return Rational(1) / Rational(factorial(n));
}

Integer double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    Integer r = 1;
    for (long t = n; t >= 2; t -= 2) r *= t;
    return r;
}

Rational pochhammer(const Rational& a, long k) {
    if (k >= 0) {
        Rational r = 1;
        Rational f = a;
        for (long t = 0; t < k; ++t, f += 1) r *= f;
        return r;
    }
    Rational den = pochhammer(a + k, -k);
    if (den == 0)
        throw std::domain_error("pochhammer: negative-length extension hits a zero factor");
    return Rational(1) / den;
}

Integer binomial(const Integer& n, long k) {
    if (k < 0) return 0;
    Integer num = 1;
    for (long t = 0; t < k; ++t) num *= n - t;
    return num / factorial(k);  // falling factorial of length k is divisible by k!
}

Integer binomial(long n, long k) { return binomial(Integer(n), k); }

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow_rational: 0 to a negative power");
    Rational r = 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long t = 0; t < (e > 0 ? e : -e); ++t) r *= b;
    return r;
}

Integer to_integer_exact(const Rational& r, const std::string& what) {
    if (!is_integer(r))
        throw std::domain_error(what + " is not an integer: " + r.str());
    return numerator(r);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace lozenge
