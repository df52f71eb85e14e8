#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lozenge/exact.hpp"
#include "lozenge/polynomial.hpp"

#include <random>

using namespace lozenge;

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(-3), 5) == Rational(0));
    // Gamma-ratio extension: (3)_{-1} = 1/(2)_1.
    CHECK(pochhammer(Rational(3), -1) == Rational(1, 2));
    CHECK(pochhammer(Rational(5, 2), -2) == Rational(1) / (Rational(1, 2) * Rational(3, 2)));
    CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::domain_error);  // hits (0)_1
}

TEST_CASE("pochhammer functional equations") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> len(-4, 4);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        Rational a(num(rng), den(rng));
        long j = len(rng), k = len(rng);
        try {
            Rational lhs = pochhammer(a, j + k);
            Rational rhs = pochhammer(a, j) * pochhammer(a + j, k);
            CHECK(lhs == rhs);
            ++checked;
        } catch (const std::domain_error&) {
            continue;  // a zero factor in a denominator; identity not defined there
        }
    }
    CHECK(checked > 100);

    for (int trial = 0; trial < 200; ++trial) {
        Rational a(num(rng), den(rng));
        long k = len(rng);
        try {
            CHECK(pochhammer(a, k) * pochhammer(a + k, -k) == Rational(1));
        } catch (const std::domain_error&) {
            continue;
        }
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(-4, 0) == 1);
    CHECK(binomial(-1, 3) == -1);  // (-1)(-2)(-3)/6
    CHECK(binomial(3, 7) == 0);
    CHECK(binomial(3, -2) == 0);
    // Pascal rule on a signed range.
    for (long n = -6; n <= 8; ++n)
        for (long k = 1; k <= 8; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k) + binomial(n - 1, k - 1));
}

TEST_CASE("factorials") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
    CHECK(reciprocal_factorial(-3) == 0);
    CHECK(reciprocal_factorial(4) == Rational(1, 24));
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(5) == 15);
}

TEST_CASE("integrality helpers") {
    CHECK(to_integer_exact(Rational(14, 2)) == 7);
    CHECK_THROWS_AS(to_integer_exact(Rational(1, 3)), std::domain_error);
    CHECK(pow_rational(Rational(2), -3) == Rational(1, 8));
    CHECK(pow_rational(Rational(-2), 3) == Rational(-8));
}

TEST_CASE("polynomial evaluation and printing") {
    RationalPolynomial p({Rational(3), Rational(3)});  // 3 + 3m
    CHECK(p(Rational(1)) == 6);
    CHECK(p(Rational(-3)) == -6);
    CHECK(p.to_string() == "3 + 3*m");
    CHECK(RationalPolynomial()(Rational(5)) == 0);
    CHECK(RationalPolynomial().to_string() == "0");
    CHECK(RationalPolynomial({Rational(0), Rational(-1, 2), Rational(0), Rational(2)}).to_string() ==
          "-1/2*m + 2*m^3");
}

TEST_CASE("lagrange interpolation") {
    using Points = std::vector<std::pair<Rational, Rational>>;
    Points flat = {{Rational(0), Rational(1)}, {Rational(1), Rational(1)}};
    CHECK(lagrange_interpolate(flat) == RationalPolynomial::constant(1));

    Points line = {{Rational(0), Rational(3)}, {Rational(1), Rational(6)}};
    CHECK(lagrange_interpolate(line) == RationalPolynomial({Rational(3), Rational(3)}));

    Points single = {{Rational(0), Rational(7, 3)}};
    CHECK(lagrange_interpolate(single) == RationalPolynomial::constant(Rational(7, 3)));

    Points dup = {{Rational(1), Rational(0)}, {Rational(1), Rational(2)}};
    CHECK_THROWS_AS(lagrange_interpolate(dup), std::domain_error);
}

TEST_CASE("interpolation reproduces random point sets") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 6);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<std::pair<Rational, Rational>> points;
        for (int k = 0; k < 6; ++k) {
            Rational x = Rational(k) + Rational(num(rng), 41);  // distinct abscissae
            points.emplace_back(x, Rational(num(rng), den(rng)));
        }
        RationalPolynomial p = lagrange_interpolate(points);
        CHECK(p.degree() < 6);
        for (const auto& [x, y] : points) CHECK(p(x) == y);
    }
}

TEST_CASE("polynomial algebra") {
    RationalPolynomial x = RationalPolynomial::linear(0);
    RationalPolynomial p =
        (x + RationalPolynomial::constant(1)) * (x + RationalPolynomial::constant(2));
    CHECK(p.degree() == 2);
    CHECK(p(Rational(-1)) == 0);
    CHECK(p.divisible_by_linear(Rational(2)));
    CHECK(p.divide_linear_exact(Rational(1)) == x + RationalPolynomial::constant(2));
    CHECK_THROWS_AS(p.divide_linear_exact(Rational(5)), std::domain_error);

    // p(-2-m) for p = 3+3m is -3-3m.
    RationalPolynomial q = RationalPolynomial({Rational(3), Rational(3)})
                               .composed_linear(Rational(-1), Rational(-2));
    CHECK(q == RationalPolynomial({Rational(-3), Rational(-3)}));
}
