#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lozenge/closed_forms.hpp"

using namespace lozenge;

TEST_CASE("macmahon product") {
    CHECK(macmahon_count({0, 5, 7}) == 1);
    CHECK(macmahon_count({1, 1, 1}) == 2);
    CHECK(macmahon_count({2, 2, 2}) == 20);
    CHECK(macmahon_count({3, 3, 2}) == 175);
    CHECK(macmahon_count({1, 2, 1}) == 3);
    // symmetric in the sides
    CHECK(macmahon_count({3, 4, 5}) == macmahon_count({5, 3, 4}));
}

TEST_CASE("axis sum values") {
    CHECK(axis_sum(2, 1, 1) == Rational(2, 3));
    CHECK(axis_sum(2, 1, 2) == Rational(2, 3));  // the e=1 term vanishes with N-2e = 0
    for (long N = 1; N <= 5; ++N)
        for (long m = 1; m <= 3; ++m)
            CHECK(axis_sum(N, m, 1) == Rational(N) / (Rational(m) * Rational(m + N)));
    // the fused form agrees where both are defined
    for (long N = 1; N <= 5; ++N)
        for (long m = 1; m <= 3; ++m)
            for (long l = 1; l <= N; ++l)
                CHECK(axis_sum_times_m(N, m, l) == Rational(m) * axis_sum(N, m, l));
}

TEST_CASE("fixed rhombus counts") {
    CHECK(fixed_rhombus_count({1, 1, 1, Parity::even}) == 1);
    CHECK(fixed_rhombus_count({2, 1, 1, Parity::even}) == 8);
    CHECK(fixed_rhombus_count({2, 1, 1, Parity::odd}) == 8);
    CHECK(fixed_rhombus_count({2, 1, 2, Parity::even}) == 8);
    // m = 0 degeneracy: the only tiling of the thin hexagon contains every
    // axis rhombus.
    for (long N = 1; N <= 5; ++N)
        for (long l = 1; l <= N; ++l)
            CHECK(fixed_rhombus_count({N, 0, l, Parity::even}) == 1);
}

TEST_CASE("fixed rhombus count invariants") {
    for (long N = 1; N <= 5; ++N)
        for (long m = 1; m <= 3; ++m)
            for (long l = 1; l <= N; ++l) {
                AxisProblem even{N, m, l, Parity::even};
                AxisProblem odd{N, m, l, Parity::odd};
                Integer count = fixed_rhombus_count(even);
                // position symmetry
                CHECK(count == fixed_rhombus_count({N, m, N + 1 - l, Parity::even}));
                // bounded by the total count
                CHECK(count >= 0);
                CHECK(count <= macmahon_count(hexagon_of(even)));
                // proportion independent of parity
                CHECK(proportion(even) == proportion(odd));
                CHECK(Rational(count) ==
                      proportion(even) * Rational(macmahon_count(hexagon_of(even))));
                CHECK(Rational(fixed_rhombus_count(odd)) ==
                      proportion(odd) * Rational(macmahon_count(hexagon_of(odd))));
            }
}

TEST_CASE("proportion values") {
    CHECK(proportion({2, 1, 1, Parity::even}) == Rational(2, 5));
    CHECK(proportion({1, 1, 1, Parity::odd}) == Rational(1, 3));
    CHECK(proportion({2, 1, 1, Parity::odd}) == Rational(2, 5));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(AxisProblem{2, 1, 3, Parity::even}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AxisProblem{0, 1, 1, Parity::even}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AxisProblem{2, 0, 1, Parity::odd}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AxisSet{2, 1, {}, Parity::even}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AxisSet{2, 1, {2, 1}, Parity::even}), std::invalid_argument);
    CHECK_THROWS_AS(validate(AxisSet{2, 1, {1, 3}, Parity::even}), std::invalid_argument);
}

TEST_CASE("simple half-region closed form") {
    CHECK(simple_det_closed_form(0, 4) == 1);
    for (long m = 0; m <= 6; ++m) CHECK(simple_det_closed_form(1, m) == m + 1);
    CHECK(simple_det_closed_form(2, 1) == 5);
}

TEST_CASE("weighted half-region closed form") {
    for (long m = 1; m <= 5; ++m) CHECK(axis_det_closed_form(1, m, 1) == Rational(1));
    CHECK(axis_det_closed_form(2, 1, 1) == Rational(2));
    CHECK(axis_det_closed_form(2, 1, 2) == Rational(2));
}

TEST_CASE("axis polynomial closed form") {
    CHECK(axis_polynomial_closed_form(1, 1) == RationalPolynomial::constant(1));
    CHECK(axis_polynomial_closed_form(2, 1) == RationalPolynomial({Rational(3), Rational(3)}));
    // 30(m+1)(m+2)
    CHECK(axis_polynomial_closed_form(3, 1) ==
          RationalPolynomial({Rational(60), Rational(90), Rational(30)}));
    // degree bound and the divisor (m+l)_{N-2l+1} when it applies
    for (long N = 1; N <= 6; ++N)
        for (long l = 1; l <= N; ++l) {
            RationalPolynomial p = axis_polynomial_closed_form(N, l);
            CHECK(p.degree() <= N - 1);
            for (long t = 0; t <= N - 2 * l; ++t) {
                CHECK(p.divisible_by_linear(Rational(l + t)));
                p = p.divide_linear_exact(Rational(l + t));
            }
        }
}

TEST_CASE("conjecture patterns") {
    CHECK(conjecture_positions(ConjecturePattern::consecutive, 3) == std::vector<long>{1, 2, 3});
    CHECK(conjecture_positions(ConjecturePattern::skip1, 3) == std::vector<long>{1, 2, 4});
    CHECK(conjecture_positions(ConjecturePattern::skip2, 1) == std::vector<long>{3});
}

TEST_CASE("conjecture counts") {
    CHECK(conjecture_count(ConjecturePattern::consecutive, 2, 1, 1, Parity::even) == Rational(8));
    CHECK(conjecture_count(ConjecturePattern::consecutive, 2, 1, 2, Parity::even) == Rational(4));
    CHECK(conjecture_count(ConjecturePattern::skip1, 2, 1, 1, Parity::even) == Rational(8));
    CHECK(conjecture_count(ConjecturePattern::skip2, 3, 1, 1, Parity::even) == Rational(75));
    CHECK_THROWS_AS(conjecture_count(ConjecturePattern::skip2, 3, 1, 2, Parity::even),
                    std::invalid_argument);
    CHECK_THROWS_AS(conjecture_count(ConjecturePattern::consecutive, 2, 0, 1, Parity::even),
                    std::invalid_argument);
}

TEST_CASE("single-position conjectures reduce to the theorem counts") {
    for (long N = 1; N <= 5; ++N)
        for (long m = 1; m <= 3; ++m)
            for (Parity parity : {Parity::even, Parity::odd}) {
                CHECK(conjecture_count(ConjecturePattern::consecutive, N, m, 1, parity) ==
                      Rational(fixed_rhombus_count({N, m, 1, parity})));
                if (N >= 2)
                    CHECK(conjecture_count(ConjecturePattern::skip1, N, m, 1, parity) ==
                          Rational(fixed_rhombus_count({N, m, 2, parity})));
                if (N >= 3)
                    CHECK(conjecture_count(ConjecturePattern::skip2, N, m, 1, parity) ==
                          Rational(fixed_rhombus_count({N, m, 3, parity})));
            }
}
