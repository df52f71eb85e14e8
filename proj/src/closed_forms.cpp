#include "lozenge/closed_forms.hpp"

#include <algorithm>

namespace lozenge {

void validate(const AxisProblem& p) {
    if (p.N < 1) throw std::invalid_argument("N must be positive");
    if (p.m < 0) throw std::invalid_argument("m must be nonnegative");
    if (p.l < 1 || p.l > p.N) throw std::invalid_argument("l out of range");
    if (p.parity == Parity::odd && p.m < 1)
        throw std::invalid_argument("odd parity requires m >= 1");
}

void validate(const AxisSet& s) {
    if (s.N < 1) throw std::invalid_argument("N must be positive");
    if (s.m < 0) throw std::invalid_argument("m must be nonnegative");
    if (s.L.empty()) throw std::invalid_argument("L must be nonempty");
    if (!std::is_sorted(s.L.begin(), s.L.end()) ||
        std::adjacent_find(s.L.begin(), s.L.end()) != s.L.end())
        throw std::invalid_argument("L must be strictly increasing");
    if (s.L.front() < 1 || s.L.back() > s.N) throw std::invalid_argument("L out of range");
    if (s.parity == Parity::odd && s.m < 1)
        throw std::invalid_argument("odd parity requires m >= 1");
}

HexagonShape hexagon_of(const AxisProblem& p) {
    return p.parity == Parity::even ? HexagonShape{p.N, 2 * p.m, p.N}
                                    : HexagonShape{p.N + 1, 2 * p.m - 1, p.N + 1};
}

HexagonShape hexagon_of(const AxisSet& s) {
    return s.parity == Parity::even ? HexagonShape{s.N, 2 * s.m, s.N}
                                    : HexagonShape{s.N + 1, 2 * s.m - 1, s.N + 1};
}

Integer macmahon_count(const HexagonShape& shape) {
    if (shape.a < 0 || shape.b < 0 || shape.c < 0)
        throw std::invalid_argument("hexagon sides must be nonnegative");
    Integer num = 1, den = 1;
    for (long i = 1; i <= shape.a; ++i)
        for (long j = 1; j <= shape.b; ++j)
            for (long k = 1; k <= shape.c; ++k) {
                num *= i + j + k - 1;
                den *= i + j + k - 2;
            }
    return num / den;  // the quotient is the plane-partition count, an integer
}

namespace {

// Everything in the axis sum except the 1/((m+e)(m+N-e)) pair:
//   (-1)^e C(N,e) (N-2e) (1/2)_e / (1/2-N)_e.
Rational axis_term_coefficient(long N, long e) {
    Rational c = Rational(binomial(N, e)) * Rational(N - 2 * e);
    if (e % 2 != 0) c = -c;
    return c * pochhammer(Rational(1, 2), e) / pochhammer(Rational(1, 2) - N, e);
}

// The common prefactor m C(m+N,m) C(m+N-1,m) / C(2m+2N-1,2m), with the m
// kept fused into the axis sum (see axis_sum_times_m).
Rational count_prefactor_over_m(long N, long m) {
    return Rational(binomial(m + N, m)) * Rational(binomial(m + N - 1, m)) /
           Rational(binomial(2 * m + 2 * N - 1, 2 * m));
}

}  // namespace

Rational axis_sum(long N, long m, long l) {
    if (m < 1) throw std::invalid_argument("axis_sum requires m >= 1");
    if (l < 1 || l > N) throw std::invalid_argument("l out of range");
    Rational s = 0;
    for (long e = 0; e < l; ++e)
        s += axis_term_coefficient(N, e) / (Rational(m + e) * Rational(m + N - e));
    return s;
}

Rational axis_sum_times_m(long N, long m, long l) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (l < 1 || l > N) throw std::invalid_argument("l out of range");
    // e = 0 term: m cancels against 1/(m+e), leaving N/(m+N).
    Rational s = Rational(N) / Rational(m + N);
    for (long e = 1; e < l; ++e)
        s += axis_term_coefficient(N, e) * Rational(m) /
             (Rational(m + e) * Rational(m + N - e));
    return s;
}

Integer fixed_rhombus_count(const AxisProblem& p) {
    validate(p);
    Rational value = count_prefactor_over_m(p.N, p.m) * axis_sum_times_m(p.N, p.m, p.l) *
                     Rational(macmahon_count(hexagon_of(p)));
    Integer count = to_integer_exact(value, "fixed rhombus count");
    if (count < 0) throw std::domain_error("fixed rhombus count is negative");
    return count;
}

Rational proportion(const AxisProblem& p) {
    validate(p);
    return count_prefactor_over_m(p.N, p.m) * axis_sum_times_m(p.N, p.m, p.l);
}

Integer simple_det_closed_form(long N, long m) {
    if (N < 0 || m < 0) throw std::invalid_argument("N, m must be nonnegative");
    Rational prod = 1;
    for (long i = 1; i <= N; ++i) {
        prod *= Rational(factorial(N + m - i + 1)) * Rational(factorial(i - 1)) *
                pochhammer(Rational(2 * m + i + 1), i - 1) /
                (Rational(factorial(m + i - 1)) * Rational(factorial(2 * N - 2 * i + 1)));
    }
    return to_integer_exact(prod, "simple half-region count");
}

namespace {

// prod_{i=1}^{N} (N+m-i)! / ((m+i-1)! (2N-2i+1)!) -- the per-row factors
// taken out of the weighted half-region determinant.
Rational row_factor_product(long N, long m) {
    Rational prod = 1;
    for (long i = 1; i <= N; ++i)
        prod *= Rational(factorial(N + m - i)) /
                (Rational(factorial(m + i - 1)) * Rational(factorial(2 * N - 2 * i + 1)));
    return prod;
}

// prod_{i=1}^{floor(N/2)} (m+i)_{N-2i+1} (m+i+1/2)_{N-2i}, the forced factors
// of the scaled determinant, evaluated at integer m.
Rational forced_factor_product(long N, long m) {
    Rational prod = 1;
    for (long i = 1; i <= N / 2; ++i)
        prod *= pochhammer(Rational(m + i), N - 2 * i + 1) *
                pochhammer(Rational(m + i) + Rational(1, 2), N - 2 * i);
    return prod;
}

// 2^{(N-1)(N-2)/2} prod_j (2j-1)! / (N! prod_i (2i)_{2N-4i+1}).
Rational polynomial_prefactor(long N) {
    Rational prod = pow_rational(Rational(2), (N - 1) * (N - 2) / 2);
    for (long j = 1; j <= N; ++j) prod *= Rational(factorial(2 * j - 1));
    prod /= Rational(factorial(N));
    for (long i = 1; i <= N / 2; ++i) prod /= pochhammer(Rational(2 * i), 2 * N - 4 * i + 1);
    return prod;
}

}  // namespace

Rational axis_det_closed_form(long N, long m, long l) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (l < 1 || l > N) throw std::invalid_argument("l out of range");
    return row_factor_product(N, m) * forced_factor_product(N, m) *
           axis_polynomial_closed_form(N, l)(Rational(m));
}

RationalPolynomial axis_polynomial_closed_form(long N, long l) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    if (l < 1 || l > N) throw std::invalid_argument("l out of range");
    // (m)_{N+1} / ((m+e)(m+N-e)) is the product of (m+t) over
    // t in {0..N} \ {e, N-e}; the N = 2e term vanishes with its (N-2e)
    // coefficient, so e != N-e whenever a term survives.
    RationalPolynomial sum;
    for (long e = 0; e < l; ++e) {
        if (N - 2 * e == 0) continue;
        RationalPolynomial part = RationalPolynomial::constant(axis_term_coefficient(N, e));
        for (long t = 0; t <= N; ++t) {
            if (t == e || t == N - e) continue;
            part = part * RationalPolynomial::linear(Rational(t));
        }
        sum = sum + part;
    }
    return sum * polynomial_prefactor(N);
}

std::vector<long> conjecture_positions(ConjecturePattern pattern, long r) {
    std::vector<long> L;
    for (long i = 1; i < r; ++i) L.push_back(i);
    switch (pattern) {
        case ConjecturePattern::consecutive: L.push_back(r); break;
        case ConjecturePattern::skip1: L.push_back(r + 1); break;
        case ConjecturePattern::skip2: L.push_back(r + 2); break;
    }
    return L;
}

Rational conjecture_count(ConjecturePattern pattern, long N, long m, long r, Parity parity) {
    if (N < 1 || r < 1) throw std::invalid_argument("N, r must be positive");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    long span = r;
    if (pattern == ConjecturePattern::skip1) span = r + 1;
    if (pattern == ConjecturePattern::skip2) span = r + 2;
    if (N < span) throw std::invalid_argument("N too small for the requested pattern");

    // Shared skeleton of all three conjectured formulas.
    Rational value = pow_rational(Rational(2), (r - 1) * (r - 2 * N) / 2);
    value *= Rational(binomial(m + N - 1, m)) * Rational(binomial(m + N - 1, m)) /
             Rational(binomial(2 * m + 2 * N - 1, 2 * m));
    for (long i = N - r; i <= N - 2; ++i) value /= Rational(factorial(i));
    for (long i = 1; i <= r - 1; ++i) {
        value *= Rational(double_factorial(2 * i)) * Rational(double_factorial(2 * N - 2 * i - 1)) *
                 pochhammer(Rational(m + i + 1), N - 2 * i - 1) /
                 (Rational(double_factorial(2 * i - 1)) *
                  pochhammer(Rational(m + i) + Rational(1, 2), N - 2 * i));
    }

    if (pattern == ConjecturePattern::skip1) {
        value *= Rational(3 * r * (N - r)) /
                 (Rational(2 * r - 1) * Rational(2 * N - 2 * r + 1) * Rational(m + r) *
                  Rational(m + N - r));
        value *= Rational(m) * m + Rational(N) * m +
                 Rational((2 * r - 1) * (2 * N - 2 * r + 1)) / 3;
    } else if (pattern == ConjecturePattern::skip2) {
        value *= Rational(45, 64) * pochhammer(Rational(r), 2) * pochhammer(Rational(N - r - 1), 2) /
                 (pochhammer(Rational(r) - Rational(1, 2), 2) *
                  pochhammer(Rational(N - r) - Rational(1, 2), 2) *
                  pochhammer(Rational(m + r), 2) * pochhammer(Rational(m + N - r - 1), 2));
        Rational mq(m), Nq(N), rq(r);
        Rational quartic = mq * mq * mq * mq + 2 * Nq * mq * mq * mq;
        quartic += (Nq * Nq + (20 * rq + 1) * Nq / 9 - (20 * rq * rq + 2 * rq + 5) / 9) * mq * mq;
        quartic += ((20 * rq + 1) * Nq - 20 * rq * rq - 2 * rq - 5) / 9 * Nq * mq;
        quartic += Rational(4, 45) * (2 * rq - 1) * (2 * rq + 1) * (2 * Nq - 2 * rq - 1) *
                   (2 * Nq - 2 * rq + 1);
        value *= quartic;
    }

    HexagonShape hex = parity == Parity::even ? HexagonShape{N, 2 * m, N}
                                              : HexagonShape{N + 1, 2 * m - 1, N + 1};
    return value * Rational(macmahon_count(hex));
}

}  // namespace lozenge
