#pragma once

// Closed-form counting formulas for rhombus tilings of symmetric hexagons
// with fixed rhombi on the symmetry axis: the MacMahon box-counting product,
// the single-fixed-rhombus counts for both side parities, the tiling
// proportion, the closed forms of the two half-region determinants, the
// polynomial cofactor of the scaled axis determinant, and the three
// conjectured multi-rhombus counts.
//
// Everything is evaluated purely in exact rational arithmetic; integrality
// of counts is asserted, never assumed.

#include "lozenge/exact.hpp"
#include "lozenge/polynomial.hpp"

#include <vector>

namespace lozenge {

struct HexagonShape {
    long a = 0, b = 0, c = 0;  // side lengths, repeated cyclically a,b,c,a,b,c
};

enum class Parity { even, odd };

// A symmetric-hexagon instance with one fixed rhombus on the symmetry axis.
// Even parity means the hexagon N,2m,N,N,2m,N; odd parity means
// N+1,2m-1,N+1,N+1,2m-1,N+1 (which requires m >= 1).  In both cases the
// symmetry axis crosses N rhombi, indexed l = 1..N from one end.
struct AxisProblem {
    long N = 1;
    long m = 0;
    long l = 1;
    Parity parity = Parity::even;
};

// Several fixed rhombi: positions L, a nonempty strictly increasing subset
// of {1..N}.
struct AxisSet {
    long N = 1;
    long m = 0;
    std::vector<long> L;
    Parity parity = Parity::even;

    long r() const { return static_cast<long>(L.size()); }
};

enum class ConjecturePattern { consecutive, skip1, skip2 };

// Throws std::invalid_argument naming the violated precondition.
void validate(const AxisProblem& p);
void validate(const AxisSet& s);

// The hexagon a,b,c the instance lives in: (N,2m,N) or (N+1,2m-1,N+1).
HexagonShape hexagon_of(const AxisProblem& p);
HexagonShape hexagon_of(const AxisSet& s);

// Total number of rhombus tilings of the a,b,c hexagon:
//   prod_{i<=a} prod_{j<=b} prod_{k<=c} (i+j+k-1)/(i+j+k-2),
// accumulated as one exact integer ratio and divided once.
Integer macmahon_count(const HexagonShape& shape);

// The alternating axis sum shared by both parities:
//   sum_{e=0}^{l-1} (-1)^e C(N,e) (N-2e)(1/2)_e / ((m+e)(m+N-e)(1/2-N)_e).
// Requires m >= 1 (the e = 0 term has a pole at m = 0).
Rational axis_sum(long N, long m, long l);

// m * axis_sum with the e = 0 pole cancelled algebraically, so it is
// well-defined at m = 0 as well (where it evaluates to N/(m+N) -> 1).
Rational axis_sum_times_m(long N, long m, long l);

// Number of tilings of the instance's hexagon containing the l-th axis
// rhombus.  Throws std::domain_error if the formula value is not a
// nonnegative integer (which would signal an implementation bug).
Integer fixed_rhombus_count(const AxisProblem& p);

// fixed_rhombus_count / macmahon_count of the same hexagon; independent of
// the parity by construction.
Rational proportion(const AxisProblem& p);

// Closed form of the binomial determinant counting the simple half-region:
//   prod_{i=1}^{N} (N+m-i+1)! (i-1)! (2m+i+1)_{i-1} / ((m+i-1)! (2N-2i+1)!).
Integer simple_det_closed_form(long N, long m);

// Closed form of the weighted half-region determinant for one fixed rhombus
// (row-factor product, the forced shifted-factorial factors, and the axis
// sum line).  Requires m >= 1.
Rational axis_det_closed_form(long N, long m, long l);

// The polynomial in m
//   2^{(N-1)(N-2)/2} (m)_{N+1} prod_j (2j-1)!
//     / (N! prod_i (2i)_{2N-4i+1}) * axis_sum(N,m,l)
// expanded exactly; the (m+e)(m+N-e) denominators cancel into (m)_{N+1}.
RationalPolynomial axis_polynomial_closed_form(long N, long l);

// The conjectured closed-form count for L = {1..r}, {1..r-1, r+1} or
// {1..r-1, r+2}.  Returned as a rational so that a falsification
// (non-integrality) is observable rather than a crash.
Rational conjecture_count(ConjecturePattern pattern, long N, long m, long r, Parity parity);

// The position set a conjecture pattern fixes.
std::vector<long> conjecture_positions(ConjecturePattern pattern, long r);

}  // namespace lozenge
