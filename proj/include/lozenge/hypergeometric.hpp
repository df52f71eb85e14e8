#pragma once

// Exact verification of the terminating hypergeometric identities the
// determinant evaluations rest on: the Chu-Vandermonde summation, a
// contiguous relation for 3F2 series, the Whipple and Bailey
// transformations at the specializations used here, and the column
// relations of the scaled axis matrix (the null linear combinations at
// m = -e-1/2 and the reflection identity relating m and -N-m).
//
// Every series is a finite sum of exact rationals; truncation always comes
// from a terminating (nonpositive integer) numerator parameter, so there is
// no convergence question anywhere.

#include "lozenge/determinant.hpp"
#include "lozenge/exact.hpp"

#include <string>
#include <vector>

namespace lozenge {

struct SeriesSpec {
    std::vector<Rational> numerator_params;
    std::vector<Rational> denominator_params;
    Rational argument = 1;
    long truncation = 0;  // sum over k = 0..truncation inclusive
};

// sum_{k=0}^{T} (a_1)_k ... (a_r)_k / (k! (b_1)_k ... (b_s)_k) z^k.
// Throws std::domain_error if a denominator shifted factorial vanishes
// within range.
Rational terminating_sum(const SeriesSpec& spec);

// Smallest t >= 0 with -t among the parameters; throws if none terminates.
long natural_truncation(const std::vector<Rational>& numerator_params);

struct IdentityCheck {
    std::string label;
    Rational lhs, rhs;
    bool ok = false;
};

// 2F1(a, -n; c; 1) = (c-a)_n / (c)_n; requires (c)_n != 0.
IdentityCheck check_chu_vandermonde(const Rational& a, const Rational& c, long n);

// 3F2(a,A1,A2;B1,B2;z) = 3F2(a-1,A1,A2;B1,B2;z)
//                        + z A1 A2/(B1 B2) 3F2(a,A1+1,A2+1;B1+1,B2+1;z)
// at z = 1, with A1 = -n or A2 = -n forcing termination.
IdentityCheck check_contiguous(const Rational& a, const Rational& A1, const Rational& A2,
                               const Rational& B1, const Rational& B2, long n);

// The specialization used on the reflection identity's entries (j >= 2):
//   3F2(1-2m-N, 1-j, 1-i-m; -2m-N, 3-2i+N; 1)
//     = (i-m-N-1)(N+j+2m-1)(N-i+m+2)_{j-2} / ((-2m-N)(N-2i+3)_{j-1}),
// verified together with the contiguous-relation instance behind it.
// Returns false in .applicable when a denominator vanishes on this (i,j).
struct SpecializedContiguous {
    bool applicable = false;
    IdentityCheck closed_form;
    IdentityCheck relation;
    bool ok() const { return !applicable || (closed_form.ok && relation.ok); }
};
SpecializedContiguous check_contiguous_specialized(long N, long m, long i, long j);

// Whipple transformation at the specialization in use: the l-terminating
// very-well-poised sum equals
//   (1-N)_{l-1} (1/2-l)_{l-1} / ((1/2-N)_{l-1} (1-l)_{l-1})
//     * 4F3(1, 1/2, l-N, 1-l; 1+m, 1-m-N, 3/2; 1).
IdentityCheck check_whipple_special(long N, long m, long l);

// The factorial prefactor times 4F3(1-l,1,1,3/2-l+N; 3/2,2-l-m,2-l+m+N; 1)
// equals proportion(N, m, l) exactly.
IdentityCheck check_bailey_special(long N, long m, long l);

// The very-well-poised rewriting of the proportion:
//   (2N-1)! ((m+1)_{N-1})^2 / ((N-1)!^2 (2m+1)_{2N-1}) * (terminating sum)
// equals proportion(N, m, l).
IdentityCheck check_proportion_hypergeometric_form(long N, long m, long l);

// Null column combination of the plain axis matrix at m = -e-1/2:
//   sum_{j=0}^{k} C(k,j) col(N-2e+k+j) - (N-e-l+1/2)_k/((-4)^k (N-e-l+1)_k) col(N-2e) = 0.
// Requires 1 <= l <= floor((N+1)/2) and 1 <= k <= e <= floor(N/2)-1.
IdentityCheck check_column_null_combination(long N, long l, long e, long k);

// Reflection identity at a sample m: with R_{i,j} = (-1)^j C(j-1, i-1), the
// product (axis matrix at m) * R equals the axis matrix at -N-m with row l
// negated.
IdentityCheck check_reflection_identity(long N, long l, const Rational& m);

struct ColumnRelationsCheck {
    IdentityCheck null_combination;
    IdentityCheck reflection;
    bool ok() const { return null_combination.ok && reflection.ok; }
};

// Both checks above; the reflection part is evaluated at m = 2 and m = 7/3.
ColumnRelationsCheck check_column_relations(long N, long l, long e, long k);

}  // namespace lozenge
