#pragma once

// Exact matrix machinery behind the tiling counts: the lattice-path
// determinants for the two half regions, the scaled axis matrix whose
// determinant is a polynomial in m, its column-reduced variant, exact
// fraction-free determinant evaluation, reconstruction of the polynomial
// cofactor by interpolation, the block decomposition used to evaluate that
// cofactor at negative integers, and the auxiliary determinant lemma of
// Krattenthaler.
//
// The scaled axis matrix has 1-based entries
//
//   (m+i-j+1)_{j-1} (N+j-2i+2)_{N-j} (m + (N-j+1)/2)    for rows i != l,
//   (m+i-j+1)_{j-1} (N+j-2i+1)_{N-j+1}                  for row  i  = l,
//
// so every entry is a rational constant times a product of monic linear
// factors (m + c).  The column-reduced variant replaces columns
// N-2e+1 <= j <= N-e (local index k = j - (N-2e+1)) by
//
//   (m+2e+i-k-N)_{N-2e+k} (m+N-i+1)_k (2N-2e-2i+2k+3)_{2e-2k-1}   i != l,
//   (2N-2e-2i+2k+2)_{2e-2k} (m+2e+i-k-N)_{N-e-i+k}
//       (m+e+1)_{i-e-1} (m+1-i+N)_k                               i  = l,
//
// where negative shifted-factorial lengths contribute linear factors to a
// denominator.  Entries are therefore built in a factored form (constant,
// numerator roots, denominator roots), which is what makes evaluation at
// the critical points m = -e exact: a zero constant factor annihilates the
// entry as a rational function, regardless of denominator roots.

#include "lozenge/closed_forms.hpp"
#include "lozenge/exact.hpp"
#include "lozenge/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace lozenge {

struct RationalMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Rational> entries;  // row-major

    RationalMatrix() = default;
    RationalMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    Rational& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static RationalMatrix identity(std::size_t n);
    // Half-open 0-based ranges.
    RationalMatrix submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                             std::size_t c1) const;
    RationalMatrix multiply(const RationalMatrix& o) const;
};

// Exact determinant by fraction-free (Bareiss) elimination: rows are scaled
// to integers once, elimination stays in integers with exact divisions, and
// pivoting takes the first nonzero entry of each column.
Rational det_exact(const RationalMatrix& M);

// N x N matrix with entries binomial(m+i, m-i+j); its determinant counts the
// nonintersecting path families of the simple half region.
RationalMatrix build_simple_matrix(long N, long m);

// N x N matrix of weighted path counts for the half region with fixed axis
// positions L: rows i in L use (N+m-i)!/((m+i-j)!(N+j-2i)!), other rows use
// (N+m-i)!/((m+i-j)!(N+j-2i+1)!) * (m+(N-j+1)/2), with 1/x! = 0 for
// negative x.
RationalMatrix build_complex_matrix(long N, long m, const std::vector<long>& L);

enum class AxisMatrixVariant { plain, column_reduced };

struct AxisMatrixSpec {
    long N = 1;
    long l = 1;
    AxisMatrixVariant variant = AxisMatrixVariant::plain;
    long e = 0;  // column_reduced only; 0 <= e <= N/2
};

// An entry in factored form: coeff * prod (m + num_root) / prod (m + den_root).
struct FactoredEntry {
    Rational coeff = 1;
    std::vector<Rational> num_roots;
    std::vector<Rational> den_roots;

    void mul_constant(const Rational& c) { coeff *= c; }
    // (a)_len for a constant a (len must be >= 0 here).
    void mul_pochhammer_constant(const Rational& a, long len);
    // (m + c)_len, negative len allowed (adds denominator roots).
    void mul_pochhammer_linear(const Rational& c, long len);

    // Exact evaluation: matching numerator/denominator roots cancel first; a
    // zero coeff short-circuits to 0; a surviving denominator root at -m
    // raises std::domain_error.
    Rational eval(const Rational& m) const;
    // Expansion to a polynomial; throws if denominator roots survive.
    RationalPolynomial to_polynomial() const;
};

FactoredEntry axis_matrix_entry(const AxisMatrixSpec& spec, long i, long j);  // 1-based

// The matrix with m substituted (m may be any rational; evaluation at the
// critical points m = -e is exact, see FactoredEntry).
RationalMatrix build_axis_matrix(const AxisMatrixSpec& spec, const Rational& m);

// Symbolic (polynomial-entry) form; column_reduced requires the range
// ceil((N+1)/2) <= l <= N, where all entries are genuine polynomials.
std::vector<std::vector<RationalPolynomial>> build_axis_matrix_poly(const AxisMatrixSpec& spec);

// det of the plain axis matrix as a polynomial in m, reconstructed by
// interpolation at m = 1..binom(N+1,2) (all poles avoided).
RationalPolynomial scaled_det_polynomial(long N, long l);

// Roots c of the forced linear factors (m+c): the product
// prod_{i=1}^{floor(N/2)} (m+i)_{N-2i+1} (m+i+1/2)_{N-2i}.
std::vector<Rational> forced_divisor_roots(long N);

// scaled_det_polynomial divided exactly by the forced factors; degree at
// most N-1.  Throws std::domain_error if any division is inexact.
RationalPolynomial axis_polynomial(long N, long l);

// ---- block decomposition of the column-reduced matrix at m = -e ----------

struct BlockDecomposition {
    RationalMatrix Q1;  // rows N+1-e..N,   cols N+1-2e..N-e (upper triangular)
    RationalMatrix Q2;  // rows e+1..N-e,   cols 1..N-2e     (lower triangular)
    RationalMatrix M;   // rows 1..e,       cols N+1-e..N
    int sign = 1;       // (-1)^{e(N-e)}
};

struct BlockCheckResult {
    bool zero_case = false;  // e >= N+1-l: the determinant must vanish
    Rational det_reduced;    // det of the column-reduced matrix at m = -e
    Rational det_q1, det_q2, det_m;
    bool factorization_ok = true;  // det = sign * det(Q2) det(Q1) det(M)
    bool q1_ok = true, q2_ok = true, m_ok = true;
    bool zero_ok = true;  // zero case: det_reduced == 0 and det(Q1) == 0
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

// Closed forms of the three block determinants.
Rational q1_det_closed_form(long N, long l, long e);
Rational q2_det_closed_form(long N, long e);
Rational m_det_closed_form(long N, long e);

// Builds the column-reduced matrix at m = -e, extracts the blocks, and
// checks the determinant factorization plus each block's closed form.
// Requires ceil((N+1)/2) <= l <= N and 0 <= e <= floor(N/2).
BlockCheckResult check_block_decomposition(long N, long l, long e,
                                           BlockDecomposition* blocks_out = nullptr);

// Value of the polynomial cofactor at m = -e obtained through the
// column-reduced determinant: det_reduced / (forced product with the e
// copies of (m+e) removed), evaluated at m = -e.  Valid in the nonzero case
// e <= N-l.
Rational axis_polynomial_value_from_blocks(long N, long l, long e);

// ---- column-reduction consistency (symbolic) ------------------------------

struct ColumnReductionCheck {
    bool divisible = true;      // every entry of each combined column gains (m+e)
    bool matches_reduced = true;  // quotients equal the column_reduced entries
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// For k = 0..e-1, adds sum_{i=1}^{k} C(k,i) * column(N+1-2e+k+i) of the
// plain matrix to column N+1-2e+k, checks every entry of the result is
// divisible by (m+e) as a polynomial, and that the quotients reproduce the
// column_reduced definition.  Requires ceil((N+1)/2) <= l <= N.
ColumnReductionCheck check_column_reduction(long N, long l, long e);

// ---- Krattenthaler's determinant lemma ------------------------------------

// det(( (X_i+A_n)...(X_i+A_{j+1}) (X_i+B_j)...(X_i+B_2) ))_{1<=i,j<=n}
//   = prod_{i<j} (X_i - X_j) * prod_{2<=i<=j<=n} (B_i - A_j).
struct KrattenthalerInput {
    std::vector<Rational> X;  // length n
    std::vector<Rational> A;  // A[t] holds A_{t+2}; length n-1
    std::vector<Rational> B;  // same indexing; length n-1

    long n() const { return static_cast<long>(X.size()); }
};

RationalMatrix krattenthaler_matrix(const KrattenthalerInput& in);
Rational krattenthaler_product(const KrattenthalerInput& in);

}  // namespace lozenge
