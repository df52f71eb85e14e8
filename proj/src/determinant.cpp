#include "lozenge/determinant.hpp"

#include <algorithm>
#include <map>

namespace lozenge {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::submatrix(std::size_t r0, std::size_t r1, std::size_t c0,
                                         std::size_t c1) const {
    RationalMatrix m(r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) m.at(i - r0, j - c0) = at(i, j);
    return m;
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix multiply: shape mismatch");
    RationalMatrix m(rows, o.cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < cols; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

Rational det_exact(const RationalMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = M.rows;
    if (n == 0) return 1;

    // Clear denominators row by row so elimination stays in integers.
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    Rational scale = 1;  // det(M) = det(a) / scale
    for (std::size_t i = 0; i < n; ++i) {
        Integer lcm_den = 1;
        for (std::size_t j = 0; j < n; ++j)
            lcm_den = boost::multiprecision::lcm(lcm_den, denominator(M.at(i, j)));
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = numerator(M.at(i, j)) * (lcm_den / denominator(M.at(i, j)));
        scale *= Rational(lcm_den);
    }

    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1]) / scale;
}

RationalMatrix build_simple_matrix(long N, long m) {
    if (N < 0 || m < 0) throw std::invalid_argument("build_simple_matrix: N, m must be >= 0");
    RationalMatrix M(N, N);
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= N; ++j)
            M.at(i - 1, j - 1) = Rational(binomial(m + i, m - i + j));
    return M;
}

RationalMatrix build_complex_matrix(long N, long m, const std::vector<long>& L) {
    if (N < 1 || m < 0) throw std::invalid_argument("build_complex_matrix: bad N or m");
    std::vector<bool> fixed(N + 1, false);
    for (long l : L) {
        if (l < 1 || l > N) throw std::invalid_argument("build_complex_matrix: L out of range");
        fixed[l] = true;
    }
    RationalMatrix M(N, N);
    for (long i = 1; i <= N; ++i) {
        Rational row = Rational(factorial(N + m - i));
        for (long j = 1; j <= N; ++j) {
            if (fixed[i]) {
                M.at(i - 1, j - 1) = row * reciprocal_factorial(m + i - j) *
                                     reciprocal_factorial(N + j - 2 * i);
            } else {
                M.at(i - 1, j - 1) = row * reciprocal_factorial(m + i - j) *
                                     reciprocal_factorial(N + j - 2 * i + 1) *
                                     (Rational(m) + Rational(N - j + 1, 2));
            }
        }
    }
    return M;
}

void FactoredEntry::mul_pochhammer_constant(const Rational& a, long len) {
    if (len < 0)
        throw std::domain_error("constant shifted factorial of negative length in entry");
    Rational f = a;
    for (long t = 0; t < len; ++t, f += 1) coeff *= f;
}

void FactoredEntry::mul_pochhammer_linear(const Rational& c, long len) {
    if (len >= 0) {
        for (long t = 0; t < len; ++t) num_roots.push_back(c + t);
    } else {
        for (long t = 0; t < -len; ++t) den_roots.push_back(c + len + t);
    }
}

Rational FactoredEntry::eval(const Rational& m) const {
    if (coeff == 0) return 0;
    // Cancel common roots (multiset intersection).
    std::map<Rational, long> den_count;
    for (const auto& r : den_roots) ++den_count[r];
    Rational num = 1, den = 1;
    for (const auto& r : num_roots) {
        auto it = den_count.find(r);
        if (it != den_count.end() && it->second > 0) {
            --it->second;
            continue;
        }
        num *= m + r;
    }
    for (const auto& [r, cnt] : den_count)
        for (long t = 0; t < cnt; ++t) den *= m + r;
    if (den == 0) throw std::domain_error("matrix entry has a pole at the requested m");
    return coeff * num / den;
}

RationalPolynomial FactoredEntry::to_polynomial() const {
    if (coeff == 0) return {};
    std::map<Rational, long> den_count;
    for (const auto& r : den_roots) ++den_count[r];
    RationalPolynomial p = RationalPolynomial::constant(coeff);
    long uncancelled = 0;
    for (const auto& r : num_roots) {
        auto it = den_count.find(r);
        if (it != den_count.end() && it->second > 0) {
            --it->second;
            continue;
        }
        p = p * RationalPolynomial::linear(r);
    }
    for (const auto& [r, cnt] : den_count) uncancelled += cnt;
    if (uncancelled > 0)
        throw std::domain_error("matrix entry is not a polynomial in m");
    return p;
}

namespace {

void validate_spec(const AxisMatrixSpec& spec) {
    if (spec.N < 1) throw std::invalid_argument("axis matrix: N must be positive");
    if (spec.l < 1 || spec.l > spec.N) throw std::invalid_argument("axis matrix: l out of range");
    if (spec.variant == AxisMatrixVariant::column_reduced &&
        (spec.e < 0 || spec.e > spec.N / 2))
        throw std::invalid_argument("axis matrix: e out of range");
}

}  // namespace

FactoredEntry axis_matrix_entry(const AxisMatrixSpec& spec, long i, long j) {
    const long N = spec.N, l = spec.l, e = spec.e;
    FactoredEntry entry;
    const bool reduced_column = spec.variant == AxisMatrixVariant::column_reduced &&
                                j >= N - 2 * e + 1 && j <= N - e;
    if (!reduced_column) {
        entry.mul_pochhammer_linear(Rational(i - j + 1), j - 1);
        if (i != l) {
            entry.mul_pochhammer_constant(Rational(N + j - 2 * i + 2), N - j);
            entry.mul_pochhammer_linear(Rational(N - j + 1, 2), 1);
        } else {
            entry.mul_pochhammer_constant(Rational(N + j - 2 * i + 1), N - j + 1);
        }
        return entry;
    }
    const long k = j - (N - 2 * e + 1);
    if (i != l) {
        entry.mul_pochhammer_linear(Rational(2 * e + i - k - N), N - 2 * e + k);
        entry.mul_pochhammer_linear(Rational(N - i + 1), k);
        entry.mul_pochhammer_constant(Rational(2 * N - 2 * e - 2 * i + 2 * k + 3),
                                      2 * e - 2 * k - 1);
    } else {
        entry.mul_pochhammer_constant(Rational(2 * N - 2 * e - 2 * i + 2 * k + 2), 2 * e - 2 * k);
        entry.mul_pochhammer_linear(Rational(2 * e + i - k - N), N - e - i + k);
        entry.mul_pochhammer_linear(Rational(e + 1), i - e - 1);
        entry.mul_pochhammer_linear(Rational(1 - i + N), k);
    }
    return entry;
}

RationalMatrix build_axis_matrix(const AxisMatrixSpec& spec, const Rational& m) {
    validate_spec(spec);
    RationalMatrix M(spec.N, spec.N);
    for (long i = 1; i <= spec.N; ++i)
        for (long j = 1; j <= spec.N; ++j)
            M.at(i - 1, j - 1) = axis_matrix_entry(spec, i, j).eval(m);
    return M;
}

std::vector<std::vector<RationalPolynomial>> build_axis_matrix_poly(const AxisMatrixSpec& spec) {
    validate_spec(spec);
    std::vector<std::vector<RationalPolynomial>> M(spec.N,
                                                   std::vector<RationalPolynomial>(spec.N));
    for (long i = 1; i <= spec.N; ++i)
        for (long j = 1; j <= spec.N; ++j)
            M[i - 1][j - 1] = axis_matrix_entry(spec, i, j).to_polynomial();
    return M;
}

RationalPolynomial scaled_det_polynomial(long N, long l) {
    const long samples = N * (N + 1) / 2;
    AxisMatrixSpec spec{N, l, AxisMatrixVariant::plain, 0};
    std::vector<std::pair<Rational, Rational>> points;
    points.reserve(samples);
    for (long m = 1; m <= samples; ++m)
        points.emplace_back(Rational(m), det_exact(build_axis_matrix(spec, Rational(m))));
    return lagrange_interpolate(points);
}

std::vector<Rational> forced_divisor_roots(long N) {
    std::vector<Rational> roots;
    for (long i = 1; i <= N / 2; ++i) {
        for (long t = 0; t <= N - 2 * i; ++t) roots.push_back(Rational(i + t));
        for (long t = 0; t < N - 2 * i; ++t) roots.push_back(Rational(i + t) + Rational(1, 2));
    }
    return roots;
}

RationalPolynomial axis_polynomial(long N, long l) {
    RationalPolynomial p = scaled_det_polynomial(N, l);
    for (const Rational& c : forced_divisor_roots(N)) p = p.divide_linear_exact(c);
    return p;
}

Rational q1_det_closed_form(long N, long l, long e) {
    if (l >= N + 1 - e) return 0;
    Rational v = (e * (e - 1) / 2) % 2 == 0 ? 1 : -1;
    for (long k = 0; k < e; ++k)
        v *= Rational(factorial(k)) * Rational(factorial(2 * e - 2 * k - 1)) *
             Rational(factorial(N + k - 2 * e));
    return v;
}

Rational q2_det_closed_form(long N, long e) {
    // One row of the block (the fixed row l) carries no half weight, so the
    // power of 1/2 is N-2e-1, not N-2e.
    Rational v = pow_rational(Rational(1, 2), N - 2 * e - 1);
    for (long j = 1; j <= N - 2 * e; ++j)
        v *= Rational(factorial(j - 1)) * pochhammer(Rational(N - 2 * e - j + 1), N - j + 1);
    return v;
}

Rational m_det_closed_form(long N, long e) {
    Rational v = pow_rational(Rational(-2), e * (e - 1) / 2 - e) * pochhammer(Rational(e), e);
    for (long i = 1; i <= e; ++i)
        v *= Rational(factorial(i - 1)) * pochhammer(Rational(e - i + 1, 2), i - 1) *
             pochhammer(Rational(i - N), N - e);
    return v;
}

BlockCheckResult check_block_decomposition(long N, long l, long e, BlockDecomposition* blocks_out) {
    if (l < (N + 2) / 2 || l > N)
        throw std::invalid_argument("check_block_decomposition: l outside ceil((N+1)/2)..N");
    if (e < 0 || e > N / 2)
        throw std::invalid_argument("check_block_decomposition: e out of range");

    AxisMatrixSpec spec{N, l, AxisMatrixVariant::column_reduced, e};
    RationalMatrix D1 = build_axis_matrix(spec, Rational(-e));

    BlockDecomposition blocks;
    blocks.sign = (e * (N - e)) % 2 == 0 ? 1 : -1;
    // 0-based half-open ranges for the 1-based block boundaries.
    blocks.M = D1.submatrix(0, e, N - e, N);
    blocks.Q2 = D1.submatrix(e, N - e, 0, N - 2 * e);
    blocks.Q1 = D1.submatrix(N - e, N, N - 2 * e, N - e);

    BlockCheckResult res;
    res.zero_case = e >= N + 1 - l;
    res.det_reduced = det_exact(D1);
    res.det_q1 = det_exact(blocks.Q1);
    res.det_q2 = det_exact(blocks.Q2);
    res.det_m = det_exact(blocks.M);

    if (res.zero_case) {
        res.zero_ok = res.det_reduced == 0 && res.det_q1 == 0 &&
                      q1_det_closed_form(N, l, e) == 0;
        if (!res.zero_ok)
            res.failures.push_back("zero case: reduced determinant or Q1 did not vanish");
    } else {
        Rational product = Rational(blocks.sign) * res.det_q2 * res.det_q1 * res.det_m;
        res.factorization_ok = res.det_reduced == product;
        if (!res.factorization_ok)
            res.failures.push_back("block factorization: det != sign*det(Q2)det(Q1)det(M), got " +
                                   res.det_reduced.str() + " vs " + product.str());
        res.q1_ok = res.det_q1 == q1_det_closed_form(N, l, e);
        if (!res.q1_ok)
            res.failures.push_back("det(Q1) != closed form: " + res.det_q1.str() + " vs " +
                                   q1_det_closed_form(N, l, e).str());
        res.q2_ok = res.det_q2 == q2_det_closed_form(N, e);
        if (!res.q2_ok)
            res.failures.push_back("det(Q2) != closed form: " + res.det_q2.str() + " vs " +
                                   q2_det_closed_form(N, e).str());
        res.m_ok = res.det_m == m_det_closed_form(N, e);
        if (!res.m_ok)
            res.failures.push_back("det(M) != closed form: " + res.det_m.str() + " vs " +
                                   m_det_closed_form(N, e).str());
    }
    if (blocks_out) *blocks_out = blocks;
    return res;
}

Rational axis_polynomial_value_from_blocks(long N, long l, long e) {
    if (e > N - l)
        throw std::invalid_argument("axis_polynomial_value_from_blocks: zero case has no value");
    AxisMatrixSpec spec{N, l, AxisMatrixVariant::column_reduced, e};
    Rational det_reduced = det_exact(build_axis_matrix(spec, Rational(-e)));

    std::vector<Rational> roots = forced_divisor_roots(N);
    long removed = 0;
    Rational divisor = 1;
    for (const Rational& c : roots) {
        if (removed < e && c == Rational(e)) {
            ++removed;  // the factor (m+e) taken out of each reduced column
            continue;
        }
        divisor *= Rational(-e) + c;
    }
    if (removed != e)
        throw std::domain_error("forced product does not contain (m+e)^e as expected");
    return det_reduced / divisor;
}

ColumnReductionCheck check_column_reduction(long N, long l, long e) {
    if (l < (N + 2) / 2 || l > N)
        throw std::invalid_argument("check_column_reduction: l outside ceil((N+1)/2)..N");
    if (e < 0 || e > N / 2)
        throw std::invalid_argument("check_column_reduction: e out of range");

    auto plain = build_axis_matrix_poly({N, l, AxisMatrixVariant::plain, 0});
    auto reduced = build_axis_matrix_poly({N, l, AxisMatrixVariant::column_reduced, e});

    ColumnReductionCheck res;
    for (long k = 0; k < e; ++k) {
        const long target = N + 1 - 2 * e + k;  // 1-based column index
        for (long row = 1; row <= N; ++row) {
            RationalPolynomial combined = plain[row - 1][target - 1];
            for (long i = 1; i <= k; ++i) {
                const long source = N + 1 - 2 * e + k + i;
                combined = combined +
                           plain[row - 1][source - 1] * Rational(binomial(Integer(k), i));
            }
            if (!combined.divisible_by_linear(Rational(e))) {
                res.divisible = false;
                res.failures.push_back("column " + std::to_string(target) + " row " +
                                       std::to_string(row) + " not divisible by (m+" +
                                       std::to_string(e) + ")");
                continue;
            }
            RationalPolynomial quotient = combined.divide_linear_exact(Rational(e));
            if (!(quotient == reduced[row - 1][target - 1])) {
                res.matches_reduced = false;
                res.failures.push_back("column " + std::to_string(target) + " row " +
                                       std::to_string(row) +
                                       " quotient differs from the reduced definition");
            }
        }
    }
    return res;
}

RationalMatrix krattenthaler_matrix(const KrattenthalerInput& in) {
    const long n = in.n();
    if (static_cast<long>(in.A.size()) != std::max<long>(0, n - 1) ||
        static_cast<long>(in.B.size()) != std::max<long>(0, n - 1))
        throw std::invalid_argument("krattenthaler_matrix: A, B must have length n-1");
    RationalMatrix M(n, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            Rational v = 1;
            for (long t = j + 1; t <= n; ++t) v *= in.X[i - 1] + in.A[t - 2];
            for (long t = 2; t <= j; ++t) v *= in.X[i - 1] + in.B[t - 2];
            M.at(i - 1, j - 1) = v;
        }
    return M;
}

Rational krattenthaler_product(const KrattenthalerInput& in) {
    const long n = in.n();
    Rational v = 1;
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) v *= in.X[i - 1] - in.X[j - 1];
    for (long i = 2; i <= n; ++i)
        for (long j = i; j <= n; ++j) v *= in.B[i - 2] - in.A[j - 2];
    return v;
}

}  // namespace lozenge
