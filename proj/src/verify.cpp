#include "lozenge/verify.hpp"

#include "lozenge/asymptotics.hpp"
#include "lozenge/hypergeometric.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace lozenge {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Runs fn(index) for every index, spreading the work over hardware threads.
// Exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    unsigned threads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

struct CaseResult {
    bool failed = false;
    Failure failure;
};

// One grid point: params description plus the two values to compare.
void record(CaseResult& out, const std::string& params, const std::string& expected,
            const std::string& actual, bool ok) {
    if (!ok) out = {true, {params, expected, actual}};
}

VerificationReport assemble(std::string suite, std::string grid, std::vector<CaseResult> results,
                            const Stopwatch& watch) {
    VerificationReport report;
    report.suite = std::move(suite);
    report.grid = std::move(grid);
    report.cases = static_cast<long>(results.size());
    for (CaseResult& r : results)
        if (r.failed) report.failures.push_back(std::move(r.failure));
    report.elapsed_seconds = watch.seconds();
    return report;
}

std::string parity_name(Parity p) { return p == Parity::even ? "even" : "odd"; }

VerificationReport verify_theorem_grid(const std::string& suite, Parity parity,
                                       const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(4), maxm = opts.m_or(3);
    const std::uint64_t budget = opts.budget_or();

    std::vector<AxisProblem> grid;
    for (long N = 1; N <= maxN; ++N)
        for (long m = 1; m <= maxm; ++m)
            for (long l = 1; l <= N; ++l) grid.push_back({N, m, l, parity});

    std::vector<CaseResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const AxisProblem& p = grid[idx];
        Integer formula = fixed_rhombus_count(p);
        Integer oracle = count_with_fixed_axis(p, budget);
        std::ostringstream params;
        params << "N=" << p.N << " m=" << p.m << " l=" << p.l << " parity=" << parity_name(p.parity);
        record(results[idx], params.str(), oracle.str(), formula.str(), formula == oracle);
    });
    std::ostringstream grid_desc;
    grid_desc << "1<=N<=" << maxN << ", 1<=m<=" << maxm << ", 1<=l<=N, parity "
              << parity_name(parity);
    return assemble(suite, grid_desc.str(), std::move(results), watch);
}

}  // namespace

VerificationReport verify_macmahon(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxside = opts.N_or(3);
    const std::uint64_t budget = opts.budget_or();

    std::vector<HexagonShape> grid;
    for (long a = 0; a <= maxside; ++a)
        for (long b = 0; b <= maxside; ++b)
            for (long c = 0; c <= maxside; ++c) grid.push_back({a, b, c});
    grid.push_back({4, 4, 2});

    std::vector<CaseResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const HexagonShape& h = grid[idx];
        Integer formula = macmahon_count(h);
        Integer oracle = enumerate_tilings(h, budget);
        std::ostringstream params;
        params << "a=" << h.a << " b=" << h.b << " c=" << h.c;
        record(results[idx], params.str(), oracle.str(), formula.str(), formula == oracle);
    });
    std::ostringstream grid_desc;
    grid_desc << "0<=a,b,c<=" << maxside << " plus (4,4,2)";
    return assemble("macmahon", grid_desc.str(), std::move(results), watch);
}

VerificationReport verify_theorem1(const SuiteOptions& opts) {
    return verify_theorem_grid("theorem1", Parity::even, opts);
}

VerificationReport verify_theorem2(const SuiteOptions& opts) {
    return verify_theorem_grid("theorem2", Parity::odd, opts);
}

VerificationReport verify_lemma_simple(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(8), maxm = opts.m_or(8);
    std::vector<CaseResult> results;
    for (long N = 0; N <= maxN; ++N)
        for (long m = 0; m <= maxm; ++m) {
            Rational det = det_exact(build_simple_matrix(N, m));
            Rational rhs = Rational(simple_det_closed_form(N, m));
            CaseResult r;
            record(r, "N=" + std::to_string(N) + " m=" + std::to_string(m), rhs.str(), det.str(),
                   det == rhs);
            results.push_back(std::move(r));
        }
    return assemble("lemma-simple",
                    "0<=N<=" + std::to_string(maxN) + ", 0<=m<=" + std::to_string(maxm),
                    std::move(results), watch);
}

VerificationReport verify_lemma_complex(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(7), maxm = opts.m_or(6);
    std::vector<CaseResult> results;
    for (long N = 1; N <= maxN; ++N)
        for (long m = 1; m <= maxm; ++m)
            for (long l = 1; l <= N; ++l) {
                Rational det = det_exact(build_complex_matrix(N, m, {l}));
                Rational rhs = axis_det_closed_form(N, m, l);
                CaseResult r;
                record(r,
                       "N=" + std::to_string(N) + " m=" + std::to_string(m) +
                           " l=" + std::to_string(l),
                       rhs.str(), det.str(), det == rhs);
                results.push_back(std::move(r));
            }
    return assemble("lemma-complex",
                    "1<=N<=" + std::to_string(maxN) + ", 1<=m<=" + std::to_string(maxm) +
                        ", 1<=l<=N",
                    std::move(results), watch);
}

VerificationReport verify_factorization(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(4), maxm = opts.m_or(2);
    const std::uint64_t budget = opts.budget_or();

    std::vector<AxisSet> grid;
    for (long N = 1; N <= maxN; ++N) {
        std::vector<std::vector<long>> subsets;
        for (long l = 1; l <= N; ++l) subsets.push_back({l});
        for (long l1 = 1; l1 <= N; ++l1)
            for (long l2 = l1 + 1; l2 <= N; ++l2) subsets.push_back({l1, l2});
        for (const auto& L : subsets) {
            for (long m = 0; m <= maxm; ++m) grid.push_back({N, m, L, Parity::even});
            for (long m = 1; m <= maxm; ++m) grid.push_back({N, m, L, Parity::odd});
        }
    }

    std::vector<CaseResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const AxisSet& s = grid[idx];
        FactorizationCheck check = factorization_check(s, budget);
        std::ostringstream params, L;
        for (std::size_t t = 0; t < s.L.size(); ++t) L << (t ? "," : "") << s.L[t];
        params << "N=" << s.N << " m=" << s.m << " L={" << L.str()
               << "} parity=" << parity_name(s.parity);
        record(results[idx], params.str(), check.brute_force.str(), check.factorized.str(),
               check.ok);
    });
    return assemble("factorization",
                    "1<=N<=" + std::to_string(maxN) + ", m<=" + std::to_string(maxm) +
                        ", |L| in {1,2}, both parities",
                    std::move(results), watch);
}

VerificationReport verify_aux_facts(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(6);
    std::vector<CaseResult> results;
    for (long N = 1; N <= maxN; ++N)
        for (long l = 1; l <= N; ++l) {
            RationalPolynomial p = scaled_det_polynomial(N, l);
            {
                RationalPolynomial mirrored = scaled_det_polynomial(N, N + 1 - l);
                CaseResult r;
                record(r, "position symmetry N=" + std::to_string(N) + " l=" + std::to_string(l),
                       p.to_string(), mirrored.to_string(), p == mirrored);
                results.push_back(std::move(r));
            }
            {
                RationalPolynomial reflected = p.composed_linear(Rational(-1), Rational(-N));
                int sign = (N * (N + 1) / 2 - 1) % 2 == 0 ? 1 : -1;
                RationalPolynomial expected = p * Rational(sign);
                CaseResult r;
                record(r, "reflection symmetry N=" + std::to_string(N) + " l=" + std::to_string(l),
                       expected.to_string(), reflected.to_string(), reflected == expected);
                results.push_back(std::move(r));
            }
        }
    return assemble("aux-facts", "1<=N<=" + std::to_string(maxN) + ", 1<=l<=N",
                    std::move(results), watch);
}

namespace {

void check_case(std::vector<CaseResult>& results, const std::string& params,
                const std::string& expected, const std::string& actual, bool ok) {
    CaseResult r;
    record(r, params, expected, actual, ok);
    results.push_back(std::move(r));
}

// prod over the requested factor roots must divide p exactly.
bool divisible_by_roots(RationalPolynomial p, const std::vector<Rational>& roots) {
    for (const Rational& c : roots) {
        if (!p.divisible_by_linear(c)) return false;
        p = p.divide_linear_exact(c);
    }
    return true;
}

}  // namespace

VerificationReport verify_steps(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(6);
    std::vector<CaseResult> results;

    for (long N = 1; N <= maxN; ++N) {
        for (long l = 1; l <= N; ++l) {
            const std::string tag = " N=" + std::to_string(N) + " l=" + std::to_string(l);
            RationalPolynomial detpoly = scaled_det_polynomial(N, l);
            AxisMatrixSpec plain{N, l, AxisMatrixVariant::plain, 0};

            // Degree bound: the interpolation on binom(N+1,2) samples must
            // extrapolate to further sample points.
            {
                bool ok = true;
                const long S = N * (N + 1) / 2;
                for (long m = S + 1; m <= S + 3 && ok; ++m)
                    ok = detpoly(Rational(m)) == det_exact(build_axis_matrix(plain, Rational(m)));
                check_case(results, "degree bound" + tag,
                           "degree <= " + std::to_string(S - 1),
                           "degree " + std::to_string(detpoly.degree()),
                           ok && detpoly.degree() <= S - 1);
            }

            // Forced linear factors, first in one sweep and then per factor
            // family.
            for (long i = 1; i <= N / 2; ++i) {
                std::vector<Rational> roots;
                for (long t = 0; t <= N - 2 * i; ++t) roots.push_back(Rational(i + t));
                check_case(results,
                           "integer factor family i=" + std::to_string(i) + tag, "divides",
                           "remainder", divisible_by_roots(detpoly, roots));
            }
            for (long e = 1; e <= N - 2; ++e) {
                long mult = std::min(e, N - e - 1);
                std::vector<Rational> roots(mult, Rational(e) + Rational(1, 2));
                check_case(results,
                           "half-integer factor e=" + std::to_string(e) + tag, "divides",
                           "remainder", divisible_by_roots(detpoly, roots));
            }

            RationalPolynomial cofactor = axis_polynomial(N, l);
            check_case(results, "cofactor degree" + tag, "<= " + std::to_string(N - 1),
                       std::to_string(cofactor.degree()), cofactor.degree() <= N - 1);

            RationalPolynomial closed = axis_polynomial_closed_form(N, l);
            check_case(results, "cofactor closed form" + tag, closed.to_string(),
                       cofactor.to_string(), cofactor == closed);

            // Scaling link back to the weighted path determinant.
            for (long m = 1; m <= 3; ++m) {
                Rational det = det_exact(build_complex_matrix(N, m, {l}));
                Rational scale = 1;
                for (long i = 1; i <= N; ++i)
                    scale *= Rational(factorial(m + i - 1)) *
                             Rational(factorial(2 * N - 2 * i + 1)) /
                             Rational(factorial(N + m - i));
                Rational scaled = det * scale;
                check_case(results, "row scaling m=" + std::to_string(m) + tag,
                           detpoly(Rational(m)).str(), scaled.str(),
                           scaled == detpoly(Rational(m)));
            }

            // Reflection of the cofactor: P(-N-m) = (-1)^{N+1} P(m).
            {
                RationalPolynomial reflected = cofactor.composed_linear(Rational(-1), Rational(-N));
                RationalPolynomial expected = cofactor * Rational(N % 2 == 0 ? -1 : 1);
                check_case(results, "cofactor reflection" + tag, expected.to_string(),
                           reflected.to_string(), reflected == expected);
            }
        }

        // Block decomposition and column reduction, on the right half of
        // positions where the reduction is defined.
        for (long l = (N + 2) / 2; l <= N; ++l)
            for (long e = 0; e <= N / 2; ++e) {
                const std::string tag = " N=" + std::to_string(N) + " l=" + std::to_string(l) +
                                        " e=" + std::to_string(e);
                BlockCheckResult block = check_block_decomposition(N, l, e);
                std::string detail;
                for (const auto& f : block.failures) detail += f + "; ";
                check_case(results, "block decomposition" + tag, "all identities",
                           detail.empty() ? "ok" : detail, block.passed());

                ColumnReductionCheck reduction = check_column_reduction(N, l, e);
                detail.clear();
                for (const auto& f : reduction.failures) detail += f + "; ";
                check_case(results, "column reduction" + tag, "divisible and matching",
                           detail.empty() ? "ok" : detail, reduction.passed());

                // det(plain) = (m+e)^e det(reduced) at sample points.
                {
                    AxisMatrixSpec plain{N, l, AxisMatrixVariant::plain, 0};
                    AxisMatrixSpec reduced{N, l, AxisMatrixVariant::column_reduced, e};
                    bool ok = true;
                    for (const Rational& m : {Rational(2), Rational(5, 3)}) {
                        Rational lhs = det_exact(build_axis_matrix(plain, m));
                        Rational rhs = pow_rational(m + e, e) *
                                       det_exact(build_axis_matrix(reduced, m));
                        if (lhs != rhs) ok = false;
                    }
                    check_case(results, "reduced determinant scaling" + tag, "equal", "differs",
                               ok);
                }

                if (e <= N - l) {
                    Rational via_blocks = axis_polynomial_value_from_blocks(N, l, e);
                    Rational direct = axis_polynomial(N, l)(Rational(-e));
                    check_case(results, "cofactor value at -e" + tag, direct.str(),
                               via_blocks.str(), via_blocks == direct);
                }
            }
    }

    // Krattenthaler determinant lemma: seeded random inputs plus the
    // specialization used for the corner block.
    {
        std::mt19937 rng(20240813);
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        auto random_rational = [&] { return Rational(num(rng), den(rng)); };
        for (long n = 0; n <= 4; ++n)
            for (int trial = 0; trial < 4; ++trial) {
                KrattenthalerInput in;
                for (long t = 0; t < n; ++t) in.X.push_back(random_rational());
                for (long t = 0; t + 1 < n; ++t) in.A.push_back(random_rational());
                for (long t = 0; t + 1 < n; ++t) in.B.push_back(random_rational());
                Rational lhs = det_exact(krattenthaler_matrix(in));
                Rational rhs = krattenthaler_product(in);
                check_case(results,
                           "krattenthaler n=" + std::to_string(n) + " trial=" +
                               std::to_string(trial),
                           rhs.str(), lhs.str(), lhs == rhs);
            }
        // Corner block specialization at N=4, e=2.
        {
            const long N = 4, e = 2;
            KrattenthalerInput in;
            for (long i = 1; i <= e; ++i) in.X.push_back(Rational(i));
            for (long j = 2; j <= e; ++j) {
                in.A.push_back(Rational(-1 - N) + Rational(e - j + 1, 2));
                in.B.push_back(Rational(-j - N + 1));
            }
            Rational lhs = det_exact(krattenthaler_matrix(in));
            Rational product = krattenthaler_product(in);
            Rational expected = 1;
            for (long j = 2; j <= e; ++j)
                expected *= Rational(factorial(j - 1)) * pochhammer(Rational(e - j + 1, 2), j - 1);
            check_case(results, "krattenthaler corner-block specialization N=4 e=2",
                       expected.str(), lhs.str(), lhs == expected && product == expected);
        }
    }

    return assemble("steps", "1<=N<=" + std::to_string(maxN) + ", 1<=l<=N, 0<=e<=N/2",
                    std::move(results), watch);
}

VerificationReport verify_hypergeometric(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(6), maxm = opts.m_or(4);
    std::vector<CaseResult> results;

    auto push = [&results](const IdentityCheck& check) {
        check_case(results, check.label, check.rhs.str(), check.lhs.str(), check.ok);
    };

    // Chu-Vandermonde over mixed integer and half-integer parameters.
    for (const Rational& a : {Rational(1), Rational(1, 2), Rational(-2), Rational(5, 3)})
        for (const Rational& c : {Rational(3), Rational(5, 2), Rational(7, 3)})
            for (long n = 0; n <= 5; ++n) push(check_chu_vandermonde(a, c, n));

    // Contiguous relation on generic samples.
    push(check_contiguous(Rational(5, 2), Rational(-2), Rational(1, 2), Rational(3),
                          Rational(7, 2), 2));
    push(check_contiguous(Rational(3), Rational(1), Rational(-3), Rational(2), Rational(5, 3), 3));
    push(check_contiguous(Rational(-1, 2), Rational(0), Rational(4), Rational(1, 3), Rational(2),
                          0));

    // The reflection-entry specialization across the grid.
    for (long N = 1; N <= maxN; ++N)
        for (long m = 1; m <= maxm; ++m)
            for (long i = 1; i <= N; ++i)
                for (long j = 2; j <= N; ++j) {
                    SpecializedContiguous sc = check_contiguous_specialized(N, m, i, j);
                    if (!sc.applicable) continue;
                    push(sc.closed_form);
                    push(sc.relation);
                }

    for (long N = 1; N <= maxN; ++N)
        for (long m = 1; m <= maxm; ++m)
            for (long l = 1; l <= N; ++l) {
                push(check_whipple_special(N, m, l));
                push(check_bailey_special(N, m, l));
                push(check_proportion_hypergeometric_form(N, m, l));
            }

    for (long N = 1; N <= maxN; ++N)
        for (long l = 1; l <= (N + 1) / 2; ++l) {
            for (long e = 1; e <= N / 2 - 1; ++e)
                for (long k = 1; k <= e; ++k) {
                    ColumnRelationsCheck check = check_column_relations(N, l, e, k);
                    push(check.null_combination);
                    push(check.reflection);
                }
            if (N / 2 - 1 < 1) push(check_reflection_identity(N, l, Rational(2)));
        }

    return assemble("hypergeometric",
                    "N<=" + std::to_string(maxN) + ", m<=" + std::to_string(maxm) +
                        ", all valid l, e, k",
                    std::move(results), watch);
}

VerificationReport verify_conjectures(const SuiteOptions& opts) {
    Stopwatch watch;
    const long maxN = opts.N_or(4), maxm = opts.m_or(2);
    const std::uint64_t budget = opts.budget_or();

    struct Instance {
        ConjecturePattern pattern;
        long N, m, r;
        Parity parity;
    };
    std::vector<Instance> grid;
    for (int pat = 0; pat < 3; ++pat) {
        auto pattern = static_cast<ConjecturePattern>(pat);
        long extra = pat == 1 ? 1 : pat == 2 ? 2 : 0;
        for (long N = 1; N <= maxN; ++N)
            for (long r = 1; r + extra <= N; ++r)
                for (long m = 1; m <= maxm; ++m)
                    for (Parity parity : {Parity::even, Parity::odd})
                        grid.push_back({pattern, N, m, r, parity});
    }

    auto pattern_name = [](ConjecturePattern p) {
        switch (p) {
            case ConjecturePattern::consecutive: return "consecutive";
            case ConjecturePattern::skip1: return "skip1";
            default: return "skip2";
        }
    };

    std::vector<CaseResult> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t idx) {
        const Instance& inst = grid[idx];
        std::vector<long> L = conjecture_positions(inst.pattern, inst.r);
        AxisSet set{inst.N, inst.m, L, inst.parity};

        Rational conjectured = conjecture_count(inst.pattern, inst.N, inst.m, inst.r, inst.parity);
        Integer brute = count_with_fixed_axis(set, budget);
        Rational det_route;
        long rr = set.r();
        if (inst.parity == Parity::even)
            det_route = pow_rational(Rational(2), inst.N - rr) *
                        Rational(simple_det_closed_form(inst.N - 1, inst.m)) *
                        det_exact(build_complex_matrix(inst.N, inst.m, L));
        else
            det_route = pow_rational(Rational(2), inst.N + 1 - rr) *
                        Rational(simple_det_closed_form(inst.N + 1, inst.m - 1)) *
                        det_exact(build_complex_matrix(inst.N, inst.m, L));

        bool ok = is_integer(conjectured) && conjectured == Rational(brute) &&
                  det_route == Rational(brute);
        std::ostringstream params;
        params << pattern_name(inst.pattern) << " N=" << inst.N << " m=" << inst.m
               << " r=" << inst.r << " parity=" << parity_name(inst.parity);
        record(results[idx], params.str(), brute.str(),
               "conjecture=" + conjectured.str() + " determinant=" + det_route.str(), ok);
    });
    return assemble("conjectures",
                    "patterns x N<=" + std::to_string(maxN) + ", m<=" + std::to_string(maxm) +
                        ", both parities",
                    std::move(results), watch);
}

VerificationReport verify_asymptotics(const SuiteOptions& opts) {
    (void)opts;
    Stopwatch watch;
    std::vector<CaseResult> results;

    for (double a : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (int bi = 1; bi <= 9; ++bi) {
            double b = bi / 10.0;
            double arcsine = arcsine_value({a, b});
            double clp = clp_density({a, b});
            std::ostringstream params, lhs, rhs;
            params << "a=" << a << " b=" << b;
            lhs << arcsine;
            rhs << clp;
            check_case(results, "arcsine vs arccot " + params.str(), rhs.str(), lhs.str(),
                       std::abs(arcsine - clp) <= 1e-12);
            check_case(results, "b reflection " + params.str(), "symmetric", "asymmetric",
                       std::abs(arcsine - arcsine_value({a, 1 - b})) <= 1e-15);
        }

    {
        Rational exact = proportion({60, 60, 30, Parity::even});
        double value = to_double(exact);
        std::ostringstream actual;
        actual << value;
        check_case(results, "finite-size proportion N=60 m=60 l=30", "within 0.02 of 0.216344",
                   actual.str(), std::abs(value - 0.216344) <= 0.02);
    }

    return assemble("asymptotics", "a in {0.25,0.5,1,2,4}, b in {0.1..0.9}; N=60 spot check",
                    std::move(results), watch);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "macmahon",      "theorem1",  "theorem2",       "lemma-simple", "lemma-complex",
        "factorization", "aux-facts", "steps",          "hypergeometric", "conjectures",
        "asymptotics"};
    return names;
}

VerificationReport verify_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "macmahon") return verify_macmahon(opts);
    if (name == "theorem1") return verify_theorem1(opts);
    if (name == "theorem2") return verify_theorem2(opts);
    if (name == "lemma-simple") return verify_lemma_simple(opts);
    if (name == "lemma-complex") return verify_lemma_complex(opts);
    if (name == "factorization") return verify_factorization(opts);
    if (name == "aux-facts") return verify_aux_facts(opts);
    if (name == "steps") return verify_steps(opts);
    if (name == "hypergeometric") return verify_hypergeometric(opts);
    if (name == "conjectures") return verify_conjectures(opts);
    if (name == "asymptotics") return verify_asymptotics(opts);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace lozenge
