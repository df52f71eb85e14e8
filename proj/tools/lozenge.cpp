// Command-line surface: exact counts, proportions, oracle runs, polynomial
// reconstruction, asymptotic tables, and the verification suites.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parameter error.

#include <CLI11.hpp>
#include <json.hpp>

#include "lozenge/asymptotics.hpp"
#include "lozenge/determinant.hpp"
#include "lozenge/hypergeometric.hpp"
#include "lozenge/tiling.hpp"
#include "lozenge/verify.hpp"

#include <cstdio>
#include <iostream>
#include <sstream>

namespace {

using namespace lozenge;

Parity parse_parity(const std::string& s) {
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

ConjecturePattern parse_pattern(const std::string& s) {
    if (s == "consecutive") return ConjecturePattern::consecutive;
    if (s == "skip1") return ConjecturePattern::skip1;
    if (s == "skip2") return ConjecturePattern::skip2;
    throw std::invalid_argument("pattern must be consecutive, skip1 or skip2");
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> values;
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, ',')) {
        if (item.empty()) continue;
        values.push_back(std::stol(item));
    }
    if (values.empty()) throw std::invalid_argument("empty list");
    return values;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

int run_count(bool json, long N, long m, long l, const std::string& parity) {
    AxisProblem p{N, m, l, parse_parity(parity)};
    validate(p);
    Integer count = fixed_rhombus_count(p);
    if (json) {
        nlohmann::ordered_json j;
        j["N"] = N;
        j["m"] = m;
        j["l"] = l;
        j["parity"] = parity;
        j["count"] = count.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
    return 0;
}

int run_count_macmahon(bool json, long a, long b, long c) {
    Integer count = macmahon_count({a, b, c});
    if (json) {
        nlohmann::ordered_json j;
        j["a"] = a;
        j["b"] = b;
        j["c"] = c;
        j["count"] = count.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
    return 0;
}

int run_count_conjecture(bool json, const std::string& pattern, long N, long m, long r,
                         const std::string& parity) {
    ConjecturePattern pat = parse_pattern(pattern);
    Rational count = conjecture_count(pat, N, m, r, parse_parity(parity));
    if (json) {
        nlohmann::ordered_json j;
        j["pattern"] = pattern;
        j["N"] = N;
        j["m"] = m;
        j["r"] = r;
        std::ostringstream L;
        for (long pos : conjecture_positions(pat, r)) L << (L.tellp() > 0 ? "," : "") << pos;
        j["L"] = L.str();
        j["parity"] = parity;
        j["count"] = count.str();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << count.str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, const SuiteOptions& opts) {
    VerificationReport report = verify_suite(suite, opts);
    std::cout << report.to_json().dump(2) << "\n";
    std::cerr << "suite " << report.suite << ": " << report.cases << " cases, "
              << report.failures.size() << " failures, " << format_double(report.elapsed_seconds)
              << "s\n";
    return report.passed() ? 0 : 1;
}

int run_reconstruct(long N, long l, bool json) {
    RationalPolynomial p = axis_polynomial(N, l);
    if (json) {
        nlohmann::ordered_json j;
        j["N"] = N;
        j["l"] = l;
        j["polynomial"] = p.to_string();
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
        for (const Rational& c : p.coefficients()) coeffs.push_back(c.str());
        j["coefficients"] = coeffs;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << p.to_string() << "\n";
    // Factored display when the forced (m+l)_{N-2l+1} divisor applies.
    const long len = N - 2 * l + 1;
    if (len >= 1 && !p.is_zero()) {
        RationalPolynomial q = p;
        bool exact = true;
        for (long t = 0; t < len && exact; ++t) {
            if (!q.divisible_by_linear(Rational(l + t))) exact = false;
            else q = q.divide_linear_exact(Rational(l + t));
        }
        if (exact)
            std::cout << "= (m+" << l << ")_" << len << " * (" << q.to_string() << ")\n";
    }
    return 0;
}

int run_asymptotics(double a, double b, const std::string& Ns) {
    ConvergenceTable table = convergence_table({a, b}, parse_long_list(Ns));
    std::cout << "N,m,l,proportion_exact_num,proportion_exact_den,proportion_float,limit,gap\n";
    for (const ConvergenceRow& row : table.rows) {
        std::cout << row.N << "," << row.m << "," << row.l << ","
                  << numerator(row.proportion_exact).str() << ","
                  << denominator(row.proportion_exact).str() << ","
                  << format_double(row.proportion_float) << "," << format_double(row.limit) << ","
                  << format_double(row.gap) << "\n";
    }
    for (long N : table.skipped)
        std::cerr << "N=" << N << " skipped: round(a*N) < 1 has no valid instance\n";
    return 0;
}

int run_oracle_count(long a, long b, long c, std::uint64_t budget) {
    std::cout << enumerate_tilings({a, b, c}, budget).str() << "\n";
    return 0;
}

int run_oracle_axis(long N, long m, const std::string& parity, long l, const std::string& L,
                    std::uint64_t budget) {
    Parity par = parse_parity(parity);
    Integer count;
    if (!L.empty()) {
        AxisSet set{N, m, parse_long_list(L), par};
        validate(set);
        count = count_with_fixed_axis(set, budget);
    } else {
        AxisProblem p{N, m, l, par};
        validate(p);
        count = count_with_fixed_axis(p, budget);
    }
    std::cout << count.str() << "\n";
    return 0;
}

int run_oracle_dump(long a, long b, long c, std::uint64_t budget) {
    TilingVisitor visitor = [](const TilingPairs& tiling) {
        bool first = true;
        for (const auto& [up, down] : tiling) {
            if (!first) std::cout << " ";
            first = false;
            std::cout << up.to_string() << "+" << down.to_string();
        }
        std::cout << "\n";
    };
    enumerate_tilings({a, b, c}, budget, &visitor);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rhombus-tiling counts for symmetric hexagons with fixed axis rhombi"};
    app.require_subcommand(1);

    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    // count
    auto* count = app.add_subcommand("count", "closed-form counts");
    long cN = 0, cm = -1, cl = 0;
    std::string cparity = "even";
    count->add_option("--N", cN, "hexagon parameter N");
    count->add_option("--m", cm, "hexagon parameter m");
    count->add_option("--l", cl, "axis position");
    count->add_option("--parity", cparity, "even or odd");

    auto* macmahon = count->add_subcommand("macmahon", "total tiling count of a hexagon");
    long ma = 0, mb = 0, mc = 0;
    macmahon->add_option("--a", ma)->required();
    macmahon->add_option("--b", mb)->required();
    macmahon->add_option("--c", mc)->required();

    auto* conjecture = count->add_subcommand("conjecture", "conjectured multi-rhombus counts");
    std::string gpattern;
    long gN = 0, gm = 0, gr = 0;
    std::string gparity = "even";
    conjecture->add_option("--pattern", gpattern, "consecutive, skip1 or skip2")->required();
    conjecture->add_option("--N", gN)->required();
    conjecture->add_option("--m", gm)->required();
    conjecture->add_option("--r", gr)->required();
    conjecture->add_option("--parity", gparity);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::ostringstream suites_help;
    for (const auto& name : suite_names()) suites_help << name << " ";
    verify->add_option("suite", suite, "one of: " + suites_help.str())->required();
    SuiteOptions opts;
    long optN = 0, optm = 0;
    std::uint64_t optbudget = 0;
    verify->add_option("--max-N", optN, "grid bound for N");
    verify->add_option("--max-m", optm, "grid bound for m");
    verify->add_option("--budget", optbudget, "enumeration budget (visited states)");

    // reconstruct-p
    auto* reconstruct = app.add_subcommand("reconstruct-p", "polynomial cofactor of the axis determinant");
    long rN = 0, rl = 0;
    reconstruct->add_option("--N", rN)->required();
    reconstruct->add_option("--l", rl)->required();

    // asymptotics
    auto* asym = app.add_subcommand("asymptotics", "convergence table toward the arcsine law");
    double aa = 0, ab = 0;
    std::string aN;
    asym->add_option("--a", aa, "thickness ratio m ~ a*N")->required();
    asym->add_option("--b", ab, "position ratio l ~ b*N")->required();
    asym->add_option("--N", aN, "comma-separated list of N values")->required();

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration");
    auto* ocount = oracle->add_subcommand("count", "enumerate all tilings of a hexagon");
    long oa = 0, ob = 0, oc = 0;
    std::uint64_t obudget = 0;
    ocount->add_option("--a", oa)->required();
    ocount->add_option("--b", ob)->required();
    ocount->add_option("--c", oc)->required();
    ocount->add_option("--budget", obudget);

    auto* oaxis = oracle->add_subcommand("axis", "count tilings containing fixed axis rhombi");
    long xN = 0, xm = -1, xl = 0;
    std::string xparity = "even", xL;
    std::uint64_t xbudget = 0;
    oaxis->add_option("--N", xN)->required();
    oaxis->add_option("--m", xm)->required();
    oaxis->add_option("--l", xl, "single axis position");
    oaxis->add_option("--L", xL, "comma-separated axis positions");
    oaxis->add_option("--parity", xparity);
    oaxis->add_option("--budget", xbudget);

    auto* odump = oracle->add_subcommand("dump", "one tiling per line as sorted cell pairs");
    long da = 0, db = 0, dc = 0;
    std::uint64_t dbudget = 0;
    odump->add_option("--a", da)->required();
    odump->add_option("--b", db)->required();
    odump->add_option("--c", dc)->required();
    odump->add_option("--budget", dbudget);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (count->parsed()) {
            if (macmahon->parsed()) return run_count_macmahon(json, ma, mb, mc);
            if (conjecture->parsed())
                return run_count_conjecture(json, gpattern, gN, gm, gr, gparity);
            if (cN <= 0 || cm < 0 || cl <= 0)
                throw std::invalid_argument("count requires --N, --m and --l");
            return run_count(json, cN, cm, cl, cparity);
        }
        if (verify->parsed()) {
            opts.max_N = optN;
            opts.max_m = optm;
            opts.budget = optbudget;
            return run_verify(suite, opts);
        }
        if (reconstruct->parsed()) return run_reconstruct(rN, rl, json);
        if (asym->parsed()) return run_asymptotics(aa, ab, aN);
        if (oracle->parsed()) {
            if (ocount->parsed())
                return run_oracle_count(oa, ob, oc, obudget ? obudget : enumeration_budget());
            if (oaxis->parsed())
                return run_oracle_axis(xN, xm, xparity, xl, xL,
                                       xbudget ? xbudget : enumeration_budget());
            if (odump->parsed())
                return run_oracle_dump(da, db, dc, dbudget ? dbudget : enumeration_budget());
            throw std::invalid_argument("oracle requires a subcommand (count, axis, dump)");
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
