#include "lozenge/asymptotics.hpp"

#include "lozenge/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lozenge {

namespace {

void validate(const AsymptoticParams& p) {
    if (p.a < 0) throw std::domain_error("asymptotics: a must be >= 0");
    if (!(p.b > 0 && p.b < 1)) throw std::domain_error("asymptotics: b must lie in (0,1)");
}

long round_half_up(double x) { return static_cast<long>(std::floor(x + 0.5)); }

}  // namespace

double arcsine_value(const AsymptoticParams& p) {
    validate(p);
    double arg = std::sqrt(p.b * (1 - p.b)) / std::sqrt((p.a + p.b) * (p.a - p.b + 1));
    if (arg > 1) {
        if (arg - 1 > 1e-12) throw std::domain_error("arcsine_value: argument exceeds 1");
        arg = 1;
    }
    return 2 / std::numbers::pi * std::asin(arg);
}

double clp_density(const AsymptoticParams& p) {
    validate(p);
    if (p.a == 0) throw std::domain_error("clp_density: requires a > 0");
    double x = (p.a * (1 + p.a) - p.b * (1 - p.b)) /
               (2 * std::sqrt(p.a * (1 + p.a) * p.b * (1 - p.b)));
    double arccot = std::numbers::pi / 2 - std::atan(x);  // principal branch, range (0, pi)
    return arccot / std::numbers::pi;
}

ConvergenceTable convergence_table(const AsymptoticParams& p, const std::vector<long>& Ns) {
    validate(p);
    std::vector<long> sorted = Ns;
    std::sort(sorted.begin(), sorted.end());

    ConvergenceTable table;
    const double limit = arcsine_value(p);
    for (long N : sorted) {
        if (N < 1) {
            table.skipped.push_back(N);
            continue;
        }
        long m = round_half_up(p.a * N);
        long l = std::clamp(round_half_up(p.b * N), 1L, N);
        if (m < 1) {
            table.skipped.push_back(N);
            continue;
        }
        ConvergenceRow row;
        row.N = N;
        row.m = m;
        row.l = l;
        row.proportion_exact = proportion({N, m, l, Parity::even});
        row.proportion_float = to_double(row.proportion_exact);
        row.limit = limit;
        row.gap = std::abs(row.proportion_float - limit);
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace lozenge
