#pragma once

// Floating-point evaluation of the limiting arcsine law for the proportion
// of tilings containing an axis rhombus, the equivalent arccot form, and
// convergence tables of exact finite-size proportions against the limit.
// The exact column is computed fully in rationals and converted to double
// once, so no floating-point error accumulates there.

#include "lozenge/exact.hpp"

#include <vector>

namespace lozenge {

struct AsymptoticParams {
    double a = 0;  // thickness ratio: m ~ a*N
    double b = 0;  // position ratio:  l ~ b*N, 0 < b < 1
};

// (2/pi) * arcsin( sqrt(b(1-b)) / sqrt((a+b)(a-b+1)) ), argument clamped to
// [0,1]; clamping by more than 1e-12 raises std::domain_error.
double arcsine_value(const AsymptoticParams& p);

// (1/pi) * arccot( (a(1+a) - b(1-b)) / (2 sqrt(a(1+a) b(1-b))) ), principal
// branch in (0, pi).  Requires a > 0.
double clp_density(const AsymptoticParams& p);

struct ConvergenceRow {
    long N = 0, m = 0, l = 0;
    Rational proportion_exact;
    double proportion_float = 0;
    double limit = 0;
    double gap = 0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;   // ordered by N
    std::vector<long> skipped;          // N values with round(a*N) < 1
};

// m = round(a*N), l = round(b*N) clamped into 1..N (half-up rounding); rows
// with m < 1 are skipped.
ConvergenceTable convergence_table(const AsymptoticParams& p, const std::vector<long>& Ns);

}  // namespace lozenge
