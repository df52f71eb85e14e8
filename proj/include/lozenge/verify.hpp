#pragma once

// Verification suites: each runs one family of identities over a parameter
// grid and returns a VerificationReport.  Oracle-heavy suites evaluate grid
// points concurrently; reports are assembled in grid order regardless of
// completion order.

#include "lozenge/report.hpp"
#include "lozenge/tiling.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lozenge {

struct SuiteOptions {
    long max_N = 0;  // 0 means the suite's default grid
    long max_m = 0;
    std::uint64_t budget = 0;  // 0 means enumeration_budget()

    long N_or(long def) const { return max_N > 0 ? max_N : def; }
    long m_or(long def) const { return max_m > 0 ? max_m : def; }
    std::uint64_t budget_or() const { return budget > 0 ? budget : enumeration_budget(); }
};

VerificationReport verify_macmahon(const SuiteOptions& opts);
VerificationReport verify_theorem1(const SuiteOptions& opts);
VerificationReport verify_theorem2(const SuiteOptions& opts);
VerificationReport verify_lemma_simple(const SuiteOptions& opts);
VerificationReport verify_lemma_complex(const SuiteOptions& opts);
VerificationReport verify_factorization(const SuiteOptions& opts);
VerificationReport verify_aux_facts(const SuiteOptions& opts);
VerificationReport verify_steps(const SuiteOptions& opts);
VerificationReport verify_hypergeometric(const SuiteOptions& opts);
VerificationReport verify_conjectures(const SuiteOptions& opts);
VerificationReport verify_asymptotics(const SuiteOptions& opts);

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite name.
VerificationReport verify_suite(const std::string& name, const SuiteOptions& opts);

}  // namespace lozenge
