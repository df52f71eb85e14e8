#pragma once

// Structured pass/fail record of a formula-vs-oracle comparison over a
// parameter grid.  Serialization is deterministic: failures are recorded in
// grid order and the elapsed time is kept out of the JSON payload (it goes
// to stderr) so identical invocations produce byte-identical stdout.

#include <json.hpp>

#include <string>
#include <vector>

namespace lozenge {

struct Failure {
    std::string parameters;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string suite;
    std::string grid;
    long cases = 0;
    std::vector<Failure> failures;
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty(); }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["suite"] = suite;
        j["grid"] = grid;
        j["cases"] = cases;
        j["pass"] = passed();
        j["failures"] = nlohmann::ordered_json::array();
        for (const Failure& f : failures) {
            nlohmann::ordered_json jf;
            jf["parameters"] = f.parameters;
            jf["expected"] = f.expected;
            jf["actual"] = f.actual;
            j["failures"].push_back(jf);
        }
        return j;
    }
};

}  // namespace lozenge
