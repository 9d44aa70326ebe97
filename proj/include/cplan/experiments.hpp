#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cplan {

struct ExperimentRow {
    std::string case_id;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct ExperimentReport {
    std::string name;
    unsigned n = 0;
    std::vector<ExperimentRow> rows;
    std::vector<std::string> notes;  // extra `# key=value` lines
    std::size_t passed = 0;
    std::size_t failed = 0;

    bool ok() const { return failed == 0 && !rows.empty(); }
};

// lemma11: optimal-plan count of the indexed-plans frame against 2^(2^n - 1).
// lemma17: per clause mask, the sat-verifier stream validates and commits correctly.
// lemma27: verdict actions of the all-instances plan at b*i + a.
// Throws InputError for unknown names and CapExceeded past max_cases masks.
ExperimentReport run_experiment(const std::string &name, unsigned n, std::uint64_t max_cases = 1U << 16);

// CSV: header `case,expected,observed,pass`, one row per case, notes, then `# summary:`.
std::string write_report(const ExperimentReport &report);

}  // namespace cplan
