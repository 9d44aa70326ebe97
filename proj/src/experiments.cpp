#include "cplan/experiments.hpp"

#include "cplan/constructions.hpp"
#include "cplan/oracles.hpp"
#include "cplan/representations.hpp"
#include "cplan/sat3.hpp"

#include <sstream>

namespace cplan {

namespace {

std::uint64_t mask_count(unsigned n, std::uint64_t max_cases) {
    const auto m = sat3::clause_count(n);
    if (m >= 63 || (std::uint64_t{1} << m) > max_cases)
        throw CapExceeded("2^" + std::to_string(m) + " clause masks exceed the case cap of " +
                          std::to_string(max_cases));
    return std::uint64_t{1} << m;
}

void add_row(ExperimentReport &r, std::string id, std::string expected, std::string observed) {
    const bool pass = expected == observed;
    r.rows.push_back({std::move(id), std::move(expected), std::move(observed), pass});
    ++(pass ? r.passed : r.failed);
}

void lemma11(ExperimentReport &r) {
    if (r.n == 0 || r.n > 16)
        throw InputError("lemma11 needs 1 <= n <= 16");
    const auto count = count_optimal_plans(indexed_plans_instance(r.n));
    add_row(r, std::to_string(r.n), pow2((std::size_t{1} << r.n) - 1).str(), count.str());
}

void lemma17(ExperimentReport &r, std::uint64_t max_cases) {
    if (r.n == 0)
        throw InputError("lemma17 needs n >= 1");
    const auto cases = mask_count(r.n, max_cases);
    for (std::uint64_t i = 0; i < cases; ++i) {
        const auto adv = compute_advice(r.n, i);
        auto stream = c16_csar(r.n, i, adv);
        const auto plan = collect(*stream);
        const auto trace = validate_plan(sat_verifier_instance(r.n, i), plan);
        std::string observed = plan.actions.empty() ? "<empty>" : plan.actions.front();
        if (!trace.valid)
            observed += " invalid@" + std::to_string(trace.failure_step.value_or(0));
        add_row(r, std::to_string(i), adv.sat ? "acs" : "acu", observed);
    }
}

void lemma27(ExperimentReport &r, std::uint64_t max_cases) {
    if (r.n == 0)
        throw InputError("lemma27 needs n >= 1");
    const auto cases = mask_count(r.n, max_cases);
    const auto constants = block_constants(r.n);
    const auto a = static_cast<std::uint64_t>(constants.a);
    const auto b = static_cast<std::uint64_t>(constants.b);

    std::vector<std::string> at(cases, "<none>");
    auto stream = c26_csar(r.n);
    while (auto action = stream->next()) {
        const auto position = stream->cursor();
        if (position >= a && (position - a) % b == 0 && (position - a) / b < cases)
            at[(position - a) / b] = *action;
    }
    for (std::uint64_t i = 0; i < cases; ++i) {
        const bool sat = sat3::is_satisfiable(sat3::instance_from_index(r.n, i)).satisfiable;
        add_row(r, std::to_string(i), sat ? "ais" : "aiu", at[i]);
    }
    r.notes.push_back("a_n=" + constants.a.str());
    r.notes.push_back("b_n=" + constants.b.str());
    r.notes.push_back("length=" + std::to_string(stream->cursor()));
}

}  // namespace

ExperimentReport run_experiment(const std::string &name, unsigned n, std::uint64_t max_cases) {
    ExperimentReport r;
    r.name = name;
    r.n = n;
    if (name == "lemma11")
        lemma11(r);
    else if (name == "lemma17")
        lemma17(r, max_cases);
    else if (name == "lemma27")
        lemma27(r, max_cases);
    else
        throw InputError("unknown experiment '" + name + "' (lemma11, lemma17, lemma27)");
    return r;
}

std::string write_report(const ExperimentReport &report) {
    std::ostringstream out;
    out << "case,expected,observed,pass\n";
    for (const auto &row : report.rows)
        out << row.case_id << ',' << row.expected << ',' << row.observed << ',' << (row.pass ? "true" : "false")
            << "\n";
    out << "# experiment=" << report.name << " n=" << report.n << "\n";
    for (const auto &note : report.notes)
        out << "# " << note << "\n";
    out << "# summary: " << report.passed << " passed, " << report.failed << " failed, " << report.rows.size()
        << " total\n";
    return out.str();
}

}  // namespace cplan
