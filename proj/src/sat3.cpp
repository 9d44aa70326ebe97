#include "cplan/sat3.hpp"

#include "cplan/errors.hpp"

namespace cplan::sat3 {

bool Clause::satisfied_by(std::uint64_t assignment) const {
    for (const auto &l : literals)
        if (l.holds(assignment))
            return true;
    return false;
}

std::string Clause::to_string() const {
    std::string out;
    for (const auto &l : literals) {
        if (!out.empty())
            out += ' ';
        out += (l.negated ? "!x" : "x") + std::to_string(l.var);
    }
    return out;
}

std::size_t clause_count(unsigned n) {
    if (n < 3)
        return 0;
    std::size_t c = static_cast<std::size_t>(n) * (n - 1) * (n - 2) / 6;
    return 8 * c;
}

std::vector<Clause> enumerate_clauses(unsigned n) {
    std::vector<Clause> out;
    out.reserve(clause_count(n));
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j)
            for (unsigned k = j + 1; k <= n; ++k)
                for (unsigned pol = 0; pol < 8; ++pol)
                    out.push_back({{SatLiteral{i, (pol & 1U) != 0}, SatLiteral{j, (pol & 2U) != 0},
                                    SatLiteral{k, (pol & 4U) != 0}}});
    return out;
}

namespace {

void check_index(unsigned n, const BigInt &i) {
    if (i < 0 || i >= pow2(clause_count(n)))
        throw IndexOutOfRange("instance index " + i.str() + " out of range for n=" + std::to_string(n));
}

}  // namespace

ThreeSatInstance instance_from_index(unsigned n, const BigInt &i) {
    check_index(n, i);
    return {n, i};
}

BigInt index_from_instance(const ThreeSatInstance &inst) {
    check_index(inst.n, inst.mask);
    return inst.mask;
}

std::vector<std::size_t> enabled_atoms(unsigned n, const BigInt &i) {
    check_index(n, i);
    std::vector<std::size_t> out;
    const std::size_t m = clause_count(n);
    for (std::size_t j = 1; j <= m; ++j)
        if (boost::multiprecision::bit_test(i, static_cast<unsigned>(j - 1)))
            out.push_back(j);
    return out;
}

std::string Assignment::to_string() const {
    std::string out;
    for (unsigned v = n; v >= 1; --v)
        out += value(v) ? '1' : '0';
    return out;
}

SatVerdict is_satisfiable(const ThreeSatInstance &inst, unsigned cap) {
    if (inst.n > cap || inst.n > 63)
        throw CapExceeded("brute-force SAT cap exceeded: n=" + std::to_string(inst.n));
    const auto clauses = enumerate_clauses(inst.n);
    std::vector<const Clause *> enabled;
    for (std::size_t j : enabled_atoms(inst.n, inst.mask))
        enabled.push_back(&clauses[j - 1]);
    const std::uint64_t total = std::uint64_t{1} << inst.n;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool ok = true;
        for (const Clause *c : enabled) {
            if (!c->satisfied_by(a)) {
                ok = false;
                break;
            }
        }
        if (ok)
            return {true, Assignment{inst.n, a}};
    }
    return {false, std::nullopt};
}

}  // namespace cplan::sat3
