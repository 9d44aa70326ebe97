#pragma once

#include "cplan/bigint.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cplan::sat3 {

// Variable indices are 1-based (x1..xn).
struct SatLiteral {
    unsigned var;
    bool negated;

    // True under an assignment whose bit (var-1) holds x_var.
    bool holds(std::uint64_t assignment) const { return (((assignment >> (var - 1)) & 1U) != 0) != negated; }
    bool operator==(const SatLiteral &) const = default;
};

// Three literals over pairwise distinct variables, sorted by variable.
struct Clause {
    std::array<SatLiteral, 3> literals;

    bool satisfied_by(std::uint64_t assignment) const;
    std::string to_string() const;
    bool operator==(const Clause &) const = default;
};

// m(n) = 8 * C(n, 3).
std::size_t clause_count(unsigned n);

// Ascending variable triples i<j<k, then the 8 polarity patterns where bit b negates
// the (b+1)-th variable of the triple.
std::vector<Clause> enumerate_clauses(unsigned n);

// Bit j-1 of mask enables clause j.
struct ThreeSatInstance {
    unsigned n = 0;
    BigInt mask;
};

// Throws IndexOutOfRange unless 0 <= i < 2^m(n).
ThreeSatInstance instance_from_index(unsigned n, const BigInt &i);
BigInt index_from_instance(const ThreeSatInstance &inst);

// 1-based clause numbers j of the enabled clauses, ascending.
std::vector<std::size_t> enabled_atoms(unsigned n, const BigInt &i);

// Bit k-1 holds x_k.
struct Assignment {
    unsigned n = 0;
    std::uint64_t bits = 0;

    bool value(unsigned var) const { return (bits >> (var - 1)) & 1U; }
    std::string to_string() const;  // binary numeral, x1 is the last digit
};

struct SatVerdict {
    bool satisfiable = false;
    std::optional<Assignment> witness;  // smallest satisfying assignment
};

constexpr unsigned kDefaultBruteForceCap = 24;

// Exhaustive over 2^n assignments; throws CapExceeded above the cap.
SatVerdict is_satisfiable(const ThreeSatInstance &inst, unsigned cap = kDefaultBruteForceCap);

}  // namespace cplan::sat3
