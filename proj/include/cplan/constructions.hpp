#pragma once

#include "cplan/bigint.hpp"
#include "cplan/model.hpp"

#include <string>
#include <vector>

namespace cplan {

// Adds one lock atom per action and splits every action into begin, one setter per
// post literal, and end. The result is unary and solvable iff the input is.
StripsInstance to_unary(const StripsInstance &p);

class TargetTooLarge : public InputError {
public:
    using InputError::InputError;
};

enum class CounterEncoding { binary, gray };

struct CounterSpec {
    unsigned n = 1;
    BigInt target;
    CounterEncoding encoding = CounterEncoding::binary;
};

// Actions a1..an (binary) or s1..sn, r1..rn (Gray). Init all-false; the goal pins every
// bit to the encoding of target. Throws TargetTooLarge (an InputError) when target >= 2^n.
StripsInstance counter_instance(const CounterSpec &spec);

// Binary counter with the extra y atom: a_i clears y, b_i sets y.
StripsInstance indexed_plans_instance(unsigned n);

// Bit k (0-based, k-th plan step) selects the b-variant. bits.size() must be 2^n - 1.
Plan plan_from_choice_bits(unsigned n, const std::vector<bool> &bits);
// Throws InputError when plan is not an optimal plan of indexed_plans_instance(n).
std::vector<bool> choice_bits_from_plan(unsigned n, const Plan &plan);

// Commit-to-prove-(un)satisfiability instance for 3SAT instance i over n variables.
StripsInstance sat_verifier_instance(unsigned n, const BigInt &i);

// Deterministic instance whose unique plan decides every 3SAT instance over n variables.
StripsInstance all_instances_instance(unsigned n);

struct BlockConstants {
    BigInt a;  // offset of the first verdict action
    BigInt b;  // block stride, a + 1
};

class CalibrationMismatch : public Error {
public:
    using Error::Error;
};

// a_n = 2^n (m(n) + 3) + 2, b_n = a_n + 1. With calibrate, the position of the first
// ais/aiu in the simulated plan must agree or CalibrationMismatch is thrown.
BlockConstants block_constants(unsigned n, bool calibrate);
BlockConstants block_constants(unsigned n);  // calibrates for n <= 3

// 1-based position of the first ais/aiu in the unique plan, by simulation.
std::uint64_t simulate_first_verdict_position(unsigned n);

}  // namespace cplan
