#pragma once

#include "cplan/model.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace cplan {

// A state of a finite-domain frame: one value per variable, in declaration order.
using FfpState = std::vector<std::uint32_t>;

struct FfpStateHash {
    std::size_t operator()(const FfpState &s) const;
};

// Charges evaluation work against a per-call budget.
class StepMeter {
public:
    explicit StepMeter(std::uint64_t budget) : budget_(budget) {}
    void charge(std::uint64_t units = 1) {
        used_ += units;
        if (used_ > budget_)
            throw StepBudgetExceeded(budget_);
    }
    std::uint64_t used() const { return used_; }

private:
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
};

struct FfpVariable {
    std::string name;
    std::uint32_t domain_size;
};

struct FfpAction {
    std::string name;
    std::function<bool(const FfpState &, StepMeter &)> pre;
    std::function<FfpState(const FfpState &, StepMeter &)> post;
};

constexpr std::uint64_t kDefaultExplorationCap = std::uint64_t{1} << 24;
constexpr std::uint64_t kDefaultEdgeCap = std::uint64_t{1} << 26;

class FfpInstance {
public:
    FfpInstance(std::vector<FfpVariable> variables, std::vector<FfpAction> actions, FfpState init,
                std::function<bool(const FfpState &, StepMeter &)> goal, std::uint64_t step_budget);

    const std::vector<FfpVariable> &variables() const { return variables_; }
    const std::vector<FfpAction> &actions() const { return actions_; }
    const FfpState &init() const { return init_; }
    std::uint64_t step_budget() const { return step_budget_; }

    // Each call gets a fresh StepMeter; throws StepBudgetExceeded past the budget.
    bool applicable(std::size_t action, const FfpState &s) const;
    FfpState successor(std::size_t action, const FfpState &s) const;
    bool is_goal(const FfpState &s) const;

    // Canonical text of the source instance, when there is one (used for size accounting).
    const std::string &source_text() const { return source_text_; }
    void set_source_text(std::string text) { source_text_ = std::move(text); }

    std::uint64_t state_space_size() const;

private:
    void check_state(const FfpState &s) const;

    std::vector<FfpVariable> variables_;
    std::vector<FfpAction> actions_;
    FfpState init_;
    std::function<bool(const FfpState &, StepMeter &)> goal_;
    std::uint64_t step_budget_;
    std::string source_text_;
};

// Binary-domain view of a STRIPS instance; pre/post/goal agree with STRIPS semantics.
FfpInstance strips_to_ffp(const StripsInstance &p);

FfpState to_ffp_state(const State &s);
State to_strips_state(const FfpState &s);

// Every state reachable from init enables at most one action.
bool is_deterministic(const FfpInstance &p, std::uint64_t cap = kDefaultExplorationCap);

// For every transition s -> t there is some action t -> s. Enumerates the full state space.
bool is_reversible(const FfpInstance &p, std::uint64_t cap = kDefaultExplorationCap);

}  // namespace cplan
