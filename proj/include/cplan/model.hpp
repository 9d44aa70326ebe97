#pragma once

#include "cplan/atom_set.hpp"
#include "cplan/errors.hpp"

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace cplan {

struct Literal {
    AtomId atom;
    bool positive;

    Literal negated() const { return {atom, !positive}; }
    bool operator==(const Literal &) const = default;
};

inline Literal pos(AtomId a) { return {a, true}; }
inline Literal neg(AtomId a) { return {a, false}; }

// A consistent set of literals: Pos and Neg never overlap.
class LiteralSet {
public:
    LiteralSet() = default;
    explicit LiteralSet(std::size_t width) : pos_(width), neg_(width) {}
    // Throws InconsistentLiterals when an atom occurs with both signs.
    LiteralSet(std::size_t width, std::span<const Literal> literals);
    LiteralSet(AtomSet pos, AtomSet neg);

    const AtomSet &pos() const { return pos_; }
    const AtomSet &neg() const { return neg_; }
    AtomSet atoms() const { return pos_ | neg_; }
    std::size_t size() const { return pos_.count() + neg_.count(); }
    bool empty() const { return pos_.empty() && neg_.empty(); }

    bool satisfied_by(const State &s) const { return pos_.subset_of(s) && !neg_.intersects(s); }

    // Literals in atom order.
    std::vector<Literal> literals() const;

    bool operator==(const LiteralSet &) const = default;

private:
    AtomSet pos_;
    AtomSet neg_;
};

// (s - Neg(y)) ∪ Pos(y)
State apply_update(const State &s, const LiteralSet &y);

struct StripsAction {
    std::string name;
    LiteralSet pre;
    LiteralSet post;
};

class StripsInstance {
public:
    StripsInstance() = default;
    // Validates widths, name uniqueness and goal consistency.
    StripsInstance(std::vector<std::string> atoms, std::vector<StripsAction> actions, State init,
                   LiteralSet goal);

    std::size_t num_atoms() const { return atoms_.size(); }
    const std::vector<std::string> &atoms() const { return atoms_; }
    const std::string &atom_name(AtomId a) const { return atoms_.at(a); }
    std::optional<AtomId> find_atom(const std::string &name) const;

    const std::vector<StripsAction> &actions() const { return actions_; }
    const StripsAction &action(std::size_t idx) const { return actions_.at(idx); }
    std::optional<std::size_t> find_action(const std::string &name) const;
    // Throws UnknownAction.
    std::size_t action_index(const std::string &name) const;

    const State &init() const { return init_; }
    const LiteralSet &goal() const { return goal_; }
    bool is_goal(const State &s) const { return goal_.satisfied_by(s); }

    std::string literal_name(const Literal &l) const;

private:
    std::vector<std::string> atoms_;
    std::vector<StripsAction> actions_;
    State init_;
    LiteralSet goal_;
    std::unordered_map<std::string, AtomId> atom_index_;
    std::unordered_map<std::string, std::size_t> action_index_;
};

// Convenience for generators: atoms and actions by id, literal sets assembled at build().
class StripsBuilder {
public:
    AtomId atom(std::string name);
    AtomId atom_id(const std::string &name) const;
    void action(std::string name, std::vector<Literal> pre, std::vector<Literal> post);
    StripsInstance build(const std::vector<AtomId> &init, const std::vector<Literal> &goal) const;

private:
    struct PendingAction {
        std::string name;
        std::vector<Literal> pre;
        std::vector<Literal> post;
    };
    std::vector<std::string> atoms_;
    std::unordered_map<std::string, AtomId> index_;
    std::vector<PendingAction> actions_;
};

struct Plan {
    std::vector<std::string> actions;

    std::size_t size() const { return actions.size(); }
    // 1-indexed.
    const std::string &at(std::size_t position) const { return actions.at(position - 1); }
    bool operator==(const Plan &) const = default;
};

struct PlanTrace {
    std::vector<State> states;  // states[0] = init
    bool valid = false;
    // 1-indexed; |plan|+1 when every step applied but the goal failed.
    std::optional<std::size_t> failure_step;
    std::string reason;
};

bool action_applicable(const State &s, const StripsAction &a);

// Throws NotApplicable listing the violated precondition literals.
State step(const StripsInstance &p, const State &s, const StripsAction &a);

// Throws UnknownAction for names that do not resolve.
PlanTrace validate_plan(const StripsInstance &p, const Plan &plan);

bool is_unary(const StripsInstance &p);

}  // namespace cplan
