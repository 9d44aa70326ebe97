#include "cplan/model.hpp"

#include "cplan/bigint.hpp"

#include <algorithm>

namespace cplan {

NotApplicable::NotApplicable(const std::string &action, std::vector<std::string> violated)
    : Error([&] {
          std::string msg = "action " + action + " not applicable; violated:";
          for (const auto &v : violated)
              msg += " " + v;
          return msg;
      }()),
      violated_(std::move(violated)) {}

BigInt parse_bigint(const std::string &text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw InputError("not a nonnegative integer: '" + text + "'");
    return BigInt(text);
}

LiteralSet::LiteralSet(std::size_t width, std::span<const Literal> literals) : pos_(width), neg_(width) {
    for (const auto &l : literals) {
        if (l.atom >= width)
            throw InputError("literal references atom " + std::to_string(l.atom) + " outside frame");
        if (l.positive)
            pos_.set(l.atom);
        else
            neg_.set(l.atom);
        if (pos_.test(l.atom) && neg_.test(l.atom))
            throw InconsistentLiterals("#" + std::to_string(l.atom));
    }
}

LiteralSet::LiteralSet(AtomSet pos, AtomSet neg) : pos_(std::move(pos)), neg_(std::move(neg)) {
    if (pos_.width() != neg_.width())
        throw InputError("literal set width mismatch");
    if (pos_.intersects(neg_))
        throw InconsistentLiterals("#" + std::to_string((pos_ & neg_).members().front()));
}

std::vector<Literal> LiteralSet::literals() const {
    std::vector<Literal> out;
    for (AtomId a = 0; a < pos_.width(); ++a) {
        if (pos_.test(a))
            out.push_back(cplan::pos(a));
        else if (neg_.test(a))
            out.push_back(cplan::neg(a));
    }
    return out;
}

State apply_update(const State &s, const LiteralSet &y) { return (s - y.neg()) | y.pos(); }

StripsInstance::StripsInstance(std::vector<std::string> atoms, std::vector<StripsAction> actions, State init,
                               LiteralSet goal)
    : atoms_(std::move(atoms)), actions_(std::move(actions)), init_(std::move(init)), goal_(std::move(goal)) {
    const std::size_t w = atoms_.size();
    for (AtomId a = 0; a < w; ++a) {
        if (!atom_index_.emplace(atoms_[a], a).second)
            throw InputError("duplicate atom: " + atoms_[a]);
    }
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        const auto &act = actions_[i];
        if (!action_index_.emplace(act.name, i).second)
            throw InputError("duplicate action: " + act.name);
        if (act.pre.pos().width() != w || act.post.pos().width() != w)
            throw InputError("action " + act.name + " does not match frame width");
    }
    if (init_.width() != w || goal_.pos().width() != w)
        throw InputError("init/goal do not match frame width");
}

std::optional<AtomId> StripsInstance::find_atom(const std::string &name) const {
    auto it = atom_index_.find(name);
    if (it == atom_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::size_t> StripsInstance::find_action(const std::string &name) const {
    auto it = action_index_.find(name);
    if (it == action_index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t StripsInstance::action_index(const std::string &name) const {
    auto idx = find_action(name);
    if (!idx)
        throw UnknownAction(name);
    return *idx;
}

std::string StripsInstance::literal_name(const Literal &l) const {
    return (l.positive ? "" : "!") + atoms_.at(l.atom);
}

AtomId StripsBuilder::atom(std::string name) {
    auto [it, inserted] = index_.emplace(name, atoms_.size());
    if (!inserted)
        throw InputError("duplicate atom: " + name);
    atoms_.push_back(std::move(name));
    return it->second;
}

AtomId StripsBuilder::atom_id(const std::string &name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownAtom(name);
    return it->second;
}

void StripsBuilder::action(std::string name, std::vector<Literal> pre, std::vector<Literal> post) {
    actions_.push_back({std::move(name), std::move(pre), std::move(post)});
}

StripsInstance StripsBuilder::build(const std::vector<AtomId> &init, const std::vector<Literal> &goal) const {
    const std::size_t w = atoms_.size();
    std::vector<StripsAction> acts;
    acts.reserve(actions_.size());
    for (const auto &a : actions_)
        acts.push_back({a.name, LiteralSet(w, a.pre), LiteralSet(w, a.post)});
    State s(w);
    for (AtomId a : init)
        s.set(a);
    return StripsInstance(atoms_, std::move(acts), std::move(s), LiteralSet(w, goal));
}

bool action_applicable(const State &s, const StripsAction &a) { return a.pre.satisfied_by(s); }

State step(const StripsInstance &p, const State &s, const StripsAction &a) {
    if (!action_applicable(s, a)) {
        std::vector<std::string> violated;
        for (const auto &l : a.pre.literals())
            if (s.test(l.atom) != l.positive)
                violated.push_back(p.literal_name(l));
        throw NotApplicable(a.name, std::move(violated));
    }
    return apply_update(s, a.post);
}

PlanTrace validate_plan(const StripsInstance &p, const Plan &plan) {
    std::vector<std::size_t> ids;
    ids.reserve(plan.size());
    for (const auto &name : plan.actions)
        ids.push_back(p.action_index(name));

    PlanTrace trace;
    trace.states.push_back(p.init());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        const auto &a = p.action(ids[k]);
        const State &s = trace.states.back();
        if (!action_applicable(s, a)) {
            trace.failure_step = k + 1;
            trace.reason = "precondition of " + a.name + " not satisfied";
            return trace;
        }
        trace.states.push_back(apply_update(s, a.post));
    }
    if (!p.is_goal(trace.states.back())) {
        trace.failure_step = plan.size() + 1;
        trace.reason = "goal not satisfied";
        return trace;
    }
    trace.valid = true;
    return trace;
}

bool is_unary(const StripsInstance &p) {
    return std::all_of(p.actions().begin(), p.actions().end(), [](const StripsAction &a) { return a.post.size() == 1; });
}

}  // namespace cplan
