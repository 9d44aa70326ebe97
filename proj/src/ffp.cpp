#include "cplan/ffp.hpp"

#include "cplan/instance_io.hpp"

#include <deque>
#include <unordered_set>

namespace cplan {

std::size_t FfpStateHash::operator()(const FfpState &s) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto v : s)
        h = (h ^ v) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
}

FfpInstance::FfpInstance(std::vector<FfpVariable> variables, std::vector<FfpAction> actions, FfpState init,
                         std::function<bool(const FfpState &, StepMeter &)> goal, std::uint64_t step_budget)
    : variables_(std::move(variables)),
      actions_(std::move(actions)),
      init_(std::move(init)),
      goal_(std::move(goal)),
      step_budget_(step_budget) {
    for (const auto &v : variables_)
        if (v.domain_size == 0)
            throw InputError("variable " + v.name + " has empty domain");
    check_state(init_);
}

void FfpInstance::check_state(const FfpState &s) const {
    if (s.size() != variables_.size())
        throw InputError("FFP state has wrong arity");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] >= variables_[i].domain_size)
            throw InputError("value out of domain for " + variables_[i].name);
}

bool FfpInstance::applicable(std::size_t action, const FfpState &s) const {
    StepMeter meter(step_budget_);
    return actions_.at(action).pre(s, meter);
}

FfpState FfpInstance::successor(std::size_t action, const FfpState &s) const {
    StepMeter meter(step_budget_);
    FfpState t = actions_.at(action).post(s, meter);
    check_state(t);
    return t;
}

bool FfpInstance::is_goal(const FfpState &s) const {
    StepMeter meter(step_budget_);
    return goal_(s, meter);
}

std::uint64_t FfpInstance::state_space_size() const {
    std::uint64_t n = 1;
    for (const auto &v : variables_) {
        if (n > (std::uint64_t{1} << 62) / v.domain_size)
            return std::uint64_t{1} << 62;
        n *= v.domain_size;
    }
    return n;
}

FfpState to_ffp_state(const State &s) {
    FfpState out(s.width(), 0);
    for (AtomId a : s.members())
        out[a] = 1;
    return out;
}

State to_strips_state(const FfpState &s) {
    State out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i])
            out.set(i);
    return out;
}

namespace {

bool literals_hold(const LiteralSet &ls, const FfpState &s, StepMeter &meter) {
    for (const auto &l : ls.literals()) {
        meter.charge();
        if ((s[l.atom] != 0) != l.positive)
            return false;
    }
    return true;
}

}  // namespace

FfpInstance strips_to_ffp(const StripsInstance &p) {
    auto shared = std::make_shared<const StripsInstance>(p);
    std::vector<FfpVariable> vars;
    for (const auto &name : p.atoms())
        vars.push_back({name, 2});
    std::uint64_t frame_size = p.num_atoms() + p.goal().size();
    std::vector<FfpAction> acts;
    for (std::size_t i = 0; i < p.actions().size(); ++i) {
        frame_size += p.action(i).pre.size() + p.action(i).post.size();
        acts.push_back({p.action(i).name,
                        [shared, i](const FfpState &s, StepMeter &m) {
                            return literals_hold(shared->action(i).pre, s, m);
                        },
                        [shared, i](const FfpState &s, StepMeter &m) {
                            FfpState t = s;
                            for (const auto &l : shared->action(i).post.literals()) {
                                m.charge();
                                t[l.atom] = l.positive ? 1 : 0;
                            }
                            return t;
                        }});
    }
    FfpInstance out(std::move(vars), std::move(acts), to_ffp_state(p.init()),
                    [shared](const FfpState &s, StepMeter &m) { return literals_hold(shared->goal(), s, m); },
                    std::max<std::uint64_t>(frame_size, 1));
    out.set_source_text(write_instance(p));
    return out;
}

bool is_deterministic(const FfpInstance &p, std::uint64_t cap) {
    std::unordered_set<FfpState, FfpStateHash> seen{p.init()};
    std::deque<FfpState> queue{p.init()};
    while (!queue.empty()) {
        FfpState s = std::move(queue.front());
        queue.pop_front();
        int enabled = 0;
        for (std::size_t a = 0; a < p.actions().size(); ++a) {
            if (!p.applicable(a, s))
                continue;
            if (++enabled > 1)
                return false;
            FfpState t = p.successor(a, s);
            if (seen.insert(t).second) {
                if (seen.size() > cap)
                    throw ExplorationCapExceeded(cap);
                queue.push_back(std::move(t));
            }
        }
    }
    return true;
}

bool is_reversible(const FfpInstance &p, std::uint64_t cap) {
    if (p.state_space_size() > cap)
        throw ExplorationCapExceeded(cap);
    const auto &vars = p.variables();
    FfpState s(vars.size(), 0);
    // Odometer over the full product space.
    while (true) {
        for (std::size_t a = 0; a < p.actions().size(); ++a) {
            if (!p.applicable(a, s))
                continue;
            FfpState t = p.successor(a, s);
            bool back = false;
            for (std::size_t b = 0; b < p.actions().size() && !back; ++b)
                back = p.applicable(b, t) && p.successor(b, t) == s;
            if (!back)
                return false;
        }
        std::size_t i = 0;
        while (i < s.size() && ++s[i] == vars[i].domain_size) {
            s[i] = 0;
            ++i;
        }
        if (i == s.size())
            break;
    }
    return true;
}

}  // namespace cplan
