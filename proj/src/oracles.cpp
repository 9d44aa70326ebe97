#include "cplan/oracles.hpp"

#include <algorithm>
#include <deque>

namespace cplan {

namespace {

struct StripsSystem {
    using StateT = State;
    using Hash = AtomSetHash;
    const StripsInstance &p;

    const State &init() const { return p.init(); }
    bool goal(const State &s) const { return p.is_goal(s); }
    std::size_t num_actions() const { return p.actions().size(); }
    std::optional<State> apply(std::size_t a, const State &s) const {
        const auto &act = p.action(a);
        if (!action_applicable(s, act))
            return std::nullopt;
        return apply_update(s, act.post);
    }
    const std::string &name(std::size_t a) const { return p.action(a).name; }
};

struct FfpSystem {
    using StateT = FfpState;
    using Hash = FfpStateHash;
    const FfpInstance &p;

    const FfpState &init() const { return p.init(); }
    bool goal(const FfpState &s) const { return p.is_goal(s); }
    std::size_t num_actions() const { return p.actions().size(); }
    std::optional<FfpState> apply(std::size_t a, const FfpState &s) const {
        if (!p.applicable(a, s))
            return std::nullopt;
        return p.successor(a, s);
    }
    const std::string &name(std::size_t a) const { return p.actions()[a].name; }
};

template <class System>
SearchResult bfs(const System &sys, const typename System::StateT &start, std::uint64_t cap) {
    using S = typename System::StateT;
    struct Parent {
        std::size_t prev;
        std::size_t action;
    };
    std::vector<S> states{start};
    std::vector<Parent> parents{{0, 0}};
    std::unordered_map<S, std::size_t, typename System::Hash> seen{{start, 0}};

    SearchResult result;
    std::optional<std::size_t> found;
    for (std::size_t head = 0; head < states.size(); ++head) {
        if (sys.goal(states[head])) {
            found = head;
            break;
        }
        ++result.states_expanded;
        for (std::size_t a = 0; a < sys.num_actions(); ++a) {
            auto t = sys.apply(a, states[head]);
            if (!t || seen.count(*t))
                continue;
            if (states.size() >= cap)
                throw ExplorationCapExceeded(cap);
            seen.emplace(*t, states.size());
            states.push_back(std::move(*t));
            parents.push_back({head, a});
        }
    }
    if (!found)
        return result;
    Plan plan;
    for (std::size_t at = *found; at != 0; at = parents[at].prev)
        plan.actions.push_back(sys.name(parents[at].action));
    std::reverse(plan.actions.begin(), plan.actions.end());
    result.optimal_length = plan.size();
    result.plan = std::move(plan);
    return result;
}

}  // namespace

SearchResult bfs_solve(const StripsInstance &p, std::uint64_t cap) { return bfs(StripsSystem{p}, p.init(), cap); }

SearchResult bfs_solve(const FfpInstance &p, std::uint64_t cap) { return bfs(FfpSystem{p}, p.init(), cap); }

std::optional<std::uint64_t> OptplanOracle::length(const FfpState &s) const {
    {
        std::shared_lock lock(mutex_);
        ++invocations_;
        auto it = memo_.find(s);
        if (it != memo_.end())
            return it->second;
    }
    auto r = bfs(FfpSystem{instance_}, s, cap_).optimal_length;
    std::unique_lock lock(mutex_);
    memo_.emplace(s, r);
    return r;
}

std::optional<std::uint64_t> optplan_length(const FfpInstance &p, const FfpState &s, std::uint64_t cap) {
    return bfs(FfpSystem{p}, s, cap).optimal_length;
}

BigInt count_optimal_plans(const StripsInstance &p, std::uint64_t cap, std::uint64_t edge_cap) {
    if (p.is_goal(p.init()))
        return 1;
    std::unordered_map<State, BigInt, AtomSetHash> layer{{p.init(), 1}};
    std::unordered_map<State, bool, AtomSetHash> seen{{p.init(), true}};
    std::uint64_t edges = 0;
    while (!layer.empty()) {
        std::unordered_map<State, BigInt, AtomSetHash> next;
        for (const auto &[s, paths] : layer) {
            for (const auto &a : p.actions()) {
                if (!action_applicable(s, a))
                    continue;
                if (++edges > edge_cap)
                    throw ExplorationCapExceeded(edge_cap);
                State t = apply_update(s, a.post);
                if (seen.count(t) && !next.count(t))
                    continue;  // reached at an earlier depth
                next[t] += paths;
                if (seen.emplace(t, true).second && seen.size() > cap)
                    throw ExplorationCapExceeded(cap);
            }
        }
        BigInt total = 0;
        for (const auto &[t, paths] : next)
            if (p.is_goal(t))
                total += paths;
        if (total > 0)
            return total;
        layer = std::move(next);
    }
    return 0;
}

}  // namespace cplan
