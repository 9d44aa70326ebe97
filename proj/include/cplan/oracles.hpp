#pragma once

#include "cplan/bigint.hpp"
#include "cplan/ffp.hpp"
#include "cplan/model.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace cplan {

struct SearchResult {
    std::optional<Plan> plan;
    std::optional<std::uint64_t> optimal_length;
    std::uint64_t states_expanded = 0;
};

// Breadth-first search from init. Ties broken by action declaration order, so the
// returned plan is reproducible. No plan means unsolvable.
SearchResult bfs_solve(const StripsInstance &p, std::uint64_t cap = kDefaultExplorationCap);
SearchResult bfs_solve(const FfpInstance &p, std::uint64_t cap = kDefaultExplorationCap);

// Shortest-plan length from arbitrary states, memoized per instance. Safe for
// concurrent queries.
class OptplanOracle {
public:
    explicit OptplanOracle(const FfpInstance &p, std::uint64_t cap = kDefaultExplorationCap)
        : instance_(p), cap_(cap) {}

    // nullopt when no goal state is reachable from s.
    std::optional<std::uint64_t> length(const FfpState &s) const;
    std::uint64_t invocations() const { return invocations_; }

private:
    const FfpInstance &instance_;
    std::uint64_t cap_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<FfpState, std::optional<std::uint64_t>, FfpStateHash> memo_;
    mutable std::atomic<std::uint64_t> invocations_{0};
};

std::optional<std::uint64_t> optplan_length(const FfpInstance &p, const FfpState &s,
                                            std::uint64_t cap = kDefaultExplorationCap);

// Number of distinct shortest action sequences from init to a goal state; parallel
// actions between the same pair of states count separately. 0 if unsolvable.
BigInt count_optimal_plans(const StripsInstance &p, std::uint64_t cap = kDefaultExplorationCap,
                           std::uint64_t edge_cap = kDefaultEdgeCap);

}  // namespace cplan
