#pragma once

#include "cplan/model.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cplan {

struct CausalGraph {
    std::vector<std::string> nodes;
    // Sorted, unique, never (u, u).
    std::vector<std::pair<AtomId, AtomId>> edges;
    bool refined = false;

    bool has_edge(AtomId u, AtomId v) const;
};

// u -> v iff u != v and some action has u in Atoms(pre) ∪ Atoms(post) and v in Atoms(post).
CausalGraph causal_graph(const StripsInstance &p);

// u -> v iff u != v and either
//   1) some a has u in Atoms(pre) - Atoms(post) and v in Atoms(post), or
//   2) some a has u, v in Atoms(post) and
//      a) some a' has u in Atoms(post(a')) and v not in it, or
//      b) no a' has u not in Atoms(post(a')) and v in it.
CausalGraph refined_causal_graph(const StripsInstance &p);

struct SccResult {
    // Components in reverse topological order of the condensation (Tarjan order).
    std::vector<std::vector<AtomId>> components;
    bool acyclic = true;
};

SccResult scc_and_acyclicity(const CausalGraph &g);

}  // namespace cplan
