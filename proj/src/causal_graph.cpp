#include "cplan/causal_graph.hpp"

#include <algorithm>
#include <set>

namespace cplan {

bool CausalGraph::has_edge(AtomId u, AtomId v) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

namespace {

CausalGraph make_graph(const StripsInstance &p, std::set<std::pair<AtomId, AtomId>> edges, bool refined) {
    CausalGraph g;
    g.nodes = p.atoms();
    g.edges.assign(edges.begin(), edges.end());
    g.refined = refined;
    return g;
}

}  // namespace

CausalGraph causal_graph(const StripsInstance &p) {
    std::set<std::pair<AtomId, AtomId>> edges;
    for (const auto &a : p.actions()) {
        const auto post = a.post.atoms().members();
        for (AtomId u : (a.pre.atoms() | a.post.atoms()).members())
            for (AtomId v : post)
                if (u != v)
                    edges.emplace(u, v);
    }
    return make_graph(p, std::move(edges), false);
}

CausalGraph refined_causal_graph(const StripsInstance &p) {
    std::vector<AtomSet> post_atoms;
    for (const auto &a : p.actions())
        post_atoms.push_back(a.post.atoms());

    auto cond_2a = [&](AtomId u, AtomId v) {
        return std::any_of(post_atoms.begin(), post_atoms.end(),
                           [&](const AtomSet &pa) { return pa.test(u) && !pa.test(v); });
    };
    auto cond_2b = [&](AtomId u, AtomId v) {
        return std::none_of(post_atoms.begin(), post_atoms.end(),
                            [&](const AtomSet &pa) { return !pa.test(u) && pa.test(v); });
    };

    std::set<std::pair<AtomId, AtomId>> edges;
    for (std::size_t i = 0; i < p.actions().size(); ++i) {
        const auto &a = p.action(i);
        const auto post = post_atoms[i].members();
        for (AtomId u : (a.pre.atoms() - post_atoms[i]).members())
            for (AtomId v : post)
                if (u != v)
                    edges.emplace(u, v);
        for (AtomId u : post)
            for (AtomId v : post)
                if (u != v && (cond_2a(u, v) || cond_2b(u, v)))
                    edges.emplace(u, v);
    }
    return make_graph(p, std::move(edges), true);
}

SccResult scc_and_acyclicity(const CausalGraph &g) {
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<AtomId>> adj(n);
    for (const auto &[u, v] : g.edges)
        adj[u].push_back(v);

    // Iterative Tarjan.
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomId> stack;
    std::size_t counter = 0;
    SccResult result;

    for (AtomId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited)
            continue;
        std::vector<std::pair<AtomId, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto &[u, next] = call.back();
            if (next < adj[u].size()) {
                AtomId v = adj[u][next++];
                if (index[v] == kUnvisited) {
                    index[v] = low[v] = counter++;
                    stack.push_back(v);
                    on_stack[v] = true;
                    call.emplace_back(v, 0);
                } else if (on_stack[v]) {
                    low[u] = std::min(low[u], index[v]);
                }
                continue;
            }
            const AtomId done = u;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<AtomId> comp;
                AtomId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                std::sort(comp.begin(), comp.end());
                if (comp.size() > 1)
                    result.acyclic = false;
                result.components.push_back(std::move(comp));
            }
        }
    }
    return result;
}

}  // namespace cplan
