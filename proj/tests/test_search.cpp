#include <doctest.h>

#include "cplan/causal_graph.hpp"
#include "cplan/constructions.hpp"
#include "cplan/oracles.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace cplan;

namespace {

std::size_t largest_component(const CausalGraph &g) {
    std::size_t best = 0;
    for (const auto &c : scc_and_acyclicity(g).components)
        best = std::max(best, c.size());
    return best;
}

// Acyclic per the reachability oracle: nothing reaches itself.
bool acyclic_by_closure(const CausalGraph &g) {
    const auto r = oracle::reach(g.nodes.size(), [&](std::size_t u, std::size_t v) { return g.has_edge(u, v); });
    for (std::size_t u = 0; u < g.nodes.size(); ++u)
        if (r[u][u])
            return false;
    return true;
}

}  // namespace

TEST_CASE("bfs_solve") {
    const auto r = bfs_solve(indexed_plans_instance(2));
    REQUIRE(r.optimal_length);
    CHECK(*r.optimal_length == 3);
    CHECK(r.plan->actions == std::vector<std::string>{"a1", "a2", "a1"});

    const auto g = bfs_solve(corpus::counter(5, 16, CounterEncoding::gray));
    CHECK(*g.optimal_length == 16);

    const StripsInstance trivial({"x1"}, {}, State(1), LiteralSet(1));
    std::vector<Literal> goal{pos(0)};
    const StripsInstance none({"x1"}, {}, State(1), LiteralSet(1, goal));
    CHECK_FALSE(bfs_solve(none).plan.has_value());
    CHECK(bfs_solve(trivial).optimal_length == 0u);

    CHECK_THROWS_AS(bfs_solve(corpus::counter(8, 255), 10), ExplorationCapExceeded);
}

TEST_CASE("bfs agrees with the reference search on the corpus") {
    for (const auto &[name, p] : corpus::small()) {
        CAPTURE(name);
        const auto mine = bfs_solve(p);
        const auto ref = oracle::bfs_length(p, oracle::named(p, p.init()));
        REQUIRE(mine.optimal_length.has_value() == ref.has_value());
        if (ref) {
            CHECK(*mine.optimal_length == *ref);
            CHECK(validate_plan(p, *mine.plan).valid);
        }
    }
}

TEST_CASE("optplan_length from arbitrary states") {
    const auto f = strips_to_ffp(corpus::counter(3, 7));
    CHECK(optplan_length(f, {1, 1, 1}) == 0u);
    CHECK(optplan_length(f, {1, 0, 1}) == 2u);  // value 5
    CHECK(optplan_length(f, {0, 0, 0}) == 7u);

    const auto g = strips_to_ffp(corpus::counter(2, 0));
    CHECK_FALSE(optplan_length(g, {1, 0}).has_value());  // counting never wraps

    OptplanOracle oracle(f);
    CHECK(oracle.length({1, 1, 0}) == 4u);
    CHECK(oracle.length({1, 1, 0}) == 4u);
    CHECK(oracle.invocations() == 2);
}

TEST_CASE("count_optimal_plans") {
    CHECK(count_optimal_plans(indexed_plans_instance(1)) == 2);
    CHECK(count_optimal_plans(indexed_plans_instance(2)) == 8);
    CHECK(count_optimal_plans(indexed_plans_instance(3)) == 128);
    CHECK(count_optimal_plans(corpus::counter(3, 7)) == 1);
    CHECK(count_optimal_plans(corpus::counter(3, 0)) == 1);

    for (const auto &[name, p] : corpus::small()) {
        if (p.num_atoms() > 12)
            continue;
        CAPTURE(name);
        const auto ref = oracle::dfs_optimal(p, 8);
        const auto count = count_optimal_plans(p);
        if (ref)
            CHECK(count == ref->second);
        else if (!bfs_solve(p).plan)
            CHECK(count == 0);
    }
}

TEST_CASE("causal graph edges match the definitions") {
    std::vector<corpus::Entry> frames = corpus::small();
    for (unsigned n = 3; n <= 4; ++n) {
        frames.emplace_back("counter", corpus::counter(n, 1));
        frames.emplace_back("gray", corpus::counter(n, 1, CounterEncoding::gray));
    }
    for (const auto &[name, p] : frames) {
        CAPTURE(name);
        const auto g = causal_graph(p);
        const auto r = refined_causal_graph(p);
        for (AtomId u = 0; u < p.num_atoms(); ++u)
            for (AtomId v = 0; v < p.num_atoms(); ++v) {
                REQUIRE(g.has_edge(u, v) == oracle::plain_edge(p, u, v));
                REQUIRE(r.has_edge(u, v) == oracle::refined_edge(p, u, v));
            }
        CHECK(scc_and_acyclicity(g).acyclic == acyclic_by_closure(g));
        CHECK(scc_and_acyclicity(r).acyclic == acyclic_by_closure(r));
    }
}

TEST_CASE("causal graph shapes of the counters") {
    for (unsigned n = 3; n <= 6; ++n) {
        CAPTURE(n);
        const auto bin = corpus::counter(n, 1);
        const auto gray = corpus::counter(n, 1, CounterEncoding::gray);
        CHECK(largest_component(causal_graph(bin)) == n);
        CHECK(scc_and_acyclicity(causal_graph(gray)).acyclic);
        CHECK(scc_and_acyclicity(refined_causal_graph(bin)).acyclic);
        CHECK(scc_and_acyclicity(refined_causal_graph(gray)).acyclic);
    }
    CHECK(largest_component(causal_graph(sat_verifier_instance(3, 0))) > 1);
    const auto r = refined_causal_graph(corpus::counter(3, 1));
    CHECK(r.edges == std::vector<std::pair<AtomId, AtomId>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("scc basics") {
    CausalGraph empty;
    const auto e = scc_and_acyclicity(empty);
    CHECK(e.acyclic);
    CHECK(e.components.empty());

    CausalGraph two;
    two.nodes = {"u", "v"};
    two.edges = {{0, 1}, {1, 0}};
    const auto t = scc_and_acyclicity(two);
    CHECK_FALSE(t.acyclic);
    REQUIRE(t.components.size() == 1);
    CHECK(t.components[0].size() == 2);

    CausalGraph chain;
    chain.nodes = {"a", "b", "c"};
    chain.edges = {{0, 1}, {1, 2}};
    CHECK(scc_and_acyclicity(chain).components.size() == 3);
    CHECK(scc_and_acyclicity(chain).acyclic);
}
