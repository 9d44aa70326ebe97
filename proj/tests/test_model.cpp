#include <doctest.h>

#include "cplan/constructions.hpp"
#include "cplan/instance_io.hpp"
#include "cplan/model.hpp"

#include <random>

using namespace cplan;

namespace {

StripsInstance counter(unsigned n, unsigned target) {
    return counter_instance({n, BigInt(target), CounterEncoding::binary});
}

State state_of(std::size_t width, std::initializer_list<AtomId> atoms) {
    State s(width);
    for (auto a : atoms)
        s.set(a);
    return s;
}

const std::vector<std::string> kCount16 = {"a1", "a2", "a1", "a3", "a1", "a2", "a1", "a4",
                                           "a1", "a2", "a1", "a3", "a1", "a2", "a1", "a5"};

}  // namespace

TEST_CASE("update operator") {
    // atoms x1 x2 x3 = 0 1 2
    const State s = state_of(3, {0, 1});
    const std::vector<Literal> lits{neg(0), pos(2)};
    const LiteralSet y(3, lits);
    CHECK(apply_update(s, y) == state_of(3, {1, 2}));
    CHECK(apply_update(s, LiteralSet(3)) == s);
    const std::vector<Literal> only_x1{pos(0)};
    CHECK(apply_update(State(3), LiteralSet(3, only_x1)) == state_of(3, {0}));
}

TEST_CASE("inconsistent literal sets are rejected") {
    const std::vector<Literal> lits{pos(1), neg(1)};
    CHECK_THROWS_AS(LiteralSet(3, lits), InconsistentLiterals);
}

TEST_CASE("update laws on random inputs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 500; ++round) {
        const std::size_t w = 1 + rng() % 70;
        State s(w);
        AtomSet p(w), q(w);
        for (std::size_t a = 0; a < w; ++a) {
            if (rng() % 2)
                s.set(a);
            switch (rng() % 3) {
            case 0: p.set(a); break;
            case 1: q.set(a); break;
            default: break;
            }
        }
        const LiteralSet y(p, q);
        const State t = apply_update(s, y);
        CHECK(p.subset_of(t));
        CHECK_FALSE(t.intersects(q));
        CHECK(apply_update(t, y) == t);
    }
}

TEST_CASE("applicability and step on the counter") {
    const auto p = counter(2, 3);
    const auto &a1 = p.action(p.action_index("a1"));
    const auto &a2 = p.action(p.action_index("a2"));
    CHECK(action_applicable(State(2), a1));
    CHECK_FALSE(action_applicable(State(2), a2));
    const State one = step(p, State(2), a1);
    CHECK(one == state_of(2, {0}));
    CHECK(step(p, one, a2) == state_of(2, {1}));
    try {
        step(p, one, a1);
        FAIL("expected NotApplicable");
    } catch (const NotApplicable &e) {
        REQUIRE(e.violated().size() == 1);
        CHECK(e.violated()[0] == "!x1");
    }
}

TEST_CASE("validate_plan") {
    const auto p = counter(5, 16);
    SUBCASE("counting to sixteen") {
        const auto trace = validate_plan(p, Plan{kCount16});
        CHECK(trace.valid);
        CHECK(trace.states.size() == 17);
        for (std::size_t k = 0; k < kCount16.size(); ++k)
            CHECK(trace.states[k + 1] == step(p, trace.states[k], p.action(p.action_index(kCount16[k]))));
    }
    SUBCASE("inapplicable first step") {
        const auto trace = validate_plan(p, Plan{{"a2"}});
        CHECK_FALSE(trace.valid);
        CHECK(trace.failure_step == 1);
    }
    SUBCASE("goal failure reported one past the end") {
        const auto trace = validate_plan(p, Plan{{"a1", "a2"}});
        CHECK_FALSE(trace.valid);
        CHECK(trace.failure_step == 3);
    }
    SUBCASE("unknown action") {
        CHECK_THROWS_AS(validate_plan(p, Plan{{"a1", "zz"}}), UnknownAction);
    }
    SUBCASE("empty plan when init already satisfies the goal") {
        const auto q = counter(3, 0);
        CHECK(validate_plan(q, Plan{}).valid);
    }
}

TEST_CASE("is_unary") {
    for (unsigned n = 1; n <= 5; ++n)
        CHECK(is_unary(counter_instance({n, BigInt(1), CounterEncoding::gray})));
    CHECK_FALSE(is_unary(counter(2, 3)));
    CHECK(is_unary(to_unary(counter(3, 5))));
}

TEST_CASE("instance text round trip") {
    const std::vector<StripsInstance> corpus{counter(3, 5), counter_instance({3, BigInt(6), CounterEncoding::gray}),
                                             indexed_plans_instance(2), sat_verifier_instance(3, 77),
                                             all_instances_instance(3)};
    for (const auto &p : corpus) {
        const auto text = write_instance(p);
        const auto q = parse_instance(text);
        CHECK(write_instance(q) == text);
        CHECK(q.atoms() == p.atoms());
        CHECK(q.init() == p.init());
        CHECK(q.goal() == p.goal());
        REQUIRE(q.actions().size() == p.actions().size());
        for (std::size_t a = 0; a < p.actions().size(); ++a) {
            CHECK(q.action(a).name == p.action(a).name);
            CHECK(q.action(a).pre == p.action(a).pre);
            CHECK(q.action(a).post == p.action(a).post);
        }
        CHECK(instance_bits(p) == 8 * text.size());
    }
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const std::string &text) {
        try {
            parse_instance(text);
        } catch (const ParseError &e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("strips v2\n") == 1);
    CHECK(line_of("strips v1\natoms: x\naction a\n  pre: y\n  post: x\ninit:\ngoal: x\n") == 4);
    CHECK(line_of("strips v1\n# comment\natoms: x\nbogus\n") == 4);
    CHECK_THROWS_AS(parse_instance("strips v1\natoms: x\naction a\n  pre: x !x\n  post: x\ninit:\ngoal: x\n"),
                    InputError);
    // Comments and blank lines are fine.
    const auto p = parse_instance("strips v1\n\natoms: x # the bit\naction a\n  pre: !x\n  post: x\ninit:\ngoal: x\n");
    CHECK(p.actions().size() == 1);
}

TEST_CASE("plan files") {
    const auto plan = parse_plan("# header\na1\n\na2  # trailing\n");
    CHECK(plan.actions == std::vector<std::string>{"a1", "a2"});
    CHECK(plan.at(2) == "a2");
    CHECK(parse_plan(write_plan(Plan{kCount16})).actions == kCount16);
}
