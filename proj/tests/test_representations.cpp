#include <doctest.h>

#include "cplan/constructions.hpp"
#include "cplan/instance_io.hpp"
#include "cplan/oracles.hpp"
#include "cplan/representations.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

#include <fstream>

using namespace cplan;

namespace {

const std::vector<std::string> kCount16 = {"a1", "a2", "a1", "a3", "a1", "a2", "a1", "a4",
                                           "a1", "a2", "a1", "a3", "a1", "a2", "a1", "a5"};

AdviceBits advice_from_oracle(unsigned n, std::uint64_t i) {
    const auto model = oracle::smallest_model(static_cast<int>(n), oracle::enabled_by_mask(static_cast<int>(n), i));
    return {model.has_value(), sat3::Assignment{n, model.value_or(0)}};
}

std::vector<std::string> all_access(const RandomAccessRep &r) {
    std::vector<std::string> out;
    for (BigInt i = 1; i <= r.length(); ++i)
        out.push_back(r.access(i));
    return out;
}

}  // namespace

TEST_CASE("counter_crar") {
    const auto r = counter_crar(5);
    CHECK(r->length() == 31);
    CHECK(r->access(8) == "a4");
    CHECK(r->access(16) == "a5");
    CHECK_THROWS_AS(r->access(0), IndexOutOfRange);
    CHECK_THROWS_AS(r->access(32), IndexOutOfRange);
    for (unsigned n = 1; n <= 6; ++n) {
        const auto c = counter_crar(n);
        for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i)
            CHECK(c->access(i) == oracle::counter_step(i));
    }
    CHECK(counter_crar(100)->access(pow2(99)) == "a100");
    CHECK(r->meta().max_step_cost >= 1);
}

TEST_CASE("counter grammar agrees with the closed form") {
    CHECK(oracle::expand(counter_macro(2)) == std::vector<std::string>{"a1", "a2", "a1"});
    for (unsigned n = 1; n <= 10; ++n) {
        const auto m = macro_crar(counter_macro(n));
        const auto c = counter_crar(n);
        REQUIRE(m->length() == c->length());
        for (BigInt i = 1; i <= c->length(); ++i)
            REQUIRE(m->access(i) == c->access(i));
        CHECK(m->max_depth() <= m->grammar().height());
    }
}

TEST_CASE("compute_advice") {
    const auto a0 = compute_advice(3, 0);
    CHECK(a0.sat);
    CHECK(a0.assignment.bits == 0);
    CHECK_FALSE(compute_advice(3, 255).sat);
    for (unsigned i = 0; i < 256; ++i) {
        const auto adv = compute_advice(3, i);
        const auto ref = advice_from_oracle(3, i);
        CHECK(adv.sat == ref.sat);
        if (adv.sat) {
            CHECK(adv.assignment.bits == ref.assignment.bits);
            for (auto j : sat3::enabled_atoms(3, i))
                CHECK(sat3::enumerate_clauses(3)[j - 1].satisfied_by(adv.assignment.bits));
        }
    }
}

TEST_CASE("sat-verifier stream") {
    auto s0 = c16_csar(3, 0, compute_advice(3, 0));
    const auto p0 = collect(*s0);
    CHECK(p0.size() == 11);
    CHECK(p0.at(1) == "acs");
    CHECK(p0.at(11) == "ags");

    auto s255 = c16_csar(3, 255, compute_advice(3, 255));
    const auto p255 = collect(*s255);
    CHECK(p255.size() == 17);
    CHECK(p255.at(1) == "acu");
    CHECK(p255.at(17) == "agu");

    for (unsigned i = 0; i < 256; ++i) {
        const auto adv = advice_from_oracle(3, i);
        auto s = c16_csar(3, i, adv);
        const auto plan = collect(*s);
        CHECK(validate_plan(sat_verifier_instance(3, i), plan).valid);
        CHECK((plan.at(1) == "acs") == adv.sat);
    }
}

TEST_CASE("sat-verifier stream with wrong advice") {
    // Claiming unsat for a satisfiable instance.
    auto lie = c16_csar(3, 1, AdviceBits{false, {3, 0}});
    CHECK_THROWS_AS(collect(*lie), NoFalsifiedClause);
    // Claiming sat with a non-model yields a plan the validator rejects.
    auto bad = c16_csar(3, 1, AdviceBits{true, {3, 0}});
    CHECK_FALSE(validate_plan(sat_verifier_instance(3, 1), collect(*bad)).valid);
    auto bad_ra = c16_crar(3, 255, AdviceBits{false, {3, 0}});
    CHECK(bad_ra->access(2) == "avf_1");
    auto lie_ra = c16_crar(3, 1, AdviceBits{false, {3, 0}});
    CHECK(lie_ra->access(2) == "avf_1");
    CHECK_THROWS_AS(lie_ra->access(4), NoFalsifiedClause);
}

TEST_CASE("sat-verifier random access matches the stream") {
    const auto r = c16_crar(3, 255, compute_advice(3, 255));
    CHECK(r->access(1) == "acu");
    CHECK(r->access(17) == "agu");
    for (unsigned n = 1; n <= 4; ++n) {
        const std::uint64_t masks = n == 4 ? 64 : (std::uint64_t{1} << sat3::clause_count(n));
        for (std::uint64_t i = 0; i < masks; ++i) {
            const BigInt mask = n == 4 ? BigInt(i) * 0x10204081ULL % pow2(32) : BigInt(i);
            const auto adv = compute_advice(n, mask);
            auto s = c16_csar(n, mask, adv);
            const auto ra = c16_crar(n, mask, adv);
            const auto streamed = collect(*s).actions;
            REQUIRE(ra->length() == streamed.size());
            CHECK(all_access(*ra) == streamed);
            auto adapted = crar_to_csar(ra);
            CHECK(collect(*adapted).actions == streamed);
        }
    }
}

TEST_CASE("all-instances stream") {
    auto s = c26_csar(3);
    const auto plan = collect(*s);
    CHECK(plan.size() == 23296);
    CHECK(plan.at(1) == "abi");
    CHECK(plan.at(90) == "ais");
    CHECK(plan.at(91 * 255 + 90) == "aiu");
    CHECK(validate_plan(all_instances_instance(3), plan).valid);
    auto s1 = c26_csar(1);
    CHECK(validate_plan(all_instances_instance(1), collect(*s1)).valid);
}

TEST_CASE("crar_to_csar") {
    auto s = crar_to_csar(counter_crar(5));
    std::vector<std::string> first16;
    for (int k = 0; k < 16; ++k)
        first16.push_back(*s->next());
    CHECK(first16 == kCount16);
    CHECK(s->cursor() == 16);

    struct Empty : RandomAccessRep {
        BigInt length() const override { return 0; }
        std::string record() const override { return "empty\n"; }
        Answer do_access(const BigInt &) const override { return {"", 0}; }
    };
    auto e = crar_to_csar(std::make_shared<Empty>());
    CHECK_FALSE(e->next().has_value());

    const auto inner = counter_crar(5);
    CHECK(crar_to_csar(inner)->serialized_bits() > inner->serialized_bits());
}

TEST_CASE("reversible stream") {
    for (const auto &[name, p] : corpus::reversible()) {
        CAPTURE(name);
        const auto f = std::make_shared<const FfpInstance>(strips_to_ffp(p));
        for (std::uint64_t k : {1, 2, 5}) {
            auto s = reversible_csar(f, k);
            std::vector<std::pair<std::string, bool>> out;
            while (auto a = s->next())
                out.emplace_back(*a, s->last_was_stutter());

            // Replay: stutter pairs come back to where they started; the core is optimal.
            State state = p.init();
            Plan core;
            for (std::size_t i = 0; i < out.size(); ++i) {
                const auto &a = p.action(p.action_index(out[i].first));
                REQUIRE(action_applicable(state, a));
                if (out[i].second) {
                    REQUIRE(i + 1 < out.size());
                    REQUIRE(out[i + 1].second);
                    const auto &b = p.action(p.action_index(out[i + 1].first));
                    const State mid = apply_update(state, a.post);
                    REQUIRE(action_applicable(mid, b));
                    CHECK(apply_update(mid, b.post) == state);
                    ++i;
                    continue;
                }
                core.actions.push_back(out[i].first);
                state = apply_update(state, a.post);
            }
            CHECK(p.is_goal(state));
            const auto ref = oracle::bfs_length(p, oracle::named(p, p.init()));
            REQUIRE(ref);
            CHECK(core.size() == *ref);
            CHECK(validate_plan(p, core).valid);

            auto again = reversible_csar(f, k);
            CHECK(verify_representation(p, *again, 1000000).valid());
        }
    }
}

TEST_CASE("reversible stream edge cases") {
    const auto at_goal = std::make_shared<const FfpInstance>(strips_to_ffp(corpus::counter(2, 0, CounterEncoding::gray)));
    CHECK_FALSE(reversible_csar(at_goal)->next().has_value());

    const auto gray2 = corpus::counter(2, 3, CounterEncoding::gray);
    auto s = reversible_csar(std::make_shared<const FfpInstance>(strips_to_ffp(gray2)));
    Plan core;
    while (auto a = s->next())
        if (!s->last_was_stutter())
            core.actions.push_back(*a);
    CHECK(core.size() == 3);

    // One-way frame: no pair of actions returns to the start.
    const auto oneway = std::make_shared<const FfpInstance>(strips_to_ffp(corpus::counter(2, 3)));
    CHECK_THROWS_AS(collect(*reversible_csar(oneway)), NotReversibleObserved);
}

TEST_CASE("verify_representation") {
    const auto p = corpus::counter(5, 16);
    CHECK(verify_representation(p, *limit_stream(crar_to_csar(counter_crar(5)), 16), 100).valid());
    CHECK(verify_representation(p, *counter_crar(4), 100).status == VerifyResult::Status::invalid);

    // n=5 counting grammar with a2 replaced by a3 in the innermost macro.
    MacroGrammar g = counter_macro(4);
    g.macros[1].expansion[1] = "a3";
    g.terminals.push_back("a5");
    g.macros.push_back({"Top", {"P4", "a5"}});
    g.root = "Top";
    const auto r = verify_representation(p, *macro_stream(g), 100);
    CHECK(r.status == VerifyResult::Status::invalid);
    CHECK(r.step == 2u);

    const auto budget = verify_representation(p, *limit_stream(crar_to_csar(counter_crar(5)), 16), 1);
    CHECK(budget.status == VerifyResult::Status::budget_exceeded);

    const auto f = strips_to_ffp(p);
    CHECK(verify_representation(f, *limit_stream(crar_to_csar(counter_crar(5)), 16), 100).valid());
    const auto short_plan = verify_representation(f, *limit_stream(crar_to_csar(counter_crar(5)), 15), 100);
    CHECK(short_plan.status == VerifyResult::Status::invalid);
    CHECK(short_plan.step == 16u);

    const auto q = sat_verifier_instance(3, 255);
    CHECK(verify_representation(q, *c16_crar(3, 255, compute_advice(3, 255)), 100).valid());
    // Representation errors surface as an invalid step, not a crash.
    const auto lie = verify_representation(q, *c16_csar(3, 255, AdviceBits{true, {3, 0}}), 100);
    CHECK(lie.status == VerifyResult::Status::invalid);
}

TEST_CASE("serialized sizes stay within 64 bits per instance bit") {
    for (unsigned n = 1; n <= 6; ++n) {
        CAPTURE(n);
        const auto counter_bits = instance_bits(corpus::counter(n, (1U << n) - 1));
        CHECK(counter_crar(n)->meta().serialized_bits <= 64 * counter_bits);
        CHECK(macro_crar(counter_macro(n))->meta().serialized_bits <= 64 * counter_bits);
        const auto m = sat3::clause_count(n);
        for (const BigInt &i : {BigInt(0), pow2(m) - 1}) {
            const auto inst_bits = instance_bits(sat_verifier_instance(n, i));
            const auto adv = compute_advice(n, i);
            CHECK(c16_csar(n, i, adv)->meta().serialized_bits <= 64 * inst_bits);
            CHECK(c16_crar(n, i, adv)->meta().serialized_bits <= 64 * inst_bits);
        }
        CHECK(c26_csar(n)->meta().serialized_bits <= 64 * instance_bits(all_instances_instance(n)));
        CHECK(counter_crar(n)->meta().serialized_bits > 0);
    }
}

TEST_CASE("representation URIs") {
    CHECK(load_representation("builtin:counter-crar?n=5").random_access->access(16) == "a5");
    CHECK(load_representation("builtin:counter-macro?n=5").random_access->access(16) == "a5");
    const auto c16 = load_representation("builtin:c16-csar?n=3&i=255");
    CHECK_FALSE(c16.random_access);
    CHECK(collect(*c16.open_stream()).size() == 17);
    CHECK(load_representation("builtin:c16-crar?n=3&i=255").random_access->length() == 17);
    auto c26 = load_representation("builtin:c26-csar?n=1").open_stream();
    CHECK(c26->next() == std::optional<std::string>("abi"));

    const std::string path = "rep_uri_gray2.strips";
    {
        std::ofstream out(path);
        out << write_instance(corpus::counter(2, 3, CounterEncoding::gray));
    }
    const auto rev = load_representation("builtin:reversible?file=" + path + "&k=1");
    CHECK(collect(*rev.open_stream()).size() == 13);

    const std::string gpath = "rep_uri_counter.grammar";
    {
        std::ofstream out(gpath);
        out << write_grammar(counter_macro(3));
    }
    CHECK(load_representation("file:" + gpath).random_access->access(4) == "a3");

    CHECK_THROWS_AS(load_representation("counter-crar?n=5"), InputError);
    CHECK_THROWS_AS(load_representation("builtin:nope?n=5"), InputError);
    CHECK_THROWS_AS(load_representation("builtin:counter-crar"), InputError);
    CHECK_THROWS_AS(load_representation("builtin:counter-crar?n=5&x=1"), InputError);
    CHECK_THROWS_AS(load_representation("builtin:counter-crar?n=five"), InputError);
    CHECK_THROWS_AS(load_representation("builtin:c16-csar?n=3&i=256"), InputError);
}
