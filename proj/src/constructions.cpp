#include "cplan/constructions.hpp"

#include "cplan/sat3.hpp"

#include <bit>

namespace cplan {

namespace {

std::string idx(const std::string &base, std::size_t i) { return base + std::to_string(i); }

// Literal of sat3 clause literal over the x atoms; x[v-1] is the atom of variable v.
Literal clause_literal(const sat3::SatLiteral &l, const std::vector<AtomId> &x) {
    return {x[l.var - 1], !l.negated};
}

// The binary counter increment pattern on bits[0..i]: requires bit i false and all lower
// bits true; sets bit i and clears the lower bits.
void increment_pattern(const std::vector<AtomId> &bits, std::size_t i, std::vector<Literal> &pre,
                       std::vector<Literal> &post) {
    pre.push_back(neg(bits[i]));
    post.push_back(pos(bits[i]));
    for (std::size_t k = 0; k < i; ++k) {
        pre.push_back(pos(bits[k]));
        post.push_back(neg(bits[k]));
    }
}

}  // namespace

StripsInstance to_unary(const StripsInstance &p) {
    StripsBuilder b;
    for (const auto &name : p.atoms())
        b.atom(name);
    std::vector<AtomId> locks;
    for (const auto &a : p.actions())
        locks.push_back(b.atom("lock_" + a.name));

    for (std::size_t ai = 0; ai < p.actions().size(); ++ai) {
        const auto &a = p.action(ai);
        const AtomId lock = locks[ai];
        std::vector<Literal> begin_pre = a.pre.literals();
        for (AtomId l : locks)
            begin_pre.push_back(neg(l));
        b.action(a.name + "_begin", begin_pre, {pos(lock)});
        const auto post = a.post.literals();
        for (std::size_t i = 0; i < post.size(); ++i)
            b.action(a.name + "_" + std::to_string(i + 1), {pos(lock)}, {post[i]});
        std::vector<Literal> end_pre = post;
        end_pre.push_back(pos(lock));
        b.action(a.name + "_end", end_pre, {neg(lock)});
    }

    std::vector<Literal> goal = p.goal().literals();
    for (AtomId l : locks)
        goal.push_back(neg(l));
    return b.build(p.init().members(), goal);
}

StripsInstance counter_instance(const CounterSpec &spec) {
    if (spec.n == 0)
        throw InputError("counter needs n >= 1");
    if (spec.target < 0 || spec.target >= pow2(spec.n))
        throw TargetTooLarge("target " + spec.target.str() + " does not fit in " + std::to_string(spec.n) + " bits");

    StripsBuilder b;
    std::vector<AtomId> x;
    for (unsigned i = 1; i <= spec.n; ++i)
        x.push_back(b.atom(idx("x", i)));

    BigInt code = spec.target;
    if (spec.encoding == CounterEncoding::binary) {
        for (std::size_t i = 0; i < spec.n; ++i) {
            std::vector<Literal> pre, post;
            increment_pattern(x, i, pre, post);
            b.action(idx("a", i + 1), pre, post);
        }
    } else {
        code = spec.target ^ (spec.target >> 1);
        // s_i: {!x_i, x_{i-1}, !x_{i-2}..!x_1} => {x_i};  r_i: same with x_i => {!x_i}
        auto guard = [&](std::size_t i) {
            std::vector<Literal> g;
            if (i >= 1)
                g.push_back(pos(x[i - 1]));
            for (std::size_t k = 0; k + 1 < i; ++k)
                g.push_back(neg(x[k]));
            return g;
        };
        for (std::size_t i = 0; i < spec.n; ++i) {
            auto pre = guard(i);
            pre.push_back(neg(x[i]));
            b.action(idx("s", i + 1), pre, {pos(x[i])});
        }
        for (std::size_t i = 0; i < spec.n; ++i) {
            auto pre = guard(i);
            pre.push_back(pos(x[i]));
            b.action(idx("r", i + 1), pre, {neg(x[i])});
        }
    }

    std::vector<Literal> goal;
    for (std::size_t i = 0; i < spec.n; ++i)
        goal.push_back({x[i], boost::multiprecision::bit_test(code, static_cast<unsigned>(i))});
    return b.build({}, goal);
}

StripsInstance indexed_plans_instance(unsigned n) {
    if (n == 0)
        throw InputError("indexed-plans instance needs n >= 1");
    StripsBuilder b;
    std::vector<AtomId> x;
    for (unsigned i = 1; i <= n; ++i)
        x.push_back(b.atom(idx("x", i)));
    const AtomId y = b.atom("y");
    for (const char *variant : {"a", "b"}) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Literal> pre, post;
            increment_pattern(x, i, pre, post);
            post.push_back(variant[0] == 'a' ? neg(y) : pos(y));
            b.action(idx(variant, i + 1), pre, post);
        }
    }
    std::vector<Literal> goal;
    for (AtomId a : x)
        goal.push_back(pos(a));
    return b.build({}, goal);
}

Plan plan_from_choice_bits(unsigned n, const std::vector<bool> &bits) {
    if (n == 0 || n >= 32)
        throw InputError("n out of range");
    const std::size_t len = (std::size_t{1} << n) - 1;
    if (bits.size() != len)
        throw InputError("BadLength: expected " + std::to_string(len) + " choice bits, got " +
                         std::to_string(bits.size()));
    Plan plan;
    for (std::size_t k = 1; k <= len; ++k) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(k)) + 1;
        plan.actions.push_back(idx(bits[k - 1] ? "b" : "a", bit));
    }
    return plan;
}

std::vector<bool> choice_bits_from_plan(unsigned n, const Plan &plan) {
    const auto inst = indexed_plans_instance(n);
    const std::size_t len = (std::size_t{1} << n) - 1;
    if (plan.size() != len)
        throw InputError("InvalidPlan: expected " + std::to_string(len) + " actions");
    auto trace = validate_plan(inst, plan);
    if (!trace.valid)
        throw InputError("InvalidPlan: fails at step " + std::to_string(*trace.failure_step));
    std::vector<bool> bits;
    bits.reserve(len);
    for (const auto &name : plan.actions)
        bits.push_back(name[0] == 'b');
    return bits;
}

StripsInstance sat_verifier_instance(unsigned n, const BigInt &i) {
    if (n == 0)
        throw InputError("sat-verifier instance needs n >= 1");
    const auto enabled = sat3::enabled_atoms(n, i);  // range-checks i
    const auto clauses = sat3::enumerate_clauses(n);
    const std::size_t m = clauses.size();

    StripsBuilder b;
    std::vector<AtomId> x, e, v;
    for (unsigned k = 1; k <= n; ++k)
        x.push_back(b.atom(idx("x", k)));
    for (std::size_t j = 1; j <= m; ++j)
        e.push_back(b.atom(idx("e", j)));
    const AtomId cts = b.atom("cts"), ctu = b.atom("ctu"), goal = b.atom("goal"), inc = b.atom("inc");
    for (std::size_t j = 0; j <= m; ++j)
        v.push_back(b.atom(idx("v", j)));

    // Group I
    b.action("acs", {neg(ctu)}, {pos(cts)});
    b.action("acu", {neg(cts)}, {pos(ctu)});
    // Group II
    for (unsigned k = 0; k < n; ++k)
        b.action(idx("aset_", k + 1), {pos(cts), neg(v[0])}, {pos(x[k])});
    b.action("avt_0", {pos(cts)}, {pos(v[0])});
    for (std::size_t j = 1; j <= m; ++j) {
        b.action(idx("avt_", j) + "_0", {pos(cts), neg(e[j - 1]), pos(v[j - 1])}, {pos(v[j])});
        for (std::size_t k = 1; k <= 3; ++k)
            b.action(idx("avt_", j) + "_" + std::to_string(k),
                     {pos(cts), pos(e[j - 1]), pos(v[j - 1]), clause_literal(clauses[j - 1].literals[k - 1], x)},
                     {pos(v[j])});
    }
    b.action("ags", {pos(cts), pos(v[m])}, {pos(goal)});
    // Group III
    for (std::size_t j = 1; j <= m; ++j) {
        std::vector<Literal> pre{pos(ctu), neg(inc), pos(e[j - 1])};
        for (const auto &l : clauses[j - 1].literals)
            pre.push_back(clause_literal(l, x).negated());
        b.action(idx("avf_", j), pre, {pos(inc)});
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Literal> pre{pos(ctu), pos(inc)}, post{neg(inc)};
        increment_pattern(x, k, pre, post);
        b.action(idx("aix_", k + 1), pre, post);
    }
    std::vector<Literal> agu_pre{pos(ctu), pos(inc)};
    for (AtomId a : x)
        agu_pre.push_back(pos(a));
    b.action("agu", agu_pre, {pos(goal)});

    std::vector<AtomId> init;
    for (std::size_t j : enabled)
        init.push_back(e[j - 1]);
    return b.build(init, {pos(goal)});
}

StripsInstance all_instances_instance(unsigned n) {
    if (n == 0)
        throw InputError("all-instances instance needs n >= 1");
    const auto clauses = sat3::enumerate_clauses(n);
    const std::size_t m = clauses.size();

    StripsBuilder b;
    std::vector<AtomId> x, e, v;
    for (unsigned k = 1; k <= n; ++k)
        x.push_back(b.atom(idx("x", k)));
    for (std::size_t j = 1; j <= m; ++j)
        e.push_back(b.atom(idx("e", j)));
    for (std::size_t j = 0; j <= m; ++j)
        v.push_back(b.atom(idx("v", j)));
    const AtomId svi = b.atom("svi"), sva = b.atom("sva"), sia = b.atom("sia"), sii = b.atom("sii"),
                 sti = b.atom("sti"), t = b.atom("t"), f = b.atom("f"), goal = b.atom("goal");

    b.action("abi", {neg(svi), neg(sva), neg(sia), neg(sii), neg(sti)}, {pos(svi), neg(t)});
    {
        std::vector<Literal> post{pos(sva), neg(f), pos(v[0])};
        for (std::size_t j = 1; j <= m; ++j)
            post.push_back(neg(v[j]));
        b.action("aba", {pos(svi), neg(sia), neg(sva)}, post);
    }
    for (std::size_t j = 1; j <= m; ++j) {
        const auto &lits = clauses[j - 1].literals;
        const std::vector<Literal> chain{pos(sva), neg(v[j]), pos(v[j - 1])};
        for (std::size_t k = 1; k <= 3; ++k) {
            auto pre = chain;
            pre.push_back(pos(e[j - 1]));
            pre.push_back(clause_literal(lits[k - 1], x));
            for (std::size_t q = 1; q < k; ++q)
                pre.push_back(clause_literal(lits[q - 1], x).negated());
            b.action(idx("avt_", j) + "_" + std::to_string(k), pre, {pos(v[j])});
        }
        auto fpre = chain;
        fpre.push_back(pos(e[j - 1]));
        for (const auto &l : lits)
            fpre.push_back(clause_literal(l, x).negated());
        b.action(idx("avf_", j), fpre, {pos(v[j]), pos(f)});
        auto spre = chain;
        spre.push_back(neg(e[j - 1]));
        b.action(idx("avs_", j), spre, {pos(v[j])});
    }
    b.action("aaf", {pos(sva), pos(v[m]), pos(f)}, {neg(sva), pos(sia)});
    b.action("aat", {pos(sva), pos(v[m]), neg(f)}, {neg(sva), pos(sia), pos(t)});
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Literal> pre{pos(sia)}, post{neg(sia)};
        increment_pattern(x, k, pre, post);
        b.action(idx("aix_", k + 1), pre, post);
    }
    {
        std::vector<Literal> pre{pos(sia)}, post{neg(sia), neg(svi), pos(sti)};
        for (AtomId a : x) {
            pre.push_back(pos(a));
            post.push_back(neg(a));
        }
        b.action("arx", pre, post);
    }
    b.action("ais", {pos(sti), pos(t)}, {neg(sti), pos(sii)});
    b.action("aiu", {pos(sti), neg(t)}, {neg(sti), pos(sii)});
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Literal> pre{pos(sii)}, post{neg(sii)};
        increment_pattern(e, j, pre, post);
        b.action(idx("aii_", j + 1), pre, post);
    }
    {
        std::vector<Literal> pre{pos(sii)};
        for (AtomId a : e)
            pre.push_back(pos(a));
        b.action("ari", pre, {pos(goal)});
    }
    return b.build({}, {pos(goal)});
}

std::uint64_t simulate_first_verdict_position(unsigned n) {
    const auto p = all_instances_instance(n);
    State s = p.init();
    for (std::uint64_t position = 1;; ++position) {
        const StripsAction *next = nullptr;
        for (const auto &a : p.actions()) {
            if (action_applicable(s, a)) {
                next = &a;
                break;
            }
        }
        if (!next || p.is_goal(s))
            throw CalibrationMismatch("simulation ended before any ais/aiu");
        if (next->name == "ais" || next->name == "aiu")
            return position;
        s = apply_update(s, next->post);
    }
}

BlockConstants block_constants(unsigned n, bool calibrate) {
    BigInt a = pow2(n) * (sat3::clause_count(n) + 3) + 2;
    if (calibrate) {
        const auto simulated = simulate_first_verdict_position(n);
        if (a != simulated)
            throw CalibrationMismatch("a_n formula gives " + a.str() + ", simulation gives " +
                                      std::to_string(simulated));
    }
    return {a, a + 1};
}

BlockConstants block_constants(unsigned n) { return block_constants(n, n <= 3); }

}  // namespace cplan
