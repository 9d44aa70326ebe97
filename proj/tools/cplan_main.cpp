#include "cplan/causal_graph.hpp"
#include "cplan/constructions.hpp"
#include "cplan/experiments.hpp"
#include "cplan/ffp.hpp"
#include "cplan/grammar.hpp"
#include "cplan/instance_io.hpp"
#include "cplan/oracles.hpp"
#include "cplan/representations.hpp"
#include "cplan/sat3.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace cplan;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

constexpr std::uint64_t kStreamGuard = std::uint64_t{1} << 20;

int gen(const std::string &family, unsigned n, const std::string &index, const std::string &target,
        const std::string &file) {
    StripsInstance p;
    if (family == "counter" || family == "gray") {
        CounterSpec spec;
        spec.n = n;
        spec.target = target.empty() ? pow2(n) - 1 : parse_bigint(target);
        spec.encoding = family == "gray" ? CounterEncoding::gray : CounterEncoding::binary;
        p = counter_instance(spec);
    } else if (family == "indexed") {
        p = indexed_plans_instance(n);
    } else if (family == "satverify") {
        p = sat_verifier_instance(n, parse_bigint(index.empty() ? "0" : index));
    } else if (family == "allinst") {
        p = all_instances_instance(n);
    } else if (family == "unary") {
        if (file.empty())
            throw InputError("gen unary needs --file");
        p = to_unary(read_instance_file(file));
    } else {
        throw InputError("unknown family '" + family + "'");
    }
    std::cout << write_instance(p);
    return kOk;
}

int validate(const std::string &inst, const std::string &plan_file) {
    const auto p = read_instance_file(inst);
    const auto plan = read_plan_file(plan_file);
    const auto trace = validate_plan(p, plan);
    if (trace.valid) {
        std::cout << "valid " << plan.size() << "\n";
        return kOk;
    }
    std::cout << "invalid step " << *trace.failure_step << ": " << trace.reason << "\n";
    return kNegative;
}

int solve(const std::string &inst, bool count) {
    const auto p = read_instance_file(inst);
    const auto result = bfs_solve(p);
    if (!result.plan) {
        std::cout << "unsolvable\n";
        return kNegative;
    }
    std::cout << "# length " << *result.optimal_length << "\n" << write_plan(*result.plan);
    if (count)
        std::cout << "# optimal_plans " << count_optimal_plans(p) << "\n";
    return kOk;
}

int access(const std::string &uri, const std::string &index) {
    const auto rep = load_representation(uri);
    if (!rep.random_access)
        throw InputError("representation has no random access: " + uri);
    std::cout << rep.random_access->access(parse_bigint(index)) << "\n";
    return kOk;
}

int stream(const std::string &uri, std::optional<std::uint64_t> limit, bool force) {
    const auto rep = load_representation(uri);
    auto s = rep.open_stream();
    if (limit)
        s = limit_stream(std::move(s), *limit);
    if (force || limit) {
        while (auto a = s->next())
            std::cout << *a << "\n";
        return kOk;
    }
    if (rep.random_access && rep.random_access->length() > kStreamGuard)
        throw InputError("plan has " + rep.random_access->length().str() +
                         " actions; pass --limit or --force");
    std::vector<std::string> buffered;
    while (auto a = s->next()) {
        if (buffered.size() == kStreamGuard)
            throw InputError("plan exceeds 2^20 actions; pass --limit or --force");
        buffered.push_back(std::move(*a));
    }
    for (const auto &a : buffered)
        std::cout << a << "\n";
    return kOk;
}

int compress(const std::string &plan_file) {
    const auto plan = read_plan_file(plan_file);
    const auto g = induce_grammar(plan);
    const auto cg = CompiledGrammar::compile(g);
    std::cout << "# plan_length " << plan.size() << "\n";
    std::cout << "# symbols " << cg.symbol_count() << "\n";
    std::cout << "# height " << cg.height() << "\n";
    std::cout << write_grammar(g);
    return kOk;
}

int verify_rep(const std::string &inst, const std::string &uri, std::uint64_t budget) {
    const auto p = read_instance_file(inst);
    const auto rep = load_representation(uri);
    auto s = rep.open_stream();
    const auto r = verify_representation(p, *s, budget);
    switch (r.status) {
    case VerifyResult::Status::valid:
        std::cout << "valid " << s->cursor() << "\n";
        return kOk;
    case VerifyResult::Status::invalid:
        std::cout << "invalid step " << *r.step << ": " << r.reason << "\n";
        return kNegative;
    case VerifyResult::Status::budget_exceeded:
        std::cout << "budget exceeded: " << r.reason << "\n";
        return kCap;
    }
    return kNegative;
}

int analyze(const std::string &inst, bool graph, bool refined, bool properties) {
    const auto p = read_instance_file(inst);
    if (!graph && !properties)
        throw InputError("analyze needs --causal-graph and/or --properties");
    if (graph) {
        const auto g = refined ? refined_causal_graph(p) : causal_graph(p);
        std::cout << "# " << (refined ? "refined " : "") << "causal graph, " << g.nodes.size() << " nodes, "
                  << g.edges.size() << " edges\n";
        for (const auto &[u, v] : g.edges)
            std::cout << "edge " << g.nodes[u] << ' ' << g.nodes[v] << "\n";
        const auto scc = scc_and_acyclicity(g);
        std::size_t largest = 0;
        for (std::size_t c = 0; c < scc.components.size(); ++c) {
            largest = std::max(largest, scc.components[c].size());
            if (scc.components[c].size() < 2)
                continue;
            std::cout << "component";
            for (auto a : scc.components[c])
                std::cout << ' ' << g.nodes[a];
            std::cout << "\n";
        }
        std::cout << "components " << scc.components.size() << "\n";
        std::cout << "largest_component " << largest << "\n";
        std::cout << "acyclic " << (scc.acyclic ? "true" : "false") << "\n";
    }
    if (properties) {
        const auto f = strips_to_ffp(p);
        std::cout << "unary " << (is_unary(p) ? "true" : "false") << "\n";
        std::cout << "deterministic " << (is_deterministic(f) ? "true" : "false") << "\n";
        std::cout << "reversible " << (is_reversible(f) ? "true" : "false") << "\n";
    }
    return kOk;
}

int sat3_list(unsigned n) {
    const auto clauses = sat3::enumerate_clauses(n);
    for (std::size_t j = 0; j < clauses.size(); ++j)
        std::cout << j + 1 << ' ' << clauses[j].to_string() << "\n";
    return kOk;
}

int sat3_check(unsigned n, const std::string &index) {
    const auto verdict = sat3::is_satisfiable(sat3::instance_from_index(n, parse_bigint(index)));
    if (verdict.satisfiable) {
        std::cout << "satisfiable " << verdict.witness->to_string() << "\n";
        return kOk;
    }
    std::cout << "unsatisfiable\n";
    return kNegative;
}

int experiment(const std::string &name, unsigned n, std::uint64_t max_cases) {
    const auto report = run_experiment(name, n, max_cases);
    std::cout << write_report(report);
    return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Compact plan representations: generators, validators, oracles"};
    app.require_subcommand(1);

    std::string family, index, target, file, inst, plan_file, uri, name;
    unsigned n = 3;
    bool flag_a = false, flag_b = false, flag_c = false;
    std::optional<std::uint64_t> limit;
    std::uint64_t budget = std::uint64_t{1} << 32;
    std::uint64_t max_cases = std::uint64_t{1} << 16;
    std::function<int()> run;

    auto *g = app.add_subcommand("gen", "Generate an instance");
    g->add_option("family", family, "counter, gray, indexed, satverify, allinst, unary")->required();
    g->add_option("-n", n, "Number of variables / bits");
    g->add_option("-i,--index", index, "3SAT instance index (satverify)");
    g->add_option("--target", target, "Counter target value");
    g->add_option("-f,--file", file, "Input instance (unary)");
    g->callback([&] { run = [&] { return gen(family, n, index, target, file); }; });

    auto *v = app.add_subcommand("validate", "Validate a plan");
    v->add_option("-i,--instance", inst)->required();
    v->add_option("-p,--plan", plan_file)->required();
    v->callback([&] { run = [&] { return validate(inst, plan_file); }; });

    auto *s = app.add_subcommand("solve", "Breadth-first optimal planning");
    s->add_option("-i,--instance", inst)->required();
    s->add_flag("--count-optimal", flag_a, "Also count optimal plans");
    s->callback([&] { run = [&] { return solve(inst, flag_a); }; });

    auto *a = app.add_subcommand("access", "Random access into a representation");
    a->add_option("--rep", uri)->required();
    a->add_option("--index", index)->required();
    a->callback([&] { run = [&] { return access(uri, index); }; });

    auto *st = app.add_subcommand("stream", "Stream a representation");
    st->add_option("--rep", uri)->required();
    st->add_option("--limit", limit);
    st->add_flag("--force", flag_a, "Allow plans longer than 2^20 actions");
    st->callback([&] { run = [&] { return stream(uri, limit, flag_a); }; });

    auto *c = app.add_subcommand("compress", "Induce a macro grammar for a plan");
    c->add_option("-p,--plan", plan_file)->required();
    c->callback([&] { run = [&] { return compress(plan_file); }; });

    auto *vr = app.add_subcommand("verify-rep", "Check that a representation encodes a plan");
    vr->add_option("-i,--instance", inst)->required();
    vr->add_option("--rep", uri)->required();
    vr->add_option("--budget", budget, "Maximum number of steps");
    vr->callback([&] { run = [&] { return verify_rep(inst, uri, budget); }; });

    auto *an = app.add_subcommand("analyze", "Causal graphs and frame properties");
    an->add_option("-i,--instance", inst)->required();
    an->add_flag("--causal-graph", flag_a);
    an->add_flag("--refined", flag_b);
    an->add_flag("--properties", flag_c, "unary / deterministic / reversible");
    an->callback([&] { run = [&] { return analyze(inst, flag_a, flag_b, flag_c); }; });

    auto *sat = app.add_subcommand("sat3", "Enumerated 3SAT instances");
    sat->require_subcommand(1);
    auto *sl = sat->add_subcommand("list", "Clause table");
    sl->add_option("-n", n)->required();
    sl->callback([&] { run = [&] { return sat3_list(n); }; });
    auto *sc = sat->add_subcommand("check", "Brute-force verdict");
    sc->add_option("-n", n)->required();
    sc->add_option("-i,--index", index)->required();
    sc->callback([&] { run = [&] { return sat3_check(n, index); }; });

    auto *ex = app.add_subcommand("experiment", "Run a verification experiment");
    ex->add_option("name", name, "lemma11, lemma17, lemma27")->required();
    ex->add_option("-n", n)->required();
    ex->add_option("--max-cases", max_cases);
    ex->callback([&] { run = [&] { return experiment(name, n, max_cases); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const CapError &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNegative;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
