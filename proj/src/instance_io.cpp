#include "cplan/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace cplan {

namespace {

std::string strip_comment(const std::string &line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> tokens(const std::string &line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

struct RawAction {
    std::string name;
    std::vector<std::string> pre;
    std::vector<std::string> post;
    bool has_pre = false;
    bool has_post = false;
    int pre_line = 0;
    int post_line = 0;
};

}  // namespace

StripsInstance parse_instance(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_header = false;
    std::optional<std::vector<std::string>> atoms;
    std::optional<std::vector<std::string>> init;
    std::optional<std::vector<std::string>> goal;
    std::vector<RawAction> actions;
    int atoms_line = 0, init_line = 0, goal_line = 0;

    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(strip_comment(line));
        if (toks.empty())
            continue;
        if (!seen_header) {
            if (toks.size() != 2 || toks[0] != "strips" || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'strips v1'");
            seen_header = true;
            continue;
        }
        const std::string key = toks[0];
        std::vector<std::string> rest(toks.begin() + 1, toks.end());
        auto once = [&](std::optional<std::vector<std::string>> &slot) {
            if (slot)
                throw ParseError(lineno, "duplicate '" + key + "' line");
            slot = rest;
        };
        if (key == "atoms:") {
            once(atoms);
            atoms_line = lineno;
        } else if (key == "action") {
            if (rest.size() != 1)
                throw ParseError(lineno, "expected 'action <name>'");
            actions.push_back({rest[0], {}, {}});
            actions.back().pre_line = actions.back().post_line = lineno;
        } else if (key == "pre:" || key == "post:") {
            if (actions.empty())
                throw ParseError(lineno, "'" + key + "' outside an action block");
            auto &act = actions.back();
            bool &flag = key == "pre:" ? act.has_pre : act.has_post;
            if (flag)
                throw ParseError(lineno, "duplicate '" + key + "' in action " + act.name);
            flag = true;
            (key == "pre:" ? act.pre : act.post) = rest;
            (key == "pre:" ? act.pre_line : act.post_line) = lineno;
        } else if (key == "init:") {
            once(init);
            init_line = lineno;
        } else if (key == "goal:") {
            once(goal);
            goal_line = lineno;
        } else {
            throw ParseError(lineno, "unexpected token '" + key + "'");
        }
    }
    if (!seen_header)
        throw ParseError(lineno, "missing header 'strips v1'");
    if (!atoms)
        throw ParseError(lineno, "missing 'atoms:' line");

    StripsBuilder b;
    for (const auto &a : *atoms) {
        if (a.empty() || a[0] == '!')
            throw ParseError(atoms_line, "bad atom name '" + a + "'");
        try {
            b.atom(a);
        } catch (const InputError &e) {
            throw ParseError(atoms_line, e.what());
        }
    }
    auto literal_list = [&](const std::vector<std::string> &names, int at) {
        std::vector<Literal> out;
        for (const auto &tok : names) {
            bool negated = !tok.empty() && tok[0] == '!';
            std::string name = negated ? tok.substr(1) : tok;
            try {
                out.push_back({b.atom_id(name), !negated});
            } catch (const InputError &) {
                throw ParseError(at, "unknown atom '" + name + "'");
            }
        }
        return out;
    };
    for (std::size_t i = 0; i < actions.size(); ++i)
        b.action(actions[i].name, literal_list(actions[i].pre, actions[i].pre_line),
                 literal_list(actions[i].post, actions[i].post_line));

    std::vector<AtomId> init_ids;
    for (const auto &lit : literal_list(init.value_or(std::vector<std::string>{}), init_line)) {
        if (!lit.positive)
            throw ParseError(init_line, "init lists atoms only");
        init_ids.push_back(lit.atom);
    }
    try {
        return b.build(init_ids, literal_list(goal.value_or(std::vector<std::string>{}), goal_line));
    } catch (const ParseError &) {
        throw;
    } catch (const InputError &e) {
        throw ParseError(lineno, e.what());
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream f(path);
    if (!f)
        throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

StripsInstance read_instance_file(const std::string &path) { return parse_instance(read_text_file(path)); }

std::string write_instance(const StripsInstance &p) {
    std::ostringstream out;
    auto lits = [&](const LiteralSet &ls) {
        for (const auto &l : ls.literals())
            out << ' ' << p.literal_name(l);
    };
    out << "strips v1\natoms:";
    for (const auto &a : p.atoms())
        out << ' ' << a;
    out << '\n';
    for (const auto &act : p.actions()) {
        out << "action " << act.name << "\n  pre:";
        lits(act.pre);
        out << "\n  post:";
        lits(act.post);
        out << '\n';
    }
    out << "init:";
    for (AtomId a : p.init().members())
        out << ' ' << p.atom_name(a);
    out << "\ngoal:";
    lits(p.goal());
    out << '\n';
    return out.str();
}

Plan parse_plan(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    Plan plan;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens(strip_comment(line));
        if (toks.empty())
            continue;
        if (toks.size() != 1)
            throw ParseError(lineno, "expected one action name per line");
        plan.actions.push_back(toks[0]);
    }
    return plan;
}

Plan read_plan_file(const std::string &path) { return parse_plan(read_text_file(path)); }

std::string write_plan(const Plan &plan) {
    std::string out;
    for (const auto &a : plan.actions)
        out += a + '\n';
    return out;
}

std::uint64_t instance_bits(const StripsInstance &p) { return 8 * write_instance(p).size(); }

}  // namespace cplan
