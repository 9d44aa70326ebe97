#include "cplan/grammar.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cplan {

std::string GrammarCheck::message() const {
    switch (status) {
    case Status::ok:
        return "ok";
    case Status::cycle_found: {
        std::string path;
        for (const auto &n : names)
            path += (path.empty() ? "" : " -> ") + n;
        return "cycle: " + path;
    }
    case Status::unknown_symbol:
        return "unknown symbol: " + symbol;
    case Status::empty_expansion:
        return "empty expansion for macro " + symbol;
    case Status::duplicate_macro:
        return "duplicate macro " + symbol;
    case Status::unknown_root:
        return "root is not a macro: " + symbol;
    }
    return "?";
}

GrammarCheck macro_validate(const MacroGrammar &g) {
    using Status = GrammarCheck::Status;
    GrammarCheck check;
    std::unordered_map<std::string, std::size_t> macro_index;
    for (std::size_t i = 0; i < g.macros.size(); ++i) {
        if (!macro_index.emplace(g.macros[i].name, i).second)
            return {Status::duplicate_macro, {}, g.macros[i].name};
        if (g.macros[i].expansion.empty())
            return {Status::empty_expansion, {}, g.macros[i].name};
    }
    const std::unordered_set<std::string> terminals(g.terminals.begin(), g.terminals.end());
    for (const auto &m : g.macros)
        for (const auto &sym : m.expansion)
            if (!macro_index.count(sym) && !terminals.empty() && !terminals.count(sym))
                return {Status::unknown_symbol, {}, sym};
    if (!macro_index.count(g.root))
        return {Status::unknown_root, {}, g.root};

    // DFS colouring; post-order gives children-first topological order.
    enum Colour { white, grey, black };
    std::vector<Colour> colour(g.macros.size(), white);
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < g.macros.size(); ++start) {
        if (colour[start] != white)
            continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{start, 0}};
        colour[start] = grey;
        path.push_back(start);
        while (!stack.empty()) {
            auto &[m, next] = stack.back();
            const auto &exp = g.macros[m].expansion;
            if (next < exp.size()) {
                auto it = macro_index.find(exp[next++]);
                if (it == macro_index.end())
                    continue;
                const std::size_t child = it->second;
                if (colour[child] == grey) {
                    auto from = std::find(path.begin(), path.end(), child);
                    for (auto p = from; p != path.end(); ++p)
                        check.names.push_back(g.macros[*p].name);
                    check.names.push_back(g.macros[child].name);
                    if (check.names.size() == 2 && check.names[0] == check.names[1])
                        check.names.pop_back();
                    check.status = Status::cycle_found;
                    return check;
                }
                if (colour[child] == white) {
                    colour[child] = grey;
                    path.push_back(child);
                    stack.emplace_back(child, 0);
                }
                continue;
            }
            colour[m] = black;
            check.names.push_back(g.macros[m].name);
            path.pop_back();
            stack.pop_back();
        }
    }
    return check;
}

CompiledGrammar CompiledGrammar::compile(const MacroGrammar &g) {
    const auto check = macro_validate(g);
    if (!check.ok())
        throw GrammarError(check.message());

    CompiledGrammar cg;
    std::unordered_map<std::string, std::uint32_t> macro_id, terminal_id;
    for (const auto &m : g.macros) {
        macro_id.emplace(m.name, static_cast<std::uint32_t>(cg.macro_names_.size()));
        cg.macro_names_.push_back(m.name);
    }
    for (const auto &t : g.terminals) {
        if (!macro_id.count(t) && terminal_id.emplace(t, static_cast<std::uint32_t>(cg.terminal_names_.size())).second)
            cg.terminal_names_.push_back(t);
    }
    cg.rules_.resize(g.macros.size());
    for (std::size_t i = 0; i < g.macros.size(); ++i) {
        for (const auto &sym : g.macros[i].expansion) {
            if (auto it = macro_id.find(sym); it != macro_id.end()) {
                cg.rules_[i].push_back({false, it->second});
                continue;
            }
            auto [it, inserted] = terminal_id.emplace(sym, static_cast<std::uint32_t>(cg.terminal_names_.size()));
            if (inserted)
                cg.terminal_names_.push_back(sym);
            cg.rules_[i].push_back({true, it->second});
        }
    }
    cg.lengths_.assign(g.macros.size(), 0);
    cg.heights_.assign(g.macros.size(), 0);
    for (const auto &name : check.names) {
        const auto m = macro_id.at(name);
        BigInt len = 0;
        std::size_t h = 0;
        for (const auto &s : cg.rules_[m]) {
            if (s.terminal) {
                len += 1;
            } else {
                len += cg.lengths_[s.id];
                h = std::max(h, cg.heights_[s.id]);
            }
        }
        cg.lengths_[m] = len;
        cg.heights_[m] = h + 1;
    }
    cg.root_ = macro_id.at(g.root);
    return cg;
}

std::size_t CompiledGrammar::symbol_count() const {
    std::size_t n = 0;
    for (const auto &r : rules_)
        n += r.size();
    return n;
}

const std::string &CompiledGrammar::access(const BigInt &index, AccessStats *stats) const {
    if (index < 1 || index > length())
        throw IndexOutOfRange("index " + index.str() + " outside [1, " + length().str() + "]");
    BigInt remaining = index;
    std::uint32_t macro = root_;
    std::size_t depth = 1;
    std::uint64_t steps = 0;
    while (true) {
        bool descended = false;
        for (const auto &s : rules_[macro]) {
            ++steps;
            if (s.terminal) {
                if (remaining == 1) {
                    if (stats) {
                        stats->max_depth = std::max(stats->max_depth, depth);
                        stats->steps += steps;
                    }
                    return terminal_names_[s.id];
                }
                remaining -= 1;
            } else if (remaining <= lengths_[s.id]) {
                macro = s.id;
                ++depth;
                descended = true;
                break;
            } else {
                remaining -= lengths_[s.id];
            }
        }
        if (!descended)
            throw GrammarError("inconsistent lengths during descent");
    }
}

std::vector<std::string> CompiledGrammar::expand() const {
    std::vector<std::string> out;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto &[m, pos] = stack.back();
        if (pos == rules_[m].size()) {
            stack.pop_back();
            continue;
        }
        const Symbol s = rules_[m][pos++];
        if (s.terminal)
            out.push_back(terminal_names_[s.id]);
        else
            stack.emplace_back(s.id, 0);
    }
    return out;
}

MacroGrammar CompiledGrammar::grammar() const {
    MacroGrammar g;
    g.terminals = terminal_names_;
    for (std::size_t m = 0; m < rules_.size(); ++m) {
        MacroDef def{macro_names_[m], {}};
        for (const auto &s : rules_[m])
            def.expansion.push_back(s.terminal ? terminal_names_[s.id] : macro_names_[s.id]);
        g.macros.push_back(std::move(def));
    }
    g.root = macro_names_[root_];
    return g;
}

std::map<std::string, BigInt> macro_lengths(const MacroGrammar &g) {
    const auto cg = CompiledGrammar::compile(g);
    std::map<std::string, BigInt> out;
    for (std::uint32_t m = 0; m < cg.num_macros(); ++m)
        out.emplace(cg.macro_name(m), cg.macro_length(m));
    return out;
}

std::string macro_access(const MacroGrammar &g, const BigInt &index) {
    return CompiledGrammar::compile(g).access(index);
}

MacroGrammar induce_grammar(const Plan &plan) {
    if (plan.actions.empty())
        throw InputError("cannot induce a grammar for an empty plan");

    std::vector<std::string> terminals;
    std::unordered_map<std::string, std::uint32_t> tid;
    std::vector<std::uint32_t> seq;
    for (const auto &a : plan.actions) {
        auto [it, inserted] = tid.emplace(a, static_cast<std::uint32_t>(terminals.size()));
        if (inserted)
            terminals.push_back(a);
        seq.push_back(it->second);
    }
    const auto num_terminals = static_cast<std::uint32_t>(terminals.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> rules;

    auto key = [](std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; };
    while (seq.size() >= 4) {
        struct Stat {
            std::size_t count = 0;
            std::size_t first = 0;
            std::size_t last_end = 0;  // one past the last counted occurrence
        };
        std::unordered_map<std::uint64_t, Stat> stats;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
            auto [it, inserted] = stats.try_emplace(key(seq[i], seq[i + 1]));
            Stat &st = it->second;
            if (inserted) {
                st = {1, i, i + 2};
            } else if (i >= st.last_end) {
                ++st.count;
                st.last_end = i + 2;
            }
        }
        std::uint64_t best = 0;
        const Stat *best_stat = nullptr;
        for (const auto &[k, st] : stats) {
            if (st.count < 2)
                continue;
            if (!best_stat || st.count > best_stat->count ||
                (st.count == best_stat->count && st.first < best_stat->first)) {
                best = k;
                best_stat = &st;
            }
        }
        if (!best_stat)
            break;
        const auto left = static_cast<std::uint32_t>(best >> 32);
        const auto right = static_cast<std::uint32_t>(best & 0xffffffffU);
        const auto symbol = num_terminals + static_cast<std::uint32_t>(rules.size());
        rules.emplace_back(left, right);
        std::vector<std::uint32_t> next;
        next.reserve(seq.size());
        for (std::size_t i = 0; i < seq.size();) {
            if (i + 1 < seq.size() && seq[i] == left && seq[i + 1] == right) {
                next.push_back(symbol);
                i += 2;
            } else {
                next.push_back(seq[i++]);
            }
        }
        seq = std::move(next);
    }

    const std::unordered_set<std::string> used(terminals.begin(), terminals.end());
    std::string prefix = "R";
    auto collides = [&](const std::string &p) {
        if (used.count(p == "R" ? "S" : p + "S"))
            return true;
        for (std::size_t k = 1; k <= rules.size(); ++k)
            if (used.count(p + std::to_string(k)))
                return true;
        return false;
    };
    while (collides(prefix))
        prefix = "_" + prefix;
    const std::string root = prefix == "R" ? "S" : prefix + "S";
    auto name = [&](std::uint32_t s) {
        return s < num_terminals ? terminals[s] : prefix + std::to_string(s - num_terminals + 1);
    };

    MacroGrammar g;
    g.terminals = terminals;
    for (std::size_t k = 0; k < rules.size(); ++k)
        g.macros.push_back({prefix + std::to_string(k + 1), {name(rules[k].first), name(rules[k].second)}});
    MacroDef top{root, {}};
    for (auto s : seq)
        top.expansion.push_back(name(s));
    g.macros.push_back(std::move(top));
    g.root = root;
    return g;
}

MacroGrammar parse_grammar(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    MacroGrammar g;
    bool have_root = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;)
            toks.push_back(t);
        if (toks.empty())
            continue;
        if (!header) {
            if (toks.size() != 2 || toks[0] != "grammar" || toks[1] != "v1")
                throw ParseError(lineno, "expected header 'grammar v1'");
            header = true;
        } else if (toks[0] == "macro") {
            if (toks.size() < 3 || toks[2] != "=")
                throw ParseError(lineno, "expected 'macro <Name> = <sym>...'");
            g.macros.push_back({toks[1], std::vector<std::string>(toks.begin() + 3, toks.end())});
        } else if (toks[0] == "root") {
            if (toks.size() != 2 || have_root)
                throw ParseError(lineno, "expected a single 'root <Name>'");
            g.root = toks[1];
            have_root = true;
        } else {
            throw ParseError(lineno, "unexpected token '" + toks[0] + "'");
        }
    }
    if (!header)
        throw ParseError(lineno, "missing header 'grammar v1'");
    if (!have_root)
        throw ParseError(lineno, "missing 'root' line");
    return g;
}

std::string write_grammar(const MacroGrammar &g) {
    std::ostringstream out;
    out << "grammar v1\n";
    for (const auto &m : g.macros) {
        out << "macro " << m.name << " =";
        for (const auto &s : m.expansion)
            out << ' ' << s;
        out << '\n';
    }
    out << "root " << g.root << '\n';
    return out.str();
}

}  // namespace cplan
