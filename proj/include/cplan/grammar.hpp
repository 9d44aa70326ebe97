#pragma once

#include "cplan/bigint.hpp"
#include "cplan/errors.hpp"
#include "cplan/model.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cplan {

// Macro plan: an acyclic grammar with exactly one expansion per macro. Symbols resolve to
// a macro first, then to a terminal (action name). An empty terminal list accepts any
// non-macro symbol as a terminal.
struct MacroDef {
    std::string name;
    std::vector<std::string> expansion;
};

struct MacroGrammar {
    std::vector<std::string> terminals;
    std::vector<MacroDef> macros;
    std::string root;
};

struct GrammarCheck {
    enum class Status { ok, cycle_found, unknown_symbol, empty_expansion, duplicate_macro, unknown_root };
    Status status = Status::ok;
    // ok: macros in topological order (children first). cycle_found: the cycle path.
    std::vector<std::string> names;
    std::string symbol;

    bool ok() const { return status == Status::ok; }
    std::string message() const;
};

GrammarCheck macro_validate(const MacroGrammar &g);

class GrammarError : public InputError {
public:
    using InputError::InputError;
};

struct AccessStats {
    std::size_t max_depth = 0;  // macros on the descent stack
    std::uint64_t steps = 0;    // symbols scanned
};

// Indexed, immutable form with expansion lengths precomputed bottom-up.
class CompiledGrammar {
public:
    // Throws GrammarError when macro_validate fails.
    static CompiledGrammar compile(const MacroGrammar &g);

    struct Symbol {
        bool terminal;
        std::uint32_t id;
    };

    const BigInt &length() const { return lengths_[root_]; }
    // Longest chain of nested macros below and including the root.
    std::size_t height() const { return heights_[root_]; }
    std::size_t symbol_count() const;

    std::size_t num_macros() const { return rules_.size(); }
    std::uint32_t root() const { return root_; }
    const std::vector<Symbol> &rule(std::uint32_t macro) const { return rules_[macro]; }
    const BigInt &macro_length(std::uint32_t macro) const { return lengths_[macro]; }
    const std::string &macro_name(std::uint32_t macro) const { return macro_names_[macro]; }
    const std::string &terminal_name(std::uint32_t t) const { return terminal_names_[t]; }

    // 1-based top-down descent; throws IndexOutOfRange.
    const std::string &access(const BigInt &index, AccessStats *stats = nullptr) const;

    // Full terminal expansion. Only for small grammars.
    std::vector<std::string> expand() const;

    MacroGrammar grammar() const;

private:
    std::vector<std::string> terminal_names_;
    std::vector<std::string> macro_names_;
    std::vector<std::vector<Symbol>> rules_;
    std::vector<BigInt> lengths_;
    std::vector<std::size_t> heights_;
    std::uint32_t root_ = 0;
};

std::map<std::string, BigInt> macro_lengths(const MacroGrammar &g);

std::string macro_access(const MacroGrammar &g, const BigInt &index);

// Re-Pair: replace the most frequent repeated digram (ties: earliest first occurrence)
// until no digram occurs twice without overlap. Root macro is "S" unless that collides.
MacroGrammar induce_grammar(const Plan &plan);

// `grammar v1`, `macro <Name> = <sym>...`, `root <Name>`.
MacroGrammar parse_grammar(const std::string &text);
std::string write_grammar(const MacroGrammar &g);

}  // namespace cplan
