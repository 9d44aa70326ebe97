#pragma once

#include "cplan/bigint.hpp"
#include "cplan/errors.hpp"
#include "cplan/ffp.hpp"
#include "cplan/grammar.hpp"
#include "cplan/model.hpp"
#include "cplan/sat3.hpp"

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace cplan {

// serialized_bits: size of the parameter record the fixed interpreter runs from.
// max_step_cost: worst work units observed for a single access / emission so far.
struct RepMeta {
    std::uint64_t serialized_bits = 0;
    std::uint64_t max_step_cost = 0;
};

class RandomAccessRep {
public:
    virtual ~RandomAccessRep() = default;

    virtual BigInt length() const = 0;
    // 1-based. Throws IndexOutOfRange outside [1, length].
    std::string access(const BigInt &index) const;
    RepMeta meta() const { return {serialized_bits(), max_cost_.load()}; }

    // Canonical text of the parameter record.
    virtual std::string record() const = 0;
    virtual std::uint64_t serialized_bits() const { return 8 * record().size(); }

protected:
    struct Answer {
        std::string action;
        std::uint64_t cost;
    };
    virtual Answer do_access(const BigInt &index) const = 0;

private:
    mutable std::atomic<std::uint64_t> max_cost_{0};
};

class SequentialRep {
public:
    virtual ~SequentialRep() = default;

    // nullopt once the plan has ended; stays ended.
    std::optional<std::string> next();
    std::uint64_t cursor() const { return cursor_; }
    RepMeta meta() const { return {serialized_bits(), max_cost_}; }

    virtual std::string record() const = 0;
    virtual std::uint64_t serialized_bits() const { return 8 * record().size(); }
    // Whether the most recent emission was half of a stutter pair.
    virtual bool last_was_stutter() const { return false; }

protected:
    virtual std::optional<std::string> do_next(std::uint64_t &cost) = 0;

private:
    std::uint64_t cursor_ = 0;
    std::uint64_t max_cost_ = 0;
    bool ended_ = false;
};

using RandomAccessPtr = std::shared_ptr<const RandomAccessRep>;
using SequentialPtr = std::unique_ptr<SequentialRep>;

// Drains a stream into a plan. Throws CapExceeded past max_actions.
Plan collect(SequentialRep &rep, std::uint64_t max_actions = std::uint64_t{1} << 24);

// Stops after limit emissions.
SequentialPtr limit_stream(SequentialPtr inner, std::uint64_t limit);

// access(i) = a_{tz(i)+1}, length 2^n - 1.
RandomAccessPtr counter_crar(unsigned n);

// P1 -> a1, Pk -> P(k-1) ak P(k-1), root Pn.
MacroGrammar counter_macro(unsigned n);

class MacroRep : public RandomAccessRep {
public:
    explicit MacroRep(const MacroGrammar &g) : grammar_(CompiledGrammar::compile(g)) {}

    BigInt length() const override { return grammar_.length(); }
    std::string record() const override { return write_grammar(grammar_.grammar()); }
    const CompiledGrammar &grammar() const { return grammar_; }
    std::size_t max_depth() const { return max_depth_.load(); }

protected:
    Answer do_access(const BigInt &index) const override;

private:
    CompiledGrammar grammar_;
    mutable std::atomic<std::size_t> max_depth_{0};
};

// Throws GrammarError on invalid grammars.
std::shared_ptr<const MacroRep> macro_crar(const MacroGrammar &g);

class MacroStream : public SequentialRep {
public:
    MacroStream(const MacroGrammar &g, std::optional<std::uint64_t> limit);

    std::string record() const override;
    std::size_t max_depth() const { return max_depth_; }
    std::size_t height() const { return grammar_.height(); }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override;

private:
    CompiledGrammar grammar_;
    std::optional<std::uint64_t> limit_;
    std::vector<std::pair<std::uint32_t, std::size_t>> stack_;
    std::size_t max_depth_ = 0;
};

std::unique_ptr<MacroStream> macro_stream(const MacroGrammar &g, std::optional<std::uint64_t> limit = std::nullopt);

struct AdviceBits {
    bool sat = false;
    sat3::Assignment assignment;
};

AdviceBits compute_advice(unsigned n, const BigInt &i);

class NoFalsifiedClause : public Error {
public:
    using Error::Error;
};

SequentialPtr c16_csar(unsigned n, const BigInt &i, const AdviceBits &adv);
RandomAccessPtr c16_crar(unsigned n, const BigInt &i, const AdviceBits &adv);

class Stuck : public Error {
public:
    using Error::Error;
};

// Steps the deterministic all-instances frame, emitting the applicable action each time.
SequentialPtr c26_csar(unsigned n);

// Emission k = r.access(k).
SequentialPtr crar_to_csar(RandomAccessPtr r);

class NotReversibleObserved : public Error {
public:
    using Error::Error;
};

// Greedy descent on the optimal-plan oracle. After every K oracle calls a stutter pair
// (a1 then its inverse a2) is emitted in the current state before the chosen action.
SequentialPtr reversible_csar(std::shared_ptr<const FfpInstance> p, std::uint64_t k = 1,
                              std::uint64_t cap = kDefaultExplorationCap);

struct VerifyResult {
    enum class Status { valid, invalid, budget_exceeded };
    Status status = Status::valid;
    std::optional<std::uint64_t> step;  // 1-based failing step when invalid
    std::string reason;

    bool valid() const { return status == Status::valid; }
};

// Validates the emitted sequence as a plan. More than budget emissions gives
// budget_exceeded.
VerifyResult verify_representation(const StripsInstance &p, SequentialRep &rep, std::uint64_t budget);
VerifyResult verify_representation(const StripsInstance &p, const RandomAccessRep &rep, std::uint64_t budget);
VerifyResult verify_representation(const FfpInstance &p, SequentialRep &rep, std::uint64_t budget);
VerifyResult verify_representation(const FfpInstance &p, const RandomAccessRep &rep, std::uint64_t budget);

// Representation URIs: builtin:<family>?key=value&..., or file:<grammar path>.
struct RepHandle {
    RandomAccessPtr random_access;  // null for sequential-only families
    std::function<SequentialPtr()> open_stream;
};

// Throws InputError for malformed or unknown URIs.
RepHandle load_representation(const std::string &uri);

}  // namespace cplan
