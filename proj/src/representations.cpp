#include "cplan/representations.hpp"

#include "cplan/constructions.hpp"
#include "cplan/instance_io.hpp"
#include "cplan/oracles.hpp"

#include <bit>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace cplan {

namespace {

template <class T>
void raise_max(std::atomic<T> &slot, T value) {
    auto seen = slot.load();
    while (value > seen && !slot.compare_exchange_weak(seen, value)) {
    }
}

std::uint64_t trailing_zeros(const BigInt &v) { return boost::multiprecision::lsb(v); }

std::uint64_t bit_length(const BigInt &v) { return v == 0 ? 0 : boost::multiprecision::msb(v) + 1; }

std::string name_with(const std::string &base, std::uint64_t i) { return base + std::to_string(i); }

}  // namespace

std::string RandomAccessRep::access(const BigInt &index) const {
    if (index < 1 || index > length())
        throw IndexOutOfRange("index " + index.str() + " outside [1, " + length().str() + "]");
    auto answer = do_access(index);
    raise_max(max_cost_, answer.cost);
    return std::move(answer.action);
}

std::optional<std::string> SequentialRep::next() {
    if (ended_)
        return std::nullopt;
    std::uint64_t cost = 0;
    auto out = do_next(cost);
    max_cost_ = std::max(max_cost_, cost);
    if (!out) {
        ended_ = true;
        return std::nullopt;
    }
    ++cursor_;
    return out;
}

Plan collect(SequentialRep &rep, std::uint64_t max_actions) {
    Plan plan;
    while (auto a = rep.next()) {
        if (plan.actions.size() == max_actions)
            throw CapExceeded("stream longer than " + std::to_string(max_actions) + " actions");
        plan.actions.push_back(std::move(*a));
    }
    return plan;
}

namespace {

class LimitedStream : public SequentialRep {
public:
    LimitedStream(SequentialPtr inner, std::uint64_t limit) : inner_(std::move(inner)), limit_(limit) {}

    std::string record() const override { return inner_->record() + "limit " + std::to_string(limit_) + "\n"; }
    bool last_was_stutter() const override { return inner_->last_was_stutter(); }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override {
        if (inner_->cursor() >= limit_)
            return std::nullopt;
        auto out = inner_->next();
        cost = inner_->meta().max_step_cost;
        return out;
    }

private:
    SequentialPtr inner_;
    std::uint64_t limit_;
};

}  // namespace

SequentialPtr limit_stream(SequentialPtr inner, std::uint64_t limit) {
    return std::make_unique<LimitedStream>(std::move(inner), limit);
}

// ---- binary counter ----

namespace {

class CounterCrar : public RandomAccessRep {
public:
    explicit CounterCrar(unsigned n) : n_(n), length_(pow2(n) - 1) {}

    BigInt length() const override { return length_; }
    std::string record() const override { return "counter-crar v1\nn " + std::to_string(n_) + "\n"; }

protected:
    Answer do_access(const BigInt &index) const override {
        const auto tz = trailing_zeros(index);
        return {name_with("a", tz + 1), tz + 1};
    }

private:
    unsigned n_;
    BigInt length_;
};

}  // namespace

RandomAccessPtr counter_crar(unsigned n) {
    if (n == 0)
        throw InputError("counter needs n >= 1");
    return std::make_shared<CounterCrar>(n);
}

MacroGrammar counter_macro(unsigned n) {
    if (n == 0)
        throw InputError("counter needs n >= 1");
    MacroGrammar g;
    for (unsigned k = 1; k <= n; ++k) {
        g.terminals.push_back(name_with("a", k));
        if (k == 1)
            g.macros.push_back({"P1", {"a1"}});
        else
            g.macros.push_back({name_with("P", k), {name_with("P", k - 1), name_with("a", k), name_with("P", k - 1)}});
    }
    g.root = name_with("P", n);
    return g;
}

// ---- grammars ----

RandomAccessRep::Answer MacroRep::do_access(const BigInt &index) const {
    AccessStats stats;
    const auto &name = grammar_.access(index, &stats);
    raise_max(max_depth_, stats.max_depth);
    return {name, stats.steps};
}

std::shared_ptr<const MacroRep> macro_crar(const MacroGrammar &g) { return std::make_shared<MacroRep>(g); }

MacroStream::MacroStream(const MacroGrammar &g, std::optional<std::uint64_t> limit)
    : grammar_(CompiledGrammar::compile(g)), limit_(limit) {
    stack_.emplace_back(grammar_.root(), 0);
    max_depth_ = 1;
}

std::string MacroStream::record() const { return write_grammar(grammar_.grammar()); }

std::optional<std::string> MacroStream::do_next(std::uint64_t &cost) {
    if (limit_ && cursor() >= *limit_)
        return std::nullopt;
    while (!stack_.empty()) {
        ++cost;
        auto &[macro, pos] = stack_.back();
        const auto &rule = grammar_.rule(macro);
        if (pos == rule.size()) {
            stack_.pop_back();
            continue;
        }
        const auto sym = rule[pos++];
        if (sym.terminal)
            return grammar_.terminal_name(sym.id);
        stack_.emplace_back(sym.id, 0);
        max_depth_ = std::max(max_depth_, stack_.size());
    }
    return std::nullopt;
}

std::unique_ptr<MacroStream> macro_stream(const MacroGrammar &g, std::optional<std::uint64_t> limit) {
    return std::make_unique<MacroStream>(g, limit);
}

// ---- commit-to-verdict instances ----

AdviceBits compute_advice(unsigned n, const BigInt &i) {
    const auto verdict = sat3::is_satisfiable(sat3::instance_from_index(n, i));
    AdviceBits adv;
    adv.sat = verdict.satisfiable;
    adv.assignment = verdict.witness ? *verdict.witness : sat3::Assignment{n, 0};
    return adv;
}

namespace {

// Shared parameter block of the two sat-verifier representations.
struct C16Params {
    unsigned n;
    BigInt i;
    AdviceBits adv;
    std::vector<sat3::Clause> clauses;
    std::vector<bool> enabled;  // 0-based clause index
    std::vector<unsigned> set_vars;

    C16Params(unsigned n_, const BigInt &i_, const AdviceBits &adv_) : n(n_), i(i_), adv(adv_) {
        if (n == 0 || n > 24)
            throw InputError("sat-verifier representation needs 1 <= n <= 24");
        clauses = sat3::enumerate_clauses(n);
        enabled.assign(clauses.size(), false);
        for (auto j : sat3::enabled_atoms(n, i))
            enabled[j - 1] = true;
        for (unsigned k = 1; k <= n; ++k)
            if (adv.assignment.value(k))
                set_vars.push_back(k);
    }

    std::size_t m() const { return clauses.size(); }

    BigInt length() const {
        if (adv.sat)
            return BigInt(set_vars.size() + m() + 3);
        return pow2(n + 1) + 1;
    }

    std::string record(const std::string &kind) const {
        std::ostringstream out;
        out << kind << " v1\nn " << n << "\ni " << i << "\nadvice " << (adv.sat ? 1 : 0) << ' '
            << adv.assignment.bits << "\n";
        return out.str();
    }

    // Clause j (1-based) of the verify block.
    std::string verify_action(std::size_t j, std::uint64_t &cost) const {
        if (!enabled[j - 1])
            return name_with("avt_", j) + "_0";
        const auto &lits = clauses[j - 1].literals;
        for (std::size_t k = 1; k <= 3; ++k) {
            ++cost;
            if (lits[k - 1].holds(adv.assignment.bits))
                return name_with("avt_", j) + "_" + std::to_string(k);
        }
        // Wrong advice: emit something the validator will reject.
        return name_with("avt_", j) + "_1";
    }

    // Smallest enabled clause falsified by assignment v.
    std::string falsified(std::uint64_t v, std::uint64_t &cost) const {
        for (std::size_t j = 1; j <= m(); ++j) {
            ++cost;
            if (enabled[j - 1] && !clauses[j - 1].satisfied_by(v))
                return name_with("avf_", j);
        }
        throw NoFalsifiedClause("assignment " + sat3::Assignment{n, v}.to_string() +
                                " satisfies every enabled clause; advice says unsatisfiable");
    }

    std::string increment(std::uint64_t k) const { return name_with("aix_", std::countr_zero(k) + 1); }

    std::string at(const BigInt &index, std::uint64_t &cost) const {
        ++cost;
        if (adv.sat) {
            const auto h = set_vars.size();
            const auto p = static_cast<std::uint64_t>(index);
            if (p == 1)
                return "acs";
            if (p <= h + 1)
                return name_with("aset_", set_vars[p - 2]);
            if (p == h + 2)
                return "avt_0";
            if (p <= h + m() + 2)
                return verify_action(p - h - 2, cost);
            return "ags";
        }
        const auto p = static_cast<std::uint64_t>(index);
        const auto last = (std::uint64_t{1} << (n + 1)) + 1;
        if (p == 1)
            return "acu";
        if (p == last)
            return "agu";
        if (p % 2 == 0)
            return falsified((p - 2) / 2, cost);
        return increment((p - 1) / 2);
    }
};

class C16Csar : public SequentialRep {
public:
    explicit C16Csar(C16Params params) : params_(std::move(params)), length_(params_.length()) {}

    std::string record() const override { return params_.record("c16-csar"); }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override {
        if (cursor() >= length_)
            return std::nullopt;
        // The sequential form keeps an explicit phase position, which here is the cursor.
        return params_.at(BigInt(cursor() + 1), cost);
    }

private:
    C16Params params_;
    BigInt length_;
};

class C16Crar : public RandomAccessRep {
public:
    explicit C16Crar(C16Params params) : params_(std::move(params)), length_(params_.length()) {}

    BigInt length() const override { return length_; }
    std::string record() const override { return params_.record("c16-crar"); }

protected:
    Answer do_access(const BigInt &index) const override {
        std::uint64_t cost = 0;
        auto action = params_.at(index, cost);
        return {std::move(action), cost};
    }

private:
    C16Params params_;
    BigInt length_;
};

}  // namespace

SequentialPtr c16_csar(unsigned n, const BigInt &i, const AdviceBits &adv) {
    return std::make_unique<C16Csar>(C16Params(n, i, adv));
}

RandomAccessPtr c16_crar(unsigned n, const BigInt &i, const AdviceBits &adv) {
    return std::make_shared<C16Crar>(C16Params(n, i, adv));
}

// ---- all-instances frame ----

namespace {

class C26Csar : public SequentialRep {
public:
    explicit C26Csar(unsigned n) : n_(n), instance_(all_instances_instance(n)), state_(instance_.init()) {}

    std::string record() const override { return "c26-csar v1\nn " + std::to_string(n_) + "\n"; }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override {
        if (instance_.is_goal(state_))
            return std::nullopt;
        for (const auto &a : instance_.actions()) {
            ++cost;
            if (action_applicable(state_, a)) {
                state_ = apply_update(state_, a.post);
                return a.name;
            }
        }
        throw Stuck("no applicable action after " + std::to_string(cursor()) + " steps");
    }

private:
    unsigned n_;
    StripsInstance instance_;
    State state_;
};

}  // namespace

SequentialPtr c26_csar(unsigned n) {
    if (n == 0 || n > 6)
        throw InputError("all-instances representation needs 1 <= n <= 6");
    return std::make_unique<C26Csar>(n);
}

// ---- adapters ----

namespace {

class CrarStream : public SequentialRep {
public:
    explicit CrarStream(RandomAccessPtr inner) : inner_(std::move(inner)), length_(inner_->length()) {}

    std::string record() const override { return inner_->record(); }
    // Counter register of width bit_length(length).
    std::uint64_t serialized_bits() const override {
        return inner_->serialized_bits() + std::max<std::uint64_t>(1, bit_length(length_));
    }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override {
        if (next_ > length_)
            return std::nullopt;
        auto out = inner_->access(next_);
        next_ += 1;
        cost = inner_->meta().max_step_cost;
        return out;
    }

private:
    RandomAccessPtr inner_;
    BigInt length_;
    BigInt next_ = 1;
};

}  // namespace

SequentialPtr crar_to_csar(RandomAccessPtr r) { return std::make_unique<CrarStream>(std::move(r)); }

// ---- reversible instances ----

namespace {

class ReversibleCsar : public SequentialRep {
public:
    ReversibleCsar(std::shared_ptr<const FfpInstance> p, std::uint64_t k, std::uint64_t cap)
        : p_(std::move(p)), oracle_(*p_, cap), k_(k), state_(p_->init()) {}

    std::string record() const override {
        return "reversible v1\nk " + std::to_string(k_) + "\n" + p_->source_text();
    }
    bool last_was_stutter() const override { return last_stutter_; }

protected:
    std::optional<std::string> do_next(std::uint64_t &cost) override {
        if (pending_.empty() && !p_->is_goal(state_))
            plan_step(cost);
        if (pending_.empty())
            return std::nullopt;
        auto [name, stutter] = pending_.front();
        pending_.pop_front();
        last_stutter_ = stutter;
        return name;
    }

private:
    void plan_step(std::uint64_t &cost) {
        auto best_len = oracle_.length(state_);
        ++cost;
        if (!best_len)
            throw Error("reversible stream: no plan from the current state");
        std::optional<std::size_t> best;
        FfpState best_next;
        const auto &actions = p_->actions();
        for (std::size_t a = 0; a < actions.size(); ++a) {
            if (!p_->applicable(a, state_))
                continue;
            auto t = p_->successor(a, state_);
            auto len = oracle_.length(t);
            ++cost;
            if (len && *len < *best_len) {
                best_len = len;
                best = a;
                best_next = std::move(t);
            }
            if (++calls_since_stutter_ == k_) {
                calls_since_stutter_ = 0;
                emit_stutter(cost);
            }
        }
        if (!best)
            throw Error("reversible stream: no improving action");
        pending_.emplace_back(actions[*best].name, false);
        state_ = std::move(best_next);
    }

    void emit_stutter(std::uint64_t &cost) {
        const auto &actions = p_->actions();
        for (std::size_t a1 = 0; a1 < actions.size(); ++a1) {
            if (!p_->applicable(a1, state_))
                continue;
            const auto u = p_->successor(a1, state_);
            for (std::size_t a2 = 0; a2 < actions.size(); ++a2) {
                ++cost;
                if (p_->applicable(a2, u) && p_->successor(a2, u) == state_) {
                    pending_.emplace_back(actions[a1].name, true);
                    pending_.emplace_back(actions[a2].name, true);
                    return;
                }
            }
        }
        throw NotReversibleObserved("no action pair returns to the current state");
    }

    std::shared_ptr<const FfpInstance> p_;
    OptplanOracle oracle_;
    std::uint64_t k_;
    FfpState state_;
    std::uint64_t calls_since_stutter_ = 0;
    std::deque<std::pair<std::string, bool>> pending_;
    bool last_stutter_ = false;
};

}  // namespace

SequentialPtr reversible_csar(std::shared_ptr<const FfpInstance> p, std::uint64_t k, std::uint64_t cap) {
    if (k == 0)
        throw InputError("stutter interval must be at least 1");
    return std::make_unique<ReversibleCsar>(std::move(p), k, cap);
}

// ---- verification ----

namespace {

template <class Machine>
VerifyResult verify_stream(Machine &machine, SequentialRep &rep, std::uint64_t budget) {
    VerifyResult r;
    std::uint64_t steps = 0;
    while (true) {
        std::optional<std::string> name;
        try {
            name = rep.next();
        } catch (const CapError &) {
            throw;
        } catch (const Error &e) {
            return {VerifyResult::Status::invalid, steps + 1, e.what()};
        }
        if (!name)
            break;
        if (steps == budget)
            return {VerifyResult::Status::budget_exceeded, std::nullopt,
                    "more than " + std::to_string(budget) + " steps"};
        ++steps;
        if (auto reason = machine.apply(*name))
            return {VerifyResult::Status::invalid, steps, *reason};
    }
    if (!machine.at_goal())
        return {VerifyResult::Status::invalid, steps + 1, "goal not satisfied"};
    return r;
}

struct StripsMachine {
    const StripsInstance &p;
    State s;

    std::optional<std::string> apply(const std::string &name) {
        auto idx = p.find_action(name);
        if (!idx)
            return "unknown action " + name;
        const auto &a = p.action(*idx);
        if (!action_applicable(s, a))
            return "action " + name + " not applicable";
        s = apply_update(s, a.post);
        return std::nullopt;
    }
    bool at_goal() const { return p.is_goal(s); }
};

struct FfpMachine {
    const FfpInstance &p;
    FfpState s;
    std::unordered_map<std::string, std::size_t> index;

    FfpMachine(const FfpInstance &p_) : p(p_), s(p_.init()) {
        for (std::size_t a = 0; a < p.actions().size(); ++a)
            index.emplace(p.actions()[a].name, a);
    }

    std::optional<std::string> apply(const std::string &name) {
        auto it = index.find(name);
        if (it == index.end())
            return "unknown action " + name;
        if (!p.applicable(it->second, s))
            return "action " + name + " not applicable";
        s = p.successor(it->second, s);
        return std::nullopt;
    }
    bool at_goal() const { return p.is_goal(s); }
};

// Non-owning view so a RandomAccessRep can be walked with the stream verifier.
class BorrowedCrarStream : public SequentialRep {
public:
    explicit BorrowedCrarStream(const RandomAccessRep &r) : r_(r), length_(r.length()) {}
    std::string record() const override { return r_.record(); }

protected:
    std::optional<std::string> do_next(std::uint64_t &) override {
        if (next_ > length_)
            return std::nullopt;
        auto out = r_.access(next_);
        next_ += 1;
        return out;
    }

private:
    const RandomAccessRep &r_;
    BigInt length_;
    BigInt next_ = 1;
};

}  // namespace

VerifyResult verify_representation(const StripsInstance &p, SequentialRep &rep, std::uint64_t budget) {
    StripsMachine machine{p, p.init()};
    return verify_stream(machine, rep, budget);
}

VerifyResult verify_representation(const StripsInstance &p, const RandomAccessRep &rep, std::uint64_t budget) {
    BorrowedCrarStream stream(rep);
    return verify_representation(p, stream, budget);
}

VerifyResult verify_representation(const FfpInstance &p, SequentialRep &rep, std::uint64_t budget) {
    FfpMachine machine(p);
    return verify_stream(machine, rep, budget);
}

VerifyResult verify_representation(const FfpInstance &p, const RandomAccessRep &rep, std::uint64_t budget) {
    BorrowedCrarStream stream(rep);
    return verify_representation(p, stream, budget);
}

}  // namespace cplan
