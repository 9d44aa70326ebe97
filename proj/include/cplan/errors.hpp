#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cplan {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, unknown names, out-of-range parameters.
class InputError : public Error {
public:
    using Error::Error;
};

// A resource cap was hit. Never silently truncated.
class CapError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(int line, const std::string &msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InconsistentLiterals : public InputError {
public:
    explicit InconsistentLiterals(const std::string &atom)
        : InputError("inconsistent literal set: " + atom + " both positive and negative") {}
};

class UnknownAction : public InputError {
public:
    explicit UnknownAction(const std::string &name)
        : InputError("unknown action: " + name), name_(name) {}
    const std::string &name() const { return name_; }

private:
    std::string name_;
};

class UnknownAtom : public InputError {
public:
    explicit UnknownAtom(const std::string &name) : InputError("unknown atom: " + name) {}
};

class NotApplicable : public Error {
public:
    NotApplicable(const std::string &action, std::vector<std::string> violated);
    const std::vector<std::string> &violated() const { return violated_; }

private:
    std::vector<std::string> violated_;
};

class IndexOutOfRange : public InputError {
public:
    using InputError::InputError;
};

class ExplorationCapExceeded : public CapError {
public:
    explicit ExplorationCapExceeded(std::uint64_t cap)
        : CapError("exploration cap exceeded (" + std::to_string(cap) + " states)"), cap_(cap) {}
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

class CapExceeded : public CapError {
public:
    using CapError::CapError;
};

class StepBudgetExceeded : public CapError {
public:
    explicit StepBudgetExceeded(std::uint64_t budget)
        : CapError("FFP step budget exceeded (" + std::to_string(budget) + ")") {}
};

}  // namespace cplan
