#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace magari4 {

/// Malformed call: wrong arity, bad token, out-of-range index.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(std::string variable)
        : std::runtime_error("unbound variable '" + variable + "'"),
          variable_(std::move(variable)) {}

    const std::string& variable() const noexcept { return variable_; }

private:
    std::string variable_;
};

/// The table does not preserve the relation Delta x = Delta y, so no formula realizes it.
class NotRepresentable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A hypothesis of a constant-derivation step does not hold. `index()` names the
/// offending member F_i of the twelve-system, or 0 when the failed check is not
/// tied to a single member.
class PreconditionViolated : public std::runtime_error {
public:
    PreconditionViolated(std::size_t index, const std::string& message)
        : std::runtime_error(message), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// An intermediate claim of the derivation failed on the realized tables. Always a bug.
class InternalProofCheckFailed : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Closure computation exceeded its table or work budget.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace magari4
