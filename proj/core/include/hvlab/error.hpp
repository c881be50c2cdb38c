#pragma once

#include <stdexcept>
#include <string>

namespace hvlab {

/// A value or table violates a structural invariant (empty cell, lo > hi, ...).
class ConstructionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A constructor's mathematical hypothesis does not hold for its inputs.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Something the theory guarantees did not happen (e.g. an ill-defined
/// quotient operation). Indicates either a bug or a genuine counterexample.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Structure file could not be read. `where` is a JSON path such as
/// "module.add[0][1]" or a byte offset for syntax errors.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string where, const std::string& message)
        : std::runtime_error(where.empty() ? message : message + " at " + where), where_(std::move(where))
    {
    }

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace hvlab
