#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skein {

/// Malformed textual or JSON input. Carries the byte offset where parsing
/// stopped when one is known.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    explicit ParseError(const std::string& what) : std::invalid_argument("parse error: " + what) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_ = 0;
};

/// An operation received an element tagged with the wrong basis.
class BasisMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The exponential state sum would exceed the configured crossing budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(long crossings, long budget)
        : std::runtime_error("crossing budget exceeded: " + std::to_string(crossings) + " crossings, budget " +
                             std::to_string(budget)),
          crossings_(crossings), budget_(budget) {}

    long crossings() const noexcept { return crossings_; }
    long budget() const noexcept { return budget_; }

private:
    long crossings_;
    long budget_;
};

/// Bad arguments to an otherwise well-formed call (empty class where a
/// curve is required, parallel classes handed to the arrangement builder).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// psi_inverse was handed an element that is not fixed by orientation reversal.
class NotSymmetric : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Structurally invalid planar diagram code.
class InvalidDiagram : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Self-check failure inside the smoothing oracle. Always a bug in the
/// arrangement model, never a user error.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace skein
