#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cog {

/// Elements that do not belong to the model they are used with.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller asked for something the operation does not accept (bad arity, bad mode).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A descriptor or family violates its construction invariants.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data fails a stated consistency condition.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The model is outside the catalog an operation can decide.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in a formula or partition expression.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace cog
