#pragma once

#include <stdexcept>
#include <string>

namespace pbemo {

// Vector lengths disagree.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A function argument is outside its documented domain.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An input violated a documented precondition (e.g. an out-of-bounds decision vector).
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Operation on an object that is not in a usable state (e.g. an empty archive).
class StateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Invalid experiment or problem configuration. `field` names the offending
// config path when one is known.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::string const& message, std::string field = {})
        : std::runtime_error(field.empty() ? message : field + ": " + message)
        , field_(std::move(field))
    {
    }

    [[nodiscard]] auto Field() const noexcept -> std::string const& { return field_; }

private:
    std::string field_;
};

// Rank computation requested on a design with missing cells.
class IncompleteDesignError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pbemo
