#pragma once

#include <stdexcept>
#include <string>

namespace arcstein {

/// Caller supplied an argument outside an operation's precondition.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Evaluation requested outside the domain of a function (e.g. x outside [0,1]).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Non-finite intermediate value or failed numeric procedure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Request exceeds the configured memory budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace arcstein
