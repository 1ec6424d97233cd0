#pragma once

#include <stdexcept>
#include <string>

namespace njconst {

// A parameter lies outside the domain where the quantity is defined.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An input violates a stated precondition (off-sphere vector, unmet hypothesis).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Numerical state that should be unreachable for valid inputs.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace njconst
