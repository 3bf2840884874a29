#pragma once

#include <stdexcept>
#include <string>

namespace pairorbits {

// Bad input from a caller or user (CLI exit code 1).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An identity the counting pipeline relies on did not hold (CLI exit code 2).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    using InputError::InputError;
};

class IdealOutOfContext : public InputError {
public:
    using InputError::InputError;
};

class ContextMismatch : public InputError {
public:
    using InputError::InputError;
};

class MissingContext : public InputError {
public:
    using InputError::InputError;
};

class NotComparable : public InputError {
public:
    using InputError::InputError;
};

class BudgetExceeded : public InputError {
public:
    using InputError::InputError;
};

class NonExactDivision : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

class NegativeExponent : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

class DegreeMismatch : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

class NonIntegerResult : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

}  // namespace pairorbits
