#pragma once

#include <stdexcept>
#include <string>

namespace thetalift {

/// Base class for every failure raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (bad label, bad weight, bad parameter).
class InputError : public Error {
public:
    using Error::Error;
};

/// A hard internal check failed: a computation produced something that
/// exact arithmetic says cannot happen (negative multiplicity, dimension
/// mismatch, disagreeing routes).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace thetalift
