#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file or unparseable text (graph files, solver output, certificates).
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An operation was called with inputs violating its stated preconditions.
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A search exceeded its node budget before reaching a decision.
class BudgetError : public Error {
public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

/// No avoidance colouring exists (or none was found within budget) where one was requested.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// A built-in colouring failed its load-time verification scan.
class RegistryError : public Error {
public:
    explicit RegistryError(const std::string& what) : Error(what) {}
};

/// A construction produced an output that failed its own replay verification.
/// Indicates a bug, never expected on inputs meeting the preconditions.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace ramsey
