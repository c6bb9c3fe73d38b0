#ifndef SOLARPLAN_ERRORS_HPP
#define SOLARPLAN_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace solarplan {

// A single validation failure: dotted field path plus a human-readable message.
struct Violation {
    std::string path;
    std::string message;
};

std::string format_violations(const std::vector<Violation>& violations);

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document (not valid JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid document that violates one or more invariants.
// Carries every violation found, not just the first.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Violation> violations)
        : Error(format_violations(violations)), violations_(std::move(violations)) {}
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

class InvalidParameterError : public Error {
public:
    using Error::Error;
};

// A candidate (selection, production) point that breaks a model constraint.
class ConstraintViolationError : public Error {
public:
    using Error::Error;
};

class SizeLimitError : public Error {
public:
    using Error::Error;
};

// Quadratic inversion has no real root (negative discriminant).
class NoRealSolutionError : public Error {
public:
    using Error::Error;
};

// Closed-form panel count is non-positive or its precondition fails.
class NoPositiveSolutionError : public Error {
public:
    using Error::Error;
};

// Geometric bracket expansion found no sign change.
class RootNotBracketedError : public Error {
public:
    using Error::Error;
};

// Scenario degenerates the unit-value formula (zero denominator).
class DegenerateScenarioError : public Error {
public:
    using Error::Error;
};

// Simulation failure wrapping the index of the replication that failed.
class ReplicationError : public Error {
public:
    ReplicationError(int replication, const std::string& what)
        : Error("replication " + std::to_string(replication) + ": " + what),
          replication_(replication) {}
    int replication() const { return replication_; }

private:
    int replication_;
};

}  // namespace solarplan

#endif
