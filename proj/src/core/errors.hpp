#pragma once

#include <stdexcept>
#include <string>

namespace ecfac {

// Bad caller input: wrong type of number, violated precondition.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A search ran to its configured bound without an answer.
class Exhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A local solvability search hit its depth cap.
class Inconclusive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Trial division plus the supplied primes did not fully factor the input.
class IncompleteFactorization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A mathematical law that must hold was observed to fail.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wraps a failure from a pipeline stage with the stage's name.
class StageError : public std::runtime_error {
public:
    enum class Kind { invalid, exhausted, violation, internal };

    StageError(std::string stage, Kind kind, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), kind_(kind) {}

    const std::string& stage() const noexcept { return stage_; }
    Kind kind() const noexcept { return kind_; }

private:
    std::string stage_;
    Kind kind_;
};

} // namespace ecfac
