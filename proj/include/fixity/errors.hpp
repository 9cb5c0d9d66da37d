#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fixity {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (degree mismatch, point out of range, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A brute-force or enumeration cap was exceeded. Never a wrong answer, always this.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// A real-valued function was evaluated outside its domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A lemma or theorem hypothesis does not hold for the given instance.
class HypothesisError : public Error {
public:
    HypothesisError(std::string hypothesis, const std::string& detail)
        : Error("hypothesis '" + hypothesis + "' fails: " + detail), hypothesis_(std::move(hypothesis))
    {
    }

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

/// Malformed group, graph or constants file.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& detail)
        : Error("line " + std::to_string(line) + ": " + detail), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A catalog entry failed load-time validation (group not acting by automorphisms).
class ValidationError : public Error {
public:
    using Error::Error;
};

} // namespace fixity
