#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domreconf {

// Malformed graph, set, label or sequence text. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Invalid graph construction (self-loop, duplicate edge, out-of-range endpoint).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A caller violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A node/vertex/state budget was exhausted before the computation finished.
// This never means the mathematical answer is negative.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t partial_count)
        : std::runtime_error(what), partial_count_(partial_count) {}

    std::size_t partial_count() const noexcept { return partial_count_; }

private:
    std::size_t partial_count_;
};

// The requested object provably does not exist (e.g. no matching of the given size).
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal guarantee failed. Firing this is always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace domreconf
