#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vsz {

/// Malformed edge-list input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DisconnectedGraphError : public std::invalid_argument {
public:
    DisconnectedGraphError() : std::invalid_argument("graph not connected") {}
};

/// h is identically zero (complete graph); there is no critical exponent.
class DegenerateGapError : public std::domain_error {
public:
    DegenerateGapError() : std::domain_error("degenerate: h ≡ 0") {}
};

class RetryCapExceeded : public std::runtime_error {
public:
    explicit RetryCapExceeded(std::size_t attempts)
        : std::runtime_error("retry cap exceeded after " + std::to_string(attempts) + " attempts"),
          attempts_(attempts) {}

    std::size_t attempts() const noexcept { return attempts_; }

private:
    std::size_t attempts_;
};

}  // namespace vsz
