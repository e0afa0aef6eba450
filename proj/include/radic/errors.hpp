#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radic {

/// Index, rank or count outside its admissible interval.
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Caller passed arguments that do not fit together (shape mismatch, wrong table).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A value violates its type's invariants (e.g. a non-ascending combination).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested work exceeds the configured term cap.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Malformed matrix text. `line()` is 1-based, 0 when no single line is at fault.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace radic
