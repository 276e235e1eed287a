#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kindep {

// A documented precondition of an operation was violated by its arguments.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed graph6 / edge-list / grid input. offset is the byte (or line) position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An exact routine refused an instance above its hard size or work cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kindep
