#pragma once

#include <stdexcept>
#include <string>

namespace k3fib {

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual or JSON input. CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input is well-formed but mathematically inadmissible. CLI exit code 3.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A consistency check that should never fail did. CLI exit code 4.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace k3fib
