#pragma once

#include <stdexcept>
#include <string>

namespace setconj {

// Violated precondition or type invariant detected at a module boundary.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A configurable resource cap (intermediate constraint count, complement
// budget, ...) was exceeded.  Callers may retry with a larger cap.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed instance file.  `location` is a human-readable pointer into the
// offending document.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string location)
        : std::runtime_error(what + " (at " + location + ")"), location_(std::move(location)) {}

    const std::string& location() const { return location_; }

private:
    std::string location_;
};

} // namespace setconj
