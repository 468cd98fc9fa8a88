#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwcount {

// A precondition on a degree, bound, or structural input was violated.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An arithmetic identity that must hold did not. Indicates a bug, not bad input.
class InconsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An enumeration would exceed its configured size ceiling.
class ResourceGuardError : public std::runtime_error {
public:
    ResourceGuardError(const std::string& what, std::string projected)
        : std::runtime_error(what), projected_(std::move(projected)) {}

    // Decimal projected class count, or empty when no projection was made.
    const std::string& projected() const noexcept { return projected_; }

private:
    std::string projected_;
};

// A linear series whose basis does not span a net.
class RankDeficientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A malformed input document (series file, rational literal, shape string).
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::string location)
        : std::runtime_error(location.empty() ? what : location + ": " + what),
          location_(std::move(location)) {}

    const std::string& location() const noexcept { return location_; }

private:
    std::string location_;
};

// A recursion cache file failed validation. line() is 1-based; 0 means the file as a whole.
class CacheError : public std::runtime_error {
public:
    CacheError(const std::string& what, std::size_t line)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace gwcount
