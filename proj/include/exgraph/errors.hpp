#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exgraph {

/// Out-of-range parameters for a standard family or construction.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested construction has no realization with the given parameters.
class Infeasible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed textual input; `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace exgraph
