#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace globwb {

// Malformed diagrams, maps whose endpoints disagree, non-globular data.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input violates an invariant (bad table, bad partition, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation undefined on this input (boundary of a point, root decomposition of a point, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("at " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

}  // namespace globwb
