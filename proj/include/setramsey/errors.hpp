#pragma once

#include <stdexcept>
#include <string>

namespace setramsey {

/// Thrown when a configured node/enumeration budget runs out.
/// Signals "unknown", never a wrong answer.
struct BudgetExceededError : std::runtime_error {
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an input would exceed a hard resource cap
/// (palette width, vertex count, materialized digits, ...).
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by file readers on malformed or invariant-violating input.
struct FileFormatError : std::runtime_error {
    explicit FileFormatError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace setramsey
