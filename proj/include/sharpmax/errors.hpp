#pragma once
#include <stdexcept>
#include <string>

namespace sharpmax {

// Bad input: out-of-range parameter, malformed graph, mismatched sizes.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds the configured work budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A result violated one of the library's own invariants.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace sharpmax
