#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace constel {

// Malformed input: bad gap lists, unparseable files, out-of-range arguments.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation would exceed its memory budget. Carries the estimated
// working-set size so callers can report what would have been needed.
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, uint64_t required_bytes, uint64_t budget_bytes)
        : std::runtime_error(what + " (needs " + std::to_string(required_bytes) +
                             " bytes, budget " + std::to_string(budget_bytes) + ")"),
          required(required_bytes),
          budget(budget_bytes) {}

    uint64_t required;
    uint64_t budget;
};

}  // namespace constel
