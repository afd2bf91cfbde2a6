#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Thrown when an enumeration would exceed a configured cap.  Carries the
// computed cardinality so callers can report it instead of truncating.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, unsigned long long required,
                unsigned long long cap)
        : std::runtime_error(what + ": size " + std::to_string(required) +
                             " exceeds cap " + std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    unsigned long long required() const { return required_; }
    unsigned long long cap() const { return cap_; }

private:
    unsigned long long required_;
    unsigned long long cap_;
};

struct Caps {
    unsigned long long group_cap = 1'000'000;
    unsigned long long orbit_cap = 1'000'000;
    unsigned long long matrix_cap = 10'000'000;
};

}  // namespace specht
