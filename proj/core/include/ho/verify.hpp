#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ho {

struct CheckResult {
    std::string module;
    std::string name;
    bool passed = false;
    double measured = 0.0;  ///< worst error observed (or the tested quantity)
    double limit = 0.0;     ///< tolerance it is compared against
    std::string detail;
};

struct VerifyReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    int failures() const;
};

/// Runs every invariant and property check on an N-point grid with seeded
/// random test families. Checks that throw are recorded as failures.
VerifyReport verify_all(int n, std::uint64_t seed);

}  // namespace ho
