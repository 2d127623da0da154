// SPDX-License-Identifier: Apache-2.0
//
// The eight acceptance checks, shared by `rcch selftest` and the test suite.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rcch {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  // 0: no time bound
};

inline constexpr int kCriteria = 8;

// Throws OutOfRange for ids outside 1..8.
CriterionResult run_criterion(int id, std::uint64_t seed = 1);
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 1);

// "criterion 3 PASS synthesis round trip (...) 12.3s"
std::string criterion_line(const CriterionResult& r);

}  // namespace rcch
