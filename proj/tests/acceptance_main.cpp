// SPDX-License-Identifier: Apache-2.0
//
// One line per acceptance criterion; exit status 1 if any fails.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "rcch/acceptance.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    int failed = 0;
    for (int id = 1; id <= rcch::kCriteria; ++id) {
        rcch::CriterionResult r = rcch::run_criterion(id, seed);
        std::printf("%s\n", rcch::criterion_line(r).c_str());
        std::fflush(stdout);
        if (!r.pass) ++failed;
    }
    std::printf("%d/%d criteria pass\n", rcch::kCriteria - failed, rcch::kCriteria);
    return failed ? 1 : 0;
}
