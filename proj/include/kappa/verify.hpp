#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace kappa {

/// One checked case. expected/got are already formatted (integers, booleans,
/// or "num/den" rationals).
struct VerifyCase {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct VerifyLimits {
    int max_d = 5;
    int max_n = 8;
};

/// Suites: genus0-relations, ktrivial, genus1-rank, bases, matrices.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<VerifyCase> run_suite(std::string_view suite, VerifyLimits limits);

std::vector<std::string> suite_names();

}  // namespace kappa
