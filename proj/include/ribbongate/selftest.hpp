#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ribbongate/pipeline.hpp"
#include "ribbongate/version.hpp"

namespace ribbongate {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double ms = 0.0;
};

/// The acceptance suite: every release-gating property, exact tolerances,
/// one result per criterion. seed drives the Reidemeister fuzz corpus.
std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed, int jobs = 1);

/// Fuzz seed: RIBBONGATE_SEED when set, otherwise a fixed default.
std::uint64_t selftest_seed();

}  // namespace ribbongate
