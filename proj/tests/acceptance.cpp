// Release gate: runs every acceptance criterion at its exact tolerance and
// prints one verdict line per criterion. Exit status is nonzero when any
// criterion fails, so ctest can gate on it directly.

#include <cstdio>

#include "ribbongate/selftest.hpp"

int main() {
    const std::uint64_t seed = ribbongate::selftest_seed();
    std::printf("acceptance suite (seed %llu)\n", static_cast<unsigned long long>(seed));

    bool all_pass = true;
    for (const auto& r : ribbongate::run_acceptance_suite(seed)) {
        std::printf("%s  %-28s %s (%.0f ms)\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.ms);
        all_pass &= r.pass;
    }
    std::printf(all_pass ? "acceptance: all criteria pass\n"
                         : "acceptance: FAILURES present\n");
    return all_pass ? 0 : 1;
}
