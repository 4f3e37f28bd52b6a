// Acceptance runner: executes every criterion and prints one line each.
// Exit status 0 only if all pass.

#include <cstdlib>
#include <iostream>

#include "gbent/selftest.hpp"

int main(int argc, char** argv) {
    uint32_t seed = gbent::selftest::kDefaultSeed;
    if (argc > 1)
        seed = static_cast<uint32_t>(std::strtoul(argv[1], nullptr, 10));
    const auto results = gbent::selftest::run_all(std::cout, seed);
    const bool ok = gbent::selftest::all_passed(results);
    std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
    return ok ? 0 : 1;
}
