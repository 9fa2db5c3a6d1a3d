#pragma once

#include <string>
#include <vector>

namespace homtest {

struct SelftestResult {
    std::string name;
    bool passed = false;
    std::string detail; // filled in on failure
};

/**
 * The bundled fixture battery: the disjoint-union and attached-path
 * example graphs, the gluing construction, the sphere family, and the
 * two hand-built involution fixtures, each checked against frozen
 * expected values. `inject_fault` corrupts one expectation so the
 * failure path of the harness itself can be exercised.
 */
std::vector<SelftestResult> run_selftest(bool inject_fault = false);

} // namespace homtest
