#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "homtest/graph.hpp"
#include "homtest/hom_complex.hpp"
#include "homtest/test_graph.hpp"
#include "homtest/z2.hpp"

namespace homtest {

/**
 * Outcome of the homology test with one test graph: the largest certified
 * d with vanishing reduced homology through dimension d gives the bound
 * chi(G) >= d + 1 + chi(T). An empty complex makes the test vacuous; the
 * claim then falls back to the trivial bound and says so.
 */
struct BoundClaim {
    std::string test_name;
    int chi_t = 0;
    bool empty_complex = false;
    std::optional<int> d;
    int lower_bound = 0;
    BettiVector evidence;
    std::vector<long long> f_vector;
    /// True when every certified reduced Betti number vanished but the
    /// complex was truncated, so d was capped at max_check_dim.
    bool truncation_limited = false;
    long long millis = 0;
    std::optional<std::string> error; // set when the build failed (resource cap)
};

struct BoundOptions {
    int max_check_dim = 2;   // test homology through this dimension
    bool fold = true;        // fold-reduce the target before building
    bool with_exact = false; // also run the exact coloring oracle
    std::size_t cell_cap = 5'000'000;
    int exact_limit = 20;
};

struct BoundReport {
    int n = 0;
    int m = 0;
    int folded_n = 0;
    int trivial_bound = 0;
    std::optional<int> exact_chi;
    std::vector<BoundClaim> claims;
    int best_bound = 0;
};

/// 0 without vertices, 1 for nonempty edgeless graphs, 2 with any edge.
int trivial_chromatic_bound(const Graph& g);

/**
 * Builds Hom(t,g) through dimension max_check_dim + 1, computes reduced
 * mod-2 Betti numbers, and turns the first nonvanishing dimension into a
 * chromatic lower bound.
 */
BoundClaim homology_test(const TestGraph& t, const Graph& g, int max_check_dim,
                         std::size_t cell_cap = BuildOptions{}.cell_cap);

/// Runs homology_test for each test graph (on the fold-reduced target by
/// default) and assembles the report; per-test failures are recorded in
/// the claims, not thrown.
BoundReport run_suite(const Graph& g, const std::vector<TestGraph>& tests, const BoundOptions& opts = {});

/// True iff the Betti vectors of Hom(t,g) and Hom(t,fold_reduce(g)) agree
/// on every certified dimension.
bool fold_equivalence_check(const TestGraph& t, const Graph& g,
                            std::size_t cell_cap = BuildOptions{}.cell_cap);

nlohmann::ordered_json to_json(const BoundReport& report);
std::string format_report(const BoundReport& report);

} // namespace homtest
