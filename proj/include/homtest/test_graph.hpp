#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homtest/graph.hpp"

namespace homtest {

/**
 * A test graph: a graph together with an automorphism of order two that
 * flips one of its edges, plus its exact chromatic number. These are the
 * probes of the coloring test; the flipped edge is what makes the induced
 * action on the multihomomorphism complex free for loopless targets.
 */
struct TestGraph {
    std::string name;
    Graph graph;
    std::vector<int> involution;
    std::pair<int, int> flipped_edge;
    int chi = 0;
    /// User-supplied entries whose test-graph property has not been
    /// established; the shipped registry contains none.
    bool unverified = false;
};

/// K_m with the involution swapping vertices 0 and 1.
TestGraph complete_test_graph(int m);

/// Odd cycle C_k with the reflection x -> k-1-x, which flips the edge
/// (0, k-1) and fixes the vertex (k-1)/2.
TestGraph odd_cycle_test_graph(int k);

/// The shipped registry: K2..K5 and C5, C7, C9. Larger members can be
/// built with the two constructors above.
const std::vector<TestGraph>& test_graph_registry();

/// Lookup by lowercase registry name ("k2", "c5", ...); nullptr if absent.
const TestGraph* find_test_graph(std::string_view name);

/// Comma-separated registry names, for error messages and --help text.
std::string registry_names();

/// Throws InternalError unless the involution is an involutive
/// automorphism flipping the declared edge. The chi field is checked
/// against the exact coloring oracle by the test suite, not here.
void validate_test_graph(const TestGraph& t);

} // namespace homtest
