#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homtest {

/// Vertex subsets are bitmasks, which caps graphs at 64 vertices.
using VertexSet = std::uint64_t;
inline constexpr int kMaxVertices = 64;

VertexSet full_set(int n);
int set_size(VertexSet s);

/**
 * Simple undirected loopless graph with one adjacency bitmask per vertex.
 * Vertices are 0..n-1; loops are rejected everywhere.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int vertex_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const;
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return set_size(adj_[v]); }

    void add_edge(int u, int v);

    /// Sorted list of edges (u < v); the canonical serialization order.
    std::vector<std::pair<int, int>> edges() const;

    /// Optional per-vertex names, used only for reporting.
    std::vector<std::string> labels;
    std::string label(int v) const;

    /// Equality is n plus adjacency; labels are cosmetic.
    bool operator==(const Graph& rhs) const { return n_ == rhs.n_ && adj_ == rhs.adj_; }

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/**
 * Edge-list format: one "u v" pair per line, "#" starts a comment, and a
 * line holding a single integer declares an isolated vertex (needed so
 * that serialization round-trips graphs with trailing isolated vertices).
 * The vertex count is 1 + the largest id seen.
 */
Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

/// DIMACS: "p edge n m" header, then "e u v" lines with 1-based ids.
Graph parse_dimacs(const std::string& text);
std::string serialize_dimacs(const Graph& g);

Graph complete_graph(int m);
Graph cycle_graph(int k);

/// Vertex set is the disjoint sum; g2's ids are offset by g1.vertex_count().
Graph disjoint_union(const Graph& g1, const Graph& g2);

/**
 * Quotient of the disjoint union identifying each pair (v in g1, w in g2)
 * to the g1 vertex. The v's must be distinct, likewise the w's.
 */
Graph glue_vertices(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> pairs);

/// Adds `interior` new vertices forming an a-...-b path with interior+1
/// edges; the new vertices are labeled "1".."interior" in path order.
Graph attach_path(const Graph& g, int a, int b, int interior);

struct FoldResult {
    Graph graph;
    std::vector<int> vertex_map; // old vertex -> vertex of the reduced graph
};

/**
 * Repeatedly deletes a vertex u whenever some v != u has N(u) a subset of
 * N(v), until no such vertex exists. Deterministic: the smallest eligible
 * u goes first, folded onto the smallest witnessing v.
 */
FoldResult fold_reduce(const Graph& g);

/// Exact chromatic number by branch and bound over color classes.
/// 0 for the empty graph, 1 for nonempty edgeless graphs. Rejects graphs
/// with more than `limit` vertices.
int chromatic_number_exact(const Graph& g, int limit = 20);

/// Greedy coloring in descending-degree order; an upper bound for chi.
int greedy_upper_bound(const Graph& g);

} // namespace homtest
