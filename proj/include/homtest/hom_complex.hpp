#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <vector>

#include "homtest/graph.hpp"
#include "homtest/test_graph.hpp"
#include "homtest/z2.hpp"

namespace homtest {

/**
 * A cell of the multihomomorphism complex: one nonempty vertex subset of
 * the target graph per vertex of the test graph, such that every edge of
 * the test graph lands on a complete bipartite pair of subsets. Dimension
 * is the total excess over singletons; dimension 0 cells are exactly the
 * graph homomorphisms.
 */
struct Cell {
    std::vector<VertexSet> assignment;

    int dim() const;
    bool operator==(const Cell& rhs) const = default;
    bool operator<(const Cell& rhs) const { return assignment < rhs.assignment; }
};

struct CellId {
    int dim = -1;
    int index = -1;
    bool operator==(const CellId& rhs) const = default;
};

struct BuildOptions {
    /// Highest cell dimension to enumerate; -1 builds the whole complex.
    int max_dim = -1;
    /// Clean error instead of memory exhaustion on huge complexes.
    std::size_t cell_cap = 5'000'000;
};

/**
 * The complex Hom(T,G) for a fixed test graph and target, cells grouped
 * by dimension and sorted lexicographically by their bitmask tuples.
 * Immutable once built; `truncated()` reports whether cells above
 * `top_dim()` were cut off by the max_dim option.
 */
class HomComplex {
public:
    const TestGraph& test() const { return test_; }
    const Graph& target() const { return target_; }

    bool empty() const { return cells_.empty(); }
    int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
    bool truncated() const { return truncated_; }

    std::size_t cell_count() const;
    const std::vector<Cell>& cells(int dim) const { return cells_.at(dim); }
    const Cell& cell(CellId id) const { return cells_.at(id.dim).at(id.index); }
    std::vector<long long> f_vector() const;

    std::optional<CellId> find(const Cell& c) const;

private:
    friend HomComplex build_hom(const TestGraph&, const Graph&, const BuildOptions&);

    struct CellKeyHash {
        std::size_t operator()(const std::vector<VertexSet>& key) const;
    };

    TestGraph test_;
    Graph target_;
    std::vector<std::vector<Cell>> cells_;
    bool truncated_ = false;
    std::unordered_map<std::vector<VertexSet>, CellId, CellKeyHash> index_;
};

/**
 * Enumerates the cells of Hom(T,G) up to opts.max_dim by backtracking
 * over the test graph's vertices in breadth-first order from the flipped
 * edge, assigning each vertex a nonempty subset of the common neighbors
 * of its already-assigned neighbors' sets.
 */
HomComplex build_hom(const TestGraph& t, const Graph& g, const BuildOptions& opts = {});

/// True iff a graph homomorphism T -> G exists (dimension-0 search with
/// early exit on the first one found).
bool hom_is_nonempty(const TestGraph& t, const Graph& g);

/**
 * Mod-2 boundary matrices: the column of a cell is the sum of its
 * codimension-one faces, each obtained by deleting one element from one
 * of the cell's non-singleton sets.
 */
ChainComplexZ2 boundary_complex(const HomComplex& h);

/// The action on cells induced by the test graph's involution:
/// cell eta goes to x -> eta(gamma(x)). Dimension-preserving.
CellInvolution induced_involution(const HomComplex& h);

/// True iff no cell is fixed by the involution.
bool is_free(const HomComplex& h, const CellInvolution& inv);

/// Orbit chain complex of a free involution; rejects non-free ones.
ChainComplexZ2 quotient_complex(const HomComplex& h, const CellInvolution& inv);

/// Text export, one line per cell: "dim; mask_0,mask_1,..." in hex.
void export_cells(const HomComplex& h, std::ostream& os);

} // namespace homtest
