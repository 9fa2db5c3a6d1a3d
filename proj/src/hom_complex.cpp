#include "homtest/hom_complex.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <queue>

#include "homtest/errors.hpp"

namespace homtest {

int Cell::dim() const {
    int d = 0;
    for (VertexSet s : assignment) d += set_size(s) - 1;
    return d;
}

std::size_t HomComplex::CellKeyHash::operator()(const std::vector<VertexSet>& key) const {
    // FNV-1a over the mask words.
    std::size_t h = 1469598103934665603ull;
    for (VertexSet s : key) {
        h ^= static_cast<std::size_t>(s);
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t HomComplex::cell_count() const {
    std::size_t total = 0;
    for (const auto& layer : cells_) total += layer.size();
    return total;
}

std::vector<long long> HomComplex::f_vector() const {
    std::vector<long long> f;
    f.reserve(cells_.size());
    for (const auto& layer : cells_) f.push_back(static_cast<long long>(layer.size()));
    return f;
}

std::optional<CellId> HomComplex::find(const Cell& c) const {
    const auto it = index_.find(c.assignment);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

/// Breadth-first order of T's vertices starting from the flipped edge, so
/// the bipartite condition prunes as early as possible. Vertices of other
/// components (none in the shipped registry) follow in id order.
std::vector<int> enumeration_order(const TestGraph& t) {
    const int n = t.graph.vertex_count();
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    auto push = [&](int v) {
        if (v >= 0 && v < n && !seen[v]) {
            seen[v] = true;
            frontier.push(v);
        }
    };
    push(t.flipped_edge.first);
    push(t.flipped_edge.second);
    for (int start = 0; start <= n; ++start) {
        while (!frontier.empty()) {
            const int v = frontier.front();
            frontier.pop();
            order.push_back(v);
            VertexSet nb = t.graph.neighbors(v);
            while (nb != 0) {
                const int w = std::countr_zero(nb);
                nb &= nb - 1;
                push(w);
            }
        }
        if (start < n) push(start);
    }
    return order;
}

struct Enumerator {
    const Graph& t_graph;
    const Graph& g;
    std::vector<int> order;
    std::vector<std::vector<int>> earlier_neighbors; // per order position
    int max_dim;          // -1 = unbounded
    std::size_t cell_cap; // throw beyond this many cells
    bool stop_at_first = false;

    std::vector<VertexSet> assignment; // indexed by T vertex id
    std::vector<Cell> out;
    bool budget_pruned = false;
    bool found_one = false;

    Enumerator(const TestGraph& t, const Graph& target) : t_graph(t.graph), g(target) {
        order = enumeration_order(t);
        earlier_neighbors.resize(order.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (t_graph.has_edge(order[i], order[j])) earlier_neighbors[i].push_back(order[j]);
        assignment.assign(order.size(), 0);
    }

    VertexSet common_neighbors(VertexSet s) const {
        VertexSet common = full_set(g.vertex_count());
        while (s != 0) {
            const int w = std::countr_zero(s);
            s &= s - 1;
            common &= g.neighbors(w);
        }
        return common;
    }

    void emit() {
        if (stop_at_first) {
            found_one = true;
            return;
        }
        if (out.size() >= cell_cap)
            throw ResourceLimitError("build_hom: cell cap of " + std::to_string(cell_cap) + " exceeded");
        out.push_back(Cell{assignment});
    }

    /// Assign position i a nonempty subset of `allowed` with at most
    /// budget+1 elements, then recurse.
    void extend(std::size_t i, int budget) {
        if (found_one) return;
        if (i == order.size()) {
            emit();
            return;
        }
        VertexSet allowed = full_set(g.vertex_count());
        for (int y : earlier_neighbors[i]) allowed &= common_neighbors(assignment[y]);
        if (allowed == 0) return;

        std::vector<int> elems;
        while (allowed != 0) {
            const int v = std::countr_zero(allowed);
            allowed &= allowed - 1;
            elems.push_back(v);
        }
        int max_size = static_cast<int>(elems.size());
        if (budget >= 0 && budget + 1 < max_size) {
            max_size = budget + 1;
            budget_pruned = true;
        }
        const int x = order[i];
        choose(i, budget, x, elems, 0, 0, max_size);
        assignment[x] = 0;
    }

    /// Build subsets of elems[from..] on top of the current partial mask.
    void choose(std::size_t i, int budget, int x, const std::vector<int>& elems, std::size_t from,
                int taken, int max_size) {
        if (found_one) return;
        if (taken > 0) {
            const int spend = taken - 1;
            extend(i + 1, budget < 0 ? -1 : budget - spend);
        }
        if (taken == max_size) return;
        for (std::size_t k = from; k < elems.size(); ++k) {
            assignment[x] |= VertexSet{1} << elems[k];
            choose(i, budget, x, elems, k + 1, taken + 1, max_size);
            assignment[x] &= ~(VertexSet{1} << elems[k]);
            if (found_one) return;
        }
    }
};

} // namespace

HomComplex build_hom(const TestGraph& t, const Graph& g, const BuildOptions& opts) {
    HomComplex h;
    h.test_ = t;
    h.target_ = g;

    Enumerator e(t, g);
    e.max_dim = opts.max_dim;
    e.cell_cap = opts.cell_cap;
    e.extend(0, opts.max_dim);

    int top = -1;
    for (const Cell& c : e.out) top = std::max(top, c.dim());
    h.cells_.resize(top + 1);
    for (Cell& c : e.out) h.cells_[c.dim()].push_back(std::move(c));
    for (auto& layer : h.cells_) std::sort(layer.begin(), layer.end());

    // The enumeration is exhaustive below the requested cut, so the build
    // is only incomplete if the cut actually removed subset choices and
    // cells exist at the cut itself (faces of any higher cell would land
    // there).
    h.truncated_ = opts.max_dim >= 0 && e.budget_pruned && top == opts.max_dim;

    for (int d = 0; d <= top; ++d)
        for (int i = 0; i < static_cast<int>(h.cells_[d].size()); ++i)
            h.index_.emplace(h.cells_[d][i].assignment, CellId{d, i});
    return h;
}

bool hom_is_nonempty(const TestGraph& t, const Graph& g) {
    Enumerator e(t, g);
    e.max_dim = 0;
    e.cell_cap = 1;
    e.stop_at_first = true;
    e.extend(0, 0);
    return e.found_one;
}

ChainComplexZ2 boundary_complex(const HomComplex& h) {
    ChainComplexZ2 c;
    if (h.empty()) return c;
    const int top = h.top_dim();
    c.sizes.resize(top + 1);
    for (int d = 0; d <= top; ++d) c.sizes[d] = static_cast<int>(h.cells(d).size());
    if (h.truncated()) c.truncated_above = top;

    c.boundaries.resize(top + 1);
    for (int d = 1; d <= top; ++d) {
        Z2Matrix m(c.sizes[d - 1], c.sizes[d]);
        Cell face;
        for (int col = 0; col < c.sizes[d]; ++col) {
            const Cell& cell = h.cells(d)[col];
            face = cell;
            for (std::size_t x = 0; x < cell.assignment.size(); ++x) {
                VertexSet s = cell.assignment[x];
                if (set_size(s) < 2) continue;
                while (s != 0) {
                    const VertexSet bit = s & (~s + 1);
                    s &= s - 1;
                    face.assignment[x] = cell.assignment[x] ^ bit;
                    const auto id = h.find(face);
                    if (!id || id->dim != d - 1)
                        throw InternalError("boundary_complex: face of a stored cell is missing");
                    m.flip(id->index, col);
                }
                face.assignment[x] = cell.assignment[x];
            }
        }
        c.boundaries[d] = std::move(m);
    }
    return c;
}

CellInvolution induced_involution(const HomComplex& h) {
    const std::vector<int>& gamma = h.test().involution;
    CellInvolution inv(h.top_dim() + 1);
    Cell image;
    for (int d = 0; d <= h.top_dim(); ++d) {
        const auto& layer = h.cells(d);
        inv[d].resize(layer.size());
        for (std::size_t i = 0; i < layer.size(); ++i) {
            const Cell& cell = layer[i];
            image.assignment.assign(cell.assignment.size(), 0);
            for (std::size_t x = 0; x < cell.assignment.size(); ++x)
                image.assignment[x] = cell.assignment[gamma[x]];
            const auto id = h.find(image);
            if (!id || id->dim != d)
                throw InternalError("induced_involution: image cell not found");
            inv[d][i] = id->index;
        }
    }
    return inv;
}

bool is_free(const HomComplex& h, const CellInvolution& inv) {
    (void)h;
    return involution_is_free(inv);
}

ChainComplexZ2 quotient_complex(const HomComplex& h, const CellInvolution& inv) {
    if (!is_free(h, inv))
        throw std::invalid_argument("quotient_complex: involution is not free");
    return quotient_chain_complex(boundary_complex(h), inv);
}

void export_cells(const HomComplex& h, std::ostream& os) {
    os << std::hex;
    for (int d = 0; d <= h.top_dim(); ++d) {
        for (const Cell& cell : h.cells(d)) {
            os << std::dec << d << std::hex << "; ";
            for (std::size_t x = 0; x < cell.assignment.size(); ++x) {
                if (x > 0) os << ',';
                os << cell.assignment[x];
            }
            os << '\n';
        }
    }
    os << std::dec;
}

} // namespace homtest
