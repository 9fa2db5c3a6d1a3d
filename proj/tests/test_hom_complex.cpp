#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "homtest/errors.hpp"
#include "homtest/hom_complex.hpp"
#include "homtest/test_graph.hpp"
#include "oracle/oracle.hpp"
#include "test_util.hpp"

using namespace homtest;

namespace {

const TestGraph& k2 = *find_test_graph("k2");
const TestGraph& k3 = *find_test_graph("k3");
const TestGraph& k5 = *find_test_graph("k5");
const TestGraph& c5 = *find_test_graph("c5");

std::vector<Cell> all_cells_sorted(const HomComplex& h) {
    std::vector<Cell> out;
    for (int d = 0; d <= h.top_dim(); ++d)
        for (const Cell& c : h.cells(d)) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.assignment < b.assignment;
    });
    return out;
}

/// Re-check the cell invariants straight from the definition.
bool cell_is_valid(const TestGraph& t, const Graph& g, const Cell& cell) {
    for (VertexSet s : cell.assignment)
        if (s == 0 || (s & ~full_set(g.vertex_count())) != 0) return false;
    for (auto [x, y] : t.graph.edges())
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w = 0; w < g.vertex_count(); ++w) {
                const bool in_x = (cell.assignment[x] >> u) & 1u;
                const bool in_y = (cell.assignment[y] >> w) & 1u;
                if (in_x && in_y && !g.has_edge(u, w)) return false;
            }
    return true;
}

} // namespace

TEST_CASE("build_hom on tiny instances") {
    SECTION("Hom(K2,K2) is two points") {
        const HomComplex h = build_hom(k2, complete_graph(2));
        REQUIRE(h.f_vector() == std::vector<long long>{2});
        CHECK(h.cells(0)[0].assignment == std::vector<VertexSet>{1, 2});
        CHECK(h.cells(0)[1].assignment == std::vector<VertexSet>{2, 1});
        CHECK_FALSE(h.truncated());
    }
    SECTION("Hom(K2,K4) is the boundary of a 3-polytope") {
        const HomComplex h = build_hom(k2, complete_graph(4));
        CHECK(h.f_vector() == std::vector<long long>{12, 24, 14});
    }
    SECTION("Hom(C5,K4) has 240 vertices") {
        const HomComplex h = build_hom(c5, complete_graph(4));
        CHECK(h.cells(0).size() == 240);
    }
    SECTION("dimension-0 cells are homomorphisms") {
        const HomComplex h = build_hom(k3, disjoint_union(complete_graph(2), complete_graph(3)));
        REQUIRE(h.f_vector() == std::vector<long long>{6});
        for (const Cell& cell : h.cells(0)) CHECK(cell.dim() == 0);
    }
}

TEST_CASE("independent counting cross-checks") {
    SECTION("Hom(K3,K5) is a wedge of 29 two-spheres") {
        // Cells are ordered triples of disjoint nonempty subsets of [5]:
        // by total size 60/180/150, so chi = 30; the complex is simply
        // connected, leaving b2 = 29.
        const HomComplex h = build_hom(k3, complete_graph(5));
        CHECK(h.f_vector() == std::vector<long long>{60, 180, 150});
        CHECK(betti(boundary_complex(h), true).values == std::vector<int>{0, 0, 29});
    }
    SECTION("Hom(C5,C5) is ten rigid points") {
        // Only the five rotations and five reflections map C5 to itself,
        // and a distance-two pair in C5 has a single common neighbor, so
        // no vertex assignment can thicken.
        const HomComplex h = build_hom(c5, cycle_graph(5));
        CHECK(h.f_vector() == std::vector<long long>{10});
        CHECK(betti(boundary_complex(h), true).values == std::vector<int>{9});
    }
}

TEST_CASE("hom_is_nonempty") {
    CHECK_FALSE(hom_is_nonempty(c5, complete_graph(2)));
    CHECK(hom_is_nonempty(k3, disjoint_union(complete_graph(2), complete_graph(3))));
    CHECK_FALSE(hom_is_nonempty(k5, complete_graph(4)));
    CHECK_FALSE(hom_is_nonempty(k2, complete_graph(1)));
    CHECK_FALSE(hom_is_nonempty(k2, Graph()));
}

TEST_CASE("build_hom equals the brute-force oracle") {
    std::mt19937 rng(777);
    // All registry pairs that fit the oracle's budget, plus random targets.
    for (const TestGraph& t : test_graph_registry()) {
        const int max_target = 12 / t.graph.vertex_count();
        if (max_target < 1) continue;
        for (int trial = 0; trial < 30; ++trial) {
            const int n = trial % (max_target + 1);
            const Graph g = testutil::random_graph(rng, n, 0.2 + 0.15 * (trial % 5));
            CAPTURE(t.name, trial, n);
            const std::vector<Cell> expected = oracle::brute_force_cells(t, g);
            const std::vector<Cell> actual = all_cells_sorted(build_hom(t, g));
            REQUIRE(actual == expected);
        }
    }
}

TEST_CASE("every stored cell satisfies the cell invariants") {
    std::mt19937 rng(888);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = testutil::random_graph(rng, 4 + trial % 3, 0.5);
        for (const TestGraph* t : {&k2, &k3, &c5}) {
            const HomComplex h = build_hom(*t, g);
            for (int d = 0; d <= h.top_dim(); ++d)
                for (const Cell& cell : h.cells(d)) {
                    REQUIRE(cell.dim() == d);
                    REQUIRE(cell_is_valid(*t, g, cell));
                }
        }
    }
}

TEST_CASE("face closure") {
    const HomComplex h = build_hom(k2, complete_graph(4));
    for (int d = 1; d <= h.top_dim(); ++d)
        for (const Cell& cell : h.cells(d))
            for (std::size_t x = 0; x < cell.assignment.size(); ++x) {
                VertexSet s = cell.assignment[x];
                if (set_size(s) < 2) continue;
                while (s != 0) {
                    const VertexSet bit = s & (~s + 1);
                    s &= s - 1;
                    Cell face = cell;
                    face.assignment[x] ^= bit;
                    REQUIRE(h.find(face).has_value());
                }
            }
}

TEST_CASE("cells are sorted and indexed") {
    const HomComplex h = build_hom(k2, complete_graph(4));
    for (int d = 0; d <= h.top_dim(); ++d) {
        const auto& layer = h.cells(d);
        for (std::size_t i = 1; i < layer.size(); ++i) REQUIRE(layer[i - 1] < layer[i]);
        for (std::size_t i = 0; i < layer.size(); ++i) {
            const auto id = h.find(layer[i]);
            REQUIRE(id.has_value());
            CHECK(*id == CellId{d, static_cast<int>(i)});
        }
    }
    CHECK_FALSE(h.find(Cell{{5, 5}}).has_value()); // overlapping pair is no cell of Hom(K2,K4)
}

TEST_CASE("boundary matrices") {
    SECTION("Hom(K2,K2) has no positive-dimensional cells") {
        const ChainComplexZ2 c = boundary_complex(build_hom(k2, complete_graph(2)));
        REQUIRE(c.top_dim() == 0);
        CHECK(betti(c, false).values == std::vector<int>{2});
    }
    SECTION("Hom(K2,K3) is a hexagon") {
        const ChainComplexZ2 c = boundary_complex(build_hom(k2, complete_graph(3)));
        REQUIRE(c.sizes == std::vector<int>{6, 6});
        for (int col = 0; col < 6; ++col) CHECK(c.boundary(1).col_weight(col) == 2);
        CHECK(betti(c, true).values == std::vector<int>{0, 1});
    }
    SECTION("Hom(K2,K4) boundary ranks") {
        const ChainComplexZ2 c = boundary_complex(build_hom(k2, complete_graph(4)));
        CHECK(gf2_rank(c.boundary(1)) == 11);
        CHECK(gf2_rank(c.boundary(2)) == 13);
        CHECK(euler_characteristic(c) == 2);
    }
    SECTION("d of d is zero everywhere") {
        std::mt19937 rng(1212);
        for (int trial = 0; trial < 12; ++trial) {
            const Graph g = testutil::random_graph(rng, 5 + trial % 3, 0.45);
            for (const TestGraph* t : {&k2, &k3, &c5}) {
                const ChainComplexZ2 c = boundary_complex(build_hom(*t, g));
                CAPTURE(t->name, trial);
                REQUIRE(validate(c));
            }
        }
    }
}

TEST_CASE("truncated builds") {
    BuildOptions opts;
    opts.max_dim = 1;
    const HomComplex h = build_hom(k2, complete_graph(4), opts);
    CHECK(h.top_dim() == 1);
    CHECK(h.truncated());
    CHECK(h.f_vector() == std::vector<long long>{12, 24});

    const ChainComplexZ2 c = boundary_complex(h);
    REQUIRE(c.truncated());
    CHECK(c.certified_through() == 0);
    CHECK(betti(c, true).values == std::vector<int>{0});

    SECTION("a cap below the requested dimension is detected as complete") {
        BuildOptions high;
        high.max_dim = 10; // complex tops out at 2
        const HomComplex full = build_hom(k2, complete_graph(4), high);
        CHECK_FALSE(full.truncated());
        CHECK(full.top_dim() == 2);
    }
}

TEST_CASE("cell cap aborts oversized builds") {
    BuildOptions opts;
    opts.cell_cap = 100;
    CHECK_THROWS_AS(build_hom(c5, complete_graph(4), opts), ResourceLimitError);
}

TEST_CASE("induced involution") {
    SECTION("swaps the two vertices of Hom(K2,K2)") {
        const HomComplex h = build_hom(k2, complete_graph(2));
        const CellInvolution inv = induced_involution(h);
        CHECK(inv == CellInvolution{{1, 0}});
        CHECK(is_free(h, inv));
    }
    SECTION("fixed-point free on all 50 cells of Hom(K2,K4)") {
        const HomComplex h = build_hom(k2, complete_graph(4));
        REQUIRE(h.cell_count() == 50);
        const CellInvolution inv = induced_involution(h);
        CHECK(is_free(h, inv));
    }
    SECTION("free on Hom(C5,K4)") {
        const HomComplex h = build_hom(c5, complete_graph(4));
        CHECK(is_free(h, induced_involution(h)));
    }
    SECTION("commutes with the boundary") {
        std::mt19937 rng(99);
        for (int trial = 0; trial < 8; ++trial) {
            const Graph g = testutil::random_graph(rng, 5 + trial % 3, 0.5);
            for (const TestGraph* t : {&k2, &k3, &c5}) {
                const HomComplex h = build_hom(*t, g);
                if (h.empty()) continue;
                const CellInvolution inv = induced_involution(h);
                const ChainComplexZ2 c = boundary_complex(h);
                for (int d = 1; d <= c.top_dim(); ++d) {
                    // P_{d-1} D_d == D_d P_d as permuted matrices.
                    const Z2Matrix& m = c.boundary(d);
                    Z2Matrix lhs(m.rows(), m.cols());
                    Z2Matrix rhs(m.rows(), m.cols());
                    for (int r = 0; r < m.rows(); ++r)
                        for (int col = 0; col < m.cols(); ++col)
                            if (m.get(r, col)) {
                                lhs.set(inv[d - 1][r], col, true);
                                rhs.set(r, inv[d][col], true);
                            }
                    CAPTURE(t->name, trial, d);
                    REQUIRE(lhs == rhs);
                }
            }
        }
    }
    SECTION("swaps the two cycles of Hom(C5, K2 u K3)") {
        // The reflection reverses the winding direction, so the two
        // disjoint cycles of the complex trade places.
        const Graph g = disjoint_union(complete_graph(2), complete_graph(3));
        const HomComplex h = build_hom(c5, g);
        const ChainComplexZ2 c = boundary_complex(h);
        REQUIRE(betti(c, true).values == std::vector<int>{1, 2});

        // Union-find over the 1-skeleton to get components.
        std::vector<int> root(h.cells(0).size());
        for (std::size_t i = 0; i < root.size(); ++i) root[i] = static_cast<int>(i);
        auto find_root = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (int e = 0; e < c.size(1); ++e) {
            int ends[2];
            int found = 0;
            for (int v = 0; v < c.size(0); ++v)
                if (c.boundary(1).get(v, e)) ends[found++] = v;
            REQUIRE(found == 2);
            root[find_root(ends[0])] = find_root(ends[1]);
        }
        const CellInvolution inv = induced_involution(h);
        bool any_same = false, any_cross = false;
        for (std::size_t v = 0; v < root.size(); ++v)
            (find_root(static_cast<int>(v)) == find_root(inv[0][v]) ? any_same : any_cross) = true;
        CHECK(any_cross);
        CHECK_FALSE(any_same);
    }
}

TEST_CASE("edge-flipping involutions act freely whenever Hom is nonempty") {
    std::mt19937 rng(2025);
    int nonempty_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = testutil::random_graph(rng, 1 + trial % 8, 0.15 + 0.1 * (trial % 6));
        for (const TestGraph& t : test_graph_registry()) {
            BuildOptions opts;
            opts.max_dim = 2;
            opts.cell_cap = 50000;
            HomComplex h;
            try {
                h = build_hom(t, g, opts);
            } catch (const ResourceLimitError&) {
                continue;
            }
            if (h.empty()) continue;
            CAPTURE(trial, t.name);
            REQUIRE(is_free(h, induced_involution(h)));
            ++nonempty_seen;
        }
    }
    CHECK(nonempty_seen > 50);
}

TEST_CASE("fixed cochain subspace has one dimension per orbit") {
    for (const Graph& g : {complete_graph(3), complete_graph(4)}) {
        const HomComplex h = build_hom(k2, g);
        const CellInvolution inv = induced_involution(h);
        REQUIRE(is_free(h, inv));
        for (int d = 0; d <= h.top_dim(); ++d) {
            const int n = static_cast<int>(h.cells(d).size());
            Z2Matrix p_plus_i(n, n);
            for (int i = 0; i < n; ++i) {
                p_plus_i.flip(i, i);
                p_plus_i.flip(inv[d][i], i);
            }
            CHECK(gf2_rank(p_plus_i) == n / 2);
        }
    }
}

TEST_CASE("quotients of Hom complexes") {
    SECTION("Hom(K2,K2)/Z2 is a point") {
        const HomComplex h = build_hom(k2, complete_graph(2));
        const ChainComplexZ2 q = quotient_complex(h, induced_involution(h));
        CHECK(q.sizes == std::vector<int>{1});
        CHECK(betti(q, false).values == std::vector<int>{1});
    }
    SECTION("Hom(K2,K4)/Z2 is a projective plane") {
        const HomComplex h = build_hom(k2, complete_graph(4));
        const ChainComplexZ2 q = quotient_complex(h, induced_involution(h));
        CHECK(q.sizes == std::vector<int>{6, 12, 7});
        CHECK(validate(q));
        CHECK(euler_characteristic(q) == 1);
        CHECK(betti(q, false).values == std::vector<int>{1, 1, 1});
    }
    SECTION("Hom(K2,K3)/Z2 is a circle") {
        const HomComplex h = build_hom(k2, complete_graph(3));
        const ChainComplexZ2 q = quotient_complex(h, induced_involution(h));
        CHECK(betti(q, false).values == std::vector<int>{1, 1});
    }
    SECTION("a non-free involution is rejected") {
        // Identity on a complex with cells is never free.
        const HomComplex h = build_hom(k2, complete_graph(2));
        CellInvolution identity = {{0, 1}};
        CHECK_THROWS_AS(quotient_complex(h, identity), std::invalid_argument);
    }
}

TEST_CASE("cell export format") {
    const HomComplex h = build_hom(k2, complete_graph(2));
    std::ostringstream os;
    export_cells(h, os);
    CHECK(os.str() == "0; 1,2\n0; 2,1\n");

    std::ostringstream os2;
    export_cells(build_hom(k2, complete_graph(4)), os2);
    std::istringstream in(os2.str());
    std::string line;
    int count = 0;
    bool saw_hex = false;
    while (std::getline(in, line)) {
        ++count;
        if (line.find('c') != std::string::npos || line.find('a') != std::string::npos) saw_hex = true;
    }
    CHECK(count == 50);
    CHECK(saw_hex); // masks like {2,3} = 0xc appear
}
