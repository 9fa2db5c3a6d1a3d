#include "homtest/selftest.hpp"

#include <functional>
#include <sstream>

#include "homtest/bound.hpp"
#include "homtest/fixtures.hpp"
#include "homtest/graph.hpp"
#include "homtest/hom_complex.hpp"
#include "homtest/test_graph.hpp"
#include "homtest/z2.hpp"

namespace homtest {

namespace {

std::string show(const std::vector<int>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

struct Battery {
    std::vector<SelftestResult> results;

    void check(const std::string& name, const std::function<std::string()>& body) {
        SelftestResult r;
        r.name = name;
        try {
            r.detail = body(); // empty string = pass
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

std::string expect_betti(const TestGraph& t, const Graph& g, const std::vector<int>& expected) {
    const HomComplex h = build_hom(t, g);
    const BettiVector b = betti(boundary_complex(h), /*reduced=*/true);
    if (b.trimmed() != [&] {
            std::vector<int> e = expected;
            while (!e.empty() && e.back() == 0) e.pop_back();
            return e;
        }())
        return "reduced betti " + show(b.values) + ", expected " + show(expected);
    return {};
}

std::string expect_bound(const TestGraph& t, const Graph& g, int expected) {
    const BoundClaim claim = homology_test(t, g, /*max_check_dim=*/2);
    if (claim.lower_bound != expected)
        return "bound " + std::to_string(claim.lower_bound) + ", expected " + std::to_string(expected);
    return {};
}

} // namespace

std::vector<SelftestResult> run_selftest(bool inject_fault) {
    Battery battery;
    const TestGraph& k2 = *find_test_graph("k2");
    const TestGraph& k3 = *find_test_graph("k3");
    const TestGraph& c5 = *find_test_graph("c5");

    const Graph union_graph = disjoint_union(complete_graph(2), complete_graph(3));
    battery.check("edge-plus-triangle: k2 betti",
                  [&] { return expect_betti(k2, union_graph, {2, 1}); });
    battery.check("edge-plus-triangle: k2 bound", [&] { return expect_bound(k2, union_graph, 2); });
    battery.check("edge-plus-triangle: k3 betti", [&] { return expect_betti(k3, union_graph, {5}); });
    battery.check("edge-plus-triangle: k3 bound", [&] { return expect_bound(k3, union_graph, 3); });
    battery.check("edge-plus-triangle: c5 betti",
                  [&] { return expect_betti(c5, union_graph, {1, 2}); });
    battery.check("edge-plus-triangle: exact chi", [&] {
        const int chi = chromatic_number_exact(union_graph);
        return chi == 3 ? std::string{} : "chi " + std::to_string(chi);
    });

    for (int path_len : {4, 5}) {
        const Graph g = attach_path(complete_graph(4), 0, 1, path_len);
        const std::string tag = "k4-with-path-" + std::to_string(path_len);
        battery.check(tag + ": k2 betti", [&] { return expect_betti(k2, g, {0, 2, 1}); });
        battery.check(tag + ": k2 bound", [&] { return expect_bound(k2, g, 3); });
        battery.check(tag + ": k3 cells match k4", [&] {
            const HomComplex left = build_hom(k3, g);
            const HomComplex right = build_hom(k3, complete_graph(4));
            if (left.top_dim() != right.top_dim()) return std::string("top dimension differs");
            for (int d = 0; d <= left.top_dim(); ++d)
                if (left.cells(d) != right.cells(d)) return "cell lists differ in dim " + std::to_string(d);
            return std::string{};
        });
        battery.check(tag + ": k3 bound", [&] { return expect_bound(k3, g, 4); });
        battery.check(tag + ": exact chi", [&] {
            const int chi = chromatic_number_exact(g);
            return chi == 4 ? std::string{} : "chi " + std::to_string(chi);
        });
    }

    battery.check("sphere: hom(k2,k4) f-vector", [&] {
        const auto f = build_hom(k2, complete_graph(4)).f_vector();
        const std::vector<long long> expected = {12, 24, 14};
        if (f != expected) return std::string("unexpected f-vector");
        return std::string{};
    });
    battery.check("sphere: hom(k2,k4) betti",
                  [&] { return expect_betti(k2, complete_graph(4), {0, 0, 1}); });
    battery.check("projective space: hom(c5,k4)", [&] {
        const HomComplex h = build_hom(c5, complete_graph(4));
        if (h.cells(0).size() != 240)
            return "vertex count " + std::to_string(h.cells(0).size()) + ", expected 240";
        const BettiVector b = betti(boundary_complex(h), /*reduced=*/false);
        const std::vector<int> expected = {1, 1, 1, 1};
        if (b.values != expected) return "unreduced betti " + show(b.values) + ", expected (1,1,1,1)";
        return std::string{};
    });

    const std::vector<std::pair<int, int>> one_pair = {{0, 0}};
    const Graph glued = glue_vertices(complete_graph(4), cycle_graph(5), one_pair);
    battery.check("glued-k4-c5: k3 cells match k4", [&] {
        const HomComplex left = build_hom(k3, glued);
        const HomComplex right = build_hom(k3, complete_graph(4));
        if (left.top_dim() != right.top_dim()) return std::string("top dimension differs");
        for (int d = 0; d <= left.top_dim(); ++d)
            if (left.cells(d) != right.cells(d)) return "cell lists differ in dim " + std::to_string(d);
        return std::string{};
    });
    battery.check("glued-k4-c5: k2 betti", [&] { return expect_betti(k2, glued, {0, 2, 1}); });
    battery.check("glued-k4-c5: k2 bound",
                  [&] { return expect_bound(k2, glued, inject_fault ? 999 : 3); });
    battery.check("glued-k4-c5: k3 bound equals exact chi", [&] {
        const BoundClaim claim = homology_test(k3, glued, 2);
        const int chi = chromatic_number_exact(glued);
        if (claim.lower_bound != 4 || chi != 4)
            return "bound " + std::to_string(claim.lower_bound) + ", chi " + std::to_string(chi);
        return std::string{};
    });

    for (const FixtureComplex& fixture : fixture_complexes()) {
        battery.check("fixture " + fixture.name, [&] {
            if (!validate(fixture.complex)) return std::string("chain complex invalid");
            const BettiVector b = betti(fixture.complex, /*reduced=*/true);
            const std::vector<int> expected =
                fixture.name == "two-points-and-circle" ? std::vector<int>{2, 1} : std::vector<int>{0, 2, 1};
            if (b.values != expected)
                return "reduced betti " + show(b.values) + ", expected " + show(expected);
            if (!involution_is_free(fixture.involution)) return std::string("involution not free");
            const ChainComplexZ2 q = quotient_chain_complex(fixture.complex, fixture.involution);
            if (!validate(q)) return std::string("quotient complex invalid");
            if (euler_characteristic(fixture.complex) != 2 * euler_characteristic(q))
                return std::string("euler characteristic does not halve");
            return std::string{};
        });
    }

    return battery.results;
}

} // namespace homtest
