#include "homtest/bound.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "homtest/errors.hpp"

namespace homtest {

int trivial_chromatic_bound(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    return g.edge_count() == 0 ? 1 : 2;
}

BoundClaim homology_test(const TestGraph& t, const Graph& g, int max_check_dim, std::size_t cell_cap) {
    if (max_check_dim < 0) throw std::invalid_argument("homology_test: max_check_dim must be >= 0");
    const auto started = std::chrono::steady_clock::now();
    BoundClaim claim;
    claim.test_name = t.name;
    claim.chi_t = t.chi;

    BuildOptions opts;
    opts.max_dim = max_check_dim + 1; // homology through dim m needs cells through m+1
    opts.cell_cap = cell_cap;
    const HomComplex h = build_hom(t, g, opts);
    claim.f_vector = h.f_vector();

    if (h.empty()) {
        claim.empty_complex = true;
        claim.evidence = betti(boundary_complex(h), /*reduced=*/true);
        claim.lower_bound = trivial_chromatic_bound(g);
    } else {
        const ChainComplexZ2 chain = boundary_complex(h);
        claim.evidence = betti(chain, /*reduced=*/true);
        int d = max_check_dim;
        bool found_nonzero = false;
        for (int i = 0; i <= claim.evidence.complete_through; ++i) {
            if (claim.evidence.values[i] != 0) {
                d = i - 1;
                found_nonzero = true;
                break;
            }
        }
        claim.truncation_limited = !found_nonzero && !claim.evidence.complete;
        claim.d = std::min(d, max_check_dim);
        claim.lower_bound = *claim.d + 1 + t.chi;
    }
    claim.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
            .count();
    return claim;
}

BoundReport run_suite(const Graph& g, const std::vector<TestGraph>& tests, const BoundOptions& opts) {
    BoundReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.trivial_bound = trivial_chromatic_bound(g);

    Graph target = g;
    if (opts.fold) target = fold_reduce(g).graph;
    report.folded_n = target.vertex_count();

    if (opts.with_exact) {
        try {
            // Folds preserve the chromatic number, so the smaller graph is
            // the one worth handing to the oracle.
            report.exact_chi = chromatic_number_exact(target, opts.exact_limit);
        } catch (const ResourceLimitError&) {
            report.exact_chi = std::nullopt;
        }
    }

    report.best_bound = report.trivial_bound;
    for (const TestGraph& t : tests) {
        BoundClaim claim;
        try {
            claim = homology_test(t, target, opts.max_check_dim, opts.cell_cap);
            report.best_bound = std::max(report.best_bound, claim.lower_bound);
        } catch (const ResourceLimitError& e) {
            claim.test_name = t.name;
            claim.chi_t = t.chi;
            claim.error = e.what();
        }
        report.claims.push_back(std::move(claim));
    }
    return report;
}

bool fold_equivalence_check(const TestGraph& t, const Graph& g, std::size_t cell_cap) {
    BuildOptions opts;
    opts.cell_cap = cell_cap;
    const HomComplex before = build_hom(t, g, opts);
    const HomComplex after = build_hom(t, fold_reduce(g).graph, opts);
    if (before.empty() || after.empty()) return before.empty() == after.empty();
    return betti_agree(betti(boundary_complex(before)), betti(boundary_complex(after)));
}

nlohmann::ordered_json to_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    j["graph"] = {{"n", report.n}, {"m", report.m}, {"folded_n", report.folded_n}};
    j["trivial_bound"] = report.trivial_bound;
    if (report.exact_chi) j["exact_chi"] = *report.exact_chi;
    j["tests"] = nlohmann::ordered_json::array();
    for (const BoundClaim& c : report.claims) {
        nlohmann::ordered_json t;
        t["name"] = c.test_name;
        if (c.error) {
            t["error"] = *c.error;
            t["millis"] = c.millis;
            j["tests"].push_back(std::move(t));
            continue;
        }
        t["chi_t"] = c.chi_t;
        t["empty"] = c.empty_complex;
        if (c.d)
            t["d"] = *c.d;
        else
            t["d"] = nullptr;
        t["bound"] = c.lower_bound;
        t["betti"] = c.evidence.values;
        t["f_vector"] = c.f_vector;
        t["truncation_limited"] = c.truncation_limited;
        t["millis"] = c.millis;
        j["tests"].push_back(std::move(t));
    }
    j["best_bound"] = report.best_bound;
    return j;
}

std::string format_report(const BoundReport& report) {
    std::ostringstream os;
    os << "graph: " << report.n << " vertices, " << report.m << " edges";
    if (report.folded_n != report.n) os << " (folds to " << report.folded_n << " vertices)";
    os << "\ntrivial bound: chi >= " << report.trivial_bound << '\n';
    for (const BoundClaim& c : report.claims) {
        os << "test " << c.test_name << ": ";
        if (c.error) {
            os << "failed: " << *c.error << '\n';
            continue;
        }
        if (c.empty_complex) {
            os << "Hom complex empty, no bound beyond trivial (chi >= " << c.lower_bound << ")\n";
            continue;
        }
        os << "chi >= " << c.lower_bound << "  [d=" << *c.d << ", chi(T)=" << c.chi_t << ", reduced betti (";
        for (std::size_t i = 0; i < c.evidence.values.size(); ++i) {
            if (i > 0) os << ',';
            os << c.evidence.values[i];
        }
        os << ")";
        if (c.truncation_limited) os << ", truncation-limited";
        os << "]\n";
    }
    if (report.exact_chi) os << "exact chi: " << *report.exact_chi << '\n';
    os << "best bound: chi >= " << report.best_bound << '\n';
    return os.str();
}

} // namespace homtest
