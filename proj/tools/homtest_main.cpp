#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homtest/bound.hpp"
#include "homtest/errors.hpp"
#include "homtest/fixtures.hpp"
#include "homtest/graph.hpp"
#include "homtest/hom_complex.hpp"
#include "homtest/selftest.hpp"
#include "homtest/test_graph.hpp"
#include "homtest/z2.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

struct CliConfig {
    std::string input = "-";
    std::string format = "edgelist";
    std::string tests = "k2,k3,c5";
    int max_check_dim = 2; // bound: homology dimensions to test
    int build_max_dim = -1; // betti/hom-stats: cell truncation, -1 = full
    bool json = false;
    bool no_fold = false;
    bool with_exact = false;
    bool dump_cells = false;
    bool inject_fault = false;
    int chi_limit = 20;
    std::size_t cell_cap = homtest::BuildOptions{}.cell_cap;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw homtest::ParseError("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

homtest::Graph load_graph(const CliConfig& cfg) {
    const std::string text = read_input(cfg.input);
    if (cfg.format == "edgelist") return homtest::parse_edge_list(text);
    if (cfg.format == "dimacs") return homtest::parse_dimacs(text);
    throw homtest::ParseError("unknown format '" + cfg.format + "' (use edgelist or dimacs)");
}

std::vector<homtest::TestGraph> resolve_tests(const std::string& names) {
    std::vector<homtest::TestGraph> tests;
    std::stringstream ss(names);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty()) continue;
        const homtest::TestGraph* t = homtest::find_test_graph(name);
        if (!t)
            throw homtest::ParseError("unknown test graph '" + name +
                                      "'; registry: " + homtest::registry_names());
        tests.push_back(*t);
    }
    if (tests.empty()) throw homtest::ParseError("no test graphs selected");
    return tests;
}

int cmd_bound(const CliConfig& cfg) {
    if (cfg.max_check_dim < 0)
        throw homtest::ParseError("--max-dim must be >= 0 for bound");
    const homtest::Graph g = load_graph(cfg);
    homtest::BoundOptions opts;
    opts.max_check_dim = cfg.max_check_dim;
    opts.fold = !cfg.no_fold;
    opts.with_exact = cfg.with_exact;
    opts.cell_cap = cfg.cell_cap;
    opts.exact_limit = cfg.chi_limit;
    const homtest::BoundReport report = homtest::run_suite(g, resolve_tests(cfg.tests), opts);
    if (cfg.json)
        std::cout << homtest::to_json(report).dump(2) << '\n';
    else
        std::cout << homtest::format_report(report);
    // Per-test failures leave the report partial; the exit code says so.
    for (const homtest::BoundClaim& claim : report.claims)
        if (claim.error) return kExitResource;
    return kExitOk;
}

int cmd_betti(const CliConfig& cfg) {
    const homtest::Graph g = load_graph(cfg);
    homtest::BuildOptions opts;
    opts.max_dim = cfg.build_max_dim;
    opts.cell_cap = cfg.cell_cap;
    nlohmann::ordered_json out;
    out["tests"] = nlohmann::ordered_json::array();
    for (const homtest::TestGraph& t : resolve_tests(cfg.tests)) {
        const homtest::HomComplex h = homtest::build_hom(t, g, opts);
        nlohmann::ordered_json one;
        one["name"] = t.name;
        one["f_vector"] = h.f_vector();
        if (h.empty()) {
            one["empty"] = true;
        } else {
            const homtest::ChainComplexZ2 chain = homtest::boundary_complex(h);
            one["empty"] = false;
            one["betti_reduced"] = homtest::betti(chain, true).values;
            one["betti_unreduced"] = homtest::betti(chain, false).values;
            one["complete"] = !chain.truncated();
        }
        out["tests"].push_back(one);
        if (!cfg.json) {
            std::cout << "Hom(" << t.name << ", G):";
            if (h.empty()) {
                std::cout << " empty\n";
                continue;
            }
            std::cout << " f-vector (";
            const auto f = h.f_vector();
            for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? "," : "") << f[i];
            std::cout << "), reduced betti (";
            const auto b = out["tests"].back()["betti_reduced"];
            for (std::size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i].get<int>();
            std::cout << ")" << (out["tests"].back()["complete"].get<bool>() ? "" : " [truncated]") << '\n';
        }
    }
    if (cfg.json) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_hom_stats(const CliConfig& cfg) {
    const homtest::Graph g = load_graph(cfg);
    homtest::BuildOptions opts;
    opts.max_dim = cfg.build_max_dim;
    opts.cell_cap = cfg.cell_cap;
    for (const homtest::TestGraph& t : resolve_tests(cfg.tests)) {
        const homtest::HomComplex h = homtest::build_hom(t, g, opts);
        std::cout << "Hom(" << t.name << ", G): " << h.cell_count() << " cells";
        if (h.empty()) {
            std::cout << " (empty)\n";
            continue;
        }
        std::cout << ", top dimension " << h.top_dim() << (h.truncated() ? " (truncated)" : "") << '\n';
        const homtest::CellInvolution inv = homtest::induced_involution(h);
        const bool free = homtest::is_free(h, inv);
        std::cout << "  involution: " << (free ? "free" : "has fixed cells") << '\n';
        if (free && !h.truncated()) {
            const homtest::ChainComplexZ2 q = homtest::quotient_complex(h, inv);
            std::cout << "  quotient euler characteristic: " << homtest::euler_characteristic(q) << '\n';
        }
        if (cfg.dump_cells) homtest::export_cells(h, std::cout);
    }
    return kExitOk;
}

int cmd_chi_exact(const CliConfig& cfg) {
    const homtest::Graph g = load_graph(cfg);
    std::cout << homtest::chromatic_number_exact(g, cfg.chi_limit) << '\n';
    return kExitOk;
}

int cmd_fold(const CliConfig& cfg) {
    const homtest::Graph g = load_graph(cfg);
    const homtest::FoldResult folded = homtest::fold_reduce(g);
    std::cout << "# folded: " << g.vertex_count() << " -> " << folded.graph.vertex_count()
              << " vertices\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        std::cout << "# map " << v << " -> " << folded.vertex_map[v] << '\n';
    std::cout << homtest::serialize_edge_list(folded.graph);
    return kExitOk;
}

int cmd_selftest(const CliConfig& cfg) {
    const std::vector<homtest::SelftestResult> results = homtest::run_selftest(cfg.inject_fault);
    bool all_passed = true;
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const homtest::SelftestResult& r : results) {
        all_passed = all_passed && r.passed;
        if (cfg.json) {
            out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            std::cout << (r.passed ? "PASS" : "FAIL") << ' ' << r.name;
            if (!r.passed) std::cout << " -- " << r.detail;
            std::cout << '\n';
        }
    }
    if (cfg.json) std::cout << out.dump(2) << '\n';
    if (!cfg.json)
        std::cout << (all_passed ? "all checks passed" : "SELFTEST FAILED") << " (" << results.size()
                  << " checks)\n";
    return all_passed ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological lower bounds for graph chromatic numbers via Hom complexes"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto add_input_opts = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "input file, or - for stdin")->capture_default_str();
        sub->add_option("--format", cfg.format, "edgelist or dimacs")->capture_default_str();
    };
    auto add_test_opts = [&](CLI::App* sub, bool for_bound) {
        sub->add_option("--tests", cfg.tests, "comma-separated registry names")->capture_default_str();
        if (for_bound)
            sub->add_option("--max-dim", cfg.max_check_dim, "test homology through this dimension")
                ->capture_default_str();
        else
            sub->add_option("--max-dim", cfg.build_max_dim,
                            "truncate cells above this dimension (-1 = full)")
                ->capture_default_str();
        sub->add_option("--cell-cap", cfg.cell_cap, "abort builds beyond this many cells")
            ->capture_default_str();
    };

    CLI::App* bound = app.add_subcommand("bound", "chromatic lower bound via the homology test");
    add_input_opts(bound);
    add_test_opts(bound, true);
    bound->add_flag("--json", cfg.json, "machine-readable report");
    bound->add_flag("--no-fold", cfg.no_fold, "skip fold reduction of the input");
    bound->add_flag("--exact", cfg.with_exact, "also run the exact coloring oracle");
    bound->add_option("--chi-limit", cfg.chi_limit, "vertex limit for the exact oracle")
        ->capture_default_str();

    CLI::App* betti = app.add_subcommand("betti", "f-vectors and Betti numbers of Hom(T,G)");
    add_input_opts(betti);
    add_test_opts(betti, false);
    betti->add_flag("--json", cfg.json, "machine-readable output");

    CLI::App* stats = app.add_subcommand("hom-stats", "cell counts and involution facts for Hom(T,G)");
    add_input_opts(stats);
    add_test_opts(stats, false);
    stats->add_flag("--dump-cells", cfg.dump_cells, "print every cell as 'dim; masks...' in hex");

    CLI::App* chi = app.add_subcommand("chi-exact", "exact chromatic number (small graphs)");
    add_input_opts(chi);
    chi->add_option("--limit", cfg.chi_limit, "vertex limit")->capture_default_str();

    CLI::App* fold = app.add_subcommand("fold", "fold-reduce a graph");
    add_input_opts(fold);

    CLI::App* selftest = app.add_subcommand("selftest", "run the bundled fixture battery");
    selftest->add_flag("--json", cfg.json, "machine-readable results");
    selftest->add_flag("--inject-fault", cfg.inject_fault, "corrupt one expectation (harness check)")
        ->group(""); // hidden

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(cfg);
        if (betti->parsed()) return cmd_betti(cfg);
        if (stats->parsed()) return cmd_hom_stats(cfg);
        if (chi->parsed()) return cmd_chi_exact(cfg);
        if (fold->parsed()) return cmd_fold(cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
    } catch (const homtest::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const homtest::ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    } catch (const homtest::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}
