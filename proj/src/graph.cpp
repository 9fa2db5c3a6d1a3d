#include "homtest/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "homtest/errors.hpp"

namespace homtest {

VertexSet full_set(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

int set_size(VertexSet s) {
    return std::popcount(s);
}

Graph::Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0) throw ParseError("graph: negative vertex count");
    if (n > kMaxVertices)
        throw ParseError("graph: at most " + std::to_string(kMaxVertices) + " vertices supported, got " +
                         std::to_string(n));
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    return (adj_[u] >> v) & 1u;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw ParseError("graph: vertex id out of range: " + std::to_string(std::max(u, v)));
    if (u == v) throw ParseError("graph: loop edge rejected at vertex " + std::to_string(u));
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher != 0) {
            const int v = std::countr_zero(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::string Graph::label(int v) const {
    if (v < static_cast<int>(labels.size()) && !labels[v].empty()) return labels[v];
    return std::to_string(v);
}

namespace {

int parse_vertex_token(const std::string& token, const std::string& line) {
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token, &used);
    } catch (const std::exception&) {
        throw ParseError("bad vertex id '" + token + "' in line: " + line);
    }
    if (used != token.size()) throw ParseError("trailing junk in vertex id '" + token + "' in line: " + line);
    if (value < 0) throw ParseError("negative vertex id in line: " + line);
    if (value >= kMaxVertices)
        throw ParseError("vertex id " + std::to_string(value) + " exceeds the " +
                         std::to_string(kMaxVertices) + "-vertex limit");
    return static_cast<int>(value);
}

} // namespace

Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edge_pairs;
    std::vector<int> singletons;
    int max_id = -1;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank
        if (!(ls >> b)) {
            const int u = parse_vertex_token(a, line);
            singletons.push_back(u);
            max_id = std::max(max_id, u);
            continue;
        }
        if (ls >> extra) throw ParseError("expected 'u v' but got more fields in line: " + line);
        const int u = parse_vertex_token(a, line);
        const int v = parse_vertex_token(b, line);
        if (u == v) throw ParseError("loop edge rejected in line: " + line);
        edge_pairs.emplace_back(u, v);
        max_id = std::max({max_id, u, v});
    }

    Graph g(max_id + 1);
    for (auto [u, v] : edge_pairs) g.add_edge(u, v);
    return g;
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream os;
    std::vector<bool> covered(g.vertex_count(), false);
    for (auto [u, v] : g.edges()) {
        os << u << ' ' << v << '\n';
        covered[u] = covered[v] = true;
    }
    // Isolated vertices that no edge line reaches; without these the vertex
    // count would not survive a round trip.
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!covered[v]) os << v << '\n';
    return os.str();
}

Graph parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    Graph g;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            std::string fmt;
            long m = 0;
            long declared_n = 0;
            if (!(ls >> fmt >> declared_n >> m) || fmt != "edge")
                throw ParseError("dimacs: malformed problem line: " + line);
            if (declared_n < 0) throw ParseError("dimacs: negative vertex count");
            if (declared_n > kMaxVertices)
                throw ParseError("dimacs: more than " + std::to_string(kMaxVertices) + " vertices");
            n = static_cast<int>(declared_n);
            g = Graph(n);
            continue;
        }
        if (kind == "e") {
            if (n < 0) throw ParseError("dimacs: edge line before problem line: " + line);
            long u = 0, v = 0;
            if (!(ls >> u >> v)) throw ParseError("dimacs: malformed edge line: " + line);
            if (u < 1 || v < 1 || u > n || v > n)
                throw ParseError("dimacs: vertex id out of range in line: " + line);
            if (u == v) throw ParseError("dimacs: loop edge rejected in line: " + line);
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("dimacs: unknown line kind '" + kind + "'");
    }
    if (n < 0) throw ParseError("dimacs: missing 'p edge n m' header");
    return g;
}

std::string serialize_dimacs(const Graph& g) {
    std::ostringstream os;
    const auto edge_list = g.edges();
    os << "p edge " << g.vertex_count() << ' ' << edge_list.size() << '\n';
    for (auto [u, v] : edge_list) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

Graph complete_graph(int m) {
    if (m < 1) throw ParseError("complete_graph: need at least one vertex");
    Graph g(m);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int k) {
    if (k < 3) throw ParseError("cycle_graph: need at least three vertices");
    Graph g(k);
    for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count();
    Graph g(n1 + g2.vertex_count());
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(u + n1, v + n1);
    return g;
}

Graph glue_vertices(const Graph& g1, const Graph& g2, std::span<const std::pair<int, int>> pairs) {
    const int n1 = g1.vertex_count();
    const int n2 = g2.vertex_count();
    std::vector<int> glued_to(n2, -1); // g2 vertex -> g1 vertex, or -1
    std::vector<bool> v_used(n1, false);
    for (auto [v, w] : pairs) {
        if (v < 0 || v >= n1 || w < 0 || w >= n2) throw ParseError("glue_vertices: vertex out of range");
        if (v_used[v]) throw ParseError("glue_vertices: repeated g1 vertex " + std::to_string(v));
        if (glued_to[w] >= 0) throw ParseError("glue_vertices: repeated g2 vertex " + std::to_string(w));
        v_used[v] = true;
        glued_to[w] = v;
    }

    std::vector<int> image(n2, -1);
    int next = n1;
    for (int w = 0; w < n2; ++w) image[w] = glued_to[w] >= 0 ? glued_to[w] : next++;

    Graph g(next);
    for (auto [u, v] : g1.edges()) g.add_edge(u, v);
    for (auto [u, v] : g2.edges()) g.add_edge(image[u], image[v]);
    return g;
}

Graph attach_path(const Graph& g, int a, int b, int interior) {
    const int n = g.vertex_count();
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError("attach_path: endpoint out of range");
    if (a == b) throw ParseError("attach_path: endpoints must differ");
    if (interior < 1) throw ParseError("attach_path: need at least one interior vertex");

    Graph out(n + interior);
    out.labels = g.labels;
    out.labels.resize(n + interior);
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    int prev = a;
    for (int i = 0; i < interior; ++i) {
        const int fresh = n + i;
        out.add_edge(prev, fresh);
        out.labels[fresh] = std::to_string(i + 1);
        prev = fresh;
    }
    out.add_edge(prev, b);
    return out;
}

FoldResult fold_reduce(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<int> folded_onto(n, -1);
    VertexSet alive = full_set(n);

    for (;;) {
        int u_found = -1, v_found = -1;
        for (int u = 0; u < n && u_found < 0; ++u) {
            if (!((alive >> u) & 1u)) continue;
            for (int v = 0; v < n; ++v) {
                if (v == u || !((alive >> v) & 1u)) continue;
                if ((adj[u] & ~adj[v]) == 0) {
                    u_found = u;
                    v_found = v;
                    break;
                }
            }
        }
        if (u_found < 0) break;
        folded_onto[u_found] = v_found;
        alive &= ~(VertexSet{1} << u_found);
        for (int v = 0; v < n; ++v) adj[v] &= ~(VertexSet{1} << u_found);
        adj[u_found] = 0;
    }

    std::vector<int> new_id(n, -1);
    int count = 0;
    for (int v = 0; v < n; ++v)
        if ((alive >> v) & 1u) new_id[v] = count++;

    FoldResult result;
    result.graph = Graph(count);
    for (int u = 0; u < n; ++u) {
        if (!((alive >> u) & 1u)) continue;
        VertexSet nb = adj[u];
        while (nb != 0) {
            const int v = std::countr_zero(nb);
            nb &= nb - 1;
            if (v > u) result.graph.add_edge(new_id[u], new_id[v]);
        }
    }
    result.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) {
        int root = v;
        while (folded_onto[root] >= 0) root = folded_onto[root];
        result.vertex_map[v] = new_id[root];
    }
    return result;
}

namespace {

struct ColoringSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> color; // 1-based; 0 = uncolored, indexed by vertex
    int best;

    explicit ColoringSearch(const Graph& graph) : g(graph), color(graph.vertex_count(), 0), best(0) {}

    bool feasible(int vertex, int c) const {
        VertexSet nb = g.neighbors(vertex);
        while (nb != 0) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[w] == c) return false;
        }
        return true;
    }

    void run(std::size_t pos, int used) {
        if (used >= best) return; // cannot improve
        if (pos == order.size()) {
            best = used;
            return;
        }
        const int vertex = order[pos];
        const int cap = std::min(used + 1, best - 1);
        for (int c = 1; c <= cap; ++c) {
            if (!feasible(vertex, c)) continue;
            color[vertex] = c;
            run(pos + 1, std::max(used, c));
            color[vertex] = 0;
        }
    }
};

std::vector<int> descending_degree_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

} // namespace

int greedy_upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<int> color(n, 0);
    int used = 0;
    for (int v : descending_degree_order(g)) {
        VertexSet taken = 0;
        VertexSet nb = g.neighbors(v);
        while (nb != 0) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[w] > 0) taken |= VertexSet{1} << (color[w] - 1);
        }
        const int c = std::countr_zero(~taken) + 1;
        color[v] = c;
        used = std::max(used, c);
    }
    return used;
}

int chromatic_number_exact(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw ResourceLimitError("chromatic_number_exact: " + std::to_string(n) + " vertices exceeds limit " +
                                 std::to_string(limit));
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;

    ColoringSearch search(g);
    search.order = descending_degree_order(g);
    search.best = greedy_upper_bound(g) + 1; // strict improvement target
    search.run(0, 0);
    return search.best;
}

} // namespace homtest
