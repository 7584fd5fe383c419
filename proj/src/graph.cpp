#include "fsg/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "fsg/errors.hpp"

namespace fsg {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : Graph(n, std::move(edges), {}) {}

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    n_ = n;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        if (u < 0 || v >= n_) throw std::invalid_argument("graph: edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: parallel edge");
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    if (labels.empty()) {
        labels_.assign(n_, "");
    } else {
        if (static_cast<int>(labels.size()) != n_)
            throw std::invalid_argument("graph: label count != vertex count");
        labels_ = std::move(labels);
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(int v, std::string text) {
    check_vertex(v);
    labels_[v] = std::move(text);
}

bool Graph::has_labels() const {
    for (const auto& s : labels_)
        if (!s.empty()) return true;
    return false;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph: need n >= 1");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need >= 1 leaf");
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, std::move(e));
}

Graph subdivided_claw(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("subdivided_claw: leg lengths must be >= 1");
    std::vector<Edge> e;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int j = 0; j < len; ++j) {
            e.push_back({prev, next});
            prev = next;
            ++next;
        }
    }
    return Graph(next, std::move(e));
}

namespace {

std::string endpoint_name(const Graph& g, int v) {
    if (!g.label(v).empty()) return g.label(v);
    return std::to_string(v + 1);
}

}  // namespace

Graph k_subdivide(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("k_subdivide: negative k");
    if (k == 0) return g;
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m) * (k + 1));
    std::vector<std::string> labels(static_cast<size_t>(n) + static_cast<size_t>(m) * k, "");
    for (int v = 0; v < n; ++v) labels[v] = g.label(v);
    for (int i = 0; i < m; ++i) {
        auto [u, v] = g.edges()[i];
        int prev = u;
        for (int j = 1; j <= k; ++j) {
            int w = n + i * k + (j - 1);
            labels[w] = "sub(" + endpoint_name(g, u) + "," + endpoint_name(g, v) + "," + std::to_string(j) + ")";
            edges.push_back({prev, w});
            prev = w;
        }
        edges.push_back({prev, v});
    }
    return Graph(n + m * k, std::move(edges), std::move(labels));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: empty part list");
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (const auto& p : parts) {
        for (const auto& [u, v] : p.edges()) edges.push_back({u + n, v + n});
        for (int v = 0; v < p.vertex_count(); ++v) labels.push_back(p.label(v));
        n += p.vertex_count();
    }
    return Graph(n, std::move(edges), std::move(labels));
}

namespace {

// Longest simple cycle through DFS over paths whose minimum vertex is the
// start; stops early once a Hamiltonian cycle is found.
struct CycleSearch {
    const Graph& g;
    std::vector<char> on_path;
    int start = 0;
    int best = 0;

    explicit CycleSearch(const Graph& graph) : g(graph), on_path(graph.vertex_count(), 0) {}

    void dfs(int v, int length) {
        for (int w : g.neighbors(v)) {
            if (w == start && length >= 3) best = std::max(best, length);
            if (w <= start || on_path[w]) continue;
            if (best == g.vertex_count()) return;
            on_path[w] = 1;
            dfs(w, length + 1);
            on_path[w] = 0;
        }
    }

    int run() {
        for (start = 0; start < g.vertex_count() && best < g.vertex_count(); ++start) {
            on_path[start] = 1;
            dfs(start, 1);
            on_path[start] = 0;
        }
        return best;
    }
};

}  // namespace

StructStats struct_stats(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw BudgetExceeded("struct_stats: graph has " + std::to_string(g.vertex_count()) +
                             " vertices, cap is " + std::to_string(max_vertices));
    StructStats s;
    s.degrees.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        s.degrees[v] = g.degree(v);
        s.max_degree = std::max(s.max_degree, s.degrees[v]);
    }
    s.component_count = static_cast<int>(connected_components(g).size());
    s.longest_cycle = CycleSearch(g).run();
    return s;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.vertex_count(), 0);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() <= 1;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_subcubic(const Graph& g) {
    return max_degree(g) <= 3;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (to_new[v] >= 0) throw std::invalid_argument("induced_subgraph: duplicate vertex");
        to_new[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(g.label(v));
    for (const auto& [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) edges.push_back({to_new[u], to_new[v]});
    return Graph(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

}  // namespace fsg
