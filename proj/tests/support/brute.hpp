// Independent brute-force re-implementations used to cross-check the library.
// Everything here is written from the definitions, not from the library code:
// only the Graph container itself is shared.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "fsg/graph.hpp"

namespace brute {

using fsg::Edge;
using fsg::Graph;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

inline std::vector<int> degrees(const Graph& g) {
    std::vector<int> d(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        ++d[u];
        ++d[v];
    }
    return d;
}

inline std::vector<std::vector<int>> components_of(const Graph& g) {
    auto adj = adjacency(g);
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = static_cast<int>(out.size());
        out.push_back({s});
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    out.back().push_back(w);
                    q.push(w);
                }
        }
    }
    return out;
}

// Exact isomorphism by backtracking. Vertices of `a` are placed in a BFS
// order so each non-root candidate set shrinks to the neighbours of an
// already-mapped anchor; handles long subdivisions without blowing up.
inline bool isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto da = degrees(a), db = degrees(b);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    auto adja = adjacency(a), adjb = adjacency(b);
    std::vector<int> order, anchor(n, -1);
    {
        std::vector<bool> seen(n, false);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            order.push_back(s);
            std::queue<int> q;
            q.push(s);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adja[v])
                    if (!seen[w]) {
                        seen[w] = true;
                        anchor[w] = v;
                        order.push_back(w);
                        q.push(w);
                    }
            }
        }
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int idx) {
        if (idx == n) return true;
        int v = order[idx];
        std::vector<int> candidates;
        if (anchor[v] == -1) {
            for (int w = 0; w < n; ++w)
                if (!used[w] && db[w] == da[v]) candidates.push_back(w);
        } else {
            for (int w : adjb[map[anchor[v]]])
                if (!used[w] && db[w] == da[v]) candidates.push_back(w);
        }
        for (int w : candidates) {
            bool ok = true;
            for (int u : adja[v])
                if (map[u] != -1 && !b.has_edge(map[u], w)) ok = false;
            for (int j = 0; j < idx && ok; ++j) {
                int u = order[j];
                if (!a.has_edge(u, v) && b.has_edge(map[u], w)) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (place(idx + 1)) return true;
            map[v] = -1;
            used[w] = false;
        }
        return false;
    };
    return place(0);
}

// Hand-built path and subdivided-claw generators (not the library's).
inline Graph brute_path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

inline Graph brute_claw(int a, int b, int c) {
    std::vector<Edge> edges;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.push_back({std::min(prev, next), std::max(prev, next)});
            prev = next++;
        }
    }
    return Graph(next, edges);
}

// Definition checker for the tractable pattern class: non-empty, and every
// component is isomorphic to some path or some subdivided claw.
inline bool in_s_by_catalog(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    for (const auto& comp_vertices : components_of(g)) {
        Graph comp = fsg::induced_subgraph(g, comp_vertices);
        int c = comp.vertex_count();
        bool matched = isomorphic(comp, brute_path(c));
        for (int a = 1; !matched && a <= c; ++a)
            for (int b = a; !matched && a + b <= c; ++b) {
                int rest = c - 1 - a - b;
                if (rest >= b) matched = isomorphic(comp, brute_claw(a, b, rest));
            }
        if (!matched) return false;
    }
    return true;
}

// Subgraph containment by enumerating all injections (complete, tiny inputs).
inline bool contains_by_injections(const Graph& h, const Graph& g) {
    int hn = h.vertex_count(), gn = g.vertex_count();
    if (hn > gn) return false;
    std::vector<int> pick(hn, 0);
    std::vector<bool> used(gn, false);
    std::function<bool(int)> extend = [&](int i) {
        if (i == hn) return true;
        for (int w = 0; w < gn; ++w) {
            if (used[w]) continue;
            bool ok = true;
            for (int u = 0; u < i && ok; ++u)
                if (h.has_edge(u, i) && !g.has_edge(pick[u], w)) ok = false;
            if (!ok) continue;
            pick[i] = w;
            used[w] = true;
            if (extend(i + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return extend(0);
}

inline bool mask_independent(const Graph& g, unsigned mask) {
    for (const auto& [u, v] : g.edges())
        if ((mask >> u & 1u) && (mask >> v & 1u)) return false;
    return true;
}

inline bool mask_dominating(const Graph& g, unsigned mask) {
    auto adj = adjacency(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (mask >> v & 1u) continue;
        bool covered = false;
        for (int w : adj[v])
            if (mask >> w & 1u) covered = true;
        if (!covered) return false;
    }
    return true;
}

inline bool mask_bipartite_without(const Graph& g, unsigned removed) {
    int n = g.vertex_count();
    auto adj = adjacency(g);
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if ((removed >> s & 1u) || colour[s] != -1) continue;
        colour[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v]) {
                if (removed >> w & 1u) continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline int popcount(unsigned mask) { return __builtin_popcount(mask); }

inline int brute_mis(const Graph& g) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.vertex_count()); ++mask)
        if (mask_independent(g, mask)) best = std::max(best, popcount(mask));
    return best;
}

inline int brute_min_vc(const Graph& g) {
    int n = g.vertex_count();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool covers = true;
        for (const auto& [u, v] : g.edges())
            if (!(mask >> u & 1u) && !(mask >> v & 1u)) covers = false;
        if (covers) best = std::min(best, popcount(mask));
    }
    return best;
}

inline int brute_min_ds(const Graph& g, bool independent) {
    int n = g.vertex_count();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (independent && !mask_independent(g, mask)) continue;
        if (mask_dominating(g, mask)) best = std::min(best, popcount(mask));
    }
    return best;
}

inline int brute_min_eds(const Graph& g) {
    int m = g.edge_count();
    int best = m;
    const auto& edges = g.edges();
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        bool dominates = true;
        for (int e = 0; e < m && dominates; ++e) {
            if (mask >> e & 1u) continue;
            bool touched = false;
            for (int f = 0; f < m && !touched; ++f)
                if ((mask >> f & 1u) &&
                    (edges[e].first == edges[f].first || edges[e].first == edges[f].second ||
                     edges[e].second == edges[f].first || edges[e].second == edges[f].second))
                    touched = true;
            dominates = touched;
        }
        if (dominates) best = std::min(best, popcount(mask));
    }
    return best;
}

inline int brute_min_oct(const Graph& g, bool independent) {
    int n = g.vertex_count();
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (independent && !mask_independent(g, mask)) continue;
        if (mask_bipartite_without(g, mask)) best = std::min(best, popcount(mask));
    }
    return best;
}

inline int brute_max_cut(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << std::max(0, n - 1)); ++mask) {
        int value = 0;
        for (const auto& [u, v] : g.edges()) {
            unsigned full = mask << 1;  // vertex 0 stays on side 0
            if (((full >> u) & 1u) != ((full >> v) & 1u)) ++value;
        }
        best = std::max(best, value);
    }
    return best;
}

inline bool mask_connected_containing(const Graph& g, unsigned mask,
                                      const std::vector<int>& must) {
    for (int t : must)
        if (!(mask >> t & 1u)) return false;
    int start = -1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mask >> v & 1u) start = start == -1 ? v : start;
    if (start == -1) return must.empty();
    auto adj = adjacency(g);
    unsigned seen = 1u << start;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if ((mask >> w & 1u) && !(seen >> w & 1u)) {
                seen |= 1u << w;
                q.push(w);
            }
    }
    return seen == mask;
}

// Minimum edges of a connected subgraph spanning T: a tree on the best vertex
// superset, so |S| - 1 over connected S containing T.
inline int brute_steiner_edges(const Graph& g, const std::vector<int>& terminals) {
    int n = g.vertex_count();
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (mask_connected_containing(g, mask, terminals)) {
            int size = popcount(mask);
            if (best == -1 || size - 1 < best) best = size - 1;
        }
    return best;  // -1 when infeasible
}

inline bool terminals_separated(const std::vector<Edge>& kept_edges,
                                const std::vector<int>& terminals, int n) {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : kept_edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = i + 1; j < terminals.size(); ++j) {
            std::vector<bool> seen(n, false);
            std::queue<int> q;
            q.push(terminals[i]);
            seen[terminals[i]] = true;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj[v])
                    if (!seen[w]) {
                        seen[w] = true;
                        q.push(w);
                    }
            }
            if (seen[terminals[j]]) return false;
        }
    return true;
}

inline int brute_multiway_edges(const Graph& g, const std::vector<int>& terminals) {
    int m = g.edge_count();
    int best = m;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<Edge> kept;
        for (int e = 0; e < m; ++e)
            if (!(mask >> e & 1u)) kept.push_back(g.edges()[e]);
        if (terminals_separated(kept, terminals, g.vertex_count()))
            best = std::min(best, popcount(mask));
    }
    return best;
}

inline int brute_multiway_nodes(const Graph& g, const std::vector<int>& terminals) {
    int n = g.vertex_count();
    unsigned tmask = 0;
    for (int t : terminals) tmask |= 1u << t;
    int best = -1;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (mask & tmask) continue;
        std::vector<Edge> kept;
        for (const auto& [u, v] : g.edges())
            if (!(mask >> u & 1u) && !(mask >> v & 1u)) kept.push_back({u, v});
        if (terminals_separated(kept, terminals, n)) {
            int size = popcount(mask);
            if (best == -1 || size < best) best = size;
        }
    }
    return best;  // -1 when no vertex cut works (adjacent terminals)
}

// Pathwidth as min over all layouts of the max boundary, straight from the
// vertex-separation definition. n <= 8.
inline int brute_pathwidth(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n;
    do {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        int worst = 0;
        for (int i = 0; i < n; ++i) {
            int boundary = 0;
            for (int v = 0; v < n; ++v) {
                if (pos[v] > i) continue;
                bool later = false;
                for (const auto& [a, b] : g.edges()) {
                    if (a == v && pos[b] > i) later = true;
                    if (b == v && pos[a] > i) later = true;
                }
                boundary += later ? 1 : 0;
            }
            worst = std::max(worst, boundary);
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

// Treewidth as min over elimination orders of the max degree at elimination
// time in the progressively filled graph. n <= 8.
inline int brute_treewidth(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return -1;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    int best = n - 1;
    do {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
        std::vector<bool> gone(n, false);
        int worst = 0;
        for (int v : order) {
            std::vector<int> nbrs;
            for (int w = 0; w < n; ++w)
                if (!gone[w] && adj[v][w]) nbrs.push_back(w);
            worst = std::max(worst, static_cast<int>(nbrs.size()));
            for (size_t i = 0; i < nbrs.size(); ++i)
                for (size_t j = i + 1; j < nbrs.size(); ++j)
                    adj[nbrs[i]][nbrs[j]] = adj[nbrs[j]][nbrs[i]] = true;
            gone[v] = true;
        }
        best = std::min(best, worst);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline std::vector<int> bfs_dist(const Graph& g, int s) {
    auto adj = adjacency(g);
    std::vector<int> dist(g.vertex_count(), -1);
    dist[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

inline std::pair<int, int> brute_diameter_radius(const Graph& g) {
    int diameter = 0, radius = g.vertex_count();
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_dist(g, v);
        int ecc = *std::max_element(dist.begin(), dist.end());
        diameter = std::max(diameter, ecc);
        radius = std::min(radius, ecc);
    }
    return {diameter, radius};
}

}  // namespace brute
