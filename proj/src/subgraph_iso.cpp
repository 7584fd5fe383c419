#include "fsg/subgraph_iso.hpp"

#include <algorithm>
#include <stdexcept>

#include "fsg/errors.hpp"

namespace fsg::iso {

bool validate_embedding(const Graph& h, const Graph& g, const Embedding& e) {
    if (static_cast<int>(e.map.size()) != h.vertex_count()) return false;
    std::vector<char> used(g.vertex_count(), 0);
    for (int image : e.map) {
        if (image < 0 || image >= g.vertex_count() || used[image]) return false;
        used[image] = 1;
    }
    for (const auto& [u, v] : h.edges())
        if (!g.has_edge(e.map[u], e.map[v])) return false;
    return true;
}

namespace {

// Pattern vertices ordered so that every vertex after the first of its
// component touches an already placed one; within that constraint higher
// degree goes first. Components are placed largest first.
std::vector<int> pattern_order(const Graph& h) {
    int n = h.vertex_count();
    std::vector<std::vector<int>> comps = connected_components(h);
    std::stable_sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    std::vector<int> order;
    std::vector<char> placed(n, 0);
    for (const auto& comp : comps) {
        int first = comp[0];
        for (int v : comp)
            if (h.degree(v) > h.degree(first)) first = v;
        order.push_back(first);
        placed[first] = 1;
        for (size_t k = 1; k < comp.size(); ++k) {
            int pick = -1, pick_attached = -1;
            for (int v : comp) {
                if (placed[v]) continue;
                int attached = 0;
                for (int w : h.neighbors(v)) attached += placed[w];
                if (attached == 0) continue;
                if (pick < 0 || attached > pick_attached ||
                    (attached == pick_attached && h.degree(v) > h.degree(pick))) {
                    pick = v;
                    pick_attached = attached;
                }
            }
            order.push_back(pick);
            placed[pick] = 1;
        }
    }
    return order;
}

std::vector<int> sorted_neighbor_degrees(const Graph& g, int v) {
    std::vector<int> d;
    for (int w : g.neighbors(v)) d.push_back(g.degree(w));
    std::sort(d.rbegin(), d.rend());
    return d;
}

struct Search {
    const Graph& h;
    const Graph& g;
    std::vector<int> order;
    std::vector<int> map;        // h-vertex -> g-vertex or -1
    std::vector<char> used;      // g side
    std::vector<std::vector<char>> feasible;  // [h][g] static degree filter

    Search(const Graph& hh, const Graph& gg) : h(hh), g(gg) {
        order = pattern_order(h);
        map.assign(h.vertex_count(), -1);
        used.assign(g.vertex_count(), 0);

        std::vector<std::vector<int>> gnd(g.vertex_count());
        for (int t = 0; t < g.vertex_count(); ++t) gnd[t] = sorted_neighbor_degrees(g, t);
        feasible.assign(h.vertex_count(), std::vector<char>(g.vertex_count(), 0));
        for (int p = 0; p < h.vertex_count(); ++p) {
            auto hnd = sorted_neighbor_degrees(h, p);
            for (int t = 0; t < g.vertex_count(); ++t) {
                if (g.degree(t) < h.degree(p)) continue;
                bool ok = true;
                for (size_t i = 0; i < hnd.size(); ++i)
                    if (hnd[i] > gnd[t][i]) { ok = false; break; }
                feasible[p][t] = ok;
            }
        }
    }

    bool place(size_t idx) {
        if (idx == order.size()) return true;
        int p = order[idx];
        for (int t = 0; t < g.vertex_count(); ++t) {
            if (used[t] || !feasible[p][t]) continue;
            bool ok = true;
            for (int q : h.neighbors(p)) {
                if (map[q] >= 0 && !g.has_edge(map[q], t)) { ok = false; break; }
            }
            if (!ok) continue;
            map[p] = t;
            used[t] = 1;
            if (place(idx + 1)) return true;
            map[p] = -1;
            used[t] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& h, const Graph& g) {
    if (h.empty()) throw std::invalid_argument("contains_subgraph: empty pattern");
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count()) return std::nullopt;
    Search s(h, g);
    if (!s.place(0)) return std::nullopt;
    Embedding e{s.map};
    if (!validate_embedding(h, g, e))
        throw InvariantViolation("contains_subgraph: search returned an invalid embedding");
    return e;
}

FamilyFreeness is_family_subgraph_free(const Graph& g, const std::vector<Graph>& family) {
    for (size_t i = 0; i < family.size(); ++i) {
        if (auto e = contains_subgraph(family[i], g)) {
            return FamilyFreeness{false, static_cast<int>(i), std::move(e)};
        }
    }
    return FamilyFreeness{};
}

}  // namespace fsg::iso
