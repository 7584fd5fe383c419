#include "fsg/pattern_class.hpp"

#include <algorithm>
#include <stdexcept>

#include "fsg/errors.hpp"
#include "fsg/subgraph_iso.hpp"

namespace fsg::pattern {

ComponentKind classify_component(const Graph& component) {
    int n = component.vertex_count();
    if (n == 0) throw std::invalid_argument("classify_component: empty graph");
    if (!is_connected(component)) throw std::invalid_argument("classify_component: graph is disconnected");

    ComponentKind out;
    int m = component.edge_count();
    if (m >= n) {  // connected, so m >= n means a cycle exists
        out.kind = ComponentKind::Kind::Other;
        out.reason = "has a cycle";
        return out;
    }
    int deg3 = 0, deg3_vertex = -1;
    for (int v = 0; v < n; ++v) {
        int d = component.degree(v);
        if (d >= 4) {
            out.kind = ComponentKind::Kind::Other;
            out.reason = "degree >= 4 vertex";
            return out;
        }
        if (d == 3) {
            ++deg3;
            deg3_vertex = v;
        }
    }
    if (deg3 >= 2) {
        out.kind = ComponentKind::Kind::Other;
        out.reason = "two degree-3 vertices";
        return out;
    }
    if (deg3 == 0) {
        out.kind = ComponentKind::Kind::Path;
        out.path_vertices = n;
        return out;
    }
    // acyclic, exactly one degree-3 vertex, all others <= 2: three pendant paths
    out.kind = ComponentKind::Kind::SubdividedClaw;
    int i = 0;
    for (int start : component.neighbors(deg3_vertex)) {
        int len = 1, prev = deg3_vertex, cur = start;
        while (component.degree(cur) == 2) {
            for (int w : component.neighbors(cur)) {
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            }
            ++len;
        }
        out.legs[i++] = len;
    }
    std::sort(out.legs.begin(), out.legs.end());
    return out;
}

ClassMembership class_membership(const Graph& g) {
    ClassMembership result;
    if (g.empty()) return result;
    result.component_vertices = connected_components(g);
    result.member = true;
    for (const auto& comp : result.component_vertices) {
        ComponentKind kind = classify_component(induced_subgraph(g, comp));
        if (kind.kind == ComponentKind::Kind::Other) result.member = false;
        result.component_kinds.push_back(std::move(kind));
    }
    return result;
}

bool in_tractable_class(const Graph& g) {
    return class_membership(g).member;
}

Verdict classify_family(const std::vector<Graph>& family, const FamilyOptions& opts) {
    if (family.empty()) throw std::invalid_argument("classify_family: empty family");
    for (const auto& h : family) {
        if (h.empty()) throw std::invalid_argument("classify_family: family member with no vertices");
        if (h.vertex_count() > opts.max_pattern_vertices)
            throw BudgetExceeded("classify_family: pattern with " + std::to_string(h.vertex_count()) +
                                 " vertices, cap is " + std::to_string(opts.max_pattern_vertices));
    }
    Verdict v;
    for (size_t i = 0; i < family.size(); ++i) {
        if (in_tractable_class(family[i])) {
            v.kind = Verdict::Kind::Tractable;
            v.witness_index = static_cast<int>(i);
            v.pw_bound = family[i].vertex_count() - 2;
            return v;
        }
    }
    v.kind = Verdict::Kind::Hard;
    for (const auto& h : family) {
        StructStats stats = struct_stats(h, opts.max_pattern_vertices);
        v.cycle_span = std::max(v.cycle_span, stats.longest_cycle);
        std::vector<int> branch;
        for (int u = 0; u < h.vertex_count(); ++u)
            if (h.degree(u) >= 3) branch.push_back(u);
        for (size_t a = 0; a < branch.size(); ++a) {
            auto dist = bfs_distances(h, branch[a]);
            for (size_t b = a + 1; b < branch.size(); ++b)
                if (dist[branch[b]] > 0) v.branch_span = std::max(v.branch_span, dist[branch[b]]);
        }
    }
    v.span = std::max(v.cycle_span, v.branch_span);
    return v;
}

Graph hardness_witness(const std::vector<Graph>& family, int k, const Graph& base,
                       const FamilyOptions& opts) {
    if (k < 1) throw std::invalid_argument("hardness_witness: need k >= 1");
    if (!is_subcubic(base)) throw std::invalid_argument("hardness_witness: base is not subcubic");
    Verdict verdict = classify_family(family, opts);
    if (verdict.tractable())
        throw std::invalid_argument("hardness_witness: family is tractable, no witness exists");
    Graph witness = k_subdivide(base, k * verdict.span);
    auto freeness = iso::is_family_subgraph_free(witness, family);
    if (!freeness.subgraph_free)
        throw InvariantViolation("hardness_witness: subdivision embeds family member " +
                                 std::to_string(freeness.violating_index));
    return witness;
}

Graph branch_pair_graph(int distance) {
    if (distance < 1) throw std::invalid_argument("branch_pair_graph: need distance >= 1");
    // 0-1-2 and 3-4-5 are the two pendant paths; 1 and 4 are the branch
    // vertices, joined by a path with `distance` edges.
    std::vector<Edge> e = {{0, 1}, {1, 2}, {3, 4}, {4, 5}};
    int n = 6;
    int prev = 1;
    for (int j = 1; j < distance; ++j) {
        e.push_back({prev, n});
        prev = n;
        ++n;
    }
    e.push_back({prev, 4});
    return Graph(n, std::move(e));
}

Graph pan_graph(int cycle_len) {
    if (cycle_len < 3) throw std::invalid_argument("pan_graph: need cycle length >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < cycle_len; ++i) e.push_back({i, i + 1});
    e.push_back({0, cycle_len - 1});
    e.push_back({0, cycle_len});
    return Graph(cycle_len + 1, std::move(e));
}

bool is_pan(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4 || g.edge_count() != n || !is_connected(g)) return false;
    int deg1 = 0, deg3 = 0, pendant = -1;
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1) {
            ++deg1;
            pendant = v;
        } else if (d == 3) {
            ++deg3;
        } else if (d != 2) {
            return false;
        }
    }
    if (deg1 != 1 || deg3 != 1) return false;
    // pendant must hang off the cycle itself, so its neighbor is the degree-3 vertex
    return g.degree(g.neighbors(pendant)[0]) == 3;
}

Graph pan_witness(const std::vector<Graph>& family, const FamilyOptions& opts) {
    Verdict verdict = classify_family(family, opts);
    if (verdict.tractable())
        throw std::invalid_argument("pan_witness: family is tractable");
    Graph pan = pan_graph(std::max(verdict.cycle_span + 1, 3));
    auto freeness = iso::is_family_subgraph_free(pan, family);
    if (!freeness.subgraph_free)
        throw InvariantViolation("pan_witness: pan graph embeds family member " +
                                 std::to_string(freeness.violating_index));
    return pan;
}

}  // namespace fsg::pattern
