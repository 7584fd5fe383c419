#include "fsg/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "fsg/errors.hpp"

namespace fsg::width {

int vertex_separation_of_layout(const Graph& g, const Layout& layout) {
    int n = g.vertex_count();
    if (static_cast<int>(layout.order.size()) != n)
        throw std::invalid_argument("vertex_separation_of_layout: layout size != vertex count");
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = layout.order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("vertex_separation_of_layout: layout is not a bijection");
        pos[v] = i;
    }
    int best = 0;
    for (int i = 0; i < n; ++i) {
        int b = 0;
        for (int u = 0; u < n; ++u) {
            if (pos[u] > i) continue;
            for (int w : g.neighbors(u)) {
                if (pos[w] > i) {
                    ++b;
                    break;
                }
            }
        }
        best = std::max(best, b);
    }
    return best;
}

namespace {

int width_cap(const Graph& g, const WidthBudget& budget, const char* op) {
    if (g.vertex_count() > budget.max_vertices)
        throw BudgetExceeded(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                             " vertices exceed budget " + std::to_string(budget.max_vertices));
    if (g.vertex_count() > budget.exhaustive_vertices) return budget.max_width;
    return std::max(0, g.vertex_count() - 1);
}

std::vector<uint64_t> neighbor_masks(const Graph& g) {
    std::vector<uint64_t> nbr(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        nbr[u] |= 1ull << v;
        nbr[v] |= 1ull << u;
    }
    return nbr;
}

// Decision search: is there a layout of this component with separation <= k?
// States are prefix sets; a vertex whose whole neighborhood is already placed
// can always be placed next, everything else branches. Dead prefixes memoized.
struct SeparationSearch {
    int n;
    int k;
    const std::vector<uint64_t>& nbr;
    uint64_t full;
    std::unordered_set<uint64_t> dead;
    std::vector<int> order;

    SeparationSearch(int n_, int k_, const std::vector<uint64_t>& nbr_)
        : n(n_), k(k_), nbr(nbr_), full(n_ == 64 ? ~0ull : (1ull << n_) - 1) {}

    int boundary(uint64_t s) const {
        int b = 0;
        for (int v = 0; v < n; ++v)
            if (((s >> v) & 1) && (nbr[v] & ~s)) ++b;
        return b;
    }

    bool dfs(uint64_t s) {
        if (s == full) return true;
        if (dead.count(s)) return false;
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1) continue;
            if ((nbr[v] & ~s) == 0) {
                order.push_back(v);
                if (dfs(s | (1ull << v))) return true;
                order.pop_back();
                dead.insert(s);
                return false;
            }
        }
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1) continue;
            uint64_t s2 = s | (1ull << v);
            if (boundary(s2) > k) continue;
            order.push_back(v);
            if (dfs(s2)) return true;
            order.pop_back();
        }
        dead.insert(s);
        return false;
    }
};

}  // namespace

PathwidthResult pathwidth(const Graph& g, const WidthBudget& budget) {
    int cap = width_cap(g, budget, "pathwidth");
    PathwidthResult result;
    if (g.empty()) return result;
    result.width = 0;
    for (const auto& comp : connected_components(g)) {
        Graph local = induced_subgraph(g, comp);
        auto nbr = neighbor_masks(local);
        bool solved = false;
        for (int k = 0; k <= cap; ++k) {
            SeparationSearch search(local.vertex_count(), k, nbr);
            if (search.dfs(0)) {
                result.width = std::max(result.width, k);
                for (int v : search.order) result.layout.order.push_back(comp[v]);
                solved = true;
                break;
            }
        }
        if (!solved)
            throw BudgetExceeded("pathwidth: exceeds width budget " + std::to_string(cap));
    }
    return result;
}

namespace {

int degeneracy(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> gone(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && (v < 0 || deg[u] < deg[v])) v = u;
        best = std::max(best, deg[v]);
        gone[v] = 1;
        for (int w : g.neighbors(v))
            if (!gone[w]) --deg[w];
    }
    return best;
}

// Decision search: elimination order where every vertex has at most k
// neighbors in the fill graph when removed. Standard safe moves are applied
// first: degree <= 1 always, degree 2 when k >= 2, simplicial when it fits.
// A simplicial vertex whose neighborhood exceeds k kills the state (it spans
// a clique wider than the bound).
struct EliminationSearch {
    int n;
    int k;
    uint64_t full;
    std::unordered_set<uint64_t> dead;
    std::vector<int> order;

    EliminationSearch(int n_, int k_) : n(n_), k(k_), full(n_ == 64 ? ~0ull : (1ull << n_) - 1) {}

    static bool clique(uint64_t members, const std::vector<uint64_t>& adj) {
        for (uint64_t rest = members; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            if (members & ~(1ull << a) & ~adj[a]) return false;
        }
        return true;
    }

    static std::vector<uint64_t> eliminate(const std::vector<uint64_t>& adj, int v, uint64_t removed) {
        std::vector<uint64_t> next = adj;
        uint64_t nb = adj[v] & ~removed & ~(1ull << v);
        for (uint64_t rest = nb; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            next[a] |= nb & ~(1ull << a);
        }
        return next;
    }

    bool dfs(uint64_t removed, const std::vector<uint64_t>& adj) {
        if (removed == full) return true;
        if (dead.count(removed)) return false;
        int forced = -1;
        for (int v = 0; v < n && forced < 0; ++v) {
            if ((removed >> v) & 1) continue;
            uint64_t nb = adj[v] & ~removed;
            int d = std::popcount(nb);
            if (d <= 1 || (d == 2 && k >= 2)) {
                forced = v;
            } else if (clique(nb, adj)) {
                if (d > k) {
                    dead.insert(removed);
                    return false;
                }
                forced = v;
            }
        }
        if (forced >= 0) {
            order.push_back(forced);
            if (dfs(removed | (1ull << forced), eliminate(adj, forced, removed))) return true;
            order.pop_back();
            dead.insert(removed);
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if ((removed >> v) & 1) continue;
            if (std::popcount(adj[v] & ~removed) > k) continue;
            order.push_back(v);
            if (dfs(removed | (1ull << v), eliminate(adj, v, removed))) return true;
            order.pop_back();
        }
        dead.insert(removed);
        return false;
    }
};

// Bags from an elimination order: the bag of v holds v plus its fill-graph
// neighbors at removal time. Each non-final node links to the node of the
// first-removed vertex of its bag remainder, or to the next node when the
// remainder is empty; occurrence intervals stay connected either way.
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<int>& order) {
    int n = g.vertex_count();
    TreeDecomposition td;
    if (n == 0) return td;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    auto adj = neighbor_masks(g);
    uint64_t removed = 0;
    std::vector<int> rule_parent(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        uint64_t nb = adj[v] & ~removed & ~(1ull << v);
        std::vector<int> bag = {v};
        int first_removed = -1;
        for (uint64_t rest = nb; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            bag.push_back(a);
            if (first_removed < 0 || pos[a] < pos[first_removed]) first_removed = a;
        }
        std::sort(bag.begin(), bag.end());
        td.width = std::max(td.width, static_cast<int>(bag.size()) - 1);
        td.bags.push_back(std::move(bag));
        if (first_removed >= 0) rule_parent[i] = pos[first_removed];
        for (uint64_t rest = nb; rest;) {
            int a = std::countr_zero(rest);
            rest &= rest - 1;
            adj[a] |= nb & ~(1ull << a);
        }
        removed |= 1ull << v;
    }
    for (int i = 0; i + 1 < n; ++i)
        td.tree_edges.push_back({i, rule_parent[i] >= 0 ? rule_parent[i] : i + 1});
    return td;
}

}  // namespace

TreewidthResult treewidth(const Graph& g, const WidthBudget& budget) {
    int cap = width_cap(g, budget, "treewidth");
    TreewidthResult result;
    if (g.empty()) return result;
    std::vector<int> order;
    int width = 0;
    for (const auto& comp : connected_components(g)) {
        Graph local = induced_subgraph(g, comp);
        auto nbr = neighbor_masks(local);
        bool solved = false;
        for (int k = degeneracy(local); k <= cap; ++k) {
            EliminationSearch search(local.vertex_count(), k);
            if (search.dfs(0, nbr)) {
                width = std::max(width, k);
                for (int v : search.order) order.push_back(comp[v]);
                solved = true;
                break;
            }
        }
        if (!solved)
            throw BudgetExceeded("treewidth: exceeds width budget " + std::to_string(cap));
    }
    result.decomposition = decomposition_from_elimination(g, order);
    result.width = result.decomposition.width;
    return result;
}

DecompositionCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    int nodes = static_cast<int>(td.bags.size());
    auto fail = [](std::string why) { return DecompositionCheck{false, std::move(why)}; };

    for (const auto& bag : td.bags) {
        for (int v : bag)
            if (v < 0 || v >= g.vertex_count())
                return fail("bag vertex " + std::to_string(v + 1) + " out of range");
    }
    for (const auto& [a, b] : td.tree_edges)
        if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
            return fail("malformed tree edge");

    if (nodes == 0) {
        if (g.vertex_count() > 0) return fail("vertex 1 in no bag");
        if (!td.tree_edges.empty()) return fail("tree edges without nodes");
        if (td.width != -1) return fail("width field " + std::to_string(td.width) + " != -1");
        return {};
    }
    if (static_cast<int>(td.tree_edges.size()) != nodes - 1)
        return fail("tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                    std::to_string(nodes) + " nodes");
    {
        std::vector<std::vector<int>> nbr(nodes);
        for (const auto& [a, b] : td.tree_edges) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        std::vector<char> seen(nodes, 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++reached;
            for (int y : nbr[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
        }
        if (reached != nodes) return fail("tree is disconnected");
    }

    std::vector<std::vector<char>> in_bag(nodes, std::vector<char>(g.vertex_count(), 0));
    for (int i = 0; i < nodes; ++i)
        for (int v : td.bags[i]) in_bag[i][v] = 1;

    for (const auto& [u, v] : g.edges()) {
        bool covered = false;
        for (int i = 0; i < nodes && !covered; ++i) covered = in_bag[i][u] && in_bag[i][v];
        if (!covered)
            return fail("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) + " in no bag");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool found = false;
        for (int i = 0; i < nodes && !found; ++i) found = in_bag[i][v];
        if (!found) return fail("vertex " + std::to_string(v + 1) + " in no bag");
    }
    {
        std::vector<std::vector<int>> nbr(nodes);
        for (const auto& [a, b] : td.tree_edges) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            int start = -1, total = 0;
            for (int i = 0; i < nodes; ++i)
                if (in_bag[i][v]) {
                    if (start < 0) start = i;
                    ++total;
                }
            std::vector<char> seen(nodes, 0);
            std::vector<int> stack = {start};
            seen[start] = 1;
            int reached = 0;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                ++reached;
                for (int y : nbr[x])
                    if (!seen[y] && in_bag[y][v]) {
                        seen[y] = 1;
                        stack.push_back(y);
                    }
            }
            if (reached != total)
                return fail("vertex " + std::to_string(v + 1) + " occurrences disconnected");
        }
    }
    int max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, static_cast<int>(bag.size()));
    if (td.width != max_bag - 1)
        return fail("width field " + std::to_string(td.width) + " != max bag size - 1 = " +
                    std::to_string(max_bag - 1));
    return {};
}

}  // namespace fsg::width
