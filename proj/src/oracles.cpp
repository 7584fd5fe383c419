#include "fsg/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "fsg/errors.hpp"
#include "fsg/path_dp.hpp"
#include "fsg/pattern_class.hpp"

namespace fsg::oracle {

namespace {

void require_mask_size(const Graph& g, const SolveBudget& budget, const char* op) {
    if (g.vertex_count() > budget.max_vertices || g.vertex_count() > 64)
        throw BudgetExceeded(std::string(op) + ": " + std::to_string(g.vertex_count()) +
                             " vertices exceed budget " +
                             std::to_string(std::min(budget.max_vertices, 64)));
}

bool valid_vertex_list(const Graph& g, const std::vector<int>& vs) {
    std::set<int> seen;
    for (int v : vs) {
        if (v < 0 || v >= g.vertex_count()) return false;
        if (!seen.insert(v).second) return false;
    }
    return true;
}

}  // namespace

bool is_independent_set(const Graph& g, const std::vector<int>& vs) {
    if (!valid_vertex_list(g, vs)) return false;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& vs) {
    if (!valid_vertex_list(g, vs)) return false;
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : vs) in[v] = 1;
    for (const auto& [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<int>& vs) {
    if (!valid_vertex_list(g, vs)) return false;
    std::vector<char> dominated(g.vertex_count(), 0);
    for (int v : vs) {
        dominated[v] = 1;
        for (int u : g.neighbors(v)) dominated[u] = 1;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!dominated[v]) return false;
    return true;
}

bool is_edge_dominating_set(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<char> endpoint(g.vertex_count(), 0);
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) return false;
        if (!seen.insert({u, v}).second) return false;
        endpoint[u] = endpoint[v] = 1;
    }
    for (const auto& [u, v] : g.edges())
        if (!endpoint[u] && !endpoint[v]) return false;
    return true;
}

bool is_odd_cycle_transversal(const Graph& g, const std::vector<int>& vs) {
    if (!valid_vertex_list(g, vs)) return false;
    std::vector<int> colour(g.vertex_count(), -1);
    for (int v : vs) colour[v] = 2;  // removed
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<int> queue = {s};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u)) {
                if (colour[w] == 2) continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

long long cut_value(const Graph& g, const std::vector<int>& side) {
    if (static_cast<int>(side.size()) != g.vertex_count())
        throw std::invalid_argument("cut_value: side size != vertex count");
    for (int s : side)
        if (s != 0 && s != 1) throw std::invalid_argument("cut_value: side entries must be 0 or 1");
    long long cut = 0;
    for (const auto& [u, v] : g.edges())
        if (side[u] != side[v]) ++cut;
    return cut;
}

bool respects_lists(const Graph& g, const ListAssignment& lists, const Colouring& colouring) {
    if (static_cast<int>(lists.size()) != g.vertex_count()) return false;
    if (static_cast<int>(colouring.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (std::find(lists[v].begin(), lists[v].end(), colouring[v]) == lists[v].end())
            return false;
    for (const auto& [u, v] : g.edges())
        if (colouring[u] == colouring[v]) return false;
    return true;
}

bool is_steiner_tree(const Graph& g, const std::vector<int>& terminals,
                     const std::vector<Edge>& edges) {
    std::set<int> tset(terminals.begin(), terminals.end());
    if (tset.empty()) return false;
    for (int t : tset)
        if (t < 0 || t >= g.vertex_count()) return false;
    if (edges.empty()) return tset.size() == 1;
    std::set<Edge> eset;
    std::set<int> vset;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) return false;
        if (!eset.insert({u, v}).second) return false;
        vset.insert(u);
        vset.insert(v);
    }
    for (int t : tset)
        if (!vset.count(t)) return false;
    if (vset.size() != eset.size() + 1) return false;  // acyclic given connected
    std::set<int> seen = {*vset.begin()};
    std::vector<int> stack = {*vset.begin()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (const auto& [a, b] : eset) {
            int other = a == u ? b : (b == u ? a : -1);
            if (other >= 0 && !seen.count(other)) {
                seen.insert(other);
                stack.push_back(other);
            }
        }
    }
    return seen.size() == vset.size();
}

namespace {

// Component labels after deleting a vertex set and an edge set.
std::vector<int> components_after_deletion(const Graph& g, const std::vector<char>& vertex_gone,
                                           const std::set<Edge>& edges_gone) {
    std::vector<int> comp(g.vertex_count(), -1);
    int label = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (vertex_gone[s] || comp[s] >= 0) continue;
        comp[s] = label;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u)) {
                if (vertex_gone[w] || comp[w] >= 0) continue;
                auto [a, b] = std::minmax(u, w);
                if (edges_gone.count({a, b})) continue;
                comp[w] = label;
                stack.push_back(w);
            }
        }
        ++label;
    }
    return comp;
}

bool terminals_separated(const std::vector<int>& comp, const std::vector<int>& terminals) {
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = i + 1; j < terminals.size(); ++j)
            if (comp[terminals[i]] == comp[terminals[j]]) return false;
    return true;
}

}  // namespace

bool is_multiway_cut_edges(const Graph& g, const std::vector<int>& terminals,
                           const std::vector<Edge>& edges) {
    if (!valid_vertex_list(g, terminals) || terminals.size() < 2) return false;
    std::set<Edge> gone;
    for (auto [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v)) return false;
        if (!gone.insert({u, v}).second) return false;
    }
    std::vector<char> vgone(g.vertex_count(), 0);
    return terminals_separated(components_after_deletion(g, vgone, gone), terminals);
}

bool is_multiway_cut_nodes(const Graph& g, const std::vector<int>& terminals,
                           const std::vector<int>& vs) {
    if (!valid_vertex_list(g, terminals) || terminals.size() < 2) return false;
    if (!valid_vertex_list(g, vs)) return false;
    std::vector<char> vgone(g.vertex_count(), 0);
    for (int v : vs) {
        if (std::find(terminals.begin(), terminals.end(), v) != terminals.end()) return false;
        vgone[v] = 1;
    }
    return terminals_separated(components_after_deletion(g, vgone, {}), terminals);
}

bool are_disjoint_paths(const Graph& g, const std::vector<Edge>& pairs, const PathSet& paths,
                        bool induced) {
    if (paths.paths.size() != pairs.size()) return false;
    std::vector<int> owner(g.vertex_count(), -1);
    for (size_t i = 0; i < paths.paths.size(); ++i) {
        const auto& p = paths.paths[i];
        if (p.empty() || p.front() != pairs[i].first || p.back() != pairs[i].second) return false;
        for (size_t j = 0; j < p.size(); ++j) {
            int v = p[j];
            if (v < 0 || v >= g.vertex_count() || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
            if (j > 0 && !g.has_edge(p[j - 1], v)) return false;
        }
    }
    if (induced) {
        for (const auto& [u, v] : g.edges())
            if (owner[u] != -1 && owner[v] != -1 && owner[u] != owner[v]) return false;
    }
    return true;
}

bool nae_satisfies(const io::Cnf& cnf, const std::vector<int>& assignment) {
    if (static_cast<int>(assignment.size()) != cnf.vars) return false;
    for (const auto& clause : cnf.clauses) {
        bool any_true = false, any_false = false;
        for (int lit : clause) {
            int var = std::abs(lit);
            if (var < 1 || var > cnf.vars) return false;
            bool value = assignment[var - 1] != 0;
            if (lit < 0) value = !value;
            (value ? any_true : any_false) = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

std::optional<std::vector<int>> min_subset(int universe, int max_size,
                                           const std::function<bool(const std::vector<int>&)>& accepts,
                                           long long max_steps) {
    long long steps = 0;
    for (int k = 0; k <= std::min(max_size, universe); ++k) {
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            if (++steps > max_steps)
                throw BudgetExceeded("min_subset: enumeration budget exceeded");
            if (accepts(pick)) return pick;
            int i = k - 1;
            while (i >= 0 && pick[i] == universe - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

namespace {

// Branch-and-bound independent set over bitmask neighborhoods. Vertices of
// degree <= 1 in the remaining graph are resolved greedily, the rest branch
// on a maximum-degree vertex.
struct IndependentSetSearch {
    int n;
    std::vector<uint64_t> open;    // N(v)
    std::vector<uint64_t> closed;  // N[v]

    explicit IndependentSetSearch(const Graph& g) : n(g.vertex_count()), open(n, 0), closed(n, 0) {
        for (const auto& [u, v] : g.edges()) {
            open[u] |= 1ull << v;
            open[v] |= 1ull << u;
        }
        for (int v = 0; v < n; ++v) closed[v] = open[v] | (1ull << v);
    }

    int low_degree_value(uint64_t avail) const {
        int isolated = 0;
        for (uint64_t rest = avail; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((open[v] & avail) == 0) ++isolated;
        }
        return isolated + (std::popcount(avail) - isolated) / 2;
    }

    int branch_vertex(uint64_t avail, int& degree) const {
        int best = -1;
        degree = -1;
        for (uint64_t rest = avail; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(open[v] & avail);
            if (d > degree) {
                degree = d;
                best = v;
            }
        }
        return best;
    }

    int maximum(uint64_t avail) const {
        if (!avail) return 0;
        int degree;
        int v = branch_vertex(avail, degree);
        if (degree <= 1) return low_degree_value(avail);
        return std::max(1 + maximum(avail & ~closed[v]), maximum(avail & ~(1ull << v)));
    }

    bool exists(uint64_t avail, int need) const {
        if (need <= 0) return true;
        if (std::popcount(avail) < need) return false;
        int degree;
        int v = branch_vertex(avail, degree);
        if (degree <= 1) return low_degree_value(avail) >= need;
        return exists(avail & ~closed[v], need - 1) || exists(avail & ~(1ull << v), need);
    }
};

}  // namespace

VertexSetResult max_independent_set(const Graph& g, const SolveBudget& budget) {
    require_mask_size(g, budget, "max_independent_set");
    IndependentSetSearch search(g);
    uint64_t all = g.vertex_count() == 64 ? ~0ull : (1ull << g.vertex_count()) - 1;
    int alpha = search.maximum(all);

    VertexSetResult result;
    result.value = alpha;
    uint64_t committed = 0, blocked = 0;
    int taken = 0;
    for (int v = 0; v < g.vertex_count() && taken < alpha; ++v) {
        if ((blocked >> v) & 1) continue;
        uint64_t avail = all & ~blocked & ~search.closed[v];
        if (search.exists(avail, alpha - taken - 1)) {
            committed |= 1ull << v;
            blocked |= search.closed[v];
            ++taken;
            result.vertices.push_back(v);
        }
    }
    if (taken != alpha || !is_independent_set(g, result.vertices))
        throw InvariantViolation("max_independent_set: certificate reconstruction failed");
    return result;
}

VertexSetResult min_vertex_cover(const Graph& g, const SolveBudget& budget) {
    VertexSetResult is = max_independent_set(g, budget);
    VertexSetResult result;
    result.value = g.vertex_count() - is.value;
    std::vector<char> in_is(g.vertex_count(), 0);
    for (int v : is.vertices) in_is[v] = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_is[v]) result.vertices.push_back(v);
    if (!is_vertex_cover(g, result.vertices))
        throw InvariantViolation("min_vertex_cover: complement is not a cover");
    return result;
}

namespace {

// Vertex states for domination DPs: 0 selected, 1 dominated, 2 not yet dominated.
dp::DpProblem domination_problem(bool independent, const std::vector<int>& forced_in) {
    dp::DpProblem problem;
    problem.state_count = 3;
    problem.maximize = false;
    problem.introduce = [forced_in](int v) {
        std::vector<dp::IntroduceOption> options = {{0, 1}};
        if (std::find(forced_in.begin(), forced_in.end(), v) == forced_in.end())
            options.push_back({2, 0});
        return options;
    };
    problem.edge = [independent](int, int, int su, int sv) {
        std::vector<dp::EdgeOption> options;
        if (su == 0 && sv == 0) {
            if (!independent) options.push_back({0, 0, 0});
            return options;
        }
        int nu = su, nv = sv;
        if (su == 0 && sv == 2) nv = 1;
        if (sv == 0 && su == 2) nu = 1;
        options.push_back({nu, nv, 0});
        return options;
    };
    problem.forget = [](int, int state) { return state != 2; };
    return problem;
}

}  // namespace

VertexSetResult min_dominating_set(const Graph& g, DominationVariant variant,
                                   const SolveBudget& budget) {
    require_mask_size(g, budget, "min_dominating_set");
    bool independent = variant == DominationVariant::Independent;
    auto seq = dp::plan_events(g, budget.max_slots);
    auto base = dp::run_dp(g, seq, domination_problem(independent, {}));
    if (!base)
        throw InvariantViolation("min_dominating_set: no feasible assignment");
    VertexSetResult result;
    result.value = static_cast<int>(base->value);

    std::vector<int> committed;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (static_cast<int>(committed.size()) == result.value) break;
        std::vector<int> trial = committed;
        trial.push_back(v);
        auto run = dp::run_dp(g, seq, domination_problem(independent, trial));
        if (run && run->value == base->value) committed = std::move(trial);
    }
    result.vertices = committed;
    if (static_cast<int>(result.vertices.size()) != result.value ||
        !is_dominating_set(g, result.vertices) ||
        (independent && !is_independent_set(g, result.vertices)))
        throw InvariantViolation("min_dominating_set: certificate reconstruction failed");
    return result;
}

namespace {

// Vertex states for edge domination: 0 uncommitted, 1 endpoint of a chosen
// edge, 2 pledged to become one. Skipping an edge needs a covered or pledged
// endpoint; forgetting a pledged vertex is rejected.
dp::DpProblem edge_domination_problem(const Graph& g, const std::vector<int>& forced_take) {
    std::vector<int> force(g.edge_count(), 0);  // 0 free, 1 must take
    for (int e : forced_take) force[e] = 1;
    dp::DpProblem problem;
    problem.state_count = 3;
    problem.maximize = false;
    auto index_of = [&g] {
        std::vector<std::pair<long long, int>> keys;
        for (int i = 0; i < g.edge_count(); ++i)
            keys.push_back({g.edges()[i].first * 1ll * g.vertex_count() + g.edges()[i].second, i});
        std::sort(keys.begin(), keys.end());
        return keys;
    }();
    auto lookup = [index_of, n = g.vertex_count()](int u, int v) {
        auto [a, b] = std::minmax(u, v);
        long long key = a * 1ll * n + b;
        auto it = std::lower_bound(index_of.begin(), index_of.end(), std::make_pair(key, 0));
        return it->second;
    };
    problem.introduce = [](int) { return std::vector<dp::IntroduceOption>{{0, 0}}; };
    problem.edge = [force, lookup](int u, int v, int su, int sv) {
        std::vector<dp::EdgeOption> options = {{1, 1, 1}};  // take the edge
        if (force[lookup(u, v)] == 1) return options;
        if (su >= 1 || sv >= 1) options.push_back({su, sv, 0});
        if (su == 0) options.push_back({2, sv, 0});
        if (sv == 0) options.push_back({su, 2, 0});
        return options;
    };
    problem.forget = [](int, int state) { return state != 2; };
    return problem;
}

}  // namespace

EdgeSetResult min_edge_dominating_set(const Graph& g, const SolveBudget& budget) {
    require_mask_size(g, budget, "min_edge_dominating_set");
    auto seq = dp::plan_events(g, budget.max_slots);
    auto base = dp::run_dp(g, seq, edge_domination_problem(g, {}));
    if (!base)
        throw InvariantViolation("min_edge_dominating_set: no feasible assignment");
    EdgeSetResult result;
    result.value = static_cast<int>(base->value);

    std::vector<int> committed;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (static_cast<int>(committed.size()) == result.value) break;
        std::vector<int> trial = committed;
        trial.push_back(e);
        auto run = dp::run_dp(g, seq, edge_domination_problem(g, trial));
        if (run && run->value == base->value) committed = std::move(trial);
    }
    for (int e : committed) result.edges.push_back(g.edges()[e]);
    if (static_cast<int>(result.edges.size()) != result.value ||
        !is_edge_dominating_set(g, result.edges))
        throw InvariantViolation("min_edge_dominating_set: certificate reconstruction failed");
    return result;
}

VertexSetResult min_odd_cycle_transversal(const Graph& g, bool independent,
                                          const SolveBudget& budget) {
    require_mask_size(g, budget, "min_odd_cycle_transversal");
    auto accepts = [&](const std::vector<int>& vs) {
        if (independent && !is_independent_set(g, vs)) return false;
        return is_odd_cycle_transversal(g, vs);
    };
    auto found = min_subset(g.vertex_count(), g.vertex_count(), accepts, budget.max_subsets);
    if (!found) {
        // plain mode always accepts the whole vertex set, so only the
        // independent variant can run out of candidates
        if (independent)
            throw Infeasible("min_odd_cycle_transversal: no independent transversal exists");
        throw InvariantViolation("min_odd_cycle_transversal: whole vertex set rejected");
    }
    return {static_cast<int>(found->size()), *found};
}

namespace {

dp::DpProblem cut_problem(const std::vector<int>& forced_side) {
    dp::DpProblem problem;
    problem.state_count = 2;
    problem.maximize = true;
    problem.introduce = [forced_side](int v) {
        int forced = v == 0 ? 0 : forced_side[v];
        std::vector<dp::IntroduceOption> options;
        if (forced != 1) options.push_back({0, 0});
        if (forced != 0) options.push_back({1, 0});
        return options;
    };
    problem.edge = [](int, int, int su, int sv) {
        return std::vector<dp::EdgeOption>{{su, sv, su != sv ? 1 : 0}};
    };
    problem.forget = [](int, int) { return true; };
    return problem;
}

}  // namespace

CutResult max_cut(const Graph& g, const SolveBudget& budget) {
    require_mask_size(g, budget, "max_cut");
    CutResult result;
    if (g.empty()) return result;
    auto seq = dp::plan_events(g, budget.max_slots);
    std::vector<int> forced(g.vertex_count(), -1);
    forced[0] = 0;
    auto base = dp::run_dp(g, seq, cut_problem(forced));
    if (!base)
        throw InvariantViolation("max_cut: no assignment found");
    result.value = static_cast<int>(base->value);
    for (int v = 1; v < g.vertex_count(); ++v) {
        forced[v] = 0;
        auto run = dp::run_dp(g, seq, cut_problem(forced));
        if (!run || run->value != base->value) forced[v] = 1;
    }
    result.side = forced;
    if (cut_value(g, result.side) != result.value)
        throw InvariantViolation("max_cut: certificate reconstruction failed");
    return result;
}

namespace {

struct ListColouringSearch {
    const Graph& g;
    std::vector<std::vector<int>> domains;
    std::vector<int> chosen;

    bool assign(int v) {
        if (v == g.vertex_count()) return true;
        for (int colour : domains[v]) {
            chosen[v] = colour;
            std::vector<int> pruned;  // neighbors that lost `colour`
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (u <= v) continue;
                auto& dom = domains[u];
                auto it = std::find(dom.begin(), dom.end(), colour);
                if (it == dom.end()) continue;
                dom.erase(it);
                pruned.push_back(u);
                if (dom.empty()) {
                    dead = true;
                    break;
                }
            }
            if (!dead && assign(v + 1)) return true;
            for (int u : pruned) {
                auto& dom = domains[u];
                dom.insert(std::upper_bound(dom.begin(), dom.end(), colour), colour);
            }
        }
        chosen[v] = -1;
        return false;
    }
};

}  // namespace

std::optional<Colouring> list_colouring(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.size()) != g.vertex_count())
        throw std::invalid_argument("list_colouring: one list per vertex required");
    ListColouringSearch search{g, lists, std::vector<int>(g.vertex_count(), -1)};
    for (auto& dom : search.domains) {
        std::sort(dom.begin(), dom.end());
        dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
    }
    if (!search.assign(0)) return std::nullopt;
    if (!respects_lists(g, lists, search.chosen))
        throw InvariantViolation("list_colouring: assignment check failed");
    return search.chosen;
}

namespace {

std::vector<int> bfs_path(const Graph& g, int from, int to) {
    std::vector<int> parent(g.vertex_count(), -1);
    parent[from] = from;
    std::vector<int> queue = {from};
    for (size_t head = 0; head < queue.size() && parent[to] == -1; ++head) {
        int u = queue[head];
        for (int w : g.neighbors(u))
            if (parent[w] == -1) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    std::vector<int> path = {to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

SteinerResult steiner_tree(const Graph& g, const std::vector<int>& terminals, SteinerMode mode,
                           const SolveBudget& budget) {
    std::set<int> tset(terminals.begin(), terminals.end());
    if (tset.empty()) throw std::invalid_argument("steiner_tree: empty terminal set");
    for (int t : tset)
        if (t < 0 || t >= g.vertex_count())
            throw std::invalid_argument("steiner_tree: terminal out of range");
    if (g.vertex_count() > budget.steiner_max_vertices)
        throw BudgetExceeded("steiner_tree: vertex budget exceeded");
    if (static_cast<int>(tset.size()) > budget.max_terminals)
        throw BudgetExceeded("steiner_tree: terminal budget exceeded");

    std::vector<int> ts(tset.begin(), tset.end());
    SteinerResult result;
    if (ts.size() == 1) {
        result.value = mode == SteinerMode::Edge ? 0 : 1;
        return result;
    }

    int n = g.vertex_count();
    std::vector<std::vector<int>> dist(n);
    for (int s = 0; s < n; ++s) dist[s] = bfs_distances(g, s);
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (dist[ts[i]][ts[j]] < 0)
                throw Infeasible("steiner_tree: terminals disconnected");

    int root = ts[0];
    int others = static_cast<int>(ts.size()) - 1;
    int masks = 1 << others;
    const int kInf = 1 << 28;
    std::vector<std::vector<int>> table(masks, std::vector<int>(n, kInf));
    std::vector<std::vector<int>> via(masks, std::vector<int>(n, -1));    // closure vertex
    std::vector<std::vector<int>> split(masks, std::vector<int>(n, 0));   // merge submask at `via`
    for (int i = 0; i < others; ++i)
        for (int v = 0; v < n; ++v) table[1 << i][v] = dist[ts[i + 1]][v];

    for (int mask = 1; mask < masks; ++mask) {
        std::vector<int> merged(n, kInf);
        std::vector<int> merged_split(n, 0);
        if (std::popcount(static_cast<unsigned>(mask)) >= 2) {
            int low = mask & -mask;
            for (int sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
                if (!(sub & low)) continue;  // each split counted once
                for (int v = 0; v < n; ++v) {
                    int candidate = table[sub][v] + table[mask ^ sub][v];
                    if (candidate < merged[v]) {
                        merged[v] = candidate;
                        merged_split[v] = sub;
                    }
                }
            }
        } else {
            for (int v = 0; v < n; ++v) merged[v] = table[mask][v];
        }
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u) {
                if (merged[u] >= kInf || dist[u][v] < 0) continue;
                int candidate = merged[u] + dist[u][v];
                if (candidate < table[mask][v]) {
                    table[mask][v] = candidate;
                    via[mask][v] = u;
                    split[mask][v] = merged_split[u];
                }
            }
        }
    }

    int full = masks - 1;
    long long edge_value = table[full][root];

    std::set<Edge> tree_edges;
    std::vector<std::pair<int, int>> work = {{full, root}};
    while (!work.empty()) {
        auto [mask, v] = work.back();
        work.pop_back();
        if (std::popcount(static_cast<unsigned>(mask)) == 1) {
            int t = ts[std::countr_zero(static_cast<unsigned>(mask)) + 1];
            auto path = bfs_path(g, t, v);
            for (size_t i = 1; i < path.size(); ++i) {
                auto [a, b] = std::minmax(path[i - 1], path[i]);
                tree_edges.insert({a, b});
            }
            continue;
        }
        int u = via[mask][v];
        auto path = bfs_path(g, u, v);
        for (size_t i = 1; i < path.size(); ++i) {
            auto [a, b] = std::minmax(path[i - 1], path[i]);
            tree_edges.insert({a, b});
        }
        int sub = split[mask][v];
        work.push_back({sub, u});
        work.push_back({mask ^ sub, u});
    }
    result.edges.assign(tree_edges.begin(), tree_edges.end());
    result.value = mode == SteinerMode::Edge ? edge_value : edge_value + 1;
    if (static_cast<long long>(result.edges.size()) != edge_value ||
        !is_steiner_tree(g, ts, result.edges))
        throw InvariantViolation("steiner_tree: certificate reconstruction failed");
    return result;
}

EdgeSetResult multiway_cut_edges(const Graph& g, const std::vector<int>& terminals,
                                 const SolveBudget& budget) {
    if (!valid_vertex_list(g, terminals) || terminals.size() < 2)
        throw std::invalid_argument("multiway_cut_edges: need >= 2 distinct terminals");
    auto accepts = [&](const std::vector<int>& picks) {
        std::set<Edge> gone;
        for (int e : picks) gone.insert(g.edges()[e]);
        std::vector<char> vgone(g.vertex_count(), 0);
        return terminals_separated(components_after_deletion(g, vgone, gone), terminals);
    };
    auto found = min_subset(g.edge_count(), g.edge_count(), accepts, budget.max_subsets);
    EdgeSetResult result;
    result.value = static_cast<int>(found->size());
    for (int e : *found) result.edges.push_back(g.edges()[e]);
    return result;
}

VertexSetResult multiway_cut_nodes(const Graph& g, const std::vector<int>& terminals,
                                   const SolveBudget& budget) {
    if (!valid_vertex_list(g, terminals) || terminals.size() < 2)
        throw std::invalid_argument("multiway_cut_nodes: need >= 2 distinct terminals");
    for (size_t i = 0; i < terminals.size(); ++i)
        for (size_t j = i + 1; j < terminals.size(); ++j)
            if (g.has_edge(terminals[i], terminals[j]))
                throw Infeasible("multiway_cut_nodes: adjacent terminals cannot be separated");
    std::vector<char> terminal(g.vertex_count(), 0);
    for (int t : terminals) terminal[t] = 1;
    std::vector<int> candidates;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!terminal[v]) candidates.push_back(v);
    auto accepts = [&](const std::vector<int>& picks) {
        std::vector<char> vgone(g.vertex_count(), 0);
        for (int i : picks) vgone[candidates[i]] = 1;
        return terminals_separated(components_after_deletion(g, vgone, {}), terminals);
    };
    auto found = min_subset(static_cast<int>(candidates.size()),
                            static_cast<int>(candidates.size()), accepts, budget.max_subsets);
    VertexSetResult result;
    result.value = static_cast<int>(found->size());
    for (int i : *found) result.vertices.push_back(candidates[i]);
    return result;
}

namespace {

struct DisjointPathsSearch {
    const Graph& g;
    const std::vector<Edge>& pairs;
    bool induced;
    long long steps = 0;
    long long max_steps;
    std::vector<int> owner;             // -1 free, else pair index
    std::vector<std::vector<int>> paths;

    bool cross_edge(int pair_index) const {
        for (int v : paths[pair_index])
            for (int w : g.neighbors(v))
                if (owner[w] != -1 && owner[w] != pair_index) return true;
        return false;
    }

    bool route(int pair_index) {
        if (pair_index == static_cast<int>(pairs.size())) return true;
        int s = pairs[pair_index].first;
        owner[s] = pair_index;
        paths[pair_index] = {s};
        if (extend(pair_index, s)) return true;
        owner[s] = -1;
        paths[pair_index].clear();
        return false;
    }

    bool extend(int pair_index, int at) {
        if (++steps > max_steps)
            throw BudgetExceeded("disjoint_paths: search budget exceeded");
        int target = pairs[pair_index].second;
        if (at == target) {
            if (!induced || !cross_edge(pair_index)) {
                if (route(pair_index + 1)) return true;
            }
            return false;
        }
        for (int w : g.neighbors(at)) {
            if (owner[w] != -1) continue;
            if (w != target) {
                // interior vertices may not be another pair's endpoint
                bool reserved = false;
                for (size_t j = 0; j < pairs.size(); ++j)
                    if (static_cast<int>(j) != pair_index &&
                        (pairs[j].first == w || pairs[j].second == w))
                        reserved = true;
                if (reserved) continue;
            }
            owner[w] = pair_index;
            paths[pair_index].push_back(w);
            if (extend(pair_index, w)) return true;
            owner[w] = -1;
            paths[pair_index].pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<PathSet> disjoint_paths(const Graph& g, const std::vector<Edge>& pairs, bool induced,
                                      const SolveBudget& budget) {
    if (g.vertex_count() > budget.max_path_vertices)
        throw BudgetExceeded("disjoint_paths: vertex budget exceeded");
    std::set<int> endpoints;
    for (const auto& [s, t] : pairs) {
        if (s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count() || s == t)
            throw std::invalid_argument("disjoint_paths: bad terminal pair");
        if (!endpoints.insert(s).second || !endpoints.insert(t).second)
            throw std::invalid_argument("disjoint_paths: pairs are not disjoint");
    }
    DisjointPathsSearch search{g,
                               pairs,
                               induced,
                               0,
                               budget.max_subsets,
                               std::vector<int>(g.vertex_count(), -1),
                               std::vector<std::vector<int>>(pairs.size())};
    if (!search.route(0)) return std::nullopt;
    PathSet found{search.paths};
    if (!are_disjoint_paths(g, pairs, found, induced))
        throw InvariantViolation("disjoint_paths: route check failed");
    return found;
}

Metric diameter_radius(const Graph& g) {
    if (g.empty()) throw std::invalid_argument("diameter_radius: empty graph");
    Metric metric{0, g.vertex_count()};
    for (int s = 0; s < g.vertex_count(); ++s) {
        auto dist = bfs_distances(g, s);
        int ecc = 0;
        for (int d : dist) {
            if (d < 0) throw Infeasible("diameter_radius: graph disconnected (infinite)");
            ecc = std::max(ecc, d);
        }
        metric.diameter = std::max(metric.diameter, ecc);
        metric.radius = std::min(metric.radius, ecc);
    }
    return metric;
}

std::optional<std::vector<int>> nae_3sat(const io::Cnf& cnf, const SolveBudget& budget) {
    if (cnf.vars > budget.max_variables)
        throw BudgetExceeded("nae_3sat: variable budget exceeded");
    int n = cnf.vars;
    for (long long word = 0; word < (1ll << n); ++word) {
        std::vector<int> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = static_cast<int>((word >> (n - 1 - i)) & 1);
        if (nae_satisfies(cnf, assignment)) return assignment;
    }
    return std::nullopt;
}

bool pan_modified_list_colouring(const Graph& g, const ListAssignment& lists) {
    bool has_pan = false;
    for (const auto& comp : connected_components(g))
        if (pattern::is_pan(induced_subgraph(g, comp))) {
            has_pan = true;
            break;
        }
    return has_pan && list_colouring(g, lists).has_value();
}

}  // namespace fsg::oracle
