#include "fsg/reductions.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

#include "fsg/errors.hpp"

namespace fsg::reduce {

namespace {

struct ClaimInfo {
    ClaimId id;
    const char* name;
    int subdivision;
};

constexpr ClaimInfo kClaimTable[] = {
    {ClaimId::PwSubdiv, "PW_SUBDIV", 1},
    {ClaimId::TwSubdiv, "TW_SUBDIV", 1},
    {ClaimId::Is2Sub, "IS_2SUB", 2},
    {ClaimId::Vc2Sub, "VC_2SUB", 2},
    {ClaimId::Ds3Sub, "DS_3SUB", 3},
    {ClaimId::Ids3Sub, "IDS_3SUB", 3},
    {ClaimId::Eds3Sub, "EDS_3SUB", 3},
    {ClaimId::Oct2Sub, "OCT_2SUB", 2},
    {ClaimId::Ioct2SubGadget, "IOCT_2SUB_GADGET", 2},
    {ClaimId::MaxCut2Sub, "MAXCUT_2SUB", 2},
    {ClaimId::Est1Sub, "EST_1SUB", 1},
    {ClaimId::Emwc1Sub, "EMWC_1SUB", 1},
    {ClaimId::Nmwc1Sub, "NMWC_1SUB", 1},
    {ClaimId::Dp1Sub, "DP_1SUB", 1},
    {ClaimId::Idp1Sub, "IDP_1SUB", 1},
    {ClaimId::Diam2Sub, "DIAM_2SUB", 2},
    {ClaimId::NaeOctGadget, "NAE_OCT_GADGET", 0},
    {ClaimId::SteinerSubcubic, "STEINER_SUBCUBIC", 0},
};

const ClaimInfo& info_for(ClaimId claim) {
    for (const auto& info : kClaimTable)
        if (info.id == claim) return info;
    throw std::invalid_argument("unknown claim id");
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> out;
        for (const auto& info : kClaimTable) out.push_back(info.id);
        return out;
    }();
    return ids;
}

std::string claim_name(ClaimId claim) { return info_for(claim).name; }

std::optional<ClaimId> claim_from_name(const std::string& name) {
    for (const auto& info : kClaimTable)
        if (name == info.name) return info.id;
    return std::nullopt;
}

int claim_subdivision(ClaimId claim) { return info_for(claim).subdivision; }

std::string instance_digest(const ProblemInstance& instance) {
    std::string text = io::serialize_graph(instance.graph);
    if (!instance.terminals.empty() || !instance.pairs.empty())
        text += io::serialize_terminals({instance.terminals, instance.pairs});
    if (instance.cnf.vars > 0 || !instance.cnf.clauses.empty())
        text += io::serialize_cnf(instance.cnf);
    text += "k " + std::to_string(instance.budget) + "\n";
    return io::digest(text);
}

std::pair<Graph, int> nae_to_oct_gadget(const io::Cnf& cnf) {
    int n = cnf.vars;
    int m = static_cast<int>(cnf.clauses.size());
    std::vector<int> occurrences(2 * n, 0);
    for (const auto& clause : cnf.clauses)
        for (int lit : clause) {
            int var = std::abs(lit);
            if (var < 1 || var > n)
                throw std::invalid_argument("nae_to_oct_gadget: literal out of range");
            int slot = 2 * (var - 1) + (lit < 0 ? 1 : 0);
            if (++occurrences[slot] > 2)
                throw std::invalid_argument("nae_to_oct_gadget: a literal occurs more than twice");
        }

    int total = 2 * n + 3 * m;
    std::vector<Edge> edges;
    std::vector<std::string> labels(total);
    for (int i = 0; i < n; ++i) {
        edges.push_back({2 * i, 2 * i + 1});
        labels[2 * i] = "x" + std::to_string(i + 1);
        labels[2 * i + 1] = "nx" + std::to_string(i + 1);
    }
    for (int i = 0; i < m; ++i) {
        int base = 2 * n + 3 * i;
        edges.push_back({base, base + 1});
        edges.push_back({base, base + 2});
        edges.push_back({base + 1, base + 2});
        for (int j = 0; j < 3; ++j) {
            labels[base + j] = "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            int lit = cnf.clauses[i][j];
            int literal_vertex = 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
            edges.push_back({base + j, literal_vertex});
        }
    }
    Graph gadget(total, edges, labels);
    if (!is_subcubic(gadget) || gadget.edge_count() != n + 6 * m)
        throw InvariantViolation("nae_to_oct_gadget: malformed gadget");
    return {gadget, m};
}

SteinerExpansion steiner_subcubic_expand(const Graph& g, const std::vector<int>& terminals,
                                         long long k) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("steiner_subcubic_expand: need at least 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("steiner_subcubic_expand: base must be connected");
    std::set<int> tset(terminals.begin(), terminals.end());
    for (int t : tset)
        if (t < 0 || t >= n) throw std::invalid_argument("steiner_subcubic_expand: bad terminal");

    SteinerExpansion out;
    out.path_length = 4ll * n * n;
    out.budget = out.path_length * k + 2ll * n * n;

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    auto new_vertex = [&] {
        labels.emplace_back();
        return static_cast<int>(labels.size()) - 1;
    };
    // Left-filled minimum-depth binary tree with `count` leaves.
    std::function<int(int, std::vector<int>&)> build_tree = [&](int count, std::vector<int>& leaves) {
        int node = new_vertex();
        if (count == 1) {
            leaves.push_back(node);
            return node;
        }
        int left = build_tree((count + 1) / 2, leaves);
        edges.push_back({node, left});
        int right = build_tree(count / 2, leaves);
        edges.push_back({node, right});
        return node;
    };

    std::vector<std::vector<int>> leaves(n);
    std::vector<int> next_leaf(n, 0);
    out.tree_root.resize(n);
    for (int v = 0; v < n; ++v) {
        out.tree_root[v] = build_tree(n, leaves[v]);
        labels[out.tree_root[v]] =
            g.label(v).empty() ? "v" + std::to_string(v + 1) : g.label(v);
    }
    for (const auto& [u, v] : g.edges()) {
        int lu = leaves[u][next_leaf[u]++];
        int lv = leaves[v][next_leaf[v]++];
        out.leaf_joins.push_back({lu, lv});
        int prev = lu;
        for (long long step = 1; step < out.path_length; ++step) {
            int w = new_vertex();
            edges.push_back({prev, w});
            prev = w;
        }
        edges.push_back({prev, lv});
    }
    out.graph = Graph(static_cast<int>(labels.size()), edges, labels);
    for (int t : tset) out.terminals.push_back(out.tree_root[t]);
    if (!is_subcubic(out.graph))
        throw InvariantViolation("steiner_subcubic_expand: expansion is not subcubic");
    return out;
}

BuiltClaim build_claim_instance(ClaimId claim, const ProblemInstance& base) {
    BuiltClaim built;
    long long m = base.graph.edge_count();
    switch (claim) {
        case ClaimId::Is2Sub:
        case ClaimId::Vc2Sub:
            built.transformed.graph = k_subdivide(base.graph, 2);
            built.offset = m;
            break;
        case ClaimId::Ds3Sub:
        case ClaimId::Ids3Sub:
        case ClaimId::Eds3Sub:
            built.transformed.graph = k_subdivide(base.graph, 3);
            built.offset = m;
            break;
        case ClaimId::Oct2Sub:
            built.transformed.graph = k_subdivide(base.graph, 2);
            break;
        case ClaimId::MaxCut2Sub:
            built.transformed.graph = k_subdivide(base.graph, 2);
            built.offset = 2 * m;
            break;
        case ClaimId::Est1Sub:
            if (base.terminals.empty())
                throw std::invalid_argument("EST_1SUB: terminal set is empty");
            built.transformed.graph = k_subdivide(base.graph, 1);
            built.transformed.terminals = base.terminals;
            built.scale = 2;
            break;
        case ClaimId::Emwc1Sub:
            built.transformed.graph = k_subdivide(base.graph, 1);
            built.transformed.terminals = base.terminals;
            break;
        case ClaimId::Nmwc1Sub:
            for (size_t i = 0; i < base.terminals.size(); ++i)
                for (size_t j = i + 1; j < base.terminals.size(); ++j)
                    if (base.graph.has_edge(base.terminals[i], base.terminals[j]))
                        throw std::invalid_argument("NMWC_1SUB: terminals must be non-adjacent");
            built.transformed.graph = k_subdivide(base.graph, 1);
            built.transformed.terminals = base.terminals;
            break;
        case ClaimId::Dp1Sub:
        case ClaimId::Idp1Sub:
            if (!is_subcubic(base.graph))
                throw std::invalid_argument(claim_name(claim) + ": base must be subcubic");
            built.transformed.graph = k_subdivide(base.graph, 1);
            built.transformed.pairs = base.pairs;
            break;
        case ClaimId::PwSubdiv:
            if (!is_subcubic(base.graph))
                throw std::invalid_argument("PW_SUBDIV: base must be subcubic");
            built.transformed.graph = k_subdivide(base.graph, 5);
            break;
        case ClaimId::TwSubdiv:
            built.transformed.graph = k_subdivide(base.graph, 1);
            break;
        case ClaimId::Diam2Sub:
            if (base.graph.empty() || !is_connected(base.graph))
                throw std::invalid_argument("DIAM_2SUB: base must be connected and non-empty");
            built.transformed.graph = k_subdivide(base.graph, 2);
            built.scale = 3;
            built.slack = 2;
            break;
        case ClaimId::NaeOctGadget: {
            auto [gadget, target] = nae_to_oct_gadget(base.cnf);
            built.transformed.graph = std::move(gadget);
            built.transformed.budget = target;
            break;
        }
        case ClaimId::Ioct2SubGadget: {
            auto [gadget, target] = nae_to_oct_gadget(base.cnf);
            built.transformed.graph = k_subdivide(gadget, 2);
            built.transformed.budget = target;
            break;
        }
        case ClaimId::SteinerSubcubic: {
            auto expansion = steiner_subcubic_expand(base.graph, base.terminals, base.budget);
            built.transformed.graph = std::move(expansion.graph);
            built.transformed.terminals = expansion.terminals;
            built.transformed.budget = expansion.budget;
            break;
        }
    }
    return built;
}

ClaimReport verify_claim(ClaimId claim, const ProblemInstance& base,
                         const oracle::SolveBudget& solve_budget,
                         const width::WidthBudget& width_budget) {
    auto start = std::chrono::steady_clock::now();
    ClaimReport report;
    report.claim = claim;
    report.digest = instance_digest(base);
    BuiltClaim built = build_claim_instance(claim, base);

    bool direct_pass = false;
    bool use_direct = false;
    switch (claim) {
        case ClaimId::Is2Sub:
            report.lhs = oracle::max_independent_set(base.graph, solve_budget).value;
            report.rhs = oracle::max_independent_set(built.transformed.graph, solve_budget).value;
            break;
        case ClaimId::Vc2Sub:
            report.lhs = oracle::min_vertex_cover(base.graph, solve_budget).value;
            report.rhs = oracle::min_vertex_cover(built.transformed.graph, solve_budget).value;
            break;
        case ClaimId::Ds3Sub:
            report.lhs = oracle::min_dominating_set(base.graph, oracle::DominationVariant::Plain,
                                                    solve_budget)
                             .value;
            report.rhs = oracle::min_dominating_set(built.transformed.graph,
                                                    oracle::DominationVariant::Plain, solve_budget)
                             .value;
            break;
        case ClaimId::Ids3Sub:
            report.lhs = oracle::min_dominating_set(base.graph,
                                                    oracle::DominationVariant::Independent,
                                                    solve_budget)
                             .value;
            report.rhs = oracle::min_dominating_set(built.transformed.graph,
                                                    oracle::DominationVariant::Independent,
                                                    solve_budget)
                             .value;
            break;
        case ClaimId::Eds3Sub:
            report.lhs = oracle::min_edge_dominating_set(base.graph, solve_budget).value;
            report.rhs = oracle::min_edge_dominating_set(built.transformed.graph, solve_budget).value;
            break;
        case ClaimId::Oct2Sub:
            report.lhs = oracle::min_odd_cycle_transversal(base.graph, false, solve_budget).value;
            report.rhs =
                oracle::min_odd_cycle_transversal(built.transformed.graph, false, solve_budget).value;
            break;
        case ClaimId::MaxCut2Sub:
            report.lhs = oracle::max_cut(base.graph, solve_budget).value;
            report.rhs = oracle::max_cut(built.transformed.graph, solve_budget).value;
            break;
        case ClaimId::Est1Sub:
            report.lhs = oracle::steiner_tree(base.graph, base.terminals, oracle::SteinerMode::Edge,
                                              solve_budget)
                             .value;
            report.rhs = oracle::steiner_tree(built.transformed.graph, built.transformed.terminals,
                                              oracle::SteinerMode::Edge, solve_budget)
                             .value;
            break;
        case ClaimId::Emwc1Sub:
            report.lhs = oracle::multiway_cut_edges(base.graph, base.terminals, solve_budget).value;
            report.rhs = oracle::multiway_cut_edges(built.transformed.graph,
                                                    built.transformed.terminals, solve_budget)
                             .value;
            break;
        case ClaimId::Nmwc1Sub:
            report.lhs = oracle::multiway_cut_nodes(base.graph, base.terminals, solve_budget).value;
            report.rhs = oracle::multiway_cut_nodes(built.transformed.graph,
                                                    built.transformed.terminals, solve_budget)
                             .value;
            break;
        case ClaimId::Dp1Sub:
            report.lhs = oracle::disjoint_paths(base.graph, base.pairs, false, solve_budget)
                             ? 1
                             : 0;
            report.rhs = oracle::disjoint_paths(built.transformed.graph, built.transformed.pairs,
                                                false, solve_budget)
                             ? 1
                             : 0;
            break;
        case ClaimId::Idp1Sub: {
            // Three-way statement: plain on the base, plain on the subdivision,
            // induced on the subdivision all agree.
            long long a = oracle::disjoint_paths(base.graph, base.pairs, false, solve_budget) ? 1 : 0;
            long long b = oracle::disjoint_paths(built.transformed.graph, built.transformed.pairs,
                                                 false, solve_budget)
                              ? 1
                              : 0;
            long long c = oracle::disjoint_paths(built.transformed.graph, built.transformed.pairs,
                                                 true, solve_budget)
                              ? 1
                              : 0;
            report.lhs = a;
            report.rhs = c;
            use_direct = true;
            direct_pass = a == b && b == c;
            break;
        }
        case ClaimId::PwSubdiv:
            report.lhs = width::pathwidth(k_subdivide(base.graph, 2), width_budget).width;
            report.rhs = width::pathwidth(built.transformed.graph, width_budget).width;
            break;
        case ClaimId::TwSubdiv:
            report.lhs = width::treewidth(base.graph, width_budget).width;
            report.rhs = width::treewidth(built.transformed.graph, width_budget).width;
            break;
        case ClaimId::Diam2Sub:
            report.lhs = oracle::diameter_radius(base.graph).diameter;
            report.rhs = oracle::diameter_radius(built.transformed.graph).diameter;
            break;
        case ClaimId::NaeOctGadget: {
            int target = static_cast<int>(built.transformed.budget);
            bool satisfiable = oracle::nae_3sat(base.cnf, solve_budget).has_value();
            int oct =
                oracle::min_odd_cycle_transversal(built.transformed.graph, false, solve_budget).value;
            int ioct =
                oracle::min_odd_cycle_transversal(built.transformed.graph, true, solve_budget).value;
            report.lhs = satisfiable ? 1 : 0;
            report.rhs = (oct == target && ioct == target) ? 1 : 0;
            break;
        }
        case ClaimId::Ioct2SubGadget: {
            auto [gadget, target] = nae_to_oct_gadget(base.cnf);
            (void)target;
            long long a = oracle::min_odd_cycle_transversal(gadget, false, solve_budget).value;
            long long b = oracle::min_odd_cycle_transversal(gadget, true, solve_budget).value;
            long long c =
                oracle::min_odd_cycle_transversal(built.transformed.graph, false, solve_budget).value;
            long long d =
                oracle::min_odd_cycle_transversal(built.transformed.graph, true, solve_budget).value;
            report.lhs = a;
            report.rhs = d;
            use_direct = true;
            direct_pass = a == b && b == c && c == d;
            break;
        }
        case ClaimId::SteinerSubcubic: {
            long long base_opt = oracle::steiner_tree(base.graph, base.terminals,
                                                      oracle::SteinerMode::Edge, solve_budget)
                                     .value;
            long long expanded_opt =
                oracle::steiner_tree(built.transformed.graph, built.transformed.terminals,
                                     oracle::SteinerMode::Edge, solve_budget)
                    .value;
            report.lhs = base_opt <= base.budget ? 1 : 0;
            report.rhs = expanded_opt <= built.transformed.budget ? 1 : 0;
            break;
        }
    }
    if (use_direct) {
        report.pass = direct_pass;
    } else {
        long long low = built.scale * report.lhs + built.offset;
        report.pass = report.rhs >= low && report.rhs <= low + built.slack;
    }
    report.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Graph random_graph(std::mt19937_64& rng, int max_n, int max_m) {
    int n = 1 + static_cast<int>(rng() % std::max(1, max_n));
    std::vector<Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
    int cap = std::min<int>(max_m, static_cast<int>(candidates.size()));
    int m = cap == 0 ? 0 : static_cast<int>(rng() % (cap + 1));
    for (int i = 0; i < m; ++i) {
        int j = i + static_cast<int>(rng() % (candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
    }
    candidates.resize(m);
    return Graph(n, candidates);
}

Graph random_subcubic_graph(std::mt19937_64& rng, int max_n, int max_m) {
    int n = 1 + static_cast<int>(rng() % std::max(1, max_n));
    std::vector<Edge> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) candidates.push_back({u, v});
    for (size_t i = 0; i + 1 < candidates.size(); ++i) {
        size_t j = i + rng() % (candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
    }
    int target = max_m <= 0 ? 0 : static_cast<int>(rng() % (max_m + 1));
    std::vector<int> degree(n, 0);
    std::vector<Edge> edges;
    for (const auto& [u, v] : candidates) {
        if (static_cast<int>(edges.size()) == target) break;
        if (degree[u] < 3 && degree[v] < 3) {
            edges.push_back({u, v});
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph(n, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, int max_n, int max_m) {
    int n_cap = std::max(1, std::min(max_n, max_m + 1));
    int n = 1 + static_cast<int>(rng() % n_cap);
    std::vector<Edge> edges;
    std::set<Edge> present;
    for (int v = 1; v < n; ++v) {
        int parent = static_cast<int>(rng() % v);
        edges.push_back({parent, v});
        present.insert({parent, v});
    }
    std::vector<Edge> extras;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!present.count({u, v})) extras.push_back({u, v});
    int room = std::min<int>(max_m - (n - 1), static_cast<int>(extras.size()));
    int extra = room <= 0 ? 0 : static_cast<int>(rng() % (room + 1));
    for (int i = 0; i < extra; ++i) {
        int j = i + static_cast<int>(rng() % (extras.size() - i));
        std::swap(extras[i], extras[j]);
        edges.push_back(extras[i]);
    }
    return Graph(n, edges);
}

io::Cnf random_occurrence_bounded_cnf(std::mt19937_64& rng, int max_vars, int max_clauses) {
    io::Cnf cnf;
    cnf.vars = 1 + static_cast<int>(rng() % std::max(1, max_vars));
    int clause_cap = std::min(max_clauses, (4 * cnf.vars) / 3);
    int m = clause_cap <= 0 ? 0 : 1 + static_cast<int>(rng() % clause_cap);
    std::vector<int> occurrences(2 * cnf.vars, 0);
    for (int i = 0; i < m; ++i) {
        std::array<int, 3> clause{};
        for (int j = 0; j < 3; ++j) {
            std::vector<int> open;
            for (int slot = 0; slot < 2 * cnf.vars; ++slot)
                if (occurrences[slot] < 2) open.push_back(slot);
            int slot = open[rng() % open.size()];
            ++occurrences[slot];
            int var = slot / 2 + 1;
            clause[j] = slot % 2 == 0 ? var : -var;
        }
        cnf.clauses.push_back(clause);
    }
    return cnf;
}

std::vector<int> random_terminals(std::mt19937_64& rng, const Graph& g, int count,
                                  bool require_nonadjacent) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        size_t j = i + rng() % (order.size() - i);
        std::swap(order[i], order[j]);
    }
    std::vector<int> picked;
    for (int v : order) {
        if (static_cast<int>(picked.size()) == count) break;
        if (require_nonadjacent) {
            bool clash = false;
            for (int t : picked)
                if (g.has_edge(t, v)) clash = true;
            if (clash) continue;
        }
        picked.push_back(v);
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

std::vector<Edge> random_disjoint_pairs(std::mt19937_64& rng, const Graph& g, int count) {
    std::vector<int> order(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
    for (size_t i = 0; i + 1 < order.size(); ++i) {
        size_t j = i + rng() % (order.size() - i);
        std::swap(order[i], order[j]);
    }
    std::vector<Edge> pairs;
    for (int i = 0; i + 1 < 2 * count && i + 1 < static_cast<int>(order.size()); i += 2)
        pairs.push_back({order[i], order[i + 1]});
    return pairs;
}

ProblemInstance random_claim_instance(ClaimId claim, std::mt19937_64& rng,
                                      const SuiteOptions& options) {
    ProblemInstance instance;
    switch (claim) {
        case ClaimId::Is2Sub:
        case ClaimId::Vc2Sub:
        case ClaimId::Ds3Sub:
        case ClaimId::Ids3Sub:
        case ClaimId::Eds3Sub:
        case ClaimId::Oct2Sub:
        case ClaimId::MaxCut2Sub:
        case ClaimId::TwSubdiv:
            instance.graph = random_graph(rng, options.max_n, options.max_m);
            break;
        case ClaimId::PwSubdiv:
            instance.graph = random_subcubic_graph(rng, options.max_n, options.max_m);
            break;
        case ClaimId::Diam2Sub:
            instance.graph = random_connected_graph(rng, options.max_n, options.max_m);
            break;
        case ClaimId::Dp1Sub:
        case ClaimId::Idp1Sub: {
            instance.graph = random_subcubic_graph(rng, options.max_n, options.max_m);
            int want = 1 + static_cast<int>(rng() % 2);
            want = std::min(want, instance.graph.vertex_count() / 2);
            instance.pairs = random_disjoint_pairs(rng, instance.graph, want);
            break;
        }
        case ClaimId::Est1Sub: {
            instance.graph = random_connected_graph(rng, options.max_n, options.max_m);
            int want = std::min(2 + static_cast<int>(rng() % 3), instance.graph.vertex_count());
            instance.terminals = random_terminals(rng, instance.graph, std::max(1, want), false);
            break;
        }
        case ClaimId::Emwc1Sub: {
            do {
                instance.graph = random_graph(rng, options.max_n, options.max_m);
            } while (instance.graph.vertex_count() < 2);
            int want = std::min(2 + static_cast<int>(rng() % 3), instance.graph.vertex_count());
            instance.terminals = random_terminals(rng, instance.graph, want, false);
            break;
        }
        case ClaimId::Nmwc1Sub: {
            for (int attempt = 0;; ++attempt) {
                instance.graph = random_graph(rng, options.max_n, options.max_m);
                if (instance.graph.vertex_count() < 2) continue;
                int want = std::min(2 + static_cast<int>(rng() % 3), instance.graph.vertex_count());
                instance.terminals = random_terminals(rng, instance.graph, want, true);
                if (static_cast<int>(instance.terminals.size()) >= 2) break;
                if (attempt > 1000)
                    throw InvariantViolation("NMWC_1SUB generator failed to find terminals");
            }
            break;
        }
        case ClaimId::NaeOctGadget:
        case ClaimId::Ioct2SubGadget:
            instance.cnf = random_occurrence_bounded_cnf(rng, std::min(options.max_n, 4),
                                                         std::min(options.max_m, 3));
            break;
        case ClaimId::SteinerSubcubic: {
            int n_cap = std::max(2, std::min(options.max_n, 5));
            do {
                instance.graph = random_connected_graph(rng, n_cap, options.max_m);
            } while (instance.graph.vertex_count() < 2);
            int want = std::min(1 + static_cast<int>(rng() % 3), instance.graph.vertex_count());
            instance.terminals = random_terminals(rng, instance.graph, want, false);
            long long opt = oracle::steiner_tree(instance.graph, instance.terminals,
                                                 oracle::SteinerMode::Edge)
                                .value;
            instance.budget = opt + static_cast<long long>(rng() % 3) - 1;
            break;
        }
    }
    return instance;
}

std::vector<ClaimReport> random_suite(ClaimId claim, const SuiteOptions& options,
                                      const oracle::SolveBudget& solve_budget,
                                      const width::WidthBudget& width_budget) {
    std::mt19937_64 rng(options.seed);
    std::vector<ClaimReport> reports;
    for (int trial = 0; trial < options.trials; ++trial) {
        ProblemInstance instance = random_claim_instance(claim, rng, options);
        reports.push_back(verify_claim(claim, instance, solve_budget, width_budget));
    }
    return reports;
}

}  // namespace fsg::reduce
