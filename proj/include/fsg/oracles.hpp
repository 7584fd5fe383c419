#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/graph_io.hpp"

namespace fsg::oracle {

struct SolveBudget {
    int max_vertices = 64;             // vertex-set solvers and path DPs
    int max_slots = 11;                // peak live vertices for path DPs
    long long max_subsets = 50000000;  // guard for increasing-size enumeration
    int max_terminals = 8;             // Steiner terminal-subset DP cap
    int steiner_max_vertices = 2000;
    int max_path_vertices = 26;        // disjoint-paths search cap
    int max_variables = 24;            // assignment enumeration cap
};

struct VertexSetResult {
    int value = 0;
    std::vector<int> vertices;  // sorted, lexicographically smallest optimum
};

struct EdgeSetResult {
    int value = 0;
    std::vector<Edge> edges;  // canonical order, lexicographically smallest optimum
};

struct CutResult {
    int value = 0;
    std::vector<int> side;  // side[v] in {0,1}, side[0] == 0
};

struct SteinerResult {
    long long value = 0;      // edge count (edge mode) or vertex count (node mode)
    std::vector<Edge> edges;  // a minimum tree spanning the terminals
};

struct Metric {
    int diameter = 0;
    int radius = 0;
};

struct PathSet {
    std::vector<std::vector<int>> paths;  // paths[i] runs from pairs[i].first to .second
};

using ListAssignment = std::vector<std::vector<int>>;
using Colouring = std::vector<int>;

enum class DominationVariant { Plain, Independent };
enum class SteinerMode { Edge, Node };

VertexSetResult max_independent_set(const Graph& g, const SolveBudget& budget = {});
VertexSetResult min_vertex_cover(const Graph& g, const SolveBudget& budget = {});
VertexSetResult min_dominating_set(const Graph& g, DominationVariant variant,
                                   const SolveBudget& budget = {});
EdgeSetResult min_edge_dominating_set(const Graph& g, const SolveBudget& budget = {});
VertexSetResult min_odd_cycle_transversal(const Graph& g, bool independent,
                                          const SolveBudget& budget = {});
CutResult max_cut(const Graph& g, const SolveBudget& budget = {});
std::optional<Colouring> list_colouring(const Graph& g, const ListAssignment& lists);
SteinerResult steiner_tree(const Graph& g, const std::vector<int>& terminals, SteinerMode mode,
                           const SolveBudget& budget = {});
EdgeSetResult multiway_cut_edges(const Graph& g, const std::vector<int>& terminals,
                                 const SolveBudget& budget = {});
VertexSetResult multiway_cut_nodes(const Graph& g, const std::vector<int>& terminals,
                                   const SolveBudget& budget = {});
std::optional<PathSet> disjoint_paths(const Graph& g, const std::vector<Edge>& pairs, bool induced,
                                      const SolveBudget& budget = {});
Metric diameter_radius(const Graph& g);
std::optional<std::vector<int>> nae_3sat(const io::Cnf& cnf, const SolveBudget& budget = {});
bool pan_modified_list_colouring(const Graph& g, const ListAssignment& lists);

// Increasing-size enumeration over subsets of {0..universe-1}: smallest
// accepted subset, lexicographic within each size. Every accepts() call
// consumes one step from the guard.
std::optional<std::vector<int>> min_subset(int universe, int max_size,
                                           const std::function<bool(const std::vector<int>&)>& accepts,
                                           long long max_steps);

bool is_independent_set(const Graph& g, const std::vector<int>& vs);
bool is_vertex_cover(const Graph& g, const std::vector<int>& vs);
bool is_dominating_set(const Graph& g, const std::vector<int>& vs);
bool is_edge_dominating_set(const Graph& g, const std::vector<Edge>& edges);
bool is_odd_cycle_transversal(const Graph& g, const std::vector<int>& vs);
long long cut_value(const Graph& g, const std::vector<int>& side);
bool respects_lists(const Graph& g, const ListAssignment& lists, const Colouring& colouring);
bool is_steiner_tree(const Graph& g, const std::vector<int>& terminals,
                     const std::vector<Edge>& edges);
bool is_multiway_cut_edges(const Graph& g, const std::vector<int>& terminals,
                           const std::vector<Edge>& edges);
bool is_multiway_cut_nodes(const Graph& g, const std::vector<int>& terminals,
                           const std::vector<int>& vs);
bool are_disjoint_paths(const Graph& g, const std::vector<Edge>& pairs, const PathSet& paths,
                        bool induced);
bool nae_satisfies(const io::Cnf& cnf, const std::vector<int>& assignment);

}  // namespace fsg::oracle
