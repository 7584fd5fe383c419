#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fsg {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

// Finite simple undirected graph over dense vertex ids 0..n-1.
// Invariants: no self-loops, no parallel edges, edge list sorted with u < v.
// Structurally immutable after construction; labels are provenance text and
// do not participate in any structural operation.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::vector<Edge> edges);
    Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    bool empty() const { return n_ == 0; }

    // Label is "" for unlabeled vertices.
    const std::string& label(int v) const;
    void set_label(int v, std::string text);
    bool has_labels() const;
    const std::vector<std::string>& labels() const { return labels_; }

    // Structure and labels both compared.
    bool operator==(const Graph& other) const;
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

// --- named constructions -------------------------------------------------

Graph path_graph(int n);               // P_n, n >= 1
Graph cycle_graph(int n);              // C_n, n >= 3
Graph complete_graph(int n);           // K_n
Graph star_graph(int leaves);          // K_{1,r}: center 0, leaves >= 1
Graph subdivided_claw(int a, int b, int c);  // center 0, leg edge-lengths a,b,c >= 1

// --- operations ----------------------------------------------------------

// Replaces every edge by a path with k internal vertices. k = 0 returns the
// graph unchanged. Original ids are preserved; the j-th internal vertex of the
// i-th canonical edge gets id n + i*k + (j-1) and a label "sub(u,v,j)" naming
// the replaced endpoints (1-based, or their labels when present).
Graph k_subdivide(const Graph& g, int k);

// Vertices of parts[i] are shifted by the total size of parts[0..i-1].
Graph disjoint_union(const std::vector<Graph>& parts);

struct StructStats {
    std::vector<int> degrees;
    int max_degree = 0;
    int component_count = 0;
    int longest_cycle = 0;  // 0 when acyclic
};

inline constexpr int kDefaultPatternVertexCap = 12;

// Degree profile, component count and longest cycle length. The longest-cycle
// search is exhaustive, so graphs above the vertex cap are rejected.
StructStats struct_stats(const Graph& g, int max_vertices = kDefaultPatternVertexCap);

// --- traversal helpers ----------------------------------------------------

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);  // true for the empty graph
std::vector<int> bfs_distances(const Graph& g, int source);  // -1 = unreachable
bool is_bipartite(const Graph& g);
bool is_subcubic(const Graph& g);
int max_degree(const Graph& g);

// Subgraph induced by `vertices` (kept in the given order: new id i maps back
// to vertices[i]). Labels carried over.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

}  // namespace fsg
