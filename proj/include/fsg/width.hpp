#pragma once

#include <string>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg::width {

// Vertex order: order[i] is the vertex placed at position i+1.
struct Layout {
    std::vector<int> order;
};

// Vertex separation of a layout: the maximum, over prefixes, of the number of
// placed vertices that still have a neighbor placed later. Equals pathwidth
// when minimized over layouts. Throws if the layout is not a permutation.
int vertex_separation_of_layout(const Graph& g, const Layout& layout);

struct WidthBudget {
    int max_vertices = 40;   // hard cap on instance size
    int max_width = 6;       // width cap applied above exhaustive_vertices
    int exhaustive_vertices = 20;  // up to here any width is allowed
};

struct PathwidthResult {
    int width = -1;  // -1 for the empty graph
    Layout layout;   // achieves the width
};

// Exact pathwidth by iterative deepening over a prefix-subset search with
// memoized dead states. Components are solved independently (the value is the
// max, the layouts concatenate).
PathwidthResult pathwidth(const Graph& g, const WidthBudget& budget = {});

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;       // bag contents, sorted
    std::vector<std::pair<int, int>> tree_edges;  // indices into bags
    int width = -1;                           // max bag size - 1
};

struct TreewidthResult {
    int width = -1;
    TreeDecomposition decomposition;
};

// Exact treewidth by iterative deepening over elimination orderings with
// memoized dead states; the decomposition is rebuilt from the elimination
// order and always passes validate_tree_decomposition.
TreewidthResult treewidth(const Graph& g, const WidthBudget& budget = {});

struct DecompositionCheck {
    bool valid = true;
    std::string violation;  // first failed condition, human-readable, 1-based ids
};

// Checks: tree shape, vertex coverage, edge coverage, connected occurrence
// intervals, and the width field.
DecompositionCheck validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

}  // namespace fsg::width
