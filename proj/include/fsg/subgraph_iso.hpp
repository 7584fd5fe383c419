#pragma once

#include <optional>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg::iso {

// map[h-vertex] = g-vertex. Injective; every edge of h lands on an edge of g.
struct Embedding {
    std::vector<int> map;
};

bool validate_embedding(const Graph& h, const Graph& g, const Embedding& e);

// Backtracking search for h as a (not necessarily induced) subgraph of g.
// h must be non-empty. Deterministic: fixed vertex order, candidates tried in
// ascending id, so the same inputs always yield the same embedding.
std::optional<Embedding> contains_subgraph(const Graph& h, const Graph& g);

struct FamilyFreeness {
    bool subgraph_free = true;
    int violating_index = -1;            // first family member embedded in g
    std::optional<Embedding> embedding;  // witness for that member
};

// Checks g against every family member in order; stops at the first hit.
FamilyFreeness is_family_subgraph_free(const Graph& g, const std::vector<Graph>& family);

}  // namespace fsg::iso
