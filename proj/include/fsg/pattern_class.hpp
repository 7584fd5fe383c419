#pragma once

#include <array>
#include <string>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg::pattern {

// Shape of one connected component: a path, a subdivided claw (one degree-3
// center with three pendant paths), or neither.
struct ComponentKind {
    enum class Kind { Path, SubdividedClaw, Other };
    Kind kind = Kind::Other;
    int path_vertices = 0;        // Path
    std::array<int, 3> legs{};    // SubdividedClaw, edge lengths sorted ascending
    std::string reason;           // Other: "has a cycle", "degree >= 4 vertex",
                                  //        "two degree-3 vertices"
};

// Requires a connected non-empty graph.
ComponentKind classify_component(const Graph& component);

// Membership in the tractable pattern class: non-empty disjoint unions of
// paths and subdivided claws.
struct ClassMembership {
    bool member = false;
    std::vector<std::vector<int>> component_vertices;
    std::vector<ComponentKind> component_kinds;
};
ClassMembership class_membership(const Graph& g);
bool in_tractable_class(const Graph& g);

struct FamilyOptions {
    int max_pattern_vertices = kDefaultPatternVertexCap;
};

// Dichotomy verdict for a finite family of forbidden subgraphs. Tractable as
// soon as one member lies in the tractable class (first index wins); otherwise
// Hard with the subdivision parameters:
//   cycle_span    largest cycle over the family, 1 when all members are forests
//   branch_span   largest distance between two degree->=3 vertices in one
//                 component, 1 when no member has such a pair
//   span          max of the two; k*span-subdivisions of subcubic graphs avoid
//                 the whole family
struct Verdict {
    enum class Kind { Tractable, Hard };
    Kind kind = Kind::Hard;
    int witness_index = -1;  // Tractable: first member inside the class
    int pw_bound = -1;       // Tractable: |V(witness)| - 2
    int cycle_span = 1;      // Hard
    int branch_span = 1;     // Hard
    int span = 1;            // Hard
    bool tractable() const { return kind == Kind::Tractable; }
};
Verdict classify_family(const std::vector<Graph>& family, const FamilyOptions& opts = {});

// k*span-subdivision of a subcubic base; checked to avoid every family member
// before being returned. Requires a Hard family, subcubic base, k >= 1.
Graph hardness_witness(const std::vector<Graph>& family, int k, const Graph& base,
                       const FamilyOptions& opts = {});

// Two degree-3 vertices joined by a path with `distance` edges, each carrying
// two pendant leaves. The smallest forest whose branch_span equals `distance`.
Graph branch_pair_graph(int distance);

// Pan graph: cycle of length cycle_len plus one pendant vertex on it.
Graph pan_graph(int cycle_len);

// Exactly one degree-1 and one degree-3 vertex, everything else degree 2,
// connected: a cycle with a single pendant.
bool is_pan(const Graph& g);

// Pan graph avoiding every member of a Hard family: cycle length
// max(cycle_span + 1, 3). Checked before being returned.
Graph pan_witness(const std::vector<Graph>& family, const FamilyOptions& opts = {});

}  // namespace fsg::pattern
