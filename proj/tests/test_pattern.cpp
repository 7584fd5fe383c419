#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "fsg/errors.hpp"
#include "fsg/graph.hpp"
#include "fsg/pattern_class.hpp"
#include "fsg/subgraph_iso.hpp"
#include "support/brute.hpp"

using namespace fsg;
using pattern::ComponentKind;

TEST_CASE("classify_component") {
    auto claw = pattern::classify_component(star_graph(3));
    CHECK(claw.kind == ComponentKind::Kind::SubdividedClaw);
    CHECK(claw.legs == std::array<int, 3>{1, 1, 1});

    auto single = pattern::classify_component(path_graph(1));
    CHECK(single.kind == ComponentKind::Kind::Path);
    CHECK(single.path_vertices == 1);

    auto p5 = pattern::classify_component(path_graph(5));
    CHECK(p5.kind == ComponentKind::Kind::Path);
    CHECK(p5.path_vertices == 5);

    auto s = pattern::classify_component(subdivided_claw(4, 2, 3));
    CHECK(s.kind == ComponentKind::Kind::SubdividedClaw);
    CHECK(s.legs == std::array<int, 3>{2, 3, 4});  // sorted ascending

    auto two_branches = pattern::classify_component(pattern::branch_pair_graph(1));
    CHECK(two_branches.kind == ComponentKind::Kind::Other);
    CHECK(two_branches.reason == "two degree-3 vertices");

    auto cyclic = pattern::classify_component(cycle_graph(4));
    CHECK(cyclic.kind == ComponentKind::Kind::Other);
    CHECK(cyclic.reason == "has a cycle");

    auto fat = pattern::classify_component(star_graph(4));
    CHECK(fat.kind == ComponentKind::Kind::Other);
    CHECK(fat.reason == "degree >= 4 vertex");

    CHECK_THROWS_AS(pattern::classify_component(Graph()), std::invalid_argument);
    CHECK_THROWS_AS(pattern::classify_component(disjoint_union({path_graph(1), path_graph(1)})),
                    std::invalid_argument);
}

TEST_CASE("tractable class membership") {
    Graph fig1 = disjoint_union(
        {subdivided_claw(2, 3, 4), path_graph(2), path_graph(3), path_graph(4)});
    CHECK(pattern::in_tractable_class(fig1));
    auto detail = pattern::class_membership(fig1);
    CHECK(detail.member);
    REQUIRE(detail.component_kinds.size() == 4);
    CHECK(detail.component_kinds[0].kind == ComponentKind::Kind::SubdividedClaw);
    CHECK(detail.component_kinds[1].kind == ComponentKind::Kind::Path);

    CHECK_FALSE(pattern::in_tractable_class(star_graph(4)));
    CHECK_FALSE(pattern::in_tractable_class(Graph()));
    CHECK_FALSE(pattern::in_tractable_class(cycle_graph(3)));
    CHECK(pattern::in_tractable_class(path_graph(1)));
    CHECK(pattern::in_tractable_class(star_graph(3)));

    // agreement with the catalog-isomorphism definition on every graph with <= 5 vertices
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1u) edges.push_back({u, v});
            Graph g(n, edges);
            CHECK(pattern::in_tractable_class(g) == brute::in_s_by_catalog(g));
        }
    }
}

TEST_CASE("classify_family dichotomy") {
    auto t = pattern::classify_family({path_graph(5)});
    CHECK(t.tractable());
    CHECK(t.witness_index == 0);
    CHECK(t.pw_bound == 3);

    // first member inside the class wins
    auto second = pattern::classify_family({star_graph(4), path_graph(2)});
    CHECK(second.tractable());
    CHECK(second.witness_index == 1);
    CHECK(second.pw_bound == 0);

    auto hard = pattern::classify_family({star_graph(4), cycle_graph(3)});
    CHECK_FALSE(hard.tractable());
    CHECK(hard.cycle_span == 3);
    CHECK(hard.branch_span == 1);
    CHECK(hard.span == 3);

    auto branch = pattern::classify_family({pattern::branch_pair_graph(1)});
    CHECK_FALSE(branch.tractable());
    CHECK(branch.cycle_span == 1);
    CHECK(branch.branch_span == 1);
    CHECK(branch.span == 1);

    auto c5 = pattern::classify_family({cycle_graph(5)});
    CHECK_FALSE(c5.tractable());
    CHECK(c5.cycle_span == 5);
    CHECK(c5.span == 5);

    auto far = pattern::classify_family({pattern::branch_pair_graph(3)});
    CHECK(far.branch_span == 3);
    CHECK(far.span == 3);

    CHECK_THROWS_AS(pattern::classify_family({}), std::invalid_argument);
    CHECK_THROWS_AS(pattern::classify_family({path_graph(13)}), BudgetExceeded);
    pattern::FamilyOptions wide;
    wide.max_pattern_vertices = 20;
    CHECK_NOTHROW(pattern::classify_family({path_graph(13)}, wide));
}

TEST_CASE("hardness_witness") {
    // span 1 family: witness is the 2-subdivision of K4
    Graph w = pattern::hardness_witness({star_graph(4)}, 2, complete_graph(4));
    CHECK(w.vertex_count() == 16);
    CHECK(w.edge_count() == 18);
    CHECK_FALSE(iso::contains_subgraph(star_graph(4), w).has_value());

    // span 3 family: k = 1 gives the 3-subdivision
    Graph w3 = pattern::hardness_witness({star_graph(4), cycle_graph(3)}, 1, complete_graph(4));
    CHECK(w3.vertex_count() == 4 + 6 * 3);

    CHECK_THROWS_AS(pattern::hardness_witness({path_graph(2)}, 1, complete_graph(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pattern::hardness_witness({star_graph(4)}, 0, complete_graph(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(pattern::hardness_witness({star_graph(4)}, 1, star_graph(4)),
                    std::invalid_argument);
}

TEST_CASE("branch_pair_graph") {
    for (int d : {1, 2, 3}) {
        Graph h = pattern::branch_pair_graph(d);
        CHECK(h.vertex_count() == 5 + d);
        CHECK(h.edge_count() == 4 + d);
        int branch_a = -1, branch_b = -1;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) == 3) (branch_a == -1 ? branch_a : branch_b) = v;
        REQUIRE(branch_b != -1);
        CHECK(bfs_distances(h, branch_a)[branch_b] == d);
    }
    CHECK_THROWS_AS(pattern::branch_pair_graph(0), std::invalid_argument);
}

TEST_CASE("pan graphs") {
    Graph pan4 = pattern::pan_graph(4);
    CHECK(pan4.vertex_count() == 5);
    CHECK(pan4.edge_count() == 5);
    CHECK(pattern::is_pan(pan4));
    CHECK(pattern::is_pan(pattern::pan_graph(9)));

    CHECK_FALSE(pattern::is_pan(cycle_graph(5)));
    CHECK_FALSE(pattern::is_pan(path_graph(4)));
    CHECK_FALSE(pattern::is_pan(complete_graph(4)));
    // tail of length 2 is no longer a pan: the pendant must sit on the cycle
    CHECK_FALSE(pattern::is_pan(k_subdivide(pattern::pan_graph(3), 1)));

    Graph pw = pattern::pan_witness({cycle_graph(4)});
    CHECK(pattern::is_pan(pw));
    CHECK(pw.vertex_count() == 6);  // cycle length 5 plus pendant
    CHECK_FALSE(iso::contains_subgraph(cycle_graph(4), pw).has_value());

    CHECK_THROWS_AS(pattern::pan_witness({path_graph(2)}), std::invalid_argument);
    CHECK_THROWS_AS(pattern::pan_graph(2), std::invalid_argument);
}
