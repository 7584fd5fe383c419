// Acceptance gate: one line per criterion, exit code = number of failures.
// Every threshold (trial counts, size caps, seeds, budgets) is pinned here.
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fsg/errors.hpp"
#include "fsg/graph.hpp"
#include "fsg/oracles.hpp"
#include "fsg/pattern_class.hpp"
#include "fsg/reductions.hpp"
#include "fsg/subgraph_iso.hpp"
#include "fsg/width.hpp"
#include "support/brute.hpp"

using namespace fsg;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kSeed = 20260816;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::vector<Graph> all_graphs_on(int n) {
    std::vector<Graph> out;
    int pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> edges;
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1u) edges.push_back({u, v});
        out.emplace_back(n, edges);
    }
    return out;
}

// ---------------------------------------------------------------------------
// 1. Tractable-class recognizer vs catalog-isomorphism definition, every graph
//    on up to 7 vertices. Full enumeration: degree sequences do not separate
//    non-isomorphic graphs, so no prefilter-based dedup is sound.
bool criterion1() {
    auto start = Clock::now();
    long long checked = 0, mismatches = 0;
    for (int n = 0; n <= 7; ++n) {
        int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            std::vector<Edge> edges;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1u) edges.push_back({u, v});
            Graph g(n, edges);
            ++checked;
            if (pattern::in_tractable_class(g) != brute::in_s_by_catalog(g)) ++mismatches;
        }
    }
    bool pass = mismatches == 0;
    report(1, pass,
           std::to_string(checked) + " graphs, " + std::to_string(mismatches) +
               " mismatches, " + std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 2. Dichotomy corpus verdicts.
bool criterion2() {
    auto start = Clock::now();
    pattern::FamilyOptions wide;
    wide.max_pattern_vertices = 20;  // the four-component member has 19 vertices
    Graph fig = disjoint_union(
        {subdivided_claw(2, 3, 4), path_graph(2), path_graph(3), path_graph(4)});
    int bad = 0;
    auto expect_tractable = [&](const std::vector<Graph>& family, int pw_bound) {
        auto v = pattern::classify_family(family, wide);
        if (!v.tractable() || v.pw_bound != pw_bound) ++bad;
    };
    auto expect_hard = [&](const std::vector<Graph>& family, int span) {
        auto v = pattern::classify_family(family, wide);
        if (v.tractable() || v.span != span) ++bad;
    };
    expect_tractable({path_graph(5)}, 3);
    expect_tractable({star_graph(3)}, 2);
    expect_tractable({fig}, 17);
    expect_hard({star_graph(4)}, 1);
    expect_hard({cycle_graph(3), star_graph(4)}, 3);
    expect_hard({pattern::branch_pair_graph(1)}, 1);
    expect_hard({cycle_graph(5)}, 5);
    bool pass = bad == 0;
    report(2, pass,
           "7 families, " + std::to_string(bad) + " wrong verdicts, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 3. Hardness witnesses stay family-free: 50 seeded subcubic bases (n <= 10)
//    per Hard corpus family, k in {1,2,3}.
bool criterion3() {
    auto start = Clock::now();
    std::vector<std::vector<Graph>> families = {
        {star_graph(4)},
        {cycle_graph(3), star_graph(4)},
        {pattern::branch_pair_graph(1)},
        {cycle_graph(5)},
    };
    std::mt19937_64 rng(kSeed);
    int built = 0, failures = 0;
    for (const auto& family : families) {
        for (int i = 0; i < 50; ++i) {
            Graph base;
            do {
                base = reduce::random_subcubic_graph(rng, 10, 13);
            } while (base.empty());
            for (int k = 1; k <= 3; ++k) {
                ++built;
                try {
                    Graph witness = pattern::hardness_witness(family, k, base);
                    auto freeness = iso::is_family_subgraph_free(witness, family);
                    if (!freeness.subgraph_free) ++failures;
                } catch (const std::exception&) {
                    ++failures;
                }
            }
        }
    }
    bool pass = failures == 0;
    report(3, pass,
           std::to_string(built) + " witnesses, " + std::to_string(failures) + " failures, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 4. Width invariance under subdivision: TW_SUBDIV on a 200-graph seeded
//    sample (n <= 7), PW_SUBDIV on every subcubic base with <= 5 vertices
//    (deduplicated by isomorphism), width budget 4.
bool criterion4() {
    auto start = Clock::now();
    reduce::SuiteOptions tw_options;
    tw_options.trials = 200;
    tw_options.max_n = 7;
    tw_options.max_m = 10;
    tw_options.seed = kSeed;
    int tw_failures = 0;
    for (const auto& r : reduce::random_suite(reduce::ClaimId::TwSubdiv, tw_options))
        if (!r.pass) ++tw_failures;

    width::WidthBudget budget;
    budget.max_vertices = 40;
    budget.max_width = 4;
    budget.exhaustive_vertices = 20;
    std::vector<Graph> bases;
    for (int n = 1; n <= 5; ++n)
        for (Graph& g : all_graphs_on(n)) {
            if (!is_subcubic(g)) continue;
            bool dup = false;
            for (const Graph& seen : bases)
                if (brute::isomorphic(g, seen)) dup = true;
            if (!dup) bases.push_back(std::move(g));
        }
    int pw_failures = 0;
    for (const Graph& base : bases) {
        reduce::ProblemInstance instance;
        instance.graph = base;
        auto r = reduce::verify_claim(reduce::ClaimId::PwSubdiv, instance, {}, budget);
        if (!r.pass) ++pw_failures;
    }
    bool pass = tw_failures == 0 && pw_failures == 0;
    report(4, pass,
           "tw 200 trials " + std::to_string(tw_failures) + " failures; pw " +
               std::to_string(bases.size()) + " subcubic bases " +
               std::to_string(pw_failures) + " failures, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 5. The twelve subdivision claims, 100 seeded trials each (n <= 7, m <= 10).
bool criterion5() {
    auto start = Clock::now();
    using reduce::ClaimId;
    std::vector<ClaimId> claims = {
        ClaimId::Is2Sub,  ClaimId::Vc2Sub,   ClaimId::Ds3Sub,  ClaimId::Ids3Sub,
        ClaimId::Eds3Sub, ClaimId::Oct2Sub,  ClaimId::MaxCut2Sub, ClaimId::Est1Sub,
        ClaimId::Emwc1Sub, ClaimId::Nmwc1Sub, ClaimId::Dp1Sub,  ClaimId::Idp1Sub,
    };
    reduce::SuiteOptions options;
    options.trials = 100;
    options.max_n = 7;
    options.max_m = 10;
    options.seed = kSeed;
    int failures = 0;
    std::string failing;
    for (ClaimId claim : claims) {
        int bad = 0;
        for (const auto& r : reduce::random_suite(claim, options))
            if (!r.pass) ++bad;
        if (bad > 0) {
            failures += bad;
            failing += " " + reduce::claim_name(claim);
        }
    }
    bool pass = failures == 0;
    report(5, pass,
           "12 claims x 100 trials, " + std::to_string(failures) + " failures" +
               (failing.empty() ? "" : ":" + failing) + ", " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 6. Diameter growth: 200 seeded connected trials (n <= 10), 3d <= d' <= 3d+2,
//    both extremes attained (the two-vertex path pins 3d, the complete graph
//    on four vertices pins 3d+2).
bool criterion6() {
    auto start = Clock::now();
    reduce::SuiteOptions options;
    options.trials = 200;
    options.max_n = 10;
    options.max_m = 10;
    options.seed = kSeed;
    int failures = 0, low = 0, high = 0;
    for (const auto& r : reduce::random_suite(reduce::ClaimId::Diam2Sub, options)) {
        if (!r.pass) ++failures;
        if (r.rhs == 3 * r.lhs) ++low;
        if (r.rhs == 3 * r.lhs + 2) ++high;
    }
    reduce::ProblemInstance p2;
    p2.graph = path_graph(2);
    auto tight_low = reduce::verify_claim(reduce::ClaimId::Diam2Sub, p2);
    if (tight_low.pass && tight_low.rhs == 3 * tight_low.lhs) ++low;
    else ++failures;
    reduce::ProblemInstance k4;
    k4.graph = complete_graph(4);
    auto tight_high = reduce::verify_claim(reduce::ClaimId::Diam2Sub, k4);
    if (tight_high.pass && tight_high.rhs == 3 * tight_high.lhs + 2) ++high;
    else ++failures;
    bool pass = failures == 0 && low > 0 && high > 0;
    report(6, pass,
           "202 trials, " + std::to_string(failures) + " failures, offset 0 attained " +
               std::to_string(low) + "x, offset 2 attained " + std::to_string(high) + "x, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 7. Clause gadget equivalence on every formula with up to 4 variables, up to
//    3 clauses, and each literal occurring at most twice. Clauses are
//    multisets of three literals; formulas are multisets of clauses.
bool criterion7() {
    auto start = Clock::now();
    long long formulas = 0, failures = 0;
    for (int vars = 1; vars <= 4; ++vars) {
        std::vector<int> literals;
        for (int v = 1; v <= vars; ++v) {
            literals.push_back(v);
            literals.push_back(-v);
        }
        auto slot = [](int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); };
        // legal clause multisets l1 <= l2 <= l3 (no literal three times)
        std::vector<std::array<int, 3>> clauses;
        for (size_t a = 0; a < literals.size(); ++a)
            for (size_t b = a; b < literals.size(); ++b)
                for (size_t c = b; c < literals.size(); ++c) {
                    std::array<int, 3> clause = {literals[a], literals[b], literals[c]};
                    std::vector<int> count(2 * vars, 0);
                    bool ok = true;
                    for (int lit : clause)
                        if (++count[slot(lit)] > 2) ok = false;
                    if (ok) clauses.push_back(clause);
                }

        auto occurrence_ok = [&](const std::vector<std::array<int, 3>>& picked) {
            std::vector<int> count(2 * vars, 0);
            for (const auto& clause : picked)
                for (int lit : clause)
                    if (++count[slot(lit)] > 2) return false;
            return true;
        };
        auto check_formula = [&](const std::vector<std::array<int, 3>>& picked) {
            io::Cnf cnf;
            cnf.vars = vars;
            cnf.clauses = picked;
            ++formulas;
            auto [gadget, target] = reduce::nae_to_oct_gadget(cnf);
            bool sat = oracle::nae_3sat(cnf).has_value();
            bool sat_brute = false;
            for (unsigned mask = 0; mask < (1u << vars) && !sat_brute; ++mask) {
                std::vector<int> assignment(vars);
                for (int i = 0; i < vars; ++i) assignment[i] = mask >> i & 1u;
                sat_brute = oracle::nae_satisfies(cnf, assignment);
            }
            int oct = oracle::min_odd_cycle_transversal(gadget, false).value;
            int ioct = oracle::min_odd_cycle_transversal(gadget, true).value;
            int m = static_cast<int>(picked.size());
            bool ok = is_subcubic(gadget) && target == m && sat == sat_brute &&
                      (sat == (oct == m)) && (sat == (ioct == m));
            if (!ok) ++failures;
        };

        check_formula({});
        for (size_t i = 0; i < clauses.size(); ++i) {
            check_formula({clauses[i]});
            for (size_t j = i; j < clauses.size(); ++j) {
                if (!occurrence_ok({clauses[i], clauses[j]})) continue;
                check_formula({clauses[i], clauses[j]});
                for (size_t k = j; k < clauses.size(); ++k) {
                    if (!occurrence_ok({clauses[i], clauses[j], clauses[k]})) continue;
                    check_formula({clauses[i], clauses[j], clauses[k]});
                }
            }
        }
    }
    bool pass = failures == 0;
    report(7, pass,
           std::to_string(formulas) + " formulas, " + std::to_string(failures) + " failures, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 8. Steiner expansion decision transfer: every connected base with <= 5
//    vertices (up to isomorphism), every terminal set of size 1..3, budgets
//    k in {opt-1, opt, opt+1}; the budget formula is re-checked verbatim.
bool criterion8() {
    auto start = Clock::now();
    std::vector<Graph> bases;
    for (int n = 2; n <= 5; ++n)
        for (Graph& g : all_graphs_on(n)) {
            if (!is_connected(g)) continue;
            bool dup = false;
            for (const Graph& seen : bases)
                if (brute::isomorphic(g, seen)) dup = true;
            if (!dup) bases.push_back(std::move(g));
        }
    long long instances = 0, failures = 0;
    for (const Graph& base : bases) {
        int n = base.vertex_count();
        std::vector<std::vector<int>> terminal_sets;
        for (int a = 0; a < n; ++a) {
            terminal_sets.push_back({a});
            for (int b = a + 1; b < n; ++b) {
                terminal_sets.push_back({a, b});
                for (int c = b + 1; c < n; ++c) terminal_sets.push_back({a, b, c});
            }
        }
        for (const auto& terminals : terminal_sets) {
            long long opt =
                oracle::steiner_tree(base, terminals, oracle::SteinerMode::Edge).value;
            for (long long k : {opt - 1, opt, opt + 1}) {
                ++instances;
                auto expansion = reduce::steiner_subcubic_expand(base, terminals, k);
                bool formula_ok =
                    expansion.budget == 4LL * n * n * k + 2LL * n * n &&
                    expansion.path_length == 4LL * n * n && is_subcubic(expansion.graph);
                reduce::ProblemInstance instance;
                instance.graph = base;
                instance.terminals = terminals;
                instance.budget = k;
                auto r = reduce::verify_claim(reduce::ClaimId::SteinerSubcubic, instance);
                if (!formula_ok || !r.pass) ++failures;
            }
        }
    }
    bool pass = failures == 0;
    report(8, pass,
           std::to_string(bases.size()) + " bases, " + std::to_string(instances) +
               " instances, " + std::to_string(failures) + " failures, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 9. Pathwidth bound for tractable families: 50 rejection-sampled
//    family-subgraph-free graphs (n <= 12) per corpus family stay within
//    pathwidth |V(H)| - 2 for the witness member H.
bool criterion9() {
    auto start = Clock::now();
    pattern::FamilyOptions wide;
    wide.max_pattern_vertices = 20;
    Graph fig = disjoint_union(
        {subdivided_claw(2, 3, 4), path_graph(2), path_graph(3), path_graph(4)});
    std::vector<std::vector<Graph>> families = {{path_graph(5)}, {star_graph(3)}, {fig}};
    std::mt19937_64 rng(kSeed);
    int sampled = 0, failures = 0, exhausted = 0;
    for (const auto& family : families) {
        auto verdict = pattern::classify_family(family, wide);
        if (!verdict.tractable()) {
            ++failures;
            continue;
        }
        int bound = verdict.pw_bound;
        int accepted = 0;
        long long attempts = 0;
        while (accepted < 50 && attempts < 200000) {
            ++attempts;
            Graph g = reduce::random_graph(rng, 12, 16);
            if (g.empty()) continue;
            if (!iso::is_family_subgraph_free(g, family).subgraph_free) continue;
            ++accepted;
            ++sampled;
            if (width::pathwidth(g).width > bound) ++failures;
        }
        if (accepted < 50) ++exhausted;
    }
    bool pass = failures == 0 && exhausted == 0;
    report(9, pass,
           std::to_string(sampled) + " accepted samples over 3 families, " +
               std::to_string(failures) + " bound violations, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

// ---------------------------------------------------------------------------
// 10. Pan family properties: subdividing leaves the class, every pan is
//     3-colourable, and the pan-aware list-colouring decision matches its
//     definition on a 50-case seeded suite.
bool criterion10() {
    auto start = Clock::now();
    int failures = 0;
    for (int cycle = 3; cycle <= 12; ++cycle) {
        Graph pan = pattern::pan_graph(cycle);
        if (!pattern::is_pan(pan)) ++failures;
        oracle::ListAssignment full(pan.vertex_count(), {1, 2, 3});
        if (!oracle::list_colouring(pan, full)) ++failures;  // 3-colourable
        for (int p = 1; p <= 3; ++p)
            if (pattern::is_pan(k_subdivide(pan, p))) ++failures;  // subdivision exits
    }

    std::mt19937_64 rng(kSeed);
    int agreements = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Graph g;
        if (rng() % 2 == 0) {
            Graph extra = reduce::random_graph(rng, 5, 6);
            Graph pan = pattern::pan_graph(3 + static_cast<int>(rng() % 10));
            g = extra.empty() ? pan : disjoint_union({pan, extra});
        } else {
            g = reduce::random_graph(rng, 8, 10);
            if (g.empty()) g = path_graph(1);
        }
        oracle::ListAssignment lists(g.vertex_count());
        for (auto& list : lists) {
            unsigned mask = 1 + rng() % 7;
            for (int colour = 1; colour <= 3; ++colour)
                if (mask >> (colour - 1) & 1u) list.push_back(colour);
        }
        bool by_definition = false;
        for (const auto& comp : connected_components(g))
            if (pattern::is_pan(induced_subgraph(g, comp))) by_definition = true;
        by_definition = by_definition && oracle::list_colouring(g, lists).has_value();
        if (oracle::pan_modified_list_colouring(g, lists) == by_definition) ++agreements;
        else ++failures;
    }
    bool pass = failures == 0;
    report(10, pass,
           "10 pans x 3 subdivisions, 50 suite cases (" + std::to_string(agreements) +
               " agree), " + std::to_string(failures) + " failures, " +
               std::to_string(seconds_since(start)).substr(0, 5) + "s");
    return pass;
}

}  // namespace

int main() {
    int failures = 0;
    failures += criterion1() ? 0 : 1;
    failures += criterion2() ? 0 : 1;
    failures += criterion3() ? 0 : 1;
    failures += criterion4() ? 0 : 1;
    failures += criterion5() ? 0 : 1;
    failures += criterion6() ? 0 : 1;
    failures += criterion7() ? 0 : 1;
    failures += criterion8() ? 0 : 1;
    failures += criterion9() ? 0 : 1;
    failures += criterion10() ? 0 : 1;
    std::printf("%d/10 criteria passed\n", 10 - failures);
    return failures;
}
