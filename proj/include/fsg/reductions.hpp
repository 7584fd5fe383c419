#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/graph_io.hpp"
#include "fsg/oracles.hpp"
#include "fsg/width.hpp"

namespace fsg::reduce {

enum class ClaimId {
    PwSubdiv,
    TwSubdiv,
    Is2Sub,
    Vc2Sub,
    Ds3Sub,
    Ids3Sub,
    Eds3Sub,
    Oct2Sub,
    Ioct2SubGadget,
    MaxCut2Sub,
    Est1Sub,
    Emwc1Sub,
    Nmwc1Sub,
    Dp1Sub,
    Idp1Sub,
    Diam2Sub,
    NaeOctGadget,
    SteinerSubcubic,
};

const std::vector<ClaimId>& all_claims();
std::string claim_name(ClaimId claim);
std::optional<ClaimId> claim_from_name(const std::string& name);
int claim_subdivision(ClaimId claim);  // 0 when the claim is not a plain k-subdivision statement

struct ProblemInstance {
    Graph graph;
    std::vector<int> terminals;
    std::vector<Edge> pairs;
    io::Cnf cnf;
    long long budget = -1;
};

std::string instance_digest(const ProblemInstance& instance);

struct ClaimReport {
    ClaimId claim;
    std::string digest;
    long long lhs = 0;
    long long rhs = 0;
    bool pass = false;
    double runtime_seconds = 0.0;  // never serialized: reports stay byte-stable
};

// Clause gadget: one edge per variable pair, one triangle per clause, one
// edge per literal occurrence. Second component is the transversal target m.
std::pair<Graph, int> nae_to_oct_gadget(const io::Cnf& cnf);

struct SteinerExpansion {
    Graph graph;
    std::vector<int> terminals;  // roots of the trees of base terminals
    long long budget = 0;        // 4 n^2 k + 2 n^2 for base vertex count n
    std::vector<int> tree_root;  // root vertex per base vertex
    std::vector<Edge> leaf_joins;  // per base edge: the two leaves its path connects
    long long path_length = 0;     // 4 n^2
};

SteinerExpansion steiner_subcubic_expand(const Graph& g, const std::vector<int>& terminals,
                                         long long k);

struct BuiltClaim {
    ProblemInstance transformed;
    // Predicted optimum relation: rhs in [scale*lhs + offset, scale*lhs + offset + slack].
    long long scale = 1;
    long long offset = 0;
    long long slack = 0;
};

BuiltClaim build_claim_instance(ClaimId claim, const ProblemInstance& base);

ClaimReport verify_claim(ClaimId claim, const ProblemInstance& base,
                         const oracle::SolveBudget& solve_budget = {},
                         const width::WidthBudget& width_budget = {});

struct SuiteOptions {
    int trials = 100;
    int max_n = 7;
    int max_m = 10;
    std::uint64_t seed = 1;
};

std::vector<ClaimReport> random_suite(ClaimId claim, const SuiteOptions& options,
                                      const oracle::SolveBudget& solve_budget = {},
                                      const width::WidthBudget& width_budget = {});

// Seeded generators; all sampling uses rng() % k so streams are identical
// across platforms.
Graph random_graph(std::mt19937_64& rng, int max_n, int max_m);
Graph random_subcubic_graph(std::mt19937_64& rng, int max_n, int max_m);
Graph random_connected_graph(std::mt19937_64& rng, int max_n, int max_m);
io::Cnf random_occurrence_bounded_cnf(std::mt19937_64& rng, int max_vars, int max_clauses);
std::vector<int> random_terminals(std::mt19937_64& rng, const Graph& g, int count,
                                  bool require_nonadjacent);
std::vector<Edge> random_disjoint_pairs(std::mt19937_64& rng, const Graph& g, int count);

ProblemInstance random_claim_instance(ClaimId claim, std::mt19937_64& rng,
                                      const SuiteOptions& options);

}  // namespace fsg::reduce
