// Command-line front end: classification, transformation, solving, width
// computation, and claim verification with machine-readable reports.
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fsg/errors.hpp"
#include "fsg/graph.hpp"
#include "fsg/graph_io.hpp"
#include "fsg/oracles.hpp"
#include "fsg/pattern_class.hpp"
#include "fsg/reductions.hpp"
#include "fsg/subgraph_iso.hpp"
#include "fsg/width.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using ordered_json = nlohmann::ordered_json;
using fsg::Edge;
using fsg::Graph;

// Accumulates the report as ordered key/value lines plus a JSON mirror.
// Artifact commands (subdivide, gadget, generate) instead emit a graph or
// formula file with the report folded into leading "c key: value" comments.
struct Report {
    bool json = false;
    std::string out_path;
    std::vector<std::pair<std::string, std::string>> lines;
    ordered_json payload = ordered_json::object();

    void add(const std::string& key, const std::string& value) {
        lines.push_back({key, value});
        payload[key] = value;
    }
    void add_int(const std::string& key, long long value) {
        lines.push_back({key, std::to_string(value)});
        payload[key] = value;
    }

    std::string text() const {
        std::ostringstream out;
        for (const auto& [k, v] : lines) out << k << ": " << v << "\n";
        return out.str();
    }

    void emit_text(const std::string& body) const {
        if (out_path.empty())
            std::cout << body;
        else
            fsg::io::write_file(out_path, body);
    }

    // Report commands: key:value lines, or the JSON mirror.
    void emit() const { emit_text(json ? payload.dump(2) + "\n" : text()); }

    // Artifact commands: `serialized` is a graph/cnf/terminal file; the report
    // lines ride along as comments after its "c format 1" head line.
    void emit_artifact(const std::string& serialized) const {
        if (json) {
            emit_text(payload.dump(2) + "\n");
            return;
        }
        size_t head = serialized.find('\n');
        head = head == std::string::npos ? serialized.size() : head + 1;
        std::ostringstream out;
        out << serialized.substr(0, head);
        for (const auto& [k, v] : lines) out << "c " << k << ": " << v << "\n";
        out << serialized.substr(head);
        emit_text(out.str());
    }
};

std::string join_argv(int argc, char** argv) {
    std::string joined;
    for (int i = 0; i < argc; ++i) {
        if (i) joined += " ";
        joined += argv[i];
    }
    return joined;
}

std::string g_command;

void stamp(Report& report) {
    report.add("command", g_command);
    report.add("version", kVersion);
}

std::string load_input(Report& report, const std::string& path) {
    std::string text = fsg::io::read_file(path);
    report.add("digest " + path, fsg::io::digest(text));
    return text;
}

std::string ids_1based(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i] + 1;
    return out.str();
}

std::string edges_1based(const std::vector<Edge>& edges) {
    std::ostringstream out;
    for (size_t i = 0; i < edges.size(); ++i)
        out << (i ? " " : "") << edges[i].first + 1 << "-" << edges[i].second + 1;
    return out.str();
}

std::string plain_ints(const std::vector<int>& vs) {
    std::ostringstream out;
    for (size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    return out.str();
}

std::vector<int> parse_id_list(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::vector<int> out;
    int v;
    while (in >> v) {
        if (v < 1 || v > vertex_count)
            throw fsg::ParseError("certificate: vertex " + std::to_string(v) + " out of range");
        out.push_back(v - 1);
    }
    return out;
}

std::vector<Edge> parse_edge_list(const std::string& text, int vertex_count) {
    std::istringstream in(text);
    std::vector<Edge> out;
    std::string token;
    while (in >> token) {
        size_t dash = token.find('-');
        if (dash == std::string::npos)
            throw fsg::ParseError("certificate: malformed edge '" + token + "'");
        int u = std::stoi(token.substr(0, dash));
        int v = std::stoi(token.substr(dash + 1));
        if (u < 1 || v < 1 || u > vertex_count || v > vertex_count)
            throw fsg::ParseError("certificate: edge endpoint out of range in '" + token + "'");
        out.push_back({std::min(u, v) - 1, std::max(u, v) - 1});
    }
    return out;
}

// A certificate file is a previously emitted solve report; keys before the
// first ':' on each line, "path k" lines collected in order.
struct CertData {
    std::map<std::string, std::string> kv;
    std::vector<std::string> path_lines;
};

CertData parse_cert(const std::string& text) {
    CertData cert;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = line.substr(0, colon);
        std::string value = colon + 2 <= line.size() ? line.substr(colon + 2) : "";
        if (key.rfind("path ", 0) == 0)
            cert.path_lines.push_back(value);
        else
            cert.kv.emplace(key, value);
    }
    return cert;
}

const std::string& cert_field(const CertData& cert, const std::string& key) {
    auto it = cert.kv.find(key);
    if (it == cert.kv.end()) throw fsg::ParseError("certificate: missing '" + key + "' line");
    return it->second;
}

// ---------------------------------------------------------------------------

struct ClassifyArgs {
    std::string family_path;
    int max_pattern_n = fsg::kDefaultPatternVertexCap;
};

int run_classify(const ClassifyArgs& args, Report& report) {
    stamp(report);
    auto family = fsg::io::parse_family(load_input(report, args.family_path));
    fsg::pattern::FamilyOptions opts;
    opts.max_pattern_vertices = args.max_pattern_n;
    auto verdict = fsg::pattern::classify_family(family, opts);
    if (verdict.tractable()) {
        report.add("verdict", "tractable");
        report.add_int("witness", verdict.witness_index);
        report.add_int("pw_bound", verdict.pw_bound);
    } else {
        report.add("verdict", "hard");
        report.add_int("cycle_span", verdict.cycle_span);
        report.add_int("branch_span", verdict.branch_span);
        report.add_int("span", verdict.span);
    }
    report.emit();
    return 0;
}

struct SfreeArgs {
    std::string family_path;
    std::string graph_path;
};

int run_sfree(const SfreeArgs& args, Report& report) {
    stamp(report);
    auto family = fsg::io::parse_family(load_input(report, args.family_path));
    auto g = fsg::io::parse_graph(load_input(report, args.graph_path));
    auto freeness = fsg::iso::is_family_subgraph_free(g, family);
    report.add("sfree", freeness.subgraph_free ? "yes" : "no");
    if (!freeness.subgraph_free) {
        report.add_int("member", freeness.violating_index);
        report.add("embedding", ids_1based(freeness.embedding->map));
    }
    report.emit();
    return 0;
}

struct SubdivideArgs {
    std::string graph_path;
    int k = 1;
};

int run_subdivide(const SubdivideArgs& args, Report& report) {
    stamp(report);
    auto g = fsg::io::parse_graph(load_input(report, args.graph_path));
    if (args.k < 0) throw std::invalid_argument("subdivide: k must be >= 0");
    auto out = fsg::k_subdivide(g, args.k);
    report.add_int("k", args.k);
    report.add_int("vertices", out.vertex_count());
    report.add_int("edges", out.edge_count());
    report.payload["graph"] = fsg::io::serialize_graph(out);
    report.emit_artifact(fsg::io::serialize_graph(out));
    return 0;
}

struct WidthArgs {
    std::string graph_path;
    bool use_pathwidth = false;
    bool use_treewidth = false;
    fsg::width::WidthBudget budget;
};

int run_width(const WidthArgs& args, Report& report) {
    stamp(report);
    auto g = fsg::io::parse_graph(load_input(report, args.graph_path));
    if (args.use_pathwidth == args.use_treewidth)
        throw std::invalid_argument("width: pass exactly one of --pathwidth/--treewidth");
    if (args.use_pathwidth) {
        auto result = fsg::width::pathwidth(g, args.budget);
        report.add_int("pathwidth", result.width);
        report.add("layout", ids_1based(result.layout.order));
    } else {
        auto result = fsg::width::treewidth(g, args.budget);
        auto check = fsg::width::validate_tree_decomposition(g, result.decomposition);
        if (!check.valid)
            throw fsg::InvariantViolation("width: produced decomposition failed validation: " +
                                          check.violation);
        report.add_int("treewidth", result.width);
        report.add_int("bags", static_cast<long long>(result.decomposition.bags.size()));
        ordered_json bag_array = ordered_json::array();
        for (size_t i = 0; i < result.decomposition.bags.size(); ++i) {
            report.lines.push_back(
                {"bag " + std::to_string(i + 1), ids_1based(result.decomposition.bags[i])});
            ordered_json bag = ordered_json::array();
            for (int v : result.decomposition.bags[i]) bag.push_back(v + 1);
            bag_array.push_back(bag);
        }
        report.payload["bag_contents"] = bag_array;
        ordered_json tree_array = ordered_json::array();
        for (const auto& [a, b] : result.decomposition.tree_edges) {
            report.lines.push_back(
                {"tree", std::to_string(a + 1) + " " + std::to_string(b + 1)});
            tree_array.push_back(ordered_json::array({a + 1, b + 1}));
        }
        report.payload["tree_edges"] = tree_array;
    }
    report.emit();
    return 0;
}

struct SolveArgs {
    std::string problem;
    std::string graph_path;
    std::string lists_path;
    std::string terminals_path;
    std::string cnf_path;
    std::string mode = "edge";
    std::string check_path;
    fsg::oracle::SolveBudget budget;
};

int check_certificate(const SolveArgs& args, Report& report, const Graph& g,
                      const fsg::io::TerminalData& terminals, const fsg::io::Cnf& cnf,
                      const fsg::oracle::ListAssignment& lists) {
    CertData cert = parse_cert(fsg::io::read_file(args.check_path));
    report.add("digest " + args.check_path, fsg::io::digest(fsg::io::read_file(args.check_path)));
    std::string why;
    bool ok = true;
    auto fail = [&](const std::string& reason) {
        ok = false;
        if (why.empty()) why = reason;
    };
    const std::string& p = args.problem;
    int n = g.vertex_count();

    auto check_vertex_set = [&](auto&& feasible, const char* what) {
        auto vs = parse_id_list(cert_field(cert, "vertices"), n);
        long long value = std::stoll(cert_field(cert, "value"));
        if (!feasible(vs)) fail(std::string("set is not ") + what);
        if (static_cast<long long>(vs.size()) != value) fail("value does not match set size");
    };

    if (p == "independent-set") {
        check_vertex_set([&](const std::vector<int>& vs) { return fsg::oracle::is_independent_set(g, vs); },
                         "independent");
    } else if (p == "vertex-cover") {
        check_vertex_set([&](const std::vector<int>& vs) { return fsg::oracle::is_vertex_cover(g, vs); },
                         "a vertex cover");
    } else if (p == "dominating-set") {
        check_vertex_set([&](const std::vector<int>& vs) { return fsg::oracle::is_dominating_set(g, vs); },
                         "dominating");
    } else if (p == "independent-dominating-set") {
        check_vertex_set(
            [&](const std::vector<int>& vs) {
                return fsg::oracle::is_dominating_set(g, vs) && fsg::oracle::is_independent_set(g, vs);
            },
            "an independent dominating set");
    } else if (p == "odd-cycle-transversal") {
        check_vertex_set(
            [&](const std::vector<int>& vs) { return fsg::oracle::is_odd_cycle_transversal(g, vs); },
            "an odd cycle transversal");
    } else if (p == "independent-odd-cycle-transversal") {
        if (cert.kv.count("feasible") && cert_field(cert, "feasible") == "no") {
            try {
                fsg::oracle::min_odd_cycle_transversal(g, true, args.budget);
                fail("claimed infeasible but a transversal exists");
            } catch (const fsg::Infeasible&) {
            }
        } else {
            check_vertex_set(
                [&](const std::vector<int>& vs) {
                    return fsg::oracle::is_odd_cycle_transversal(g, vs) &&
                           fsg::oracle::is_independent_set(g, vs);
                },
                "an independent odd cycle transversal");
        }
    } else if (p == "edge-dominating-set") {
        auto edges = parse_edge_list(cert_field(cert, "edges"), n);
        long long value = std::stoll(cert_field(cert, "value"));
        if (!fsg::oracle::is_edge_dominating_set(g, edges)) fail("edge set is not dominating");
        if (static_cast<long long>(edges.size()) != value) fail("value does not match edge count");
    } else if (p == "max-cut") {
        auto one_side = parse_id_list(cert_field(cert, "cut"), n);
        long long value = std::stoll(cert_field(cert, "value"));
        std::vector<int> side(n, 0);
        for (int v : one_side) side[v] = 1;
        if (fsg::oracle::cut_value(g, side) != value) fail("cut value does not match the sides");
    } else if (p == "list-colouring" || p == "pan-list-colouring") {
        if (cert_field(cert, "feasible") == "yes") {
            if (p == "pan-list-colouring") {
                if (!fsg::oracle::pan_modified_list_colouring(g, lists)) fail("instance is infeasible");
            } else {
                std::istringstream in(cert_field(cert, "colouring"));
                std::vector<int> colours;
                int c;
                while (in >> c) colours.push_back(c);
                if (!fsg::oracle::respects_lists(g, lists, colours)) fail("colouring violates lists");
            }
        } else {
            bool feasible = p == "pan-list-colouring"
                                ? fsg::oracle::pan_modified_list_colouring(g, lists)
                                : fsg::oracle::list_colouring(g, lists).has_value();
            if (feasible) fail("claimed infeasible but a colouring exists");
        }
    } else if (p == "steiner-tree") {
        if (cert.kv.count("feasible") && cert_field(cert, "feasible") == "no") {
            auto mode = args.mode == "node" ? fsg::oracle::SteinerMode::Node
                                            : fsg::oracle::SteinerMode::Edge;
            try {
                fsg::oracle::steiner_tree(g, terminals.terminals, mode, args.budget);
                fail("claimed infeasible but a tree exists");
            } catch (const fsg::Infeasible&) {
            }
        } else {
            auto edges = parse_edge_list(cert_field(cert, "edges"), n);
            long long value = std::stoll(cert_field(cert, "value"));
            if (!fsg::oracle::is_steiner_tree(g, terminals.terminals, edges)) fail("not a Steiner tree");
            long long claimed = args.mode == "node" ? static_cast<long long>(edges.size()) + 1
                                                    : static_cast<long long>(edges.size());
            if (claimed != value) fail("value does not match tree size");
        }
    } else if (p == "multiway-cut") {
        long long value = std::stoll(cert_field(cert, "value"));
        if (args.mode == "node") {
            auto vs = parse_id_list(cert_field(cert, "vertices"), n);
            if (!fsg::oracle::is_multiway_cut_nodes(g, terminals.terminals, vs))
                fail("vertex set does not separate the terminals");
            if (static_cast<long long>(vs.size()) != value) fail("value does not match set size");
        } else {
            auto edges = parse_edge_list(cert_field(cert, "edges"), n);
            if (!fsg::oracle::is_multiway_cut_edges(g, terminals.terminals, edges))
                fail("edge set does not separate the terminals");
            if (static_cast<long long>(edges.size()) != value) fail("value does not match edge count");
        }
    } else if (p == "disjoint-paths" || p == "induced-disjoint-paths") {
        bool induced = p == "induced-disjoint-paths";
        if (cert_field(cert, "feasible") == "yes") {
            fsg::oracle::PathSet paths;
            for (const auto& line : cert.path_lines) paths.paths.push_back(parse_id_list(line, n));
            if (!fsg::oracle::are_disjoint_paths(g, terminals.pairs, paths, induced))
                fail("paths do not link the pairs disjointly");
        } else {
            if (fsg::oracle::disjoint_paths(g, terminals.pairs, induced, args.budget))
                fail("claimed infeasible but a linkage exists");
        }
    } else if (p == "nae-3sat") {
        if (cert_field(cert, "satisfiable") == "yes") {
            std::istringstream in(cert_field(cert, "assignment"));
            std::vector<int> assignment;
            int b;
            while (in >> b) assignment.push_back(b);
            if (!fsg::oracle::nae_satisfies(cnf, assignment)) fail("assignment is not NAE-satisfying");
        } else {
            if (fsg::oracle::nae_3sat(cnf, args.budget)) fail("claimed unsatisfiable but an assignment exists");
        }
    } else {
        throw std::invalid_argument("solve: --check is not supported for problem '" + p + "'");
    }

    report.add("check", ok ? "ok" : "invalid");
    if (!ok) report.add("reason", why);
    report.emit();
    return ok ? 0 : 1;
}

int run_solve(const SolveArgs& args, Report& report) {
    stamp(report);
    report.add("problem", args.problem);
    const std::string& p = args.problem;

    Graph g;
    fsg::io::TerminalData terminals;
    fsg::io::Cnf cnf;
    fsg::oracle::ListAssignment lists;

    bool needs_graph = p != "nae-3sat";
    if (needs_graph) {
        if (args.graph_path.empty()) throw std::invalid_argument("solve: a graph file is required");
        g = fsg::io::parse_graph(load_input(report, args.graph_path));
    }
    if (p == "list-colouring" || p == "pan-list-colouring") {
        if (args.lists_path.empty()) throw std::invalid_argument("solve: --lists is required");
        lists = fsg::io::parse_lists(load_input(report, args.lists_path), g.vertex_count());
    }
    if (p == "steiner-tree" || p == "multiway-cut" || p == "disjoint-paths" ||
        p == "induced-disjoint-paths") {
        if (args.terminals_path.empty()) throw std::invalid_argument("solve: --terminals is required");
        terminals = fsg::io::parse_terminals(load_input(report, args.terminals_path), g.vertex_count());
    }
    if (p == "nae-3sat") {
        if (args.cnf_path.empty()) throw std::invalid_argument("solve: --cnf is required");
        cnf = fsg::io::parse_cnf(load_input(report, args.cnf_path));
    }
    if (args.mode != "edge" && args.mode != "node")
        throw std::invalid_argument("solve: --mode must be edge or node");

    if (!args.check_path.empty()) return check_certificate(args, report, g, terminals, cnf, lists);

    if (p == "independent-set") {
        auto r = fsg::oracle::max_independent_set(g, args.budget);
        report.add_int("value", r.value);
        report.add("vertices", ids_1based(r.vertices));
    } else if (p == "vertex-cover") {
        auto r = fsg::oracle::min_vertex_cover(g, args.budget);
        report.add_int("value", r.value);
        report.add("vertices", ids_1based(r.vertices));
    } else if (p == "dominating-set" || p == "independent-dominating-set") {
        auto variant = p == "dominating-set" ? fsg::oracle::DominationVariant::Plain
                                             : fsg::oracle::DominationVariant::Independent;
        auto r = fsg::oracle::min_dominating_set(g, variant, args.budget);
        report.add_int("value", r.value);
        report.add("vertices", ids_1based(r.vertices));
    } else if (p == "edge-dominating-set") {
        auto r = fsg::oracle::min_edge_dominating_set(g, args.budget);
        report.add_int("value", r.value);
        report.add("edges", edges_1based(r.edges));
    } else if (p == "odd-cycle-transversal" || p == "independent-odd-cycle-transversal") {
        try {
            auto r = fsg::oracle::min_odd_cycle_transversal(
                g, p == "independent-odd-cycle-transversal", args.budget);
            report.add_int("value", r.value);
            report.add("vertices", ids_1based(r.vertices));
        } catch (const fsg::Infeasible&) {
            report.add("feasible", "no");
        }
    } else if (p == "max-cut") {
        auto r = fsg::oracle::max_cut(g, args.budget);
        report.add_int("value", r.value);
        std::vector<int> one_side;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (r.side[v] == 1) one_side.push_back(v);
        report.add("cut", ids_1based(one_side));
    } else if (p == "list-colouring") {
        auto r = fsg::oracle::list_colouring(g, lists);
        report.add("feasible", r ? "yes" : "no");
        if (r) report.add("colouring", plain_ints(*r));
    } else if (p == "pan-list-colouring") {
        report.add("feasible", fsg::oracle::pan_modified_list_colouring(g, lists) ? "yes" : "no");
    } else if (p == "steiner-tree") {
        auto mode = args.mode == "node" ? fsg::oracle::SteinerMode::Node : fsg::oracle::SteinerMode::Edge;
        try {
            auto r = fsg::oracle::steiner_tree(g, terminals.terminals, mode, args.budget);
            report.add_int("value", r.value);
            report.add("edges", edges_1based(r.edges));
        } catch (const fsg::Infeasible&) {
            report.add("feasible", "no");
        }
    } else if (p == "multiway-cut") {
        if (args.mode == "node") {
            try {
                auto r = fsg::oracle::multiway_cut_nodes(g, terminals.terminals, args.budget);
                report.add("feasible", "yes");
                report.add_int("value", r.value);
                report.add("vertices", ids_1based(r.vertices));
            } catch (const fsg::Infeasible&) {
                report.add("feasible", "no");
            }
        } else {
            auto r = fsg::oracle::multiway_cut_edges(g, terminals.terminals, args.budget);
            report.add("feasible", "yes");
            report.add_int("value", r.value);
            report.add("edges", edges_1based(r.edges));
        }
    } else if (p == "disjoint-paths" || p == "induced-disjoint-paths") {
        auto r = fsg::oracle::disjoint_paths(g, terminals.pairs, p == "induced-disjoint-paths",
                                             args.budget);
        report.add("feasible", r ? "yes" : "no");
        if (r)
            for (size_t i = 0; i < r->paths.size(); ++i)
                report.lines.push_back({"path " + std::to_string(i + 1), ids_1based(r->paths[i])});
        if (r) {
            ordered_json paths = ordered_json::array();
            for (const auto& path : r->paths) {
                ordered_json one = ordered_json::array();
                for (int v : path) one.push_back(v + 1);
                paths.push_back(one);
            }
            report.payload["paths"] = paths;
        }
    } else if (p == "diameter") {
        try {
            auto r = fsg::oracle::diameter_radius(g);
            report.add_int("diameter", r.diameter);
            report.add_int("radius", r.radius);
        } catch (const fsg::Infeasible&) {
            report.add("diameter", "infinite");
        }
    } else if (p == "nae-3sat") {
        auto r = fsg::oracle::nae_3sat(cnf, args.budget);
        report.add("satisfiable", r ? "yes" : "no");
        if (r) report.add("assignment", plain_ints(*r));
    } else {
        throw std::invalid_argument("solve: unknown problem '" + p + "'");
    }
    report.emit();
    return 0;
}

struct VerifyArgs {
    std::string claim;
    fsg::reduce::SuiteOptions suite;
    fsg::oracle::SolveBudget solve_budget;
    fsg::width::WidthBudget width_budget;
};

int run_verify(const VerifyArgs& args, Report& report) {
    stamp(report);
    auto claim = fsg::reduce::claim_from_name(args.claim);
    if (!claim) throw std::invalid_argument("verify: unknown claim '" + args.claim + "'");
    report.add("claim", args.claim);
    report.add_int("seed", static_cast<long long>(args.suite.seed));
    auto reports = fsg::reduce::random_suite(*claim, args.suite, args.solve_budget, args.width_budget);
    int passed = 0;
    ordered_json trials = ordered_json::array();
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        passed += r.pass ? 1 : 0;
        std::ostringstream line;
        line << (r.pass ? "pass" : "FAILED") << " lhs=" << r.lhs << " rhs=" << r.rhs
             << " digest=" << r.digest;
        report.lines.push_back({"trial " + std::to_string(i + 1), line.str()});
        trials.push_back({{"trial", i + 1},
                          {"pass", r.pass},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"digest", r.digest}});
    }
    report.payload["trials"] = trials;
    report.add("pass", std::to_string(passed) + "/" + std::to_string(reports.size()));
    report.emit();
    return passed == static_cast<int>(reports.size()) ? 0 : 1;
}

struct GenerateArgs {
    std::string claim;
    fsg::reduce::SuiteOptions suite;
    std::string terminals_out;
};

int run_generate(const GenerateArgs& args, Report& report) {
    stamp(report);
    auto claim = fsg::reduce::claim_from_name(args.claim);
    if (!claim) throw std::invalid_argument("generate: unknown claim '" + args.claim + "'");
    report.add("claim", args.claim);
    report.add_int("seed", static_cast<long long>(args.suite.seed));
    std::mt19937_64 rng(args.suite.seed);
    auto instance = fsg::reduce::random_claim_instance(*claim, rng, args.suite);
    report.add("instance_digest", fsg::reduce::instance_digest(instance));

    bool is_cnf_claim = *claim == fsg::reduce::ClaimId::NaeOctGadget ||
                        *claim == fsg::reduce::ClaimId::Ioct2SubGadget;
    std::string body;
    if (is_cnf_claim) {
        body = fsg::io::serialize_cnf(instance.cnf);
        report.payload["cnf"] = body;
    } else {
        for (int t : instance.terminals)
            report.lines.push_back({"terminal", std::to_string(t + 1)});
        for (const auto& [s, t] : instance.pairs)
            report.lines.push_back(
                {"pair", std::to_string(s + 1) + " " + std::to_string(t + 1)});
        if (instance.budget != -1 || *claim == fsg::reduce::ClaimId::SteinerSubcubic)
            report.add_int("k", instance.budget);
        body = fsg::io::serialize_graph(instance.graph);
        report.payload["graph"] = body;
        if (!instance.terminals.empty() || !instance.pairs.empty()) {
            std::string tfile =
                fsg::io::serialize_terminals({instance.terminals, instance.pairs});
            report.payload["terminals"] = tfile;
            if (!args.terminals_out.empty()) fsg::io::write_file(args.terminals_out, tfile);
        }
    }
    report.emit_artifact(body);
    return 0;
}

struct GadgetNaeArgs {
    std::string cnf_path;
};

int run_gadget_nae(const GadgetNaeArgs& args, Report& report) {
    stamp(report);
    auto cnf = fsg::io::parse_cnf(load_input(report, args.cnf_path));
    auto [gadget, target] = fsg::reduce::nae_to_oct_gadget(cnf);
    report.add("kind", "nae");
    report.add_int("target", target);
    report.add_int("vertices", gadget.vertex_count());
    report.add_int("edges", gadget.edge_count());
    report.add("subcubic", fsg::is_subcubic(gadget) ? "yes" : "no");
    report.payload["graph"] = fsg::io::serialize_graph(gadget);
    report.emit_artifact(fsg::io::serialize_graph(gadget));
    return 0;
}

struct GadgetSteinerArgs {
    std::string graph_path;
    std::string terminals_path;
    long long k = 0;
    std::string terminals_out;
};

int run_gadget_steiner(const GadgetSteinerArgs& args, Report& report) {
    stamp(report);
    auto g = fsg::io::parse_graph(load_input(report, args.graph_path));
    auto terminals = fsg::io::parse_terminals(load_input(report, args.terminals_path),
                                              g.vertex_count());
    auto expansion = fsg::reduce::steiner_subcubic_expand(g, terminals.terminals, args.k);
    report.add("kind", "steiner");
    report.add_int("k", args.k);
    report.add_int("budget", expansion.budget);
    report.add_int("path_length", expansion.path_length);
    report.add_int("vertices", expansion.graph.vertex_count());
    report.add_int("edges", expansion.graph.edge_count());
    report.add("subcubic", fsg::is_subcubic(expansion.graph) ? "yes" : "no");
    for (int t : expansion.terminals)
        report.lines.push_back({"terminal", std::to_string(t + 1)});
    std::string tfile = fsg::io::serialize_terminals({expansion.terminals, {}});
    report.payload["terminals"] = tfile;
    if (!args.terminals_out.empty()) fsg::io::write_file(args.terminals_out, tfile);
    report.payload["graph"] = fsg::io::serialize_graph(expansion.graph);
    report.emit_artifact(fsg::io::serialize_graph(expansion.graph));
    return 0;
}

int run_with_timeout(double timeout_secs, const std::function<int()>& body) {
    if (timeout_secs <= 0) return body();
    std::packaged_task<int()> task(body);
    auto result = task.get_future();
    std::thread worker(std::move(task));
    if (result.wait_for(std::chrono::duration<double>(timeout_secs)) ==
        std::future_status::timeout) {
        std::cerr << "error: --timeout-secs budget exceeded\n";
        std::cout.flush();
        worker.detach();
        std::_Exit(3);
    }
    worker.join();
    return result.get();
}

}  // namespace

int main(int argc, char** argv) {
    g_command = join_argv(argc, argv);

    CLI::App app{"Forbidden-subgraph complexity framework"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Report report;
    double timeout_secs = 0.0;
    std::function<int()> action;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", report.json, "emit the report as JSON");
        cmd->add_option("--out", report.out_path, "write the report to a file instead of stdout");
        cmd->add_option("--timeout-secs", timeout_secs, "wall-clock budget, 0 = unlimited");
    };

    ClassifyArgs classify_args;
    auto* classify = app.add_subcommand("classify", "dichotomy verdict for a family file");
    classify->add_option("family", classify_args.family_path, "family file")->required();
    classify->add_option("--max-pattern-n", classify_args.max_pattern_n,
                         "vertex cap for family members");
    add_common(classify);
    classify->callback([&] { action = [&] { return run_classify(classify_args, report); }; });

    SfreeArgs sfree_args;
    auto* sfree = app.add_subcommand("sfree", "check a graph against a forbidden family");
    sfree->add_option("family", sfree_args.family_path, "family file")->required();
    sfree->add_option("graph", sfree_args.graph_path, "graph file")->required();
    add_common(sfree);
    sfree->callback([&] { action = [&] { return run_sfree(sfree_args, report); }; });

    SubdivideArgs subdivide_args;
    auto* subdivide = app.add_subcommand("subdivide", "k-subdivision of a graph");
    subdivide->add_option("graph", subdivide_args.graph_path, "graph file")->required();
    subdivide->add_option("--k", subdivide_args.k, "internal vertices per edge")->required();
    add_common(subdivide);
    subdivide->callback([&] { action = [&] { return run_subdivide(subdivide_args, report); }; });

    WidthArgs width_args;
    auto* width = app.add_subcommand("width", "exact pathwidth or treewidth with certificate");
    width->add_option("graph", width_args.graph_path, "graph file")->required();
    width->add_flag("--pathwidth", width_args.use_pathwidth, "compute pathwidth");
    width->add_flag("--treewidth", width_args.use_treewidth, "compute treewidth");
    width->add_option("--max-n", width_args.budget.max_vertices, "vertex cap");
    width->add_option("--max-width", width_args.budget.max_width, "width cap for large graphs");
    width->add_option("--exhaustive-n", width_args.budget.exhaustive_vertices,
                      "below this size any width is allowed");
    add_common(width);
    width->callback([&] { action = [&] { return run_width(width_args, report); }; });

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "exact oracle for one problem instance");
    solve->add_option("--problem", solve_args.problem, "problem name")->required();
    solve->add_option("graph", solve_args.graph_path, "graph file");
    solve->add_option("--lists", solve_args.lists_path, "colour lists file");
    solve->add_option("--terminals", solve_args.terminals_path, "terminals / pairs file");
    solve->add_option("--cnf", solve_args.cnf_path, "DIMACS 3-CNF file");
    solve->add_option("--mode", solve_args.mode, "edge or node (steiner-tree, multiway-cut)");
    solve->add_option("--check", solve_args.check_path, "re-validate a saved certificate");
    solve->add_option("--max-n", solve_args.budget.max_vertices, "vertex cap for set solvers");
    add_common(solve);
    solve->callback([&] { action = [&] { return run_solve(solve_args, report); }; });

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "seeded random suite for one claim");
    verify->add_option("--claim", verify_args.claim, "claim id")->required();
    verify->add_option("--trials", verify_args.suite.trials, "number of trials");
    verify->add_option("--max-n", verify_args.suite.max_n, "max base vertices");
    verify->add_option("--max-m", verify_args.suite.max_m, "max base edges");
    verify->add_option("--seed", verify_args.suite.seed, "rng seed")->required();
    verify->add_option("--max-width", verify_args.width_budget.max_width,
                       "width cap for PW/TW claims");
    add_common(verify);
    verify->callback([&] { action = [&] { return run_verify(verify_args, report); }; });

    GenerateArgs generate_args;
    auto* generate = app.add_subcommand("generate", "seeded random base instance for a claim");
    generate->add_option("--claim", generate_args.claim, "claim id")->required();
    generate->add_option("--seed", generate_args.suite.seed, "rng seed")->required();
    generate->add_option("--max-n", generate_args.suite.max_n, "max vertices");
    generate->add_option("--max-m", generate_args.suite.max_m, "max edges");
    generate->add_option("--out-terminals", generate_args.terminals_out,
                         "also write terminals to a file");
    add_common(generate);
    generate->callback([&] { action = [&] { return run_generate(generate_args, report); }; });

    auto* gadget = app.add_subcommand("gadget", "construct a reduction gadget");
    gadget->require_subcommand(1);
    GadgetNaeArgs nae_args;
    auto* gadget_nae = gadget->add_subcommand("nae", "clause gadget from a 3-CNF");
    gadget_nae->add_option("--cnf", nae_args.cnf_path, "DIMACS 3-CNF file")->required();
    add_common(gadget_nae);
    gadget_nae->callback([&] { action = [&] { return run_gadget_nae(nae_args, report); }; });

    GadgetSteinerArgs steiner_args;
    auto* gadget_steiner = gadget->add_subcommand("steiner", "subcubic Steiner expansion");
    gadget_steiner->add_option("--graph", steiner_args.graph_path, "base graph file")->required();
    gadget_steiner->add_option("--terminals", steiner_args.terminals_path, "terminal file")
        ->required();
    gadget_steiner->add_option("--budget", steiner_args.k, "base edge budget k")->required();
    gadget_steiner->add_option("--out-terminals", steiner_args.terminals_out,
                               "also write expanded terminals to a file");
    add_common(gadget_steiner);
    gadget_steiner->callback(
        [&] { action = [&] { return run_gadget_steiner(steiner_args, report); }; });

    try {
        app.parse(argc, argv);
        return run_with_timeout(timeout_secs, action);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const fsg::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const fsg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
