#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg::io {

// Graph text format, one graph per block:
//   c format 1
//   c l <v> <text>       optional vertex label
//   p edge <n> <m>
//   e <u> <v>            1-based endpoints, u < v, one line per edge
// Comment lines start with "c". Family files hold several blocks separated by
// a line consisting of "--". serialize/parse round-trip exactly.

std::string serialize_graph(const Graph& g);
Graph parse_graph(std::string_view text);

std::string serialize_family(const std::vector<Graph>& family);
std::vector<Graph> parse_family(std::string_view text);

// Colour lists, one line per vertex: "<v>: c1 c2 ...", 1-based vertex ids.
std::string serialize_lists(const std::vector<std::vector<int>>& lists);
std::vector<std::vector<int>> parse_lists(std::string_view text, int vertex_count);

// Terminal files: "t <v>" lines for terminal sets, "pair <s> <t>" lines for
// requested path endpoints. 1-based. A file may use one kind or both.
struct TerminalData {
    std::vector<int> terminals;
    std::vector<std::pair<int, int>> pairs;
};
std::string serialize_terminals(const TerminalData& t);
TerminalData parse_terminals(std::string_view text, int vertex_count);

// DIMACS CNF: "p cnf <vars> <clauses>", clause lines of signed literals
// terminated by 0. Every clause must have exactly 3 literals.
struct Cnf {
    int vars = 0;
    std::vector<std::array<int, 3>> clauses;
};
std::string serialize_cnf(const Cnf& f);
Cnf parse_cnf(std::string_view text);

// FNV-1a 64-bit content digest, 16 hex chars. Used to tie reports to inputs.
std::string digest(std::string_view bytes);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace fsg::io
