#include "fsg/graph_io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fsg/errors.hpp"

namespace fsg::io {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, const char* what) {
    try {
        size_t used = 0;
        int v = std::stoi(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer for ") + what + ", got '" + t + "'");
    }
}

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "c format 1\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.label(v).empty()) out << "c l " << (v + 1) << " " << g.label(v) << "\n";
    out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

namespace {

Graph parse_graph_lines(const std::vector<std::string>& lines) {
    int n = -1, m = -1;
    std::vector<Edge> edges;
    std::vector<std::pair<int, std::string>> labels;
    for (const auto& line : lines) {
        if (is_blank(line)) continue;
        auto tk = tokens(line);
        if (tk[0] == "c") {
            if (tk.size() >= 4 && tk[1] == "l") {
                int v = parse_int(tk[2], "label vertex");
                std::string text = tk[3];
                for (size_t i = 4; i < tk.size(); ++i) text += " " + tk[i];
                labels.push_back({v, text});
            }
            continue;
        }
        if (tk[0] == "p") {
            if (n >= 0) throw ParseError("graph: repeated p line");
            if (tk.size() != 4 || tk[1] != "edge") throw ParseError("graph: malformed p line '" + line + "'");
            n = parse_int(tk[2], "vertex count");
            m = parse_int(tk[3], "edge count");
            if (n < 0 || m < 0) throw ParseError("graph: negative count in p line");
            continue;
        }
        if (tk[0] == "e") {
            if (n < 0) throw ParseError("graph: e line before p line");
            if (tk.size() != 3) throw ParseError("graph: malformed e line '" + line + "'");
            int u = parse_int(tk[1], "edge endpoint");
            int v = parse_int(tk[2], "edge endpoint");
            if (u < 1 || v < 1 || u > n || v > n) throw ParseError("graph: endpoint out of range in '" + line + "'");
            if (u >= v) throw ParseError("graph: e lines need u < v, got '" + line + "'");
            edges.push_back({u - 1, v - 1});
            continue;
        }
        throw ParseError("graph: unrecognized line '" + line + "'");
    }
    if (n < 0) throw ParseError("graph: missing p line");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("graph: p line promises " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    Graph g(n, std::move(edges));
    for (const auto& [v, text] : labels) {
        if (v < 1 || v > n) throw ParseError("graph: label vertex out of range");
        g.set_label(v - 1, text);
    }
    return g;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    return parse_graph_lines(split_lines(text));
}

std::string serialize_family(const std::vector<Graph>& family) {
    std::ostringstream out;
    for (size_t i = 0; i < family.size(); ++i) {
        if (i > 0) out << "--\n";
        out << serialize_graph(family[i]);
    }
    return out.str();
}

std::vector<Graph> parse_family(std::string_view text) {
    std::vector<Graph> family;
    std::vector<std::string> block;
    auto flush = [&] {
        family.push_back(parse_graph_lines(block));
        block.clear();
    };
    for (auto& line : split_lines(text)) {
        if (line == "--") {
            flush();
        } else {
            block.push_back(std::move(line));
        }
    }
    bool has_content = std::any_of(block.begin(), block.end(), [](const std::string& l) { return !is_blank(l); });
    if (has_content || family.empty()) flush();
    return family;
}

std::string serialize_lists(const std::vector<std::vector<int>>& lists) {
    std::ostringstream out;
    out << "c format 1\n";
    for (size_t v = 0; v < lists.size(); ++v) {
        out << (v + 1) << ":";
        for (int c : lists[v]) out << " " << c;
        out << "\n";
    }
    return out.str();
}

std::vector<std::vector<int>> parse_lists(std::string_view text, int vertex_count) {
    std::vector<std::vector<int>> lists(vertex_count);
    std::vector<char> seen(vertex_count, 0);
    for (const auto& line : split_lines(text)) {
        if (is_blank(line)) continue;
        auto tk = tokens(line);
        if (tk[0] == "c") continue;
        if (tk[0].empty() || tk[0].back() != ':') throw ParseError("lists: malformed line '" + line + "'");
        int v = parse_int(tk[0].substr(0, tk[0].size() - 1), "list vertex");
        if (v < 1 || v > vertex_count) throw ParseError("lists: vertex out of range in '" + line + "'");
        if (seen[v - 1]) throw ParseError("lists: repeated vertex " + std::to_string(v));
        seen[v - 1] = 1;
        for (size_t i = 1; i < tk.size(); ++i) lists[v - 1].push_back(parse_int(tk[i], "colour"));
        std::sort(lists[v - 1].begin(), lists[v - 1].end());
        lists[v - 1].erase(std::unique(lists[v - 1].begin(), lists[v - 1].end()), lists[v - 1].end());
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v]) throw ParseError("lists: no list for vertex " + std::to_string(v + 1));
    return lists;
}

std::string serialize_terminals(const TerminalData& t) {
    std::ostringstream out;
    out << "c format 1\n";
    for (int v : t.terminals) out << "t " << (v + 1) << "\n";
    for (const auto& [s, u] : t.pairs) out << "pair " << (s + 1) << " " << (u + 1) << "\n";
    return out.str();
}

TerminalData parse_terminals(std::string_view text, int vertex_count) {
    TerminalData data;
    auto check = [&](int v, const std::string& line) {
        if (v < 1 || v > vertex_count) throw ParseError("terminals: vertex out of range in '" + line + "'");
        return v - 1;
    };
    for (const auto& line : split_lines(text)) {
        if (is_blank(line)) continue;
        auto tk = tokens(line);
        if (tk[0] == "c") continue;
        if (tk[0] == "t" && tk.size() == 2) {
            data.terminals.push_back(check(parse_int(tk[1], "terminal"), line));
        } else if (tk[0] == "pair" && tk.size() == 3) {
            data.pairs.push_back({check(parse_int(tk[1], "pair endpoint"), line),
                                  check(parse_int(tk[2], "pair endpoint"), line)});
        } else {
            throw ParseError("terminals: unrecognized line '" + line + "'");
        }
    }
    return data;
}

std::string serialize_cnf(const Cnf& f) {
    std::ostringstream out;
    out << "c format 1\n";
    out << "p cnf " << f.vars << " " << f.clauses.size() << "\n";
    for (const auto& cl : f.clauses) out << cl[0] << " " << cl[1] << " " << cl[2] << " 0\n";
    return out.str();
}

Cnf parse_cnf(std::string_view text) {
    Cnf f;
    int promised = -1;
    for (const auto& line : split_lines(text)) {
        if (is_blank(line)) continue;
        auto tk = tokens(line);
        if (tk[0] == "c") continue;
        if (tk[0] == "p") {
            if (promised >= 0) throw ParseError("cnf: repeated p line");
            if (tk.size() != 4 || tk[1] != "cnf") throw ParseError("cnf: malformed p line '" + line + "'");
            f.vars = parse_int(tk[2], "variable count");
            promised = parse_int(tk[3], "clause count");
            if (f.vars < 0 || promised < 0) throw ParseError("cnf: negative count in p line");
            continue;
        }
        if (promised < 0) throw ParseError("cnf: clause before p line");
        if (tk.size() != 4 || tk[3] != "0") throw ParseError("cnf: clauses need exactly 3 literals then 0: '" + line + "'");
        std::array<int, 3> cl{};
        for (int i = 0; i < 3; ++i) {
            int lit = parse_int(tk[i], "literal");
            if (lit == 0 || std::abs(lit) > f.vars) throw ParseError("cnf: literal out of range in '" + line + "'");
            cl[i] = lit;
        }
        f.clauses.push_back(cl);
    }
    if (promised < 0) throw ParseError("cnf: missing p line");
    if (static_cast<int>(f.clauses.size()) != promised)
        throw ParseError("cnf: p line promises " + std::to_string(promised) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    return f;
}

std::string digest(std::string_view bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << content;
}

}  // namespace fsg::io
