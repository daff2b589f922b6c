#pragma once

#include "bclique/errors.hpp"
#include "bclique/graph.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace bclique {

struct ParsedGraph {
    Graph graph;
    VertexSet b;
    std::optional<std::map<int, int>> weights;  // vertex index -> weight, domain = B
};

// Line-oriented graph format, '#' starts a comment:
//   n <count>          required, first directive
//   e <u> <v>          one per edge, 1-based labels
//   b <v1> <v2> ...    at most once, the set B
//   w <v> <weight>     positive integer weight for v in B, repeatable
inline ParsedGraph parse_graph(std::string_view text) {
    std::optional<Graph> graph;
    VertexSet b;
    bool b_seen = false;
    std::map<int, std::pair<int, int>> weights;  // vertex -> (weight, source line)
    bool any_weight = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;

        auto need_int = [&](const char* what) {
            long long v;
            if (!(ls >> v)) throw ParseError(lineno, std::string("expected ") + what);
            return v;
        };
        auto vertex_index = [&](long long lbl) {
            if (!graph) throw ParseError(lineno, "directive before 'n' line");
            if (lbl < 1 || lbl > graph->vertex_count())
                throw ParseError(lineno, "vertex " + std::to_string(lbl) + " out of range");
            return static_cast<int>(lbl - 1);
        };
        auto expect_end = [&] {
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "unexpected token '" + extra + "'");
        };

        if (tag == "n") {
            if (graph) throw ParseError(lineno, "duplicate 'n' line");
            long long n = need_int("vertex count");
            expect_end();
            if (n < 1) throw ParseError(lineno, "graph needs at least one vertex");
            if (n > Graph::max_vertices)
                throw ParseError(lineno, "vertex count exceeds the " +
                                             std::to_string(Graph::max_vertices) + "-vertex cap");
            graph.emplace(static_cast<int>(n));
        } else if (tag == "e") {
            int u = vertex_index(need_int("edge endpoint"));
            int v = vertex_index(need_int("edge endpoint"));
            expect_end();
            if (u == v) throw ParseError(lineno, "self-loop rejected");
            if (graph->adjacent(u, v)) throw ParseError(lineno, "duplicate edge rejected");
            graph->add_edge(u, v);
        } else if (tag == "b") {
            if (b_seen) throw ParseError(lineno, "duplicate 'b' line");
            b_seen = true;
            long long lbl;
            while (ls >> lbl) {
                int v = vertex_index(lbl);
                if (b.contains(v)) throw ParseError(lineno, "duplicate vertex in 'b' line");
                b.add(v);
            }
            if (!ls.eof()) throw ParseError(lineno, "malformed 'b' line");
        } else if (tag == "w") {
            int v = vertex_index(need_int("vertex"));
            long long wt = need_int("weight");
            expect_end();
            if (wt < 1) throw ParseError(lineno, "weight must be a positive integer");
            if (weights.count(v)) throw ParseError(lineno, "duplicate weight for vertex");
            weights[v] = {static_cast<int>(wt), lineno};
            any_weight = true;
        } else {
            throw ParseError(lineno, "unknown directive '" + tag + "'");
        }
    }
    if (!graph) throw ParseError(lineno, "missing 'n' line");
    for (const auto& [v, wl] : weights)
        if (!b.contains(v))
            throw ParseError(wl.second, "weight given for vertex " + std::to_string(v + 1) +
                                            " outside B");
    std::optional<std::map<int, int>> w;
    if (any_weight) {
        std::map<int, int> plain;
        for (const auto& [v, wl] : weights) plain[v] = wl.first;
        for (int v : b.members())
            if (!plain.count(v)) plain[v] = 1;
        w = std::move(plain);
    }
    return ParsedGraph{std::move(*graph), b, std::move(w)};
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline ParsedGraph load_graph_file(const std::string& path) {
    return parse_graph(read_text_file(path));
}

}  // namespace bclique
