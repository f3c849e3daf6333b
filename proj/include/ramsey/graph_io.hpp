#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ramsey/geometry.hpp"
#include "ramsey/product.hpp"

namespace ramsey {

// DIMACS: "p edge n m" header, 1-based "e u v" lines, loops as "e v v".
// Leading comment lines may record construction parameters.
inline std::string to_dimacs(const LoopyGraph& g, const std::string& comment = "") {
    std::ostringstream out;
    if (!comment.empty()) out << "c " << comment << "\n";
    out << "c loops=" << g.loop_count() << "\n";
    out << "p edge " << g.size() << " " << g.edge_count() << "\n";
    for (int u = 0; u < g.size(); ++u)
        for (int v = u; v < g.size(); ++v)
            if (g.edge(u, v)) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

inline LoopyGraph from_dimacs(std::istream& in) {
    std::string line;
    int n = -1;
    long long m = 0, seen = 0;
    LoopyGraph g;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char tag;
        ls >> tag;
        if (tag == 'p') {
            std::string fmt;
            ls >> fmt >> n >> m;
            if (fmt != "edge" || n < 0) throw std::runtime_error("bad DIMACS header");
            g = LoopyGraph(n);
        } else if (tag == 'e') {
            if (n < 0) throw std::runtime_error("DIMACS edge before header");
            int u, v;
            ls >> u >> v;
            if (u < 1 || v < 1 || u > n || v > n) throw std::runtime_error("DIMACS vertex out of range");
            g.add_edge(u - 1, v - 1);
            ++seen;
        }
    }
    if (n < 0) throw std::runtime_error("missing DIMACS header");
    if (seen != m) throw std::runtime_error("DIMACS edge count mismatch");
    return g;
}

inline LoopyGraph from_dimacs_string(const std::string& s) {
    std::istringstream in(s);
    return from_dimacs(in);
}

// Line-based edge list with 0-based indices; loops as "v v".
inline std::string to_edge_list(const LoopyGraph& g) {
    std::ostringstream out;
    for (int u = 0; u < g.size(); ++u)
        for (int v = u; v < g.size(); ++v)
            if (g.edge(u, v)) out << u << " " << v << "\n";
    return out.str();
}

// Sidecar for polarity graphs: one line per vertex, "index c_1 ... c_{t+1}".
inline std::string point_labels(const PolarityGraph& pg) {
    std::ostringstream out;
    for (int v = 0; v < pg.graph.size(); ++v) {
        out << v;
        for (std::uint32_t c : pg.points[v].coords) out << " " << c;
        out << "\n";
    }
    return out.str();
}

// Digraph export: 0-based "u v" arc lines.
inline std::string to_arc_list(const PairDigraph& d) {
    std::ostringstream out;
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j)
            if (d.arc(i, j)) out << i << " " << j << "\n";
    return out.str();
}

// Sidecar mapping digraph vertices to their (a, b) pair labels.
inline std::string pair_vertex_map(const PairDigraph& d) {
    std::ostringstream out;
    for (int i = 0; i < d.size(); ++i)
        out << i << " " << d.verts[i].first << " " << d.verts[i].second << "\n";
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
}

}  // namespace ramsey
