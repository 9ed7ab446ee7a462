#pragma once

// Canonical edge-list text format shared by every tool:
//   first line  "n m"
//   then m lines "u v" with 0 <= u < v < n, one edge per line.
// The parser reports loops, duplicates, bad counts and out-of-range
// endpoints with the offending line number.

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "gburn/graph.hpp"

namespace gburn {

inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& msg) -> std::runtime_error {
        return std::runtime_error("edge list line " + std::to_string(line_no) + ": " + msg);
    };

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
        }
        ++line_no;
        return false;
    };

    if (!next_line()) throw fail("missing header");
    long long n, m;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            throw fail("expected header \"n m\"");
    }
    if (n < 0 || m < 0) throw fail("negative count in header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    std::set<Edge> seen;
    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw fail("expected " + std::to_string(m) + " edges, got " +
                                     std::to_string(i));
        std::istringstream ss(line);
        long long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) throw fail("expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) throw fail("endpoint out of range");
        if (u == v) throw fail("self-loop");
        if (u > v) throw fail("expected u < v");
        Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
        if (!seen.insert(e).second) throw fail("duplicate edge");
        edges.push_back(e);
    }
    if (next_line()) throw fail("trailing content after " + std::to_string(m) + " edges");
    return Graph(static_cast<int>(n), edges);
}

inline Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    try {
        return parse_edge_list(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
    std::ostringstream ss;
    write_edge_list(ss, g);
    return ss.str();
}

inline void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    write_edge_list(out, g);
}

}  // namespace gburn
