#include "ewi/edge_list.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ewi/errors.hpp"

namespace ewi {

namespace {

bool is_skippable(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly two unsigned integers and nothing else.
bool parse_pair(const std::string& line, unsigned long long& a, unsigned long long& b) {
    std::istringstream ss(line);
    long long sa, sb;
    if (!(ss >> sa >> sb) || sa < 0 || sb < 0) return false;
    std::string rest;
    if (ss >> rest) return false;
    a = static_cast<unsigned long long>(sa);
    b = static_cast<unsigned long long>(sb);
    return true;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    unsigned long long n = 0, m = 0;
    Graph g;
    std::size_t read = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_skippable(line)) continue;
        unsigned long long a = 0, b = 0;
        if (!parse_pair(line, a, b))
            throw ParseError(lineno, have_header ? "expected \"u v\"" : "expected header \"n m\"");
        if (!have_header) {
            if (a > 0xFFFFFFFFull || b > 0xFFFFFFFFull) throw ParseError(lineno, "graph too large");
            n = a;
            m = b;
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (read == m) throw ParseError(lineno, "more edge lines than the declared " + std::to_string(m));
        if (a >= n || b >= n)
            throw ParseError(lineno, n == 0 ? std::string("vertex id with a declared vertex count of 0")
                                            : "vertex id out of range 0.." + std::to_string(n - 1));
        try {
            g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
        } catch (const GraphError& e) {
            throw ParseError(lineno, e.what());
        }
        ++read;
    }
    if (!have_header) throw ParseError(lineno, "missing header \"n m\"");
    if (read != m)
        throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(read));
    if (!is_connected(g)) throw GraphError("graph not connected");
    return g;
}

Graph read_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

} // namespace ewi
