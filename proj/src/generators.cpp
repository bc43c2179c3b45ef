#include "ewi/generators.hpp"

#include <random>
#include <set>
#include <string>

#include "ewi/errors.hpp"

namespace ewi {

Family parse_family(std::string_view name) {
    if (name == "path") return Family::Path;
    if (name == "even_cycle" || name == "even-cycle" || name == "cycle") return Family::EvenCycle;
    if (name == "hypercube") return Family::Hypercube;
    if (name == "star") return Family::Star;
    throw GraphError("unknown graph family '" + std::string(name) + "'");
}

Graph generate_family(Family kind, std::size_t size) {
    if (size < 1) throw GraphError("family size parameter must be >= 1");
    switch (kind) {
    case Family::Path: {
        Graph g(size);
        for (VertexId i = 0; i + 1 < size; ++i) g.add_edge(i, i + 1);
        return g;
    }
    case Family::EvenCycle: {
        if (size < 4 || size % 2) throw GraphError("even cycle needs an even length >= 4");
        Graph g(size);
        for (VertexId i = 0; i < size; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % size));
        return g;
    }
    case Family::Hypercube: {
        if (size > 20) throw GraphError("hypercube dimension too large");
        const VertexId n = VertexId{1} << size;
        Graph g(n);
        for (VertexId v = 0; v < n; ++v)
            for (std::size_t bit = 0; bit < size; ++bit)
                if (!(v >> bit & 1)) g.add_edge(v, v | VertexId{1} << bit);
        return g;
    }
    case Family::Star: {
        Graph g(size + 1);
        for (VertexId i = 1; i <= size; ++i) g.add_edge(0, i);
        return g;
    }
    }
    throw GraphError("unknown graph family");
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw GraphError("tree needs at least one vertex");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = pick(rng);

    std::vector<std::size_t> degree(n, 1);
    for (auto c : code) ++degree[c];
    std::set<VertexId> leaves;
    for (VertexId v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (auto c : code) {
        const VertexId leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    const VertexId a = *leaves.begin();
    const VertexId b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

} // namespace ewi
