#include <gtest/gtest.h>
#include <gmock/gmock.h>

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "ewi/edge_list.hpp"
#include "ewi/errors.hpp"
#include "ewi/generators.hpp"
#include "ewi/graph.hpp"
#include "ewi/oracle.hpp"
#include "test_graphs.hpp"

using namespace ewi;
using ewi::test::cycle;
using ewi::test::make_graph;
using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 1), GraphError);
    EXPECT_THROW(g.add_edge(1, 0), GraphError);
    EXPECT_THROW(g.add_edge(0, 3), GraphError);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, AdjacencyMatchesEdgeList) {
    const Graph g = test::hypercube(4);
    std::vector<int> seen(g.edge_count(), 0);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (const auto& inc : g.neighbors(v)) {
            EXPECT_TRUE(g.edge(inc.edge).has(v));
            EXPECT_EQ(g.edge(inc.edge).other(v), inc.neighbor);
            ++seen[inc.edge];
        }
    EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 2; }));
}

TEST(Bfs, SingleVertex) {
    EXPECT_THAT(bfs_distances(Graph(1), 0).dist, ElementsAre(0u));
}

TEST(Bfs, Path) {
    EXPECT_THAT(bfs_distances(test::path(3), 0).dist, ElementsAre(0u, 1u, 2u));
}

TEST(Bfs, HexagonDistanceMultiset) {
    const Graph c6 = cycle(6);
    for (VertexId v = 0; v < 6; ++v)
        EXPECT_THAT(bfs_distances(c6, v).dist, UnorderedElementsAre(0u, 1u, 1u, 2u, 2u, 3u));
}

TEST(Bfs, DisconnectedThrows) {
    const Graph g = make_graph(4, {{0, 1}, {2, 3}});
    try {
        bfs_distances(g, 0);
        FAIL();
    } catch (const GraphError& e) {
        EXPECT_STREQ(e.what(), "graph not connected");
    }
}

TEST(Distances, MetricAxiomsOnRandomTrees) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_tree(15, seed);
        const DistanceMatrix dm(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            EXPECT_EQ(dm(u, u), 0u);
            for (VertexId v = 0; v < g.vertex_count(); ++v) {
                EXPECT_EQ(dm(u, v), dm(v, u));
                for (VertexId w = 0; w < g.vertex_count(); ++w) EXPECT_LE(dm(u, v), dm(u, w) + dm(w, v));
            }
        }
        for (const auto& e : g.edges()) EXPECT_EQ(dm(e.u, e.v), 1u);
    }
}

TEST(EdgeDistanceHat, Cases) {
    const Graph c6 = cycle(6);
    const DistanceMatrix dm(c6);
    EXPECT_EQ(edge_distance_hat(c6, 2, 2, dm), 0u);
    EXPECT_EQ(edge_distance_hat(c6, 0, 1, dm), 0u);
    EXPECT_EQ(edge_distance_hat(c6, 0, 3, dm), 2u);

    const Graph p3 = test::path(3);
    EXPECT_EQ(edge_distance_hat(p3, 0, 1, DistanceMatrix(p3)), 0u);
}

// d(e,f) in the line graph equals d_hat(e,f) + 1 for distinct edges.
TEST(EdgeDistanceHat, MatchesLineGraphDistance) {
    std::vector<Graph> graphs{cycle(6), cycle(10), test::hypercube(4), test::k23(), test::star(5)};
    for (std::uint64_t s = 0; s < 10; ++s) graphs.push_back(random_tree(30, s));
    for (const auto& g : graphs) {
        ASSERT_LE(g.edge_count(), 200u);
        const DistanceMatrix dm(g);
        const DistanceMatrix ldm(line_graph(g));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            for (EdgeId f = 0; f < g.edge_count(); ++f)
                if (e != f) EXPECT_EQ(edge_distance_hat(g, e, f, dm) + 1, ldm(e, f));
    }
}

TEST(Bipartite, EvenCycleAndK23) {
    const Graph g = cycle(6);
    const auto c6 = is_bipartite(g);
    ASSERT_TRUE(c6.bipartite);
    for (const auto& e : g.edges()) EXPECT_NE(c6.color[e.u], c6.color[e.v]);
    EXPECT_TRUE(is_bipartite(test::k23()).bipartite);
}

TEST(Bipartite, OddCycleWitness) {
    const Graph c5 = cycle(5);
    const auto r = is_bipartite(c5);
    ASSERT_FALSE(r.bipartite);
    ASSERT_EQ(r.odd_cycle.size(), 5u);
    for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
        EXPECT_TRUE(c5.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Bipartite, WitnessIsClosedOddWalk) {
    // Triangle with a pendant path.
    const Graph g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
    const auto r = is_bipartite(g);
    ASSERT_FALSE(r.bipartite);
    EXPECT_EQ(r.odd_cycle.size() % 2, 1u);
    for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
        EXPECT_TRUE(g.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]));
}

TEST(Families, Sizes) {
    const Graph q3 = generate_family(Family::Hypercube, 3);
    EXPECT_EQ(q3.vertex_count(), 8u);
    EXPECT_EQ(q3.edge_count(), 12u);
    const Graph c6 = generate_family(Family::EvenCycle, 6);
    EXPECT_EQ(c6.edge_count(), 6u);
    for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2u);
    const Graph p4 = generate_family(Family::Path, 4);
    EXPECT_EQ(p4.vertex_count(), 4u);
    EXPECT_EQ(p4.edge_count(), 3u);
    EXPECT_EQ(generate_family(Family::Star, 4).edge_count(), 4u);
}

TEST(Families, InvalidParameters) {
    EXPECT_THROW(generate_family(Family::EvenCycle, 5), GraphError);
    EXPECT_THROW(generate_family(Family::EvenCycle, 2), GraphError);
    EXPECT_THROW(generate_family(Family::Path, 0), GraphError);
    EXPECT_THROW(parse_family("petersen"), GraphError);
}

TEST(Families, HypercubeDistanceIsHamming) {
    const Graph q5 = generate_family(Family::Hypercube, 5);
    const DistanceMatrix dm(q5);
    for (VertexId u = 0; u < 32; ++u)
        for (VertexId v = 0; v < 32; ++v) EXPECT_EQ(dm(u, v), static_cast<Distance>(std::popcount(u ^ v)));
}

TEST(Families, RandomTreesAreTreesAndDeterministic) {
    for (std::size_t n = 1; n < 40; ++n) {
        const Graph t = random_tree(n, n * 31);
        EXPECT_TRUE(is_tree(t));
        const Graph again = random_tree(n, n * 31);
        EXPECT_TRUE(std::equal(t.edges().begin(), t.edges().end(), again.edges().begin(), again.edges().end()));
    }
}

TEST(EdgeList, ParsesWithComments) {
    std::istringstream in("# square\n4 4\n0 1\n\n1 2\n# mid\n2 3\n3 0\n");
    const Graph g = read_edge_list(in);
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_EQ(g.edge(3), (Edge{3, 0}));
}

TEST(EdgeList, ErrorsCarryLineNumbers) {
    const auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("3 2\n0 1\n1 x\n"), 3u);
    EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);
    EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3u);
    EXPECT_EQ(line_of("# c\n3 2\n0 1\n1 5\n"), 4u);
    EXPECT_EQ(line_of("3 1\n0 1\n1 2\n"), 3u);
    EXPECT_EQ(line_of("3 2 7\n"), 1u);
    EXPECT_EQ(line_of("3 3\n0 1\n1 2\n"), 3u);
}

TEST(EdgeList, DisconnectedRejectedAtLoad) {
    std::istringstream in("4 2\n0 1\n2 3\n");
    EXPECT_THROW(read_edge_list(in), GraphError);
}

TEST(EdgeList, WriteThenRead) {
    const Graph g = random_tree(25, 9);
    std::stringstream ss;
    write_edge_list(ss, g);
    const Graph back = read_edge_list(ss);
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), back.edges().begin(), back.edges().end()));
}
