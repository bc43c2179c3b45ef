#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "ewi/cut_method.hpp"
#include "ewi/oracle.hpp"
#include "ewi/verify.hpp"
#include "test_graphs.hpp"

using namespace ewi;
using ewi::test::cycle;

namespace {

struct Expected {
    const char* name;
    Graph g;
    u64 m, w_e, w_e_hat, ww_e, ww_star;
};

// Values from an independent line-graph computation (tests/oracle).
std::vector<Expected> frozen() {
    std::vector<Expected> v;
    v.push_back({"P3", test::path(3), 2, 1, 0, 1, 0});
    v.push_back({"P4", test::path(4), 3, 4, 1, 5, 0});
    v.push_back({"P5", test::path(5), 4, 10, 4, 15, 1});
    v.push_back({"C4", cycle(4), 4, 8, 2, 10, 0});
    v.push_back({"C6", cycle(6), 6, 27, 12, 42, 3});
    v.push_back({"K13", test::star(3), 3, 3, 0, 3, 0});
    v.push_back({"Q3", test::hypercube(3), 12, 114, 48, 168, 6});
    v.push_back({"K2", test::path(2), 1, 0, 0, 0, 0});
    return v;
}

void expect_matches(const IndexReport& r, const Expected& x) {
    EXPECT_EQ(r.m, x.m) << x.name;
    EXPECT_EQ(r.w_e, x.w_e) << x.name;
    EXPECT_EQ(r.w_e_hat, x.w_e_hat) << x.name;
    EXPECT_EQ(r.ww_star, x.ww_star) << x.name;
    EXPECT_EQ(r.ww_e, x.ww_e) << x.name;
}

} // namespace

TEST(CutMethod, FrozenValues) {
    for (const auto& x : frozen()) {
        const IndexReport r = edge_hyper_wiener_cut(x.g);
        expect_matches(r, x);
        EXPECT_EQ(r.method, Method::GenericCut);
    }
}

TEST(Naive, FrozenValues) {
    for (const auto& x : frozen()) expect_matches(edge_indices_naive(x.g), x);
}

TEST(TreeFastPath, FrozenValues) {
    for (const auto& x : frozen()) {
        if (!is_tree(x.g)) continue;
        const IndexReport r = tree_edge_hyper_wiener(x.g);
        expect_matches(r, x);
        EXPECT_EQ(r.method, Method::Tree);
    }
}

TEST(TreeFastPath, RejectsNonTree) {
    EXPECT_THROW(tree_edge_hyper_wiener(cycle(4)), GraphError);
}

TEST(TreeFastPath, StarHasNoPairTerm) {
    for (std::size_t n = 1; n <= 30; ++n) {
        const IndexReport r = tree_edge_hyper_wiener(test::star(n));
        EXPECT_EQ(r.ww_star, 0u);
        EXPECT_EQ(r.w_e, binom2(n));
        EXPECT_EQ(r.ww_e, binom2(n));
    }
}

TEST(CutMethod, RejectsNonPartialCubes) {
    EXPECT_THROW(edge_hyper_wiener_cut(cycle(5)), NotPartialCube);
    EXPECT_THROW(edge_hyper_wiener_cut(test::k23()), NotPartialCube);
}

TEST(CutMethod, EdgeWienerFromSides) {
    const Graph c4 = cycle(4);
    const EdgeWiener ew = edge_wiener_cut(cut_side_table(c4, theta_classes(c4)));
    EXPECT_EQ(ew.w_e_hat, 2u);
    EXPECT_EQ(ew.w_e, 8u);
}

TEST(PairCounts, SubtractionMatchesDirectCount) {
    std::vector<Graph> gs{cycle(6), cycle(10), test::hypercube(4), random_tree(25, 2)};
    gs.push_back(test::make_graph(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}}));
    for (const auto& g : gs) {
        const ThetaClasses tc = theta_classes(g);
        const CutSideTable cst = cut_side_table(g, tc);
        for (std::size_t k = 0; k < tc.size(); ++k)
            for (std::size_t l = k + 1; l < tc.size(); ++l) {
                const PairCounts p = pair_counts(cst, tc, k, l);
                EXPECT_EQ(p.m11, intersection_count(cst.a[k], cst.a[l]));
                EXPECT_EQ(p.m10, intersection_count(cst.a[k], cst.b[l]));
                EXPECT_EQ(p.m01, intersection_count(cst.b[k], cst.a[l]));
                EXPECT_EQ(p.m00, intersection_count(cst.b[k], cst.b[l]));
                // Quadrants plus the two classes cover every edge once.
                EXPECT_EQ(p.m11 + p.m10 + p.m01 + p.m00 + tc.classes[k].size() + tc.classes[l].size(),
                          g.edge_count());
            }
    }
}

TEST(WwStar, InvariantUnderClassOrderAndSideSwap) {
    const Graph g = test::hypercube(4);
    const ThetaClasses tc = theta_classes(g);
    const CutSideTable cst = cut_side_table(g, tc);
    const u64 base = ww_star(cst, tc);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> perm(tc.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ThetaClasses tp;
        CutSideTable sp;
        sp.edge_count = cst.edge_count;
        sp.vertex_count = cst.vertex_count;
        tp.class_of.assign(g.edge_count(), 0);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            const std::size_t k = perm[i];
            tp.classes.push_back(tc.classes[k]);
            tp.representative.push_back(tc.representative[k]);
            for (EdgeId e : tc.classes[k]) tp.class_of[e] = static_cast<std::uint32_t>(i);
            const bool swap = rng() & 1;
            sp.a.push_back(swap ? cst.b[k] : cst.a[k]);
            sp.b.push_back(swap ? cst.a[k] : cst.b[k]);
            sp.a_count.push_back(swap ? cst.b_count[k] : cst.a_count[k]);
            sp.b_count.push_back(swap ? cst.a_count[k] : cst.b_count[k]);
            sp.vertex_side.push_back(cst.vertex_side[k]);
        }
        EXPECT_EQ(ww_star(sp, tp), base);
        EXPECT_EQ(edge_wiener_cut(sp).w_e, edge_wiener_cut(cst).w_e);
    }
}

TEST(TreeFastPath, AgreesWithCutAndNaiveOnRandomTrees) {
    for (std::uint64_t seed = 0; seed < 600; ++seed) {
        const std::size_t n = 2 + seed % 11;
        const Graph t = random_tree(n, seed);
        const IndexReport fast = tree_edge_hyper_wiener(t);
        const IndexReport cut = edge_hyper_wiener_cut(t);
        const IndexReport naive = edge_indices_naive(t);
        ASSERT_TRUE(fast.same_indices(naive)) << "n=" << n << " seed=" << seed;
        ASSERT_TRUE(cut.same_indices(naive)) << "n=" << n << " seed=" << seed;
    }
}

TEST(TreeFastPath, AgreesWithNaiveOnLargerTrees) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = random_tree(150, seed);
        EXPECT_TRUE(tree_edge_hyper_wiener(t).same_indices(edge_indices_naive(t)));
    }
}

TEST(CutMethod, AgreesWithNaiveOnCyclesAndCubes) {
    for (std::size_t n = 4; n <= 24; n += 2) {
        const Graph g = cycle(n);
        EXPECT_TRUE(edge_hyper_wiener_cut(g).same_indices(edge_indices_naive(g))) << "C" << n;
    }
    for (std::size_t d = 1; d <= 5; ++d) {
        const Graph g = test::hypercube(d);
        EXPECT_TRUE(edge_hyper_wiener_cut(g).same_indices(edge_indices_naive(g))) << "Q" << d;
    }
}

TEST(DistanceLemma, HoldsOnPartialCubes) {
    for (const Graph& g : {cycle(8), test::hypercube(4), random_tree(40, 9)})
        EXPECT_FALSE(check_distance_lemma(g, 1000, 5).has_value());
}

TEST(DistanceLemma, ExhaustiveOnSmallCube) {
    const Graph g = test::hypercube(3);
    const CutSideTable cst = cut_side_table(g, theta_classes(g));
    const DistanceMatrix dm(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = 0; f < g.edge_count(); ++f)
            if (e != f) EXPECT_EQ(edge_distance_hat(g, e, f, dm), separating_classes(cst, e, f));
}

TEST(IndexReport, ValidateCatchesBrokenIdentities) {
    IndexReport r = make_report(6, 12, 3, Method::GenericCut);
    EXPECT_EQ(r.w_e, 27u);
    EXPECT_EQ(r.ww_e, 42u);
    EXPECT_NO_THROW(r.validate());
    r.ww_e += 1;
    EXPECT_THROW(r.validate(), ConsistencyError);
    r = make_report(6, 12, 3, Method::GenericCut);
    r.w_e += 1;
    EXPECT_THROW(r.validate(), ConsistencyError);
}

TEST(IndexReport, MethodNames) {
    EXPECT_STREQ(to_string(Method::Naive), "naive");
    EXPECT_STREQ(to_string(Method::GenericCut), "generic-cut");
    EXPECT_STREQ(to_string(Method::Benzenoid), "benzenoid");
    EXPECT_STREQ(to_string(Method::Tree), "tree");
}

TEST(Checked, OverflowRaises) {
    const u64 big = ~u64{0};
    EXPECT_THROW(checked_add(big, 1), OverflowError);
    EXPECT_THROW(checked_mul(big / 2 + 1, 2), OverflowError);
    EXPECT_THROW(checked_sub(0, 1), OverflowError);
    EXPECT_EQ(binom2(0), 0u);
    EXPECT_EQ(binom2(1), 0u);
    EXPECT_EQ(binom2(7), 21u);
    EXPECT_EQ(binom2(u64{1} << 32), (u64{1} << 31) * ((u64{1} << 32) - 1));
    EXPECT_THROW(binom2(u64{1} << 33), OverflowError);
    EXPECT_THROW(make_report(u64{1} << 33, 0, 0, Method::Naive), OverflowError);
}
