#include "ewi/verify.hpp"

#include <random>
#include <sstream>
#include <variant>

#include "ewi/cut_method.hpp"
#include "ewi/edge_list.hpp"
#include "ewi/generators.hpp"
#include "ewi/oracle.hpp"
#include "ewi/polyacene.hpp"
#include "ewi/theta.hpp"

namespace ewi {

std::vector<CorpusEntry> partial_cube_corpus(std::size_t tree_count, std::size_t max_tree_n, std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(2, std::max<std::size_t>(2, max_tree_n));
    for (std::size_t i = 0; i < tree_count; ++i) {
        const std::size_t n = size(rng);
        const std::uint64_t s = rng();
        corpus.push_back({"tree n=" + std::to_string(n) + " seed=" + std::to_string(s), random_tree(n, s), {}, true});
    }
    for (std::size_t n = 4; n <= 40; n += 2)
        corpus.push_back({"C_" + std::to_string(n), generate_family(Family::EvenCycle, n), {}, false});
    for (std::size_t dim = 1; dim <= 6; ++dim)
        corpus.push_back({"Q_" + std::to_string(dim), generate_family(Family::Hypercube, dim), {}, dim == 1});
    return corpus;
}

std::vector<CorpusEntry> benzenoid_corpus(std::size_t samples, std::size_t max_hexes, std::uint64_t seed) {
    std::vector<CorpusEntry> corpus;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_hexes));
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t h = size(rng);
        const std::uint64_t s = rng();
        Benzenoid b = random_catacondensed(h, s);
        Graph g = b.graph;
        corpus.push_back({"catacondensed h=" + std::to_string(h) + " seed=" + std::to_string(s), std::move(g),
                          std::move(b), false});
    }
    return corpus;
}

std::optional<LemmaViolation> check_distance_lemma(const Graph& g, std::size_t samples, std::uint64_t seed) {
    const PartialCube pc = require_partial_cube(g);
    const DistanceMatrix dm(g);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<EdgeId> pick(0, static_cast<EdgeId>(g.edge_count() - 1));
    for (std::size_t i = 0; i < samples; ++i) {
        const EdgeId e = pick(rng), f = pick(rng);
        const std::size_t bfs = edge_distance_hat(g, e, f, dm);
        const std::size_t cls = separating_classes(pc.sides, e, f);
        if (bfs != cls) return LemmaViolation{e, f, bfs, cls};
    }
    return std::nullopt;
}

namespace {

Counterexample make_counterexample(const CorpusEntry& entry, std::string detail, std::vector<IndexReport> reports) {
    Counterexample c;
    c.case_name = entry.name;
    c.detail = std::move(detail);
    std::ostringstream ss;
    if (entry.benzenoid) {
        c.input_format = "benzenoid";
        write_hexes(ss, entry.benzenoid->hexes);
    } else {
        c.input_format = "edgelist";
        write_edge_list(ss, entry.graph);
    }
    c.input = ss.str();
    c.reports = std::move(reports);
    return c;
}

} // namespace

std::optional<Counterexample> verify_entry(const CorpusEntry& entry, std::size_t lemma_samples, std::uint64_t seed) {
    std::vector<IndexReport> reports;
    try {
        reports.push_back(edge_indices_naive(entry.graph));
        auto cert = certify_partial_cube(entry.graph);
        if (auto* r = std::get_if<Rejection>(&cert))
            return make_counterexample(entry, std::string("not certified: ") + to_string(r->reason) + " " + r->detail,
                                       reports);
        reports.push_back(edge_hyper_wiener_cut(std::get<PartialCube>(cert)));
        if (entry.tree) reports.push_back(tree_edge_hyper_wiener(entry.graph));
        if (entry.benzenoid) {
            reports.push_back(algorithm1_edge_hyper_wiener(*entry.benzenoid));
            if (entry.benzenoid->cuts != std::get<PartialCube>(cert).classes.classes)
                return make_counterexample(entry, "elementary cuts differ from Theta classes", reports);
        }
        for (const auto& r : reports) {
            r.validate();
            if (!r.same_indices(reports.front()))
                return make_counterexample(
                    entry, std::string(to_string(r.method)) + " disagrees with " + to_string(reports.front().method),
                    reports);
        }
        if (entry.graph.edge_count() > 0 && lemma_samples > 0)
            if (auto v = check_distance_lemma(entry.graph, lemma_samples, seed))
                return make_counterexample(entry,
                                           "distance lemma fails for edges " + std::to_string(v->e) + "," +
                                               std::to_string(v->f) + ": bfs " + std::to_string(v->bfs) +
                                               " vs classes " + std::to_string(v->classes),
                                           reports);
    } catch (const std::exception& ex) {
        return make_counterexample(entry, std::string("exception: ") + ex.what(), reports);
    }
    return std::nullopt;
}

SuiteResult verify_polyacene_suite(std::size_t max_h, std::size_t naive_max_h) {
    SuiteResult res{"polyacene", 0, {}};
    for (std::size_t h = 1; h <= max_h; ++h) {
        const Benzenoid b = generate_polyacene(h);
        CorpusEntry entry{"L_" + std::to_string(h), b.graph, b, false};
        std::vector<IndexReport> reports;
        try {
            const IndexReport alg = algorithm1_edge_hyper_wiener(b);
            reports.push_back(alg);
            const PolyaceneFormulas f = closed_formulas(h);
            if (alg.m != f.m || alg.w_e != f.w_e || alg.ww_star != f.ww_star || alg.ww_e != f.ww_e)
                res.failure = make_counterexample(entry, "benzenoid pipeline disagrees with the closed formulas", reports);
            else if (ww_star_from_table1(h) != f.ww_star)
                res.failure = make_counterexample(entry, "cut-pair table sum disagrees with the closed formula", reports);
            else if (h <= naive_max_h) {
                reports.push_back(edge_indices_naive(b.graph));
                if (!reports.back().same_indices(alg))
                    res.failure = make_counterexample(entry, "naive oracle disagrees with the benzenoid pipeline", reports);
            }
        } catch (const std::exception& ex) {
            res.failure = make_counterexample(entry, std::string("exception: ") + ex.what(), reports);
        }
        ++res.cases;
        if (res.failure) break;
    }
    return res;
}

SuiteResult verify_partial_cube_suite(std::size_t tree_count, std::size_t max_tree_n, std::uint64_t seed) {
    SuiteResult res{"partial-cubes", 0, {}};
    for (const auto& entry : partial_cube_corpus(tree_count, max_tree_n, seed)) {
        ++res.cases;
        if ((res.failure = verify_entry(entry, 1000, seed + res.cases))) return res;
    }
    // Non-partial cubes must be rejected.
    Graph c5 = generate_family(Family::Path, 5);
    c5.add_edge(4, 0);
    Graph k23(5);
    for (VertexId a : {0u, 1u})
        for (VertexId b : {2u, 3u, 4u}) k23.add_edge(a, b);
    for (const auto& [name, g] : {std::pair<const char*, const Graph&>{"C_5", c5}, {"K_{2,3}", k23}}) {
        ++res.cases;
        if (std::holds_alternative<PartialCube>(certify_partial_cube(g))) {
            res.failure = make_counterexample({name, g, {}, false}, "certified a non-partial cube", {});
            return res;
        }
    }
    return res;
}

SuiteResult verify_benzenoid_suite(std::size_t max_hexes, std::size_t samples, std::uint64_t seed) {
    SuiteResult res{"benzenoid", 0, {}};
    for (const auto& entry : benzenoid_corpus(samples, max_hexes, seed)) {
        ++res.cases;
        if (entry.graph.edge_count() != 5 * entry.benzenoid->hex_count() + 1) {
            res.failure = make_counterexample(entry, "catacondensed system without 5h+1 edges", {});
            return res;
        }
        if ((res.failure = verify_entry(entry, 1000, seed + res.cases))) return res;
    }
    return res;
}

} // namespace ewi
