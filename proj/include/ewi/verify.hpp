#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewi/benzenoid.hpp"
#include "ewi/graph.hpp"
#include "ewi/index_report.hpp"

namespace ewi {

struct CorpusEntry {
    std::string name;
    Graph graph;
    std::optional<Benzenoid> benzenoid;
    bool tree = false;
};

/// Random trees (n drawn from 2..max_tree_n), even cycles C_4..C_40 and
/// hypercubes Q_1..Q_6.
std::vector<CorpusEntry> partial_cube_corpus(std::size_t tree_count, std::size_t max_tree_n, std::uint64_t seed);

/// Random catacondensed systems with 1..max_hexes hexagons.
std::vector<CorpusEntry> benzenoid_corpus(std::size_t samples, std::size_t max_hexes, std::uint64_t seed);

/// Draws `samples` edge pairs (with replacement) and returns the first pair
/// whose BFS endpoint-minimum distance differs from the number of Theta
/// classes separating the two edges, if any.
struct LemmaViolation {
    EdgeId e, f;
    std::size_t bfs, classes;
};
std::optional<LemmaViolation> check_distance_lemma(const Graph& g, std::size_t samples, std::uint64_t seed);

struct Counterexample {
    std::string case_name;
    std::string detail;
    std::string input_format;   // "edgelist" or "benzenoid"
    std::string input;          // serialized input in that format
    std::vector<IndexReport> reports;
};

struct SuiteResult {
    std::string suite;
    std::size_t cases = 0;
    std::optional<Counterexample> failure;

    bool passed() const { return !failure; }
};

/// Every method that applies to the entry (naive, generic cut, tree,
/// benzenoid pipeline) must agree exactly; the entry must certify as a partial cube;
/// the distance lemma must hold on `lemma_samples` sampled pairs.
std::optional<Counterexample> verify_entry(const CorpusEntry& entry, std::size_t lemma_samples, std::uint64_t seed);

SuiteResult verify_polyacene_suite(std::size_t max_h, std::size_t naive_max_h = 8);
SuiteResult verify_partial_cube_suite(std::size_t tree_count, std::size_t max_tree_n, std::uint64_t seed);
SuiteResult verify_benzenoid_suite(std::size_t max_hexes, std::size_t samples, std::uint64_t seed);

} // namespace ewi
