#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "ewi/cut_method.hpp"
#include "ewi/graph.hpp"
#include "ewi/index_report.hpp"

namespace ewi {

/// Axial hexagon coordinate. Neighbours of (q, r) are (q+-1, r), (q, r+-1),
/// (q+1, r-1) and (q-1, r+1).
struct Hex {
    int q = 0;
    int r = 0;
    friend auto operator<=>(const Hex&, const Hex&) = default;
};

/// Vertex position on the doubled integer lattice. Hexagon (q, r) is centred
/// at (2q + r, 3r) with corners centre + (0,2), (1,1), (1,-1), (0,-2),
/// (-1,-1), (-1,1).
struct LatticePoint {
    int x = 0;
    int y = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

inline constexpr std::int32_t kNoHex = -1;

/// A hole-free benzenoid system and its derived graph.
///
/// Vertex ids follow the lexicographic order of their lattice points and edge
/// ids the lexicographic order of their (smaller, larger) endpoint ids, so the
/// numbering depends only on the hexagon set, not on input order.
///
/// Edge directions: difference vector (0,+-2) is 1, (+-1,-+1) is 2,
/// (+-1,+-1) is 3.
struct Benzenoid {
    std::vector<Hex> hexes;                              // sorted
    Graph graph;
    std::vector<LatticePoint> vertex_coord;
    std::vector<std::uint8_t> edge_direction;            // 1, 2 or 3
    std::vector<std::array<EdgeId, 6>> hex_edges;        // in corner order
    std::vector<std::array<std::int32_t, 2>> edge_hexes; // kNoHex pads peripheral edges
    std::vector<std::vector<EdgeId>> cuts;               // elementary cuts

    std::size_t hex_count() const { return hexes.size(); }
    bool is_peripheral(EdgeId e) const { return edge_hexes[e][1] == kNoHex; }
};

/// Validates and builds. Throws BenzenoidError naming the offending
/// hexagons for: empty input, duplicates, disconnected hexagon sets and
/// holes (detected by Euler's formula).
Benzenoid build_benzenoid(std::span<const Hex> hexes);

/// Straight transversals: from each edge step to the opposite edge of every
/// hexagon containing it until a peripheral edge is reached. Ordered by
/// smallest edge id, edges sorted within each cut.
std::vector<std::vector<EdgeId>> elementary_cuts(const Benzenoid& b);

/// True if the two cuts pass through a common hexagon.
bool cuts_intersect(const Benzenoid& b, std::size_t k, std::size_t l);

/// Quotient of G - E_i for one edge direction i. Nodes are the path
/// components (numbered by smallest vertex) weighted by their edge count;
/// links join components connected by direction-i edges and are weighted
/// by how many such edges there are.
struct WeightedQuotientTree {
    int direction = 0;
    std::vector<u64> node_weight;
    struct Link {
        std::uint32_t a = 0, b = 0;
        u64 weight = 0;
    };
    std::vector<Link> links;
    std::vector<std::uint32_t> component_of_vertex;
};

/// One tree per direction 1, 2, 3. Throws ConsistencyError if a component is
/// not a path or a quotient is not a tree.
std::array<WeightedQuotientTree, 3> quotient_trees(const Benzenoid& b);

/// Splitting the tree at link e into C_1(e), C_2(e) with node-weight sums
/// n_1, n_2 and link-weight sums m_1, m_2 (excluding e itself):
///   w_v = sum n_1 n_2, w_e_hat = sum m_1 m_2, w_ve = sum n_1 m_2 + n_2 m_1.
struct TreeWiener {
    u64 w_v = 0;
    u64 w_e_hat = 0;
    u64 w_ve = 0;
};

TreeWiener weighted_tree_wiener(const WeightedQuotientTree& t);

/// Edge-Wiener index from the three quotient trees.
EdgeWiener edge_wiener_benzenoid(const Benzenoid& b);

/// Edge-Wiener from the quotient trees, then the cut-pair sum over elementary
/// cuts from side-set counts, each pair cross-checked against whether the two
/// cuts geometrically intersect. method = benzenoid.
IndexReport algorithm1_edge_hyper_wiener(const Benzenoid& b);

/// Components of G - C_k - C_l with their edge counts and which of the two
/// cuts each one borders.
struct CutPairComponent {
    u64 edges = 0;
    bool touches_k = false;
    bool touches_l = false;
};

std::vector<CutPairComponent> cut_pair_components(const Benzenoid& b, std::size_t k, std::size_t l);

/// Catacondensed system grown one hexagon at a time; every new hexagon is
/// glued to exactly one existing hexagon. Deterministic in (hex_count, seed).
Benzenoid random_catacondensed(std::size_t hex_count, std::uint64_t seed);

/// Text format: one "q r" pair per line, '#' lines and blank lines ignored.
std::vector<Hex> read_hexes(std::istream& in);
std::vector<Hex> read_hexes_file(const std::filesystem::path& path);
void write_hexes(std::ostream& out, std::span<const Hex> hexes);

} // namespace ewi
