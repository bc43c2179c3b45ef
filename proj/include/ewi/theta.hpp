#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ewi/bitvector.hpp"
#include "ewi/checked.hpp"
#include "ewi/errors.hpp"
#include "ewi/graph.hpp"

namespace ewi {

/// Partition of the edge set into Djokovic-Winkler classes.
/// Classes are ordered by their smallest edge id; each class lists its edges in
/// increasing order and its representative is that smallest edge.
struct ThetaClasses {
    std::vector<std::vector<EdgeId>> classes;
    std::vector<std::uint32_t> class_of;
    std::vector<EdgeId> representative;

    std::size_t size() const { return classes.size(); }
};

/// e = xy and f = uv are related iff d(x,u) + d(y,v) != d(x,v) + d(y,u).
bool djokovic_winkler(const Graph& g, const DistanceMatrix& dm, EdgeId e, EdgeId f);

/// Transitive closure of the Djokovic-Winkler relation, tested over all edge
/// pairs. Throws NotPartialCube(OddCycle) for non-bipartite input.
ThetaClasses theta_classes(const Graph& g);
ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& dm);

/// Canonicalises an arbitrary edge partition into ThetaClasses ordering.
/// Throws ConsistencyError if `parts` is not a partition of 0..edge_count-1.
ThetaClasses classes_from_partition(std::size_t edge_count, std::vector<std::vector<EdgeId>> parts);

/// For each class k, the two sides of G - E_k.
///   vertex_side[k] bit v is clear for the side containing vertex 0 ("A") and
///   set for the other side ("B"); a[k] / b[k] hold the edges lying entirely
///   inside side A / side B. Class edges are in neither.
struct CutSideTable {
    std::size_t edge_count = 0;
    std::size_t vertex_count = 0;
    std::vector<BitVector> a;
    std::vector<BitVector> b;
    std::vector<BitVector> vertex_side;
    std::vector<u64> a_count, b_count;   // |A_k|, |B_k|

    std::size_t class_count() const { return a.size(); }
};

/// Throws NotPartialCube(ClassNotACut) if removing some class does not leave
/// exactly two components with every class edge crossing between them.
CutSideTable cut_side_table(const Graph& g, const ThetaClasses& tc);

/// Number of classes k with e and f on opposite sides (one in A_k, the other
/// in B_k).
std::size_t separating_classes(const CutSideTable& cst, EdgeId e, EdgeId f);

/// Per-vertex coordinate vector: bit k is the vertex's side of class k.
struct HammingLabeling {
    std::vector<BitVector> labels;
};

HammingLabeling hamming_labeling(const CutSideTable& cst);

struct PartialCube {
    ThetaClasses classes;
    CutSideTable sides;
    HammingLabeling labels;
};

struct Rejection {
    RejectReason reason;
    std::string detail;
    // OddCycle: the cycle's vertices. LabelingMismatch: the offending vertex
    // pair. ClassNotACut: endpoints of the class representative.
    std::vector<VertexId> witness;
};

using Certification = std::variant<PartialCube, Rejection>;

/// Bipartiteness, Theta classes, cut sides, then a full check that Hamming
/// distance between labels equals BFS distance for every vertex pair.
/// Rejection is returned, not thrown. Requires a connected graph.
Certification certify_partial_cube(const Graph& g);

/// Convenience wrapper that throws NotPartialCube on rejection.
PartialCube require_partial_cube(const Graph& g);

} // namespace ewi
