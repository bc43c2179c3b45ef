#pragma once

#include <cstdint>
#include <string_view>

#include "ewi/graph.hpp"

namespace ewi {

enum class Family { Path, EvenCycle, Hypercube, Star };

Family parse_family(std::string_view name);

/// Deterministic member of a test family.
///   Path:      `size` vertices (P_size).
///   EvenCycle: `size` vertices, even and >= 4.
///   Hypercube: dimension `size`; vertex v carries the bit label v.
///   Star:      K_{1,size}, centre is vertex 0.
Graph generate_family(Family kind, std::size_t size);

/// Uniform random labelled tree on n vertices (Pruefer decoding).
Graph random_tree(std::size_t n, std::uint64_t seed);

} // namespace ewi
