#pragma once

#include <cstdint>
#include <vector>

#include "vog/graph.hpp"
#include "vog/structures.hpp"

namespace vog {

// The planted ground truth of a synthetic graph, for recovery checks.
struct PlantedStructure {
    StructureType type;
    NodeSet nodes;
};

struct GeneratedGraph {
    Graph graph;
    std::vector<PlantedStructure> planted;
};

// Two cliques bridged by two chained stars. Default sizes reproduce the
// published totals of 841 nodes and 7547 edges exactly:
//   clique A (42) -- big star (602) -- small star (91) -- clique B (110),
// where the big star's spokes include one clique-A node and the small star's
// hub, and the small star's spokes include two clique-B nodes.
GeneratedGraph generate_cavemen(std::size_t clique_a = 42, std::size_t clique_b = 110,
                                std::size_t star_big_spokes = 601, std::size_t star_small_spokes = 90);

// Erdos-Renyi G(n, p).
Graph generate_er(std::size_t n, double p, std::uint64_t seed);

// One perfect structure embedded in ER noise over the remaining nodes.
// For Star, size counts the spokes; for FullBipartite, size and size_b are
// the two sides; for Chain, size is the path length.
GeneratedGraph generate_planted(StructureType type, std::size_t size, std::size_t size_b,
                                std::size_t n, double noise_p, std::uint64_t seed);

// Preferential attachment: each new node attaches to `attach` existing
// nodes, degree-proportionally. Power-law degree tail, connected.
Graph generate_powerlaw(std::size_t n, std::size_t attach, std::uint64_t seed);

} // namespace vog
