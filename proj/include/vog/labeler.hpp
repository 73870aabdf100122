#pragma once

#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "vog/decomposition.hpp"
#include "vog/graph.hpp"
#include "vog/mdl.hpp"
#include "vog/structures.hpp"

namespace vog {

struct LabelParams {
    std::uint64_t seed = 0;
    // heterophily propagation for the bipartition split
    double heterophily = 0.4;
    double damping = 0.5;
    double epsilon = 1e-6;
    std::size_t max_iters = 100;
    // at or below this many nodes, role assignments are searched exhaustively
    std::size_t exhaustive_max_nodes = 7;
};

struct LabeledCandidate {
    Structure structure;
    double local_cost = 0.0; // L(s) plus local error bits
    double benefit = 0.0;    // bits saved vs. leaving the patch as E- noise

    bool beneficial() const { return benefit > 0.0; }
};

// Error-free match against the vocabulary, tested in the order
// clique, chain, star, bipartite core.
std::optional<StructureType> test_perfect(const Subgraph& sub);

// Hub = highest induced degree (ties to the smaller index), rest spokes.
Star star_roles(const Subgraph& sub);

// Approximate max-cut split: exact 2-coloring when the subgraph is
// bipartite, otherwise damped heterophily propagation seeded at the
// highest-degree node (+1) and its neighbors (-1), signs decide.
std::pair<NodeSet, NodeSet> bipartite_roles(const Subgraph& sub, const LabelParams& params = {});

// Double-BFS endpoint finding plus local-search extension; operates on the
// largest connected component. Nodes off the chain stay as local error.
Chain chain_roles(const Subgraph& sub, std::mt19937_64& rng);

// Assigns the vocabulary type with the lowest local encoding cost. A perfect
// match costs exactly its structure bits; otherwise all six representations
// are compared (cost ties broken fc > st > fb > ch > nc > nb). The
// per-candidate RNG derives from (params.seed, candidate_index).
LabeledCandidate label(const Subgraph& sub, const LabelParams& params = {},
                       std::uint64_t candidate_index = 0);

// Labels every candidate; parallel across candidates, deterministic in the
// thread count. threads = 0 picks the hardware concurrency.
std::vector<LabeledCandidate> label_all(const Graph& g, const CandidateSet& candidates,
                                        const LabelParams& params = {}, std::size_t threads = 0);

// Bits the candidate's patch occupies in the empty-model error encoding:
// its cells priced at the graph-wide baseline prefix code lengths. The
// reference point for encoding benefit.
double patch_noise_bits(const Graph& g, std::uint64_t patch_cells, std::uint64_t patch_edges);

} // namespace vog
