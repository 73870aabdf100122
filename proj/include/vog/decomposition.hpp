#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "vog/graph.hpp"

namespace vog {

enum class CandidateSource : std::uint8_t {
    SlashburnEgonet,
    SlashburnComponent,
    External,
};

struct Candidate {
    NodeSet nodes;
    CandidateSource source = CandidateSource::External;
};

// Candidate subgraphs in emission order, set-deduplicated, each with at
// least min_size nodes.
struct CandidateSet {
    std::vector<Candidate> candidates;

    std::size_t size() const { return candidates.size(); }
};

struct SlashburnParams {
    // Hubs removed per iteration; 0 selects the default ~0.5% of n.
    std::size_t k = 0;
    // Stop once the giant component is at most this large; 0 -> min_size.
    std::size_t gcc_stop = 0;
    // Candidate size floor.
    std::size_t min_size = 10;

    std::size_t effective_k(std::size_t n) const;
    std::size_t effective_gcc_stop() const { return gcc_stop > 0 ? gcc_stop : std::max<std::size_t>(min_size, 2); }
};

// Iterative hub removal: each round takes the k highest-degree nodes of the
// current giant component (ties to the smaller index), emits their egonets,
// removes them, emits every non-giant connected component that survives the
// size floor, and recurses on the giant component.
CandidateSet slashburn_decompose(const Graph& g, const SlashburnParams& params);

// One candidate per line, whitespace-separated external labels. Unknown
// labels are an error; duplicate sets collapse to the first occurrence.
CandidateSet load_external_candidates(std::istream& in, const Graph& g, std::size_t min_size = 2);

void write_candidates(std::ostream& out, const CandidateSet& candidates, const Graph& g);

} // namespace vog
