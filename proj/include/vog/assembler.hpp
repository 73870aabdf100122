#pragma once

#include <string>
#include <vector>

#include "vog/graph.hpp"
#include "vog/labeler.hpp"
#include "vog/mdl.hpp"

namespace vog {

struct Heuristic {
    enum class Kind { Plain, TopK, GreedyNForget } kind = Kind::Plain;
    std::size_t limit = 0; // k for TopK, candidate cap for GreedyNForget (0 = unlimited)

    static Heuristic plain() { return {Kind::Plain, 0}; }
    static Heuristic top_k(std::size_t k) { return {Kind::TopK, k}; }
    static Heuristic greedy_n_forget(std::size_t cap = 500) { return {Kind::GreedyNForget, cap}; }

    std::string name() const;
};

struct AssemblyOptions {
    // Plain and TopK normally keep only candidates with positive benefit;
    // this restores the take-everything behavior.
    bool plain_include_all = false;
    // Recompute coverage from scratch after every greedy step and compare
    // against the incremental state (test hook, quadratic).
    bool audit_incremental = false;
};

struct SummaryResult {
    Model model;
    CostReport report;
    Heuristic heuristic;
    std::vector<double> benefits; // per accepted structure, model order
    // total bits after each accepted structure (GreedyNForget audit trail)
    std::vector<double> accepted_totals;
};

// Stable order of decreasing benefit; ties prefer fewer nodes, then the
// lexicographically smallest node set.
std::vector<LabeledCandidate> rank_candidates(std::vector<LabeledCandidate> candidates);

SummaryResult assemble_plain(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                             const AssemblyOptions& opts = {});

SummaryResult assemble_top_k(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                             std::size_t k, const AssemblyOptions& opts = {});

// Scans ranked candidates, tentatively adding each; keeps a structure only
// if the total encoded length does not increase.
SummaryResult assemble_greedy_n_forget(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                                       std::size_t cap = 500, const AssemblyOptions& opts = {});

// Runs every requested heuristic and returns the cheapest summary; ties
// prefer GreedyNForget over TopK over Plain.
SummaryResult summarize(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                        const std::vector<Heuristic>& heuristics = default_heuristics(),
                        const AssemblyOptions& opts = {});

// All per-heuristic results, in request order (for side-by-side reporting).
std::vector<SummaryResult> run_heuristics(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                                          const std::vector<Heuristic>& heuristics,
                                          const AssemblyOptions& opts = {});

// Index of the cheapest result under the summarize() tie rule.
std::size_t best_result_index(const std::vector<SummaryResult>& results);

const std::vector<Heuristic>& default_heuristics();

} // namespace vog
