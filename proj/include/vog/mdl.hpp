#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "vog/cell_map.hpp"
#include "vog/graph.hpp"
#include "vog/structures.hpp"

namespace vog {

// ---------------------------------------------------------------------------
// Code-length primitives. All lengths are real-valued bits (base-2 logs).
// ---------------------------------------------------------------------------

// Universal code length for integers z >= 1: log2(c0) plus the positive
// terms of the iterated logarithm of z, c0 = 2.865064.
double universal_int_cost(std::uint64_t z);

// log2 of binomial(n, k), via lgamma.
double log_binomial(std::uint64_t n, std::uint64_t k);

// log2 of n! / (a! b! (n-a-b)!): index over non-overlapping choices of two
// node sets of sizes a and b out of n.
double log_two_set_choice(std::uint64_t n, std::uint64_t a, std::uint64_t b);

struct PrefixCodeLengths {
    double l1 = 0.0; // code length for a present cell
    double l0 = 0.0; // code length for an absent cell
};

// Optimal prefix code lengths for a binary source with the given counts.
// A zero count yields length 0 for that symbol (its term contributes 0 bits).
PrefixCodeLengths prefix_code_lengths(std::uint64_t ones, std::uint64_t zeros);

// Bits for one error part: a binary patch of `domain` cells with `ones` set
// cells. log2(domain+1) transmits the count of ones, then optimal prefix
// codes transmit the cells. An empty domain costs nothing.
double error_part_bits(std::uint64_t domain, std::uint64_t ones);

// ---------------------------------------------------------------------------
// Structure and model costs.
// ---------------------------------------------------------------------------

// L(s) against a graph of n nodes. Validates the structure first.
double structure_cost(const Structure& s, std::size_t n);

// L(M): number of structures, composition over types, per-structure type
// code (empirical frequencies within M) plus L(s).
double model_cost(const Model& m, std::size_t n);

// ---------------------------------------------------------------------------
// Coverage and error accounting.
// ---------------------------------------------------------------------------

// Tracks which adjacency cells the model describes. Cells covered by any
// structure form the modeled area; cells covered by a near structure are
// encoded exactly and excluded from E+. Reference counts per cell make
// add/remove exact inverses, which the greedy assembler relies on.
class CoverageState {
public:
    explicit CoverageState(const Graph& g) : graph_(&g) {}

    void add_structure(const Structure& s);
    void remove_structure(const Structure& s);

    std::uint64_t covered_cells() const { return covered_cells_; }
    std::uint64_t exact_cells() const { return exact_cells_; }
    std::uint64_t covered_edges() const { return covered_edges_; }
    std::uint64_t exact_edges() const { return exact_edges_; }

    // 0 = not covered, 1 = covered (approximate area), 2 = covered exactly.
    int cell_state(NodeId u, NodeId v) const;

    const Graph& graph() const { return *graph_; }

private:
    void update(const Structure& s, bool add);

    const Graph* graph_;
    CellMap cells_; // value: low 16 bits full-structure count, high 16 exact count
    std::uint64_t covered_cells_ = 0;
    std::uint64_t exact_cells_ = 0;
    std::uint64_t covered_edges_ = 0;
    std::uint64_t exact_edges_ = 0;
};

CoverageState build_coverage(const Graph& g, const Model& m);

struct ErrorCost {
    double err_pos_bits = 0.0;
    double err_neg_bits = 0.0;
    std::uint64_t pos_domain = 0; // covered cells outside exact areas
    std::uint64_t pos_ones = 0;   // modeled as edge, absent in the graph
    std::uint64_t neg_domain = 0; // cells not covered by the model
    std::uint64_t neg_ones = 0;   // graph edges the model does not describe
};

// E+ over the approximately modeled area, E- over the unmodeled remainder.
ErrorCost error_cost(const Graph& g, const CoverageState& cov);

struct CostReport {
    double model_bits = 0.0;
    double err_pos_bits = 0.0;
    double err_neg_bits = 0.0;
    double total_bits = 0.0;
    double baseline_bits = 0.0;
    double unexplained_edge_fraction = 0.0;
    std::uint64_t unexplained_edges = 0;
    std::array<std::size_t, kVocabularySize> type_counts{};

    double ratio() const { return baseline_bits > 0 ? total_bits / baseline_bits : 1.0; }
};

CostReport total_cost(const Graph& g, const Model& m);

// Same, reusing an already-built coverage for m (the assembler's hot path).
CostReport total_cost(const Graph& g, const Model& m, const CoverageState& cov);

// L(G, empty model): everything goes through E-.
double baseline_cost(const Graph& g);

} // namespace vog
