#include "vog/mdl.hpp"

#include <cmath>

namespace vog {

namespace {
// log2 of the normalizing constant c0 = 2.865064 of the universal integer code.
constexpr double kLog2C0 = 1.5185673663648485;
constexpr double kLn2 = 0.6931471805599453;

double log2_gamma(std::uint64_t x) { return std::lgamma(static_cast<double>(x)) / kLn2; }
} // namespace

double universal_int_cost(std::uint64_t z) {
    if (z < 1) throw ValidationError("universal_int_cost: argument must be >= 1");
    double bits = kLog2C0;
    double term = std::log2(static_cast<double>(z));
    while (term > 0.0) {
        bits += term;
        term = std::log2(term);
    }
    return bits;
}

double log_binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) throw ValidationError("log_binomial: k > n");
    return log2_gamma(n + 1) - log2_gamma(k + 1) - log2_gamma(n - k + 1);
}

double log_two_set_choice(std::uint64_t n, std::uint64_t a, std::uint64_t b) {
    if (a < 1 || b < 1 || a + b > n) throw ValidationError("log_two_set_choice: need a,b >= 1 and a+b <= n");
    return log2_gamma(n + 1) - log2_gamma(a + 1) - log2_gamma(b + 1) - log2_gamma(n - a - b + 1);
}

PrefixCodeLengths prefix_code_lengths(std::uint64_t ones, std::uint64_t zeros) {
    if (ones + zeros == 0) throw ValidationError("prefix_code_lengths: empty distribution");
    double total = static_cast<double>(ones + zeros);
    PrefixCodeLengths codes;
    codes.l1 = ones == 0 ? 0.0 : -std::log2(static_cast<double>(ones) / total);
    codes.l0 = zeros == 0 ? 0.0 : -std::log2(static_cast<double>(zeros) / total);
    return codes;
}

double error_part_bits(std::uint64_t domain, std::uint64_t ones) {
    if (domain == 0) return 0.0;
    auto codes = prefix_code_lengths(ones, domain - ones);
    return std::log2(static_cast<double>(domain + 1)) + static_cast<double>(ones) * codes.l1 +
           static_cast<double>(domain - ones) * codes.l0;
}

double structure_cost(const Structure& s, std::size_t n) {
    s.validate(n);
    switch (s.type()) {
    case StructureType::FullClique: {
        std::uint64_t k = s.as<FullClique>().nodes.size();
        return universal_int_cost(k) + log_binomial(n, k);
    }
    case StructureType::NearClique: {
        const auto& nc = s.as<NearClique>();
        std::uint64_t k = nc.nodes.size();
        auto codes = prefix_code_lengths(nc.present_edges, nc.absent_edges);
        return universal_int_cost(k) + log_binomial(n, k) + std::log2(static_cast<double>(s.area_size())) +
               static_cast<double>(nc.present_edges) * codes.l1 +
               static_cast<double>(nc.absent_edges) * codes.l0;
    }
    case StructureType::FullBipartite: {
        const auto& fb = s.as<FullBipartite>();
        return universal_int_cost(fb.left.size()) + universal_int_cost(fb.right.size()) +
               log_two_set_choice(n, fb.left.size(), fb.right.size());
    }
    case StructureType::NearBipartite: {
        const auto& nb = s.as<NearBipartite>();
        auto codes = prefix_code_lengths(nb.present_edges, nb.absent_edges);
        return universal_int_cost(nb.left.size()) + universal_int_cost(nb.right.size()) +
               log_two_set_choice(n, nb.left.size(), nb.right.size()) +
               std::log2(static_cast<double>(s.area_size())) +
               static_cast<double>(nb.present_edges) * codes.l1 +
               static_cast<double>(nb.absent_edges) * codes.l0;
    }
    case StructureType::Star: {
        std::uint64_t spokes = s.as<Star>().spokes.size();
        return universal_int_cost(spokes) + std::log2(static_cast<double>(n)) +
               log_binomial(n - 1, spokes);
    }
    case StructureType::Chain: {
        std::uint64_t len = s.as<Chain>().nodes.size();
        double bits = universal_int_cost(len - 1);
        for (std::uint64_t i = 0; i < len; ++i) bits += std::log2(static_cast<double>(n - i));
        return bits;
    }
    }
    return 0.0;
}

double model_cost(const Model& m, std::size_t n) {
    double bits = universal_int_cost(m.size() + 1) +
                  log_binomial(m.size() + kVocabularySize - 1, kVocabularySize - 1);
    auto counts = m.type_counts();
    double total = static_cast<double>(m.size());
    for (std::size_t t = 0; t < kVocabularySize; ++t) {
        if (counts[t] == 0) continue;
        double c = static_cast<double>(counts[t]);
        bits += c * (std::log2(total) - std::log2(c)); // type codes over empirical frequencies
    }
    for (const auto& s : m.structures) bits += structure_cost(s, n);
    return bits;
}

void CoverageState::update(const Structure& s, bool add) {
    bool exact = s.is_exact();
    s.for_each_area_cell([&](NodeId u, NodeId v) {
        std::uint64_t key = pack_cell(u, v);
        std::uint32_t& value = cells_[key];
        std::uint32_t full = value & 0xFFFFu;
        std::uint32_t ex = value >> 16;
        std::uint32_t before_any = full + ex;
        std::uint32_t before_ex = ex;
        if (add) {
            exact ? ++ex : ++full;
        } else {
            exact ? --ex : --full;
        }
        std::uint32_t after_any = full + ex;
        std::uint32_t after_ex = ex;
        if (before_any == 0 && after_any > 0) {
            ++covered_cells_;
            if (graph_->has_edge(u, v)) ++covered_edges_;
        } else if (before_any > 0 && after_any == 0) {
            --covered_cells_;
            if (graph_->has_edge(u, v)) --covered_edges_;
        }
        if (before_ex == 0 && after_ex > 0) {
            ++exact_cells_;
            if (graph_->has_edge(u, v)) ++exact_edges_;
        } else if (before_ex > 0 && after_ex == 0) {
            --exact_cells_;
            if (graph_->has_edge(u, v)) --exact_edges_;
        }
        if (after_any == 0) cells_.erase(key);
        else value = (ex << 16) | full;
    });
}

void CoverageState::add_structure(const Structure& s) { update(s, true); }
void CoverageState::remove_structure(const Structure& s) { update(s, false); }

int CoverageState::cell_state(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    const std::uint32_t* value = cells_.find(pack_cell(u, v));
    if (!value) return 0;
    return (*value >> 16) > 0 ? 2 : 1;
}

CoverageState build_coverage(const Graph& g, const Model& m) {
    CoverageState cov(g);
    for (const auto& s : m.structures) cov.add_structure(s);
    return cov;
}

ErrorCost error_cost(const Graph& g, const CoverageState& cov) {
    ErrorCost e;
    e.pos_domain = cov.covered_cells() - cov.exact_cells();
    std::uint64_t pos_edges = cov.covered_edges() - cov.exact_edges();
    e.pos_ones = e.pos_domain - pos_edges; // modeled cells that are not edges
    e.neg_domain = g.cell_count() - cov.covered_cells();
    e.neg_ones = g.edge_count() - cov.covered_edges();
    e.err_pos_bits = error_part_bits(e.pos_domain, e.pos_ones);
    e.err_neg_bits = error_part_bits(e.neg_domain, e.neg_ones);
    return e;
}

CostReport total_cost(const Graph& g, const Model& m, const CoverageState& cov) {
    CostReport report;
    report.model_bits = model_cost(m, g.node_count());
    ErrorCost e = error_cost(g, cov);
    report.err_pos_bits = e.err_pos_bits;
    report.err_neg_bits = e.err_neg_bits;
    report.total_bits = report.model_bits + e.err_pos_bits + e.err_neg_bits;
    report.baseline_bits = baseline_cost(g);
    report.unexplained_edges = e.neg_ones;
    report.unexplained_edge_fraction =
        g.edge_count() > 0 ? static_cast<double>(e.neg_ones) / static_cast<double>(g.edge_count()) : 0.0;
    report.type_counts = m.type_counts();
    return report;
}

CostReport total_cost(const Graph& g, const Model& m) {
    CoverageState cov = build_coverage(g, m);
    return total_cost(g, m, cov);
}

double baseline_cost(const Graph& g) {
    return universal_int_cost(1) + error_part_bits(g.cell_count(), g.edge_count());
}

} // namespace vog
