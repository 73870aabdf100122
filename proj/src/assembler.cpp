#include "vog/assembler.hpp"

#include <algorithm>
#include <cmath>

namespace vog {

namespace {

// Incremental L(G,M) evaluator: coverage cells are refcounted so a tentative
// add can be rolled back exactly; the model term is recomputed from cached
// per-structure costs and type counts.
class IncrementalCost {
public:
    explicit IncrementalCost(const Graph& g) : graph_(&g), coverage_(g) {}

    double total() const {
        double bits = universal_int_cost(size_ + 1) +
                      log_binomial(size_ + kVocabularySize - 1, kVocabularySize - 1) +
                      structure_bits_;
        double total_structs = static_cast<double>(size_);
        for (std::size_t t = 0; t < kVocabularySize; ++t) {
            if (type_counts_[t] == 0) continue;
            double c = static_cast<double>(type_counts_[t]);
            bits += c * (std::log2(total_structs) - std::log2(c));
        }
        ErrorCost e = error_cost(*graph_, coverage_);
        return bits + e.err_pos_bits + e.err_neg_bits;
    }

    void add(const Structure& s, double cost_bits) {
        coverage_.add_structure(s);
        structure_bits_ += cost_bits;
        ++type_counts_[static_cast<std::size_t>(s.type())];
        ++size_;
    }

    void remove(const Structure& s, double cost_bits) {
        coverage_.remove_structure(s);
        structure_bits_ -= cost_bits;
        --type_counts_[static_cast<std::size_t>(s.type())];
        --size_;
    }

    const CoverageState& coverage() const { return coverage_; }

private:
    const Graph* graph_;
    CoverageState coverage_;
    double structure_bits_ = 0.0;
    std::array<std::size_t, kVocabularySize> type_counts_{};
    std::size_t size_ = 0;
};

SummaryResult finish(const Graph& g, Model model, std::vector<double> benefits, Heuristic h,
                     std::vector<double> accepted_totals = {}) {
    SummaryResult result{std::move(model), {}, h, std::move(benefits), std::move(accepted_totals)};
    result.report = total_cost(g, result.model);
    return result;
}

int heuristic_rank(Heuristic::Kind kind) {
    switch (kind) {
    case Heuristic::Kind::GreedyNForget: return 0;
    case Heuristic::Kind::TopK: return 1;
    case Heuristic::Kind::Plain: return 2;
    }
    return 3;
}

} // namespace

std::string Heuristic::name() const {
    switch (kind) {
    case Kind::Plain: return "plain";
    case Kind::TopK: return "top" + std::to_string(limit);
    case Kind::GreedyNForget: return "gnf";
    }
    return "?";
}

const std::vector<Heuristic>& default_heuristics() {
    static const std::vector<Heuristic> defaults = {
        Heuristic::plain(),
        Heuristic::top_k(10),
        Heuristic::top_k(100),
        Heuristic::greedy_n_forget(500),
    };
    return defaults;
}

std::vector<LabeledCandidate> rank_candidates(std::vector<LabeledCandidate> candidates) {
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const LabeledCandidate& a, const LabeledCandidate& b) {
                         if (a.benefit != b.benefit) return a.benefit > b.benefit;
                         std::size_t an = a.structure.node_count(), bn = b.structure.node_count();
                         if (an != bn) return an < bn;
                         return a.structure.node_set().members < b.structure.node_set().members;
                     });
    return candidates;
}

SummaryResult assemble_plain(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                             const AssemblyOptions& opts) {
    auto ranked = rank_candidates(candidates);
    Model model;
    std::vector<double> benefits;
    for (const auto& c : ranked) {
        if (!opts.plain_include_all && !c.beneficial()) continue;
        model.structures.push_back(c.structure);
        benefits.push_back(c.benefit);
    }
    return finish(g, std::move(model), std::move(benefits), Heuristic::plain());
}

SummaryResult assemble_top_k(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                             std::size_t k, const AssemblyOptions& opts) {
    auto ranked = rank_candidates(candidates);
    Model model;
    std::vector<double> benefits;
    for (const auto& c : ranked) {
        if (model.size() >= k) break;
        if (!opts.plain_include_all && !c.beneficial()) continue;
        model.structures.push_back(c.structure);
        benefits.push_back(c.benefit);
    }
    return finish(g, std::move(model), std::move(benefits), Heuristic::top_k(k));
}

SummaryResult assemble_greedy_n_forget(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                                       std::size_t cap, const AssemblyOptions& opts) {
    auto ranked = rank_candidates(candidates);
    if (cap > 0 && ranked.size() > cap)
        ranked.erase(ranked.begin() + static_cast<std::ptrdiff_t>(cap), ranked.end());

    IncrementalCost cost(g);
    Model model;
    std::vector<double> benefits;
    std::vector<double> accepted_totals;
    double current = cost.total(); // baseline

    for (const auto& c : ranked) {
        double structure_bits = structure_cost(c.structure, g.node_count());
        cost.add(c.structure, structure_bits);
        double with = cost.total();
        if (with <= current) {
            current = with;
            model.structures.push_back(c.structure);
            benefits.push_back(c.benefit);
            accepted_totals.push_back(with);
        } else {
            cost.remove(c.structure, structure_bits);
        }
        if (opts.audit_incremental) {
            CostReport full = total_cost(g, model);
            if (std::abs(full.total_bits - current) > 1e-6)
                throw ValidationError("incremental cost drifted from full recomputation");
        }
    }
    return finish(g, std::move(model), std::move(benefits), Heuristic::greedy_n_forget(cap),
                  std::move(accepted_totals));
}

std::vector<SummaryResult> run_heuristics(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                                          const std::vector<Heuristic>& heuristics,
                                          const AssemblyOptions& opts) {
    std::vector<SummaryResult> results;
    results.reserve(heuristics.size());
    for (const auto& h : heuristics) {
        switch (h.kind) {
        case Heuristic::Kind::Plain: results.push_back(assemble_plain(g, candidates, opts)); break;
        case Heuristic::Kind::TopK: results.push_back(assemble_top_k(g, candidates, h.limit, opts)); break;
        case Heuristic::Kind::GreedyNForget:
            results.push_back(assemble_greedy_n_forget(g, candidates, h.limit, opts));
            break;
        }
    }
    return results;
}

std::size_t best_result_index(const std::vector<SummaryResult>& results) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < results.size(); ++i) {
        double a = results[i].report.total_bits, b = results[best].report.total_bits;
        if (a < b - 1e-12 ||
            (a <= b + 1e-12 &&
             heuristic_rank(results[i].heuristic.kind) < heuristic_rank(results[best].heuristic.kind)))
            best = i;
    }
    return best;
}

SummaryResult summarize(const Graph& g, const std::vector<LabeledCandidate>& candidates,
                        const std::vector<Heuristic>& heuristics, const AssemblyOptions& opts) {
    if (heuristics.empty()) throw ValidationError("summarize: no heuristics requested");
    std::vector<SummaryResult> results = run_heuristics(g, candidates, heuristics, opts);
    return results[best_result_index(results)];
}

} // namespace vog
