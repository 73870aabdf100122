#include "doctest.h"

#include <random>

#include "vog/assembler.hpp"
#include "vog/generators.hpp"

using namespace vog;

namespace {

LabeledCandidate fake_candidate(Structure s, double benefit) {
    return LabeledCandidate{std::move(s), 10.0, benefit};
}

std::vector<LabeledCandidate> pipeline_candidates(const Graph& g, std::size_t min_size = 3,
                                                  std::size_t k = 0) {
    CandidateSet cands = slashburn_decompose(g, SlashburnParams{.k = k, .min_size = min_size});
    return label_all(g, cands, LabelParams{}, 1);
}

} // namespace

TEST_CASE("ranking is by benefit, then fewer nodes, then node set") {
    Structure a(FullClique{NodeSet({0, 1, 2})});
    Structure b(FullClique{NodeSet({3, 4})});
    Structure c(FullClique{NodeSet({5, 6})});

    auto ranked = rank_candidates({fake_candidate(a, 5.0), fake_candidate(b, 9.2), fake_candidate(c, 1.1)});
    CHECK(ranked[0].benefit == 9.2);
    CHECK(ranked[1].benefit == 5.0);
    CHECK(ranked[2].benefit == 1.1);

    // equal benefit: smaller node count first, then lexicographic node set
    auto tied = rank_candidates({fake_candidate(a, 2.0), fake_candidate(c, 2.0), fake_candidate(b, 2.0)});
    CHECK(tied[0].structure == b);
    CHECK(tied[1].structure == c);
    CHECK(tied[2].structure == a);

    CHECK(rank_candidates({}).empty());
}

TEST_CASE("plain takes every beneficial candidate") {
    Graph g = generate_cavemen().graph;
    auto labeled = pipeline_candidates(g, 10);
    SummaryResult plain = assemble_plain(g, labeled);
    std::size_t beneficial = 0;
    for (const auto& c : labeled)
        if (c.beneficial()) ++beneficial;
    CHECK(plain.model.size() == beneficial);
    CHECK(plain.report.total_bits < plain.report.baseline_bits);
}

TEST_CASE("plain with zero candidates equals the baseline exactly") {
    Graph g = generate_er(60, 0.05, 2);
    SummaryResult plain = assemble_plain(g, {});
    CHECK(plain.model.empty());
    CHECK(plain.report.total_bits == doctest::Approx(plain.report.baseline_bits).epsilon(1e-12));
}

TEST_CASE("top-k truncates the ranking") {
    Graph g = generate_cavemen().graph;
    auto labeled = pipeline_candidates(g, 10);
    REQUIRE(labeled.size() > 3);
    SummaryResult top3 = assemble_top_k(g, labeled, 3);
    CHECK(top3.model.size() == 3);

    SummaryResult top_many = assemble_top_k(g, labeled, 100000);
    SummaryResult plain = assemble_plain(g, labeled);
    CHECK(top_many.model.size() == plain.model.size());
    CHECK(top_many.report.total_bits == doctest::Approx(plain.report.total_bits));
}

TEST_CASE("greedy'n'forget rejects redundant duplicates") {
    Graph g = generate_cavemen().graph;
    std::vector<NodeId> clique;
    for (NodeId v = 42; v < 152; ++v) clique.push_back(v);
    Structure fc(FullClique{NodeSet(clique)});
    std::vector<LabeledCandidate> cands = {fake_candidate(fc, 100.0), fake_candidate(fc, 99.0)};

    SummaryResult r = assemble_greedy_n_forget(g, cands, 0, AssemblyOptions{.audit_incremental = true});
    CHECK(r.model.size() == 1);
}

TEST_CASE("greedy'n'forget audit trail is non-increasing and locally stable") {
    Graph g = generate_cavemen().graph;
    auto labeled = pipeline_candidates(g, 10);
    SummaryResult r = assemble_greedy_n_forget(g, labeled, 500, AssemblyOptions{.audit_incremental = true});
    REQUIRE(!r.accepted_totals.empty());
    double prev = r.report.baseline_bits;
    for (double t : r.accepted_totals) {
        CHECK(t <= prev + 1e-9);
        prev = t;
    }
    CHECK(r.report.total_bits == doctest::Approx(r.accepted_totals.back()).epsilon(1e-9));

    // dropping the last accepted structure cannot improve the cost
    Model without = r.model;
    without.structures.pop_back();
    CHECK(total_cost(g, without).total_bits >= r.report.total_bits - 1e-6);
}

TEST_CASE("descending benefit order does not lose to ascending") {
    Graph g = generate_cavemen().graph;
    auto labeled = pipeline_candidates(g, 10);
    auto ranked = rank_candidates(labeled);

    SummaryResult desc = assemble_greedy_n_forget(g, labeled, 0);
    // manual greedy scan over the reversed ranking
    Model model;
    double current = total_cost(g, model).total_bits;
    for (auto it = ranked.rbegin(); it != ranked.rend(); ++it) {
        model.structures.push_back(it->structure);
        double with = total_cost(g, model).total_bits;
        if (with <= current) current = with;
        else model.structures.pop_back();
    }
    CHECK(desc.report.total_bits <= current + 1e-9);
}

TEST_CASE("summarize returns the minimum over heuristics with tie preference") {
    Graph g = generate_cavemen().graph;
    auto labeled = pipeline_candidates(g, 10);
    auto heuristics = default_heuristics();
    auto all = run_heuristics(g, labeled, heuristics, {});
    SummaryResult best = summarize(g, labeled, heuristics, {});
    for (const auto& r : all) CHECK(best.report.total_bits <= r.report.total_bits + 1e-9);

    SummaryResult only_plain = summarize(g, labeled, {Heuristic::plain()}, {});
    CHECK(only_plain.heuristic.kind == Heuristic::Kind::Plain);

    CHECK_THROWS_AS(summarize(g, labeled, {}, {}), ValidationError);
}

TEST_CASE("plain-include-all keeps non-beneficial structures") {
    Graph g = generate_er(80, 0.04, 11);
    auto labeled = pipeline_candidates(g, 3, 2);
    REQUIRE(!labeled.empty());
    SummaryResult strict = assemble_plain(g, labeled);
    SummaryResult all = assemble_plain(g, labeled, AssemblyOptions{.plain_include_all = true});
    CHECK(all.model.size() == labeled.size());
    CHECK(all.model.size() >= strict.model.size());
}
