#include "doctest.h"

#include <random>
#include <sstream>

#include "json.hpp"
#include "vog/generators.hpp"
#include "vog/model_io.hpp"

using namespace vog;

namespace {

Graph grid_graph() {
    // 4x4 grid: bipartite-ish playground with labels "0".."15"
    std::vector<std::pair<NodeId, NodeId>> edges;
    auto id = [](int r, int c) { return static_cast<NodeId>(r * 4 + c); };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            if (c + 1 < 4) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < 4) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph::from_edges(16, std::move(edges));
}

std::uint64_t present_in(const Graph& g, const NodeSet& nodes) {
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (g.has_edge(nodes.members[i], nodes.members[j])) ++count;
    return count;
}

} // namespace

TEST_CASE("model files round-trip") {
    Graph g = grid_graph();
    Model m;
    m.structures.push_back(Structure(FullClique{NodeSet({0, 1, 4, 5})}));
    NodeSet nc_nodes({2, 3, 6, 7});
    m.structures.push_back(Structure(NearClique{nc_nodes, present_in(g, nc_nodes), 6 - present_in(g, nc_nodes)}));
    m.structures.push_back(Structure(FullBipartite{NodeSet({8, 9}), NodeSet({12, 13})}));
    NodeSet left({10, 11}), right({14, 15});
    std::uint64_t between = 0;
    for (NodeId a : left)
        for (NodeId b : right)
            if (g.has_edge(a, b)) ++between;
    m.structures.push_back(Structure(NearBipartite{left, right, between, 4 - between}));
    m.structures.push_back(Structure(Star{5, NodeSet({1, 4, 6, 9})}));
    m.structures.push_back(Structure(Chain{{0, 1, 2, 3, 7}}));

    std::ostringstream out;
    write_model(out, m, g);
    std::istringstream in(out.str());
    Model back = read_model(in, g);

    REQUIRE(back.size() == m.size());
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(back.structures[i] == m.structures[i]);
}

TEST_CASE("model file round-trips preserve order and chain direction") {
    std::mt19937 rng(3);
    Graph g = generate_er(30, 0.2, 5);
    for (int trial = 0; trial < 10; ++trial) {
        Model m;
        // a chain along actual edges
        NodeId start = static_cast<NodeId>(rng() % 30);
        std::vector<NodeId> chain = {start};
        while (chain.size() < 5) {
            auto nbrs = g.neighbors(chain.back());
            if (nbrs.empty()) break;
            NodeId next = nbrs[rng() % nbrs.size()];
            if (std::find(chain.begin(), chain.end(), next) != chain.end()) break;
            chain.push_back(next);
        }
        if (chain.size() < 2) continue;
        m.structures.push_back(Structure(Chain{chain}));

        std::ostringstream out;
        write_model(out, m, g);
        std::istringstream in(out.str());
        Model back = read_model(in, g);
        CHECK(back.structures[0].as<Chain>().nodes == chain);
    }
}

TEST_CASE("model parsing errors") {
    Graph g = grid_graph();

    SUBCASE("unknown type code") {
        std::istringstream in("xx 1 2 3\n");
        CHECK_THROWS_AS(read_model(in, g), ParseError);
    }
    SUBCASE("unknown label") {
        std::istringstream in("fc 1 2 banana\n");
        CHECK_THROWS_AS(read_model(in, g), ParseError);
    }
    SUBCASE("near-clique count must match the graph") {
        std::istringstream in("nc 0 1 4 5, 999\n");
        CHECK_THROWS_AS(read_model(in, g), ValidationError);
    }
    SUBCASE("star needs a single hub") {
        std::istringstream in("st 1 2, 3 4\n");
        CHECK_THROWS_AS(read_model(in, g), ParseError);
    }
    SUBCASE("bipartite needs two segments") {
        std::istringstream in("fb 1 2 3\n");
        CHECK_THROWS_AS(read_model(in, g), ParseError);
    }
    SUBCASE("structure invariants enforced") {
        std::istringstream in("st 5, 5 6\n"); // hub among spokes
        CHECK_THROWS_AS(read_model(in, g), ValidationError);
    }
    SUBCASE("comments and blank lines are fine") {
        std::istringstream in("# model\n\nfc 0 1 4 5\n");
        CHECK(read_model(in, g).size() == 1);
    }
}

TEST_CASE("report json carries the table fields") {
    Graph g = generate_cavemen().graph;
    CandidateSet cands = slashburn_decompose(g, SlashburnParams{});
    auto labeled = label_all(g, cands, LabelParams{}, 1);
    auto heuristics = default_heuristics();
    auto results = run_heuristics(g, labeled, heuristics, {});
    std::size_t best = best_result_index(results);

    auto parsed = nlohmann::json::parse(report_to_json(g, results, best));
    CHECK(parsed["nodes"] == 841);
    CHECK(parsed["edges"] == 7547);
    CHECK(parsed.contains("baseline_bits"));
    CHECK(parsed.contains("ratio"));
    CHECK(parsed.contains("unexplained_edge_fraction"));
    CHECK(parsed["structure_counts"].contains("fc"));
    for (const char* h : {"plain", "top10", "top100", "gnf"}) {
        REQUIRE(parsed["heuristics"].contains(h));
        CHECK(parsed["heuristics"][h].contains("ratio"));
        CHECK(parsed["heuristics"][h].contains("unexplained_edge_fraction"));
        CHECK(parsed["heuristics"][h].contains("total_bits"));
    }
    double best_bits = parsed["total_bits"];
    for (const auto& r : results) CHECK(best_bits <= double(parsed["heuristics"][r.heuristic.name()]["total_bits"]) + 1e-9);
}
