#include "doctest.h"

#include <random>
#include <sstream>

#include "vog/graph.hpp"

using namespace vog;

namespace {

Graph graph_from_text(const std::string& text, LoadOptions opts = {}) {
    std::istringstream in(text);
    return Graph::load_edge_list(in, opts);
}

Graph complete_graph(std::size_t k) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < k; ++u)
        for (NodeId v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(k, std::move(edges));
}

} // namespace

TEST_CASE("load merges duplicates, reversals and drops self-loops") {
    Graph g = graph_from_text("1 2\n2 1\n3 3\n");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.find_label("3") == std::nullopt);

    Graph kept = graph_from_text("1 2\n2 1\n3 3\n", LoadOptions{.keep_isolated = true});
    CHECK(kept.node_count() == 3);
    CHECK(kept.edge_count() == 1);
    CHECK(kept.degree(*kept.find_label("3")) == 0);
}

TEST_CASE("load assigns indices by first appearance") {
    Graph g = graph_from_text("a b\nb c\nc d\nd e\n");
    CHECK(g.node_count() == 5);
    CHECK(g.edge_count() == 4);
    CHECK(*g.find_label("a") == 0);
    CHECK(*g.find_label("e") == 4);
}

TEST_CASE("load skips comments and reports malformed lines") {
    Graph g = graph_from_text("# header\na b\n\n  # more\nb c\n");
    CHECK(g.edge_count() == 2);

    CHECK_THROWS_AS(graph_from_text("a b\na b c\n"), ParseError);
    try {
        graph_from_text("a b\na b c\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(graph_from_text(""), ParseError);
    CHECK_THROWS_AS(graph_from_text("# only a comment\n"), ParseError);
}

TEST_CASE("one-based input validates and canonicalizes labels") {
    Graph g = graph_from_text("01 2\n2 3\n", LoadOptions{.one_based = true});
    CHECK(g.node_count() == 3);
    CHECK(g.find_label("1").has_value());
    CHECK_THROWS_AS(graph_from_text("0 2\n", LoadOptions{.one_based = true}), ParseError);
    CHECK_THROWS_AS(graph_from_text("a 2\n", LoadOptions{.one_based = true}), ParseError);
}

TEST_CASE("custom delimiter") {
    Graph g = graph_from_text("a,b\nb,c\n", LoadOptions{.delimiter = ','});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("round-trip through edge list preserves the graph") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> size(2, 40);
        int n = size(rng);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId u = 0; u < static_cast<NodeId>(n); ++u)
            for (NodeId v = u + 1; v < static_cast<NodeId>(n); ++v)
                if (rng() % 4 == 0) edges.emplace_back(u, v);
        if (edges.empty()) edges.emplace_back(0, 1);
        Graph g = Graph::from_edges(n, edges);

        std::ostringstream out;
        g.save_edge_list(out);
        Graph h = graph_from_text(out.str());

        CHECK(h.edge_count() == g.edge_count());
        // compare edge sets under the label mapping
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (g.degree(u) == 0) continue; // isolated nodes are not representable in an edge list
            auto hu = h.find_label(g.label(u));
            REQUIRE(hu.has_value());
            for (NodeId v : g.neighbors(u)) {
                auto hv = h.find_label(g.label(v));
                REQUIRE(hv.has_value());
                CHECK(h.has_edge(*hu, *hv));
            }
        }
    }
}

TEST_CASE("induced subgraph edge counts") {
    Graph tri = complete_graph(3);
    CHECK(induced_subgraph(tri, NodeSet({0, 1, 2})).induced_edge_count() == 3);
    CHECK(induced_subgraph(tri, NodeSet({0})).induced_edge_count() == 0);

    Graph k5 = complete_graph(5);
    // oracle: brute-force count over all 3-subsets
    for (NodeId a = 0; a < 5; ++a)
        for (NodeId b = a + 1; b < 5; ++b)
            for (NodeId c = b + 1; c < 5; ++c) {
                std::size_t brute = 0;
                std::vector<NodeId> sel = {a, b, c};
                for (std::size_t i = 0; i < 3; ++i)
                    for (std::size_t j = i + 1; j < 3; ++j)
                        if (k5.has_edge(sel[i], sel[j])) ++brute;
                CHECK(induced_subgraph(k5, NodeSet({a, b, c})).induced_edge_count() == brute);
                CHECK(brute == 3);
            }

    CHECK_THROWS_AS(induced_subgraph(tri, NodeSet({0, 7})), ValidationError);
}

TEST_CASE("induced subgraph on the full node set preserves m") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + static_cast<int>(rng() % 30);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId u = 0; u < static_cast<NodeId>(n); ++u)
            for (NodeId v = u + 1; v < static_cast<NodeId>(n); ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        std::vector<NodeId> all(n);
        for (int i = 0; i < n; ++i) all[i] = static_cast<NodeId>(i);
        CHECK(induced_subgraph(g, NodeSet(all)).induced_edge_count() == g.edge_count());
    }
}

TEST_CASE("induced degrees") {
    Graph k4 = complete_graph(4);
    auto d1 = induced_subgraph(k4, NodeSet({0, 1, 2, 3})).degrees();
    CHECK(d1 == std::vector<std::size_t>{3, 3, 3, 3});

    Graph star = graph_from_text("h a\nh b\nh c\nh d\n");
    auto d2 = induced_subgraph(star, NodeSet({0, 1, 2, 3, 4})).degrees();
    CHECK(d2 == std::vector<std::size_t>{4, 1, 1, 1, 1});

    Graph path = graph_from_text("a b\nb c\nc d\n");
    auto d3 = induced_subgraph(path, NodeSet({0, 1, 2, 3})).degrees();
    CHECK(d3 == std::vector<std::size_t>{1, 2, 2, 1});
}

TEST_CASE("degree sum equals twice the induced edge count") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 25);
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId u = 0; u < static_cast<NodeId>(n); ++u)
            for (NodeId v = u + 1; v < static_cast<NodeId>(n); ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        std::vector<NodeId> pick;
        for (NodeId v = 0; v < static_cast<NodeId>(n); ++v)
            if (rng() % 2 == 0) pick.push_back(v);
        Subgraph sub = induced_subgraph(g, NodeSet(pick));
        auto deg = sub.degrees();
        std::size_t sum = 0;
        for (auto d : deg) sum += d;
        CHECK(sum == 2 * sub.induced_edge_count());
    }
}
