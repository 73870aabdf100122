#pragma once

// Brute-force local-cost evaluator for small subgraphs, independent of the
// labeler's role heuristics: it tries every hub choice, every bipartition
// and every simple path. Shares only the arithmetic primitives, which are
// pinned by their own frozen-value tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vog/graph.hpp"
#include "vog/mdl.hpp"

namespace vog_test {

struct OracleResult {
    double cost = 0.0;
    vog::StructureType type = vog::StructureType::FullClique;
    bool perfect = false;
};

inline OracleResult oracle_local_cost(const vog::Graph& g, const vog::NodeSet& nodes) {
    using namespace vog;
    std::size_t k = nodes.size();
    std::size_t n = g.node_count();
    const auto& mem = nodes.members;

    std::vector<std::vector<int>> adj(k);
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (g.has_edge(mem[i], mem[j])) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
                ++m;
            }
    std::uint64_t cells = static_cast<std::uint64_t>(k) * (k - 1) / 2;

    auto degree = [&](std::size_t i) { return adj[i].size(); };
    auto connected = [&]() {
        std::vector<int> stack = {0};
        std::vector<std::uint8_t> seen(k, 0);
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        return count == k;
    };

    // --- perfect tests, same precedence: fc, ch, st, fb ---
    auto perfect_cost = [&]() -> std::optional<OracleResult> {
        bool clique = true;
        for (std::size_t i = 0; i < k; ++i)
            if (degree(i) != k - 1) clique = false;
        if (clique)
            return OracleResult{universal_int_cost(k) + log_binomial(n, k), StructureType::FullClique, true};

        std::size_t d1 = 0, d2 = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (degree(i) == 1) ++d1;
            if (degree(i) == 2) ++d2;
        }
        if (d1 == 2 && d2 == k - 2 && connected()) {
            double bits = universal_int_cost(k - 1);
            for (std::size_t i = 0; i < k; ++i) bits += std::log2(static_cast<double>(n - i));
            return OracleResult{bits, StructureType::Chain, true};
        }

        std::size_t hubs = 0, leaves = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (degree(i) == k - 1) ++hubs;
            if (degree(i) == 1) ++leaves;
        }
        if (hubs == 1 && leaves == k - 1)
            return OracleResult{universal_int_cost(k - 1) + std::log2(static_cast<double>(n)) +
                                    log_binomial(n - 1, k - 1),
                                StructureType::Star, true};

        // bipartite: 2-color, then completeness
        std::vector<int> color(k, -1);
        bool ok = true;
        for (std::size_t s = 0; s < k && ok; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            std::vector<int> queue = {static_cast<int>(s)};
            std::size_t head = 0;
            while (head < queue.size() && ok) {
                int u = queue[head++];
                for (int v : adj[u]) {
                    if (color[v] < 0) {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if (color[v] == color[u]) {
                        ok = false;
                    }
                }
            }
        }
        if (ok) {
            std::uint64_t a = static_cast<std::uint64_t>(std::count(color.begin(), color.end(), 0));
            std::uint64_t b = k - a;
            if (a >= 1 && b >= 1 && m == a * b) {
                if (a == 1 || b == 1)
                    return OracleResult{universal_int_cost(k - 1) + std::log2(static_cast<double>(n)) +
                                            log_binomial(n - 1, k - 1),
                                        StructureType::Star, true};
                return OracleResult{universal_int_cost(a) + universal_int_cost(b) +
                                        log_two_set_choice(n, a, b),
                                    StructureType::FullBipartite, true};
            }
        }
        return std::nullopt;
    };
    if (auto p = perfect_cost()) return *p;

    OracleResult best;
    bool have = false;
    auto consider = [&](double cost, StructureType type) {
        if (!have || cost < best.cost - 1e-12) {
            best = OracleResult{cost, type, false};
            have = true;
        }
    };

    // fc
    consider(universal_int_cost(k) + log_binomial(n, k) + error_part_bits(cells, cells - m),
             StructureType::FullClique);
    // nc
    {
        auto codes = prefix_code_lengths(m, cells - m);
        consider(universal_int_cost(k) + log_binomial(n, k) + std::log2(static_cast<double>(cells)) +
                     static_cast<double>(m) * codes.l1 + static_cast<double>(cells - m) * codes.l0,
                 StructureType::NearClique);
    }
    // st: all hubs
    if (k >= 3) {
        for (std::size_t hub = 0; hub < k; ++hub) {
            std::uint64_t spokes = k - 1;
            std::uint64_t hub_deg = degree(hub);
            double bits = universal_int_cost(spokes) + std::log2(static_cast<double>(n)) +
                          log_binomial(n - 1, spokes) + error_part_bits(spokes, spokes - hub_deg) +
                          error_part_bits(cells - spokes, m - hub_deg);
            consider(bits, StructureType::Star);
        }
    }
    // fb / nb: all bipartitions
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        if (!(mask & 1u)) continue;
        std::uint64_t a = 0, between = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1u << i)) ++a;
        std::uint64_t b = k - a;
        for (std::size_t i = 0; i < k; ++i)
            for (int j : adj[i])
                if (static_cast<std::size_t>(j) > i && ((mask >> i) & 1u) != ((mask >> j) & 1u)) ++between;
        std::uint64_t area = a * b;
        double header = universal_int_cost(a) + universal_int_cost(b) + log_two_set_choice(n, a, b);
        consider(header + error_part_bits(area, area - between) +
                     error_part_bits(cells - area, m - between),
                 StructureType::FullBipartite);
        double nb = header + std::log2(static_cast<double>(area));
        if (between > 0 || area - between > 0) {
            auto codes = prefix_code_lengths(between, area - between);
            nb += static_cast<double>(between) * codes.l1 + static_cast<double>(area - between) * codes.l0;
        }
        consider(nb + error_part_bits(cells - area, m - between), StructureType::NearBipartite);
    }
    // ch: all simple paths
    {
        std::vector<int> path;
        std::vector<std::uint8_t> used(k, 0);
        std::function<void(int)> dfs = [&](int u) {
            path.push_back(u);
            used[u] = 1;
            if (path.size() >= 2 && path.front() < path.back()) {
                std::uint64_t len = path.size();
                std::uint64_t present = len - 1; // consecutive pairs of a path are edges
                double bits = universal_int_cost(len - 1);
                for (std::uint64_t i = 0; i < len; ++i) bits += std::log2(static_cast<double>(n - i));
                bits += error_part_bits(len - 1, 0);
                bits += error_part_bits(cells - (len - 1), m - present);
                consider(bits, StructureType::Chain);
            }
            for (int v : adj[u])
                if (!used[v]) dfs(v);
            used[u] = 0;
            path.pop_back();
        };
        for (std::size_t s = 0; s < k; ++s) dfs(static_cast<int>(s));
    }
    return best;
}

} // namespace vog_test
