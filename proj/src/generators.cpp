#include "vog/generators.hpp"

#include <algorithm>
#include <random>

namespace vog {

namespace {
void add_clique(std::vector<std::pair<NodeId, NodeId>>& edges, NodeId first, std::size_t size) {
    for (NodeId u = first; u < first + size; ++u)
        for (NodeId v = u + 1; v < first + size; ++v) edges.emplace_back(u, v);
}
} // namespace

GeneratedGraph generate_cavemen(std::size_t clique_a, std::size_t clique_b,
                                std::size_t star_big_spokes, std::size_t star_small_spokes) {
    if (clique_a < 2 || clique_b < 2) throw ValidationError("cavemen: cliques need at least 2 nodes");
    if (star_big_spokes < 3 || star_small_spokes < 3)
        throw ValidationError("cavemen: stars need at least 3 spokes");

    std::vector<std::pair<NodeId, NodeId>> edges;
    NodeId a_first = 0;
    NodeId b_first = static_cast<NodeId>(clique_a);
    add_clique(edges, a_first, clique_a);
    add_clique(edges, b_first, clique_b);

    NodeId next = static_cast<NodeId>(clique_a + clique_b);
    NodeId big_hub = next++;
    NodeId small_hub = next++;

    // big star: bridges into clique A (one spoke) and to the small star's hub;
    // the rest of its spokes are fresh nodes
    std::vector<NodeId> big_spokes = {a_first, small_hub};
    while (big_spokes.size() < star_big_spokes) big_spokes.push_back(next++);
    for (NodeId s : big_spokes) edges.emplace_back(big_hub, s);

    // small star: bridges into clique B (two spokes), rest fresh
    std::vector<NodeId> small_spokes = {b_first, static_cast<NodeId>(b_first + 1)};
    while (small_spokes.size() < star_small_spokes) small_spokes.push_back(next++);
    for (NodeId s : small_spokes) edges.emplace_back(small_hub, s);

    GeneratedGraph out{Graph::from_edges(next, std::move(edges)), {}};

    std::vector<NodeId> a_nodes(clique_a), b_nodes(clique_b);
    for (std::size_t i = 0; i < clique_a; ++i) a_nodes[i] = static_cast<NodeId>(a_first + i);
    for (std::size_t i = 0; i < clique_b; ++i) b_nodes[i] = static_cast<NodeId>(b_first + i);
    out.planted.push_back({StructureType::FullClique, NodeSet(a_nodes)});
    out.planted.push_back({StructureType::FullClique, NodeSet(b_nodes)});
    big_spokes.push_back(big_hub);
    small_spokes.push_back(small_hub);
    out.planted.push_back({StructureType::Star, NodeSet::from_unsorted(big_spokes)});
    out.planted.push_back({StructureType::Star, NodeSet::from_unsorted(small_spokes)});
    return out;
}

Graph generate_er(std::size_t n, double p, std::uint64_t seed) {
    if (n < 1) throw ValidationError("er: need at least one node");
    if (p < 0.0 || p > 1.0) throw ValidationError("er: p out of [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    if (p > 0.0) {
        // geometric skipping over the upper triangle
        std::uint64_t cells = static_cast<std::uint64_t>(n) * (n - 1) / 2;
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        double log1mp = std::log(1.0 - p);
        std::uint64_t pos = 0;
        bool full = p >= 1.0;
        while (pos < cells) {
            if (!full) {
                double r = unif(rng);
                std::uint64_t skip = static_cast<std::uint64_t>(std::floor(std::log(1.0 - r) / log1mp));
                pos += skip;
                if (pos >= cells) break;
            }
            // unrank cell index -> (u, v)
            std::uint64_t idx = pos;
            std::uint64_t u = 0;
            std::uint64_t row = n - 1;
            while (idx >= row) {
                idx -= row;
                ++u;
                --row;
            }
            std::uint64_t v = u + 1 + idx;
            edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
            ++pos;
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

GeneratedGraph generate_planted(StructureType type, std::size_t size, std::size_t size_b,
                                std::size_t n, double noise_p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t planted_nodes = 0;
    switch (type) {
    case StructureType::FullClique: planted_nodes = size; break;
    case StructureType::Star: planted_nodes = size + 1; break;
    case StructureType::FullBipartite: planted_nodes = size + size_b; break;
    case StructureType::Chain: planted_nodes = size; break;
    default: throw ValidationError("planted: only fc, st, fb, ch supported");
    }
    if (planted_nodes < 2 || planted_nodes > n) throw ValidationError("planted: bad sizes");

    // background noise first, then overwrite nothing: planted edges are added on top
    Graph noise = generate_er(n, noise_p, seed);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v : noise.neighbors(u))
            if (v > u) edges.emplace_back(u, v);

    // choose the planted slots away from index 0 bias
    std::vector<NodeId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<NodeId>(i);
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<NodeId> slot(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(planted_nodes));

    // the planted region must be exactly the perfect structure: strip noise inside it
    NodeSet planted_set = NodeSet::from_unsorted(slot);
    edges.erase(std::remove_if(edges.begin(), edges.end(),
                               [&](const std::pair<NodeId, NodeId>& e) {
                                   return planted_set.contains(e.first) && planted_set.contains(e.second);
                               }),
                edges.end());

    GeneratedGraph out{Graph(), {}};
    switch (type) {
    case StructureType::FullClique:
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) edges.emplace_back(slot[i], slot[j]);
        break;
    case StructureType::Star:
        for (std::size_t i = 1; i <= size; ++i) edges.emplace_back(slot[0], slot[i]);
        break;
    case StructureType::FullBipartite:
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size_b; ++j) edges.emplace_back(slot[i], slot[size + j]);
        break;
    case StructureType::Chain:
        for (std::size_t i = 0; i + 1 < size; ++i) edges.emplace_back(slot[i], slot[i + 1]);
        break;
    default: break;
    }
    out.graph = Graph::from_edges(n, std::move(edges));
    out.planted.push_back({type, planted_set});
    return out;
}

Graph generate_powerlaw(std::size_t n, std::size_t attach, std::uint64_t seed) {
    if (attach < 1) throw ValidationError("powerlaw: attach must be >= 1");
    if (n < attach + 1) throw ValidationError("powerlaw: need more nodes than attachments");
    std::mt19937_64 rng(seed);

    // endpoint list doubles as the degree-proportional sampler
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * n * attach);
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(n * attach);

    // seed: a small clique of attach+1 nodes
    std::size_t m0 = attach + 1;
    for (NodeId u = 0; u < m0; ++u)
        for (NodeId v = u + 1; v < m0; ++v) {
            edges.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }

    std::vector<NodeId> targets;
    for (NodeId u = static_cast<NodeId>(m0); u < n; ++u) {
        targets.clear();
        while (targets.size() < attach) {
            NodeId t = endpoints[rng() % endpoints.size()];
            if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
        }
        for (NodeId t : targets) {
            edges.emplace_back(u, t);
            endpoints.push_back(u);
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

} // namespace vog
