#include "vog/labeler.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>

namespace vog {

namespace {

// Compact local adjacency over member indices 0..k-1.
struct LocalView {
    std::vector<NodeId> members; // sorted
    std::vector<std::vector<int>> adj;
    std::vector<std::size_t> deg;
    std::size_t edges = 0;

    explicit LocalView(const Subgraph& sub) : members(sub.nodes().members) {
        adj.resize(members.size());
        deg.assign(members.size(), 0);
        sub.for_each_induced_edge([&](NodeId u, NodeId v) {
            int lu = local(u), lv = local(v);
            adj[lu].push_back(lv);
            adj[lv].push_back(lu);
            ++edges;
        });
        for (auto& list : adj) std::sort(list.begin(), list.end());
        for (std::size_t i = 0; i < adj.size(); ++i) deg[i] = adj[i].size();
    }

    int local(NodeId v) const {
        return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) - members.begin());
    }
    std::size_t size() const { return members.size(); }
    std::uint64_t cells() const {
        std::uint64_t k = members.size();
        return k * (k - 1) / 2;
    }
    bool has_local_edge(int a, int b) const {
        return std::binary_search(adj[a].begin(), adj[a].end(), b);
    }
    int max_degree_node() const {
        int best = 0;
        for (int i = 1; i < static_cast<int>(size()); ++i)
            if (deg[i] > deg[best]) best = i;
        return best;
    }
};

std::vector<int> local_components(const LocalView& lv) {
    std::vector<int> comp(lv.size(), -1);
    int id = 0;
    std::vector<int> queue;
    for (int s = 0; s < static_cast<int>(lv.size()); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = id;
        queue.assign(1, s);
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int v : lv.adj[u])
                if (comp[v] < 0) {
                    comp[v] = id;
                    queue.push_back(v);
                }
        }
        ++id;
    }
    return comp;
}

// BFS distances from start, restricted to allowed nodes (empty = all).
std::vector<int> bfs_dist(const LocalView& lv, int start, const std::vector<std::uint8_t>* allowed,
                          std::vector<int>* parent = nullptr) {
    std::vector<int> dist(lv.size(), -1);
    if (parent) parent->assign(lv.size(), -1);
    std::vector<int> queue = {start};
    dist[start] = 0;
    std::size_t head = 0;
    while (head < queue.size()) {
        int u = queue[head++];
        for (int v : lv.adj[u]) {
            if (allowed && !(*allowed)[v]) continue;
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                if (parent) (*parent)[v] = u;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

int furthest_node(const std::vector<int>& dist) {
    int best = -1, best_dist = -1;
    for (int i = 0; i < static_cast<int>(dist.size()); ++i)
        if (dist[i] > best_dist) {
            best_dist = dist[i];
            best = i;
        }
    return best;
}

int furthest_node_masked(const LocalView& lv, int start, const std::vector<std::uint8_t>& allowed) {
    std::vector<int> dist = bfs_dist(lv, start, &allowed);
    return furthest_node(dist);
}

// ---------------------------------------------------------------------------
// Perfect-structure tests (degree distributions plus exact checks).
// ---------------------------------------------------------------------------

bool is_single_path(const LocalView& lv) {
    std::size_t ones = 0, twos = 0;
    for (auto d : lv.deg) {
        if (d == 1) ++ones;
        else if (d == 2) ++twos;
        else return false;
    }
    if (!(ones == 2 && twos == lv.size() - 2)) return false;
    auto comp = local_components(lv);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// Two-coloring via BFS; returns false on an odd cycle.
bool two_color(const LocalView& lv, std::vector<int>& color) {
    color.assign(lv.size(), -1);
    std::vector<int> queue;
    for (int s = 0; s < static_cast<int>(lv.size()); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        queue.assign(1, s);
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            for (int v : lv.adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<StructureType> test_perfect_local(const LocalView& lv) {
    std::size_t k = lv.size();
    if (k < 2) return std::nullopt;

    bool all_full = std::all_of(lv.deg.begin(), lv.deg.end(), [&](std::size_t d) { return d == k - 1; });
    if (all_full) return StructureType::FullClique;

    if (is_single_path(lv)) return StructureType::Chain;

    std::size_t hubs = 0, leaves = 0;
    for (auto d : lv.deg) {
        if (d == k - 1) ++hubs;
        else if (d == 1) ++leaves;
    }
    if (hubs == 1 && leaves == k - 1) return StructureType::Star;

    std::vector<int> color;
    if (two_color(lv, color)) {
        std::uint64_t a = static_cast<std::uint64_t>(std::count(color.begin(), color.end(), 0));
        std::uint64_t b = k - a;
        if (a >= 1 && b >= 1 && lv.edges == a * b) {
            if (a == 1 || b == 1) return StructureType::Star; // single-node side
            return StructureType::FullBipartite;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Representation stats and the shared local-cost rule.
// ---------------------------------------------------------------------------

struct Representation {
    Structure structure;
    double cost = 0.0;
};

// Tie-break precedence across types (lower wins on equal cost).
int type_precedence(StructureType t) {
    switch (t) {
    case StructureType::FullClique: return 0;
    case StructureType::Star: return 1;
    case StructureType::FullBipartite: return 2;
    case StructureType::Chain: return 3;
    case StructureType::NearClique: return 4;
    case StructureType::NearBipartite: return 5;
    }
    return 6;
}

constexpr double kTieEps = 1e-9;

// Local encoding cost: structure bits plus local E+ (cells asserted but
// absent) and local E- (member edges the area leaves unmodeled). Near
// variants encode their area exactly; nb additionally omits nothing else
// because its E+ is empty by exactness.
double local_cost(const Structure& s, const LocalView& lv, std::size_t n) {
    std::uint64_t cells = lv.cells();
    std::uint64_t m = lv.edges;
    double bits = structure_cost(s, n);
    switch (s.type()) {
    case StructureType::FullClique: {
        bits += error_part_bits(cells, cells - m);
        break;
    }
    case StructureType::NearClique:
        break; // exact, no error parts
    case StructureType::FullBipartite: {
        const auto& fb = s.as<FullBipartite>();
        std::uint64_t area = s.area_size();
        std::uint64_t between = 0;
        for (NodeId u : fb.left) {
            int lu = lv.local(u);
            for (int v : lv.adj[lu])
                if (fb.right.contains(lv.members[v])) ++between;
        }
        bits += error_part_bits(area, area - between);
        bits += error_part_bits(cells - area, m - between);
        break;
    }
    case StructureType::NearBipartite: {
        const auto& nb = s.as<NearBipartite>();
        std::uint64_t area = s.area_size();
        bits += error_part_bits(cells - area, m - nb.present_edges);
        break;
    }
    case StructureType::Star: {
        const auto& st = s.as<Star>();
        std::uint64_t spokes = st.spokes.size();
        std::uint64_t hub_deg = lv.deg[lv.local(st.hub)];
        bits += error_part_bits(spokes, spokes - hub_deg);
        bits += error_part_bits(cells - spokes, m - hub_deg);
        break;
    }
    case StructureType::Chain: {
        const auto& ch = s.as<Chain>().nodes;
        std::uint64_t area = ch.size() - 1;
        std::uint64_t present = 0;
        for (std::size_t i = 0; i + 1 < ch.size(); ++i)
            if (lv.has_local_edge(lv.local(ch[i]), lv.local(ch[i + 1]))) ++present;
        bits += error_part_bits(area, area - present);
        bits += error_part_bits(cells - area, m - present);
        break;
    }
    }
    return bits;
}

NearClique make_near_clique(const LocalView& lv) {
    std::uint64_t cells = lv.cells();
    return NearClique{NodeSet(lv.members), lv.edges, cells - lv.edges};
}

std::uint64_t between_edges(const LocalView& lv, const NodeSet& left, const NodeSet& right) {
    std::uint64_t between = 0;
    for (NodeId u : left) {
        int lu = lv.local(u);
        for (int v : lv.adj[lu])
            if (right.contains(lv.members[v])) ++between;
    }
    return between;
}

Structure build_perfect(const LocalView& lv, StructureType type) {
    switch (type) {
    case StructureType::FullClique:
        return Structure(FullClique{NodeSet(lv.members)});
    case StructureType::Chain: {
        int start = -1;
        for (int i = 0; i < static_cast<int>(lv.size()); ++i)
            if (lv.deg[i] == 1) {
                start = i;
                break;
            }
        std::vector<NodeId> order;
        int prev = -1, cur = start;
        while (cur >= 0) {
            order.push_back(lv.members[cur]);
            int next = -1;
            for (int v : lv.adj[cur])
                if (v != prev) {
                    next = v;
                    break;
                }
            prev = cur;
            cur = next;
        }
        return Structure(Chain{order});
    }
    case StructureType::Star: {
        int hub = 0;
        for (int i = 0; i < static_cast<int>(lv.size()); ++i)
            if (lv.deg[i] == lv.size() - 1) {
                hub = i;
                break;
            }
        std::vector<NodeId> spokes;
        for (int i = 0; i < static_cast<int>(lv.size()); ++i)
            if (i != hub) spokes.push_back(lv.members[i]);
        return Structure(Star{lv.members[hub], NodeSet(spokes)});
    }
    case StructureType::FullBipartite: {
        std::vector<int> color;
        two_color(lv, color);
        int anchor = lv.max_degree_node();
        int a_color = color[anchor];
        std::vector<NodeId> a, b;
        for (int i = 0; i < static_cast<int>(lv.size()); ++i)
            (color[i] == a_color ? a : b).push_back(lv.members[i]);
        if (a.size() == 1) return Structure(Star{a[0], NodeSet::from_unsorted(b)});
        if (b.size() == 1) return Structure(Star{b[0], NodeSet::from_unsorted(a)});
        return Structure(FullBipartite{NodeSet::from_unsorted(a), NodeSet::from_unsorted(b)});
    }
    default: break;
    }
    throw ValidationError("not a perfect structure type");
}

// ---------------------------------------------------------------------------
// Heuristic role assignment.
// ---------------------------------------------------------------------------

Star star_roles_local(const LocalView& lv) {
    int hub = lv.max_degree_node();
    std::vector<NodeId> spokes;
    for (int i = 0; i < static_cast<int>(lv.size()); ++i)
        if (i != hub) spokes.push_back(lv.members[i]);
    return Star{lv.members[hub], NodeSet(spokes)};
}

std::pair<NodeSet, NodeSet> bipartite_roles_local(const LocalView& lv, const LabelParams& params) {
    std::size_t k = lv.size();
    int seed = lv.max_degree_node();

    std::vector<int> color;
    if (two_color(lv, color) && lv.edges > 0) {
        int a_color = color[seed];
        std::vector<NodeId> a, b;
        for (int i = 0; i < static_cast<int>(k); ++i)
            (color[i] == a_color ? a : b).push_back(lv.members[i]);
        if (!a.empty() && !b.empty())
            return {NodeSet::from_unsorted(a), NodeSet::from_unsorted(b)};
    }

    std::vector<double> prior(k, 0.0), belief(k, 0.0), next(k, 0.0);
    prior[seed] = 1.0;
    for (int v : lv.adj[seed]) prior[v] = -1.0;
    belief = prior;
    for (std::size_t iter = 0; iter < params.max_iters; ++iter) {
        double max_change = 0.0, max_abs = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double neighbor_sum = 0.0;
            for (int v : lv.adj[i]) neighbor_sum += belief[v];
            next[i] = (1.0 - params.damping) * belief[i] +
                      params.damping * (prior[i] - params.heterophily * neighbor_sum);
            max_abs = std::max(max_abs, std::abs(next[i]));
        }
        if (max_abs > 1.0)
            for (auto& b : next) b /= max_abs; // keep the oscillation bounded
        for (std::size_t i = 0; i < k; ++i) max_change = std::max(max_change, std::abs(next[i] - belief[i]));
        belief = next;
        if (max_change < params.epsilon) break;
    }

    std::vector<NodeId> a, b;
    for (std::size_t i = 0; i < k; ++i)
        (belief[i] >= 0.0 ? a : b).push_back(lv.members[i]); // ties to A
    if (a.empty() || b.empty()) {
        a.assign(1, lv.members[seed]);
        b.clear();
        for (std::size_t i = 0; i < k; ++i)
            if (static_cast<int>(i) != seed) b.push_back(lv.members[i]);
    }
    return {NodeSet::from_unsorted(a), NodeSet::from_unsorted(b)};
}

Chain chain_roles_local(const LocalView& lv, std::mt19937_64& rng) {
    auto comp = local_components(lv);
    int comp_count = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> comp_size(comp_count, 0);
    for (int c : comp) ++comp_size[c];
    int largest = static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());

    std::vector<int> component_nodes;
    for (int i = 0; i < static_cast<int>(lv.size()); ++i)
        if (comp[i] == largest) component_nodes.push_back(i);
    std::vector<std::uint8_t> in_comp(lv.size(), 0);
    for (int i : component_nodes) in_comp[i] = 1;

    if (component_nodes.size() < 2) return Chain{{lv.members[component_nodes[0]]}};

    // double BFS: random start -> furthest u; from u -> furthest v, keep path
    int start = component_nodes[rng() % component_nodes.size()];
    int u = furthest_node_masked(lv, start, in_comp);
    std::vector<int> parent;
    std::vector<int> dist = bfs_dist(lv, u, &in_comp, &parent);
    int v = -1, best_dist = -1;
    for (int i : component_nodes)
        if (dist[i] > best_dist) {
            best_dist = dist[i];
            v = i;
        }
    std::vector<int> path;
    for (int cur = v; cur >= 0; cur = parent[cur]) path.push_back(cur);
    std::reverse(path.begin(), path.end()); // u .. v

    // extension: drop chain nodes except the endpoint, BFS outward, append
    // the shortest path towards the furthest newly reached node
    auto extend = [&](std::vector<int>& chain, bool front) {
        int endpoint = front ? chain.front() : chain.back();
        std::vector<std::uint8_t> allowed = in_comp;
        for (int node : chain) allowed[node] = 0;
        allowed[endpoint] = 1;
        std::vector<int> par;
        std::vector<int> d = bfs_dist(lv, endpoint, &allowed, &par);
        int far = -1, far_dist = 0;
        for (int i : component_nodes)
            if (allowed[i] && d[i] > far_dist) {
                far_dist = d[i];
                far = i;
            }
        if (far < 0) return false;
        std::vector<int> tail;
        for (int cur = far; cur != endpoint; cur = par[cur]) tail.push_back(cur);
        // tail is far..(neighbor of endpoint)
        if (front) {
            std::reverse(chain.begin(), chain.end());
            chain.insert(chain.end(), tail.rbegin(), tail.rend());
            std::reverse(chain.begin(), chain.end());
        } else {
            chain.insert(chain.end(), tail.rbegin(), tail.rend());
        }
        return true;
    };

    bool grew = true;
    while (grew) {
        grew = false;
        if (extend(path, false)) grew = true;
        if (extend(path, true)) grew = true;
    }

    std::vector<NodeId> order;
    order.reserve(path.size());
    for (int i : path) order.push_back(lv.members[i]);
    return Chain{order};
}

// ---------------------------------------------------------------------------
// Exhaustive role search for small candidates.
// ---------------------------------------------------------------------------

void enumerate_simple_paths(const LocalView& lv, const std::function<void(const std::vector<int>&)>& fn) {
    std::size_t k = lv.size();
    std::vector<int> path;
    std::vector<std::uint8_t> used(k, 0);
    std::function<void(int)> dfs = [&](int u) {
        path.push_back(u);
        used[u] = 1;
        if (path.size() >= 2 && path.front() < path.back()) fn(path); // canonical direction
        for (int v : lv.adj[u])
            if (!used[v]) dfs(v);
        used[u] = 0;
        path.pop_back();
    };
    for (int s = 0; s < static_cast<int>(k); ++s) dfs(s);
}

std::vector<Representation> exhaustive_representations(const LocalView& lv, std::size_t n) {
    std::vector<Representation> reps;
    std::size_t k = lv.size();

    Structure fc(FullClique{NodeSet(lv.members)});
    reps.push_back({fc, local_cost(fc, lv, n)});
    Structure nc(make_near_clique(lv));
    reps.push_back({nc, local_cost(nc, lv, n)});

    if (k >= 3) {
        Representation best_star{Structure(FullClique{NodeSet(lv.members)}), 0.0};
        bool have = false;
        for (int hub = 0; hub < static_cast<int>(k); ++hub) {
            std::vector<NodeId> spokes;
            for (int i = 0; i < static_cast<int>(k); ++i)
                if (i != hub) spokes.push_back(lv.members[i]);
            Structure st(Star{lv.members[hub], NodeSet(spokes)});
            double cost = local_cost(st, lv, n);
            if (!have || cost < best_star.cost) {
                best_star = {st, cost};
                have = true;
            }
        }
        reps.push_back(best_star);
    }

    if (k >= 2 && k <= 20) {
        bool have_fb = false, have_nb = false;
        Representation best_fb{reps[0].structure, 0.0}, best_nb{reps[0].structure, 0.0};
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            if (!(mask & 1u)) continue; // fix node 0 on the left: (A,B) == (B,A)
            std::vector<NodeId> a, b;
            for (std::size_t i = 0; i < k; ++i)
                (mask & (1u << i) ? a : b).push_back(lv.members[i]);
            NodeSet left(a), right(b);
            std::uint64_t between = between_edges(lv, left, right);
            Structure fb(FullBipartite{left, right});
            double fb_cost = local_cost(fb, lv, n);
            if (!have_fb || fb_cost < best_fb.cost) {
                best_fb = {fb, fb_cost};
                have_fb = true;
            }
            Structure nb(NearBipartite{left, right, between,
                                       static_cast<std::uint64_t>(left.size()) * right.size() - between});
            double nb_cost = local_cost(nb, lv, n);
            if (!have_nb || nb_cost < best_nb.cost) {
                best_nb = {nb, nb_cost};
                have_nb = true;
            }
        }
        if (have_fb) reps.push_back(best_fb);
        if (have_nb) reps.push_back(best_nb);
    }

    if (lv.edges > 0) {
        Representation best_ch{reps[0].structure, 0.0};
        bool have = false;
        enumerate_simple_paths(lv, [&](const std::vector<int>& path) {
            std::vector<NodeId> order;
            order.reserve(path.size());
            for (int i : path) order.push_back(lv.members[i]);
            Structure ch((Chain{order}));
            double cost = local_cost(ch, lv, n);
            if (!have || cost < best_ch.cost) {
                best_ch = {ch, cost};
                have = true;
            }
        });
        if (have) reps.push_back(best_ch);
    }
    return reps;
}

std::vector<Representation> heuristic_representations(const LocalView& lv, const LabelParams& params,
                                                      std::mt19937_64& rng, std::size_t n) {
    std::vector<Representation> reps;
    std::size_t k = lv.size();

    Structure fc(FullClique{NodeSet(lv.members)});
    reps.push_back({fc, local_cost(fc, lv, n)});
    Structure nc(make_near_clique(lv));
    reps.push_back({nc, local_cost(nc, lv, n)});

    if (k >= 3) {
        Structure st(star_roles_local(lv));
        reps.push_back({st, local_cost(st, lv, n)});
    }

    auto [left, right] = bipartite_roles_local(lv, params);
    if (!left.empty() && !right.empty()) {
        std::uint64_t between = between_edges(lv, left, right);
        Structure fb(FullBipartite{left, right});
        reps.push_back({fb, local_cost(fb, lv, n)});
        Structure nb(NearBipartite{left, right, between,
                                   static_cast<std::uint64_t>(left.size()) * right.size() - between});
        reps.push_back({nb, local_cost(nb, lv, n)});
    }

    if (lv.edges > 0) {
        Chain chain = chain_roles_local(lv, rng);
        if (chain.nodes.size() >= 2) {
            Structure ch(std::move(chain));
            reps.push_back({ch, local_cost(ch, lv, n)});
        }
    }
    return reps;
}

std::mt19937_64 candidate_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{seed, index};
    return std::mt19937_64(seq);
}

} // namespace

std::optional<StructureType> test_perfect(const Subgraph& sub) {
    LocalView lv(sub);
    return test_perfect_local(lv);
}

Star star_roles(const Subgraph& sub) {
    if (sub.size() < 3) throw ValidationError("star_roles: need at least 3 nodes");
    LocalView lv(sub);
    return star_roles_local(lv);
}

std::pair<NodeSet, NodeSet> bipartite_roles(const Subgraph& sub, const LabelParams& params) {
    if (sub.size() < 2) throw ValidationError("bipartite_roles: need at least 2 nodes");
    LocalView lv(sub);
    return bipartite_roles_local(lv, params);
}

Chain chain_roles(const Subgraph& sub, std::mt19937_64& rng) {
    if (sub.size() < 2) throw ValidationError("chain_roles: need at least 2 nodes");
    LocalView lv(sub);
    return chain_roles_local(lv, rng);
}

double patch_noise_bits(const Graph& g, std::uint64_t patch_cells, std::uint64_t patch_edges) {
    if (g.cell_count() == 0 || g.edge_count() == 0) return 0.0;
    auto codes = prefix_code_lengths(g.edge_count(), g.cell_count() - g.edge_count());
    return static_cast<double>(patch_edges) * codes.l1 +
           static_cast<double>(patch_cells - patch_edges) * codes.l0;
}

LabeledCandidate label(const Subgraph& sub, const LabelParams& params, std::uint64_t candidate_index) {
    if (sub.size() < 2) throw ValidationError("label: need at least 2 nodes");
    const Graph& g = sub.parent();
    std::size_t n = g.node_count();
    LocalView lv(sub);
    double noise = patch_noise_bits(g, lv.cells(), lv.edges);

    if (auto perfect = test_perfect_local(lv)) {
        Structure s = build_perfect(lv, *perfect);
        double cost = structure_cost(s, n);
        return LabeledCandidate{s, cost, noise - cost};
    }

    std::mt19937_64 rng = candidate_rng(params.seed, candidate_index);
    std::vector<Representation> reps = lv.size() <= params.exhaustive_max_nodes
                                           ? exhaustive_representations(lv, n)
                                           : heuristic_representations(lv, params, rng, n);

    const Representation* best = &reps.front();
    for (const auto& rep : reps) {
        if (rep.cost < best->cost - kTieEps ||
            (rep.cost <= best->cost + kTieEps &&
             type_precedence(rep.structure.type()) < type_precedence(best->structure.type())))
            best = &rep;
    }
    double min_cost = best->cost;
    for (const auto& rep : reps) assert(min_cost <= rep.cost + kTieEps);
    (void)min_cost;

    return LabeledCandidate{best->structure, best->cost, noise - best->cost};
}

std::vector<LabeledCandidate> label_all(const Graph& g, const CandidateSet& candidates,
                                        const LabelParams& params, std::size_t threads) {
    std::size_t count = candidates.size();
    std::vector<std::optional<LabeledCandidate>> results(count);
    if (count == 0) return {};

    if (threads == 0) threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    threads = std::min(threads, count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                Subgraph sub(g, candidates.candidates[i].nodes);
                results[i] = label(sub, params, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    std::vector<LabeledCandidate> out;
    out.reserve(count);
    for (auto& r : results) out.push_back(std::move(*r));
    return out;
}

} // namespace vog
