#include "vog/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace vog {

namespace {

// FNV-1a over the sorted members, for set-level dedup.
std::uint64_t node_set_hash(const NodeSet& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (NodeId v : s) {
        h ^= v;
        h *= 1099511628211ULL;
    }
    return h;
}

class Deduper {
public:
    bool insert(const NodeSet& s) {
        auto [it, fresh] = seen_.emplace(node_set_hash(s), std::vector<NodeSet>{});
        for (const auto& prev : it->second)
            if (prev == s) return false;
        it->second.push_back(s);
        return true;
    }

private:
    std::unordered_map<std::uint64_t, std::vector<NodeSet>> seen_;
};

struct ComponentScan {
    std::vector<std::int32_t> comp_of;    // -1 for dead nodes
    std::vector<std::vector<NodeId>> members;
    std::size_t giant = 0;                // index of the largest component
};

// Components of the alive-induced subgraph. The giant is the largest one;
// ties go to the component holding the smallest node index (first found).
ComponentScan scan_components(const Graph& g, const std::vector<NodeId>& alive,
                              const std::vector<std::uint8_t>& is_alive) {
    ComponentScan scan;
    scan.comp_of.assign(g.node_count(), -1);
    std::vector<NodeId> queue;
    for (NodeId seed : alive) {
        if (scan.comp_of[seed] >= 0) continue;
        std::int32_t id = static_cast<std::int32_t>(scan.members.size());
        scan.members.emplace_back();
        queue.clear();
        queue.push_back(seed);
        scan.comp_of[seed] = id;
        std::size_t head = 0;
        while (head < queue.size()) {
            NodeId u = queue[head++];
            scan.members[id].push_back(u);
            for (NodeId v : g.neighbors(u)) {
                if (is_alive[v] && scan.comp_of[v] < 0) {
                    scan.comp_of[v] = id;
                    queue.push_back(v);
                }
            }
        }
    }
    for (std::size_t c = 1; c < scan.members.size(); ++c)
        if (scan.members[c].size() > scan.members[scan.giant].size()) scan.giant = c;
    return scan;
}

} // namespace

std::size_t SlashburnParams::effective_k(std::size_t n) const {
    if (k > 0) return k;
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(0.005 * static_cast<double>(n))));
}

CandidateSet slashburn_decompose(const Graph& g, const SlashburnParams& params) {
    CandidateSet out;
    std::size_t n = g.node_count();
    if (n == 0) return out;

    std::size_t k = params.effective_k(n);
    std::size_t gcc_stop = params.effective_gcc_stop();
    Deduper dedup;

    std::vector<std::uint8_t> is_alive(n, 1);
    std::vector<NodeId> alive(n);
    for (NodeId v = 0; v < n; ++v) alive[v] = v;

    auto emit = [&](std::vector<NodeId> nodes, CandidateSource source) {
        NodeSet set = NodeSet::from_unsorted(std::move(nodes));
        if (set.size() < params.min_size) return;
        if (!dedup.insert(set)) return;
        out.candidates.push_back({std::move(set), source});
    };

    while (true) {
        ComponentScan scan = scan_components(g, alive, is_alive);
        if (scan.members.empty()) break;
        const auto& giant = scan.members[scan.giant];
        if (giant.size() <= gcc_stop) break;

        // degree within the giant component
        std::int32_t giant_id = static_cast<std::int32_t>(scan.giant);
        auto giant_degree = [&](NodeId u) {
            std::size_t d = 0;
            for (NodeId v : g.neighbors(u))
                if (is_alive[v] && scan.comp_of[v] == giant_id) ++d;
            return d;
        };
        std::vector<std::pair<std::size_t, NodeId>> by_degree;
        by_degree.reserve(giant.size());
        bool any_edges = false;
        for (NodeId u : giant) {
            std::size_t d = giant_degree(u);
            if (d > 0) any_edges = true;
            by_degree.emplace_back(d, u);
        }
        if (!any_edges) break;

        std::size_t hubs = std::min(k, by_degree.size());
        std::partial_sort(by_degree.begin(), by_degree.begin() + static_cast<std::ptrdiff_t>(hubs),
                          by_degree.end(), [](const auto& a, const auto& b) {
                              if (a.first != b.first) return a.first > b.first;
                              return a.second < b.second;
                          });

        // egonets against the pre-removal giant
        for (std::size_t i = 0; i < hubs; ++i) {
            NodeId hub = by_degree[i].second;
            std::vector<NodeId> ego;
            ego.push_back(hub);
            for (NodeId v : g.neighbors(hub))
                if (is_alive[v] && scan.comp_of[v] == giant_id) ego.push_back(v);
            emit(std::move(ego), CandidateSource::SlashburnEgonet);
        }
        for (std::size_t i = 0; i < hubs; ++i) is_alive[by_degree[i].second] = 0;

        // burn: non-giant survivors become candidates, the giant recurses
        std::vector<NodeId> survivors;
        survivors.reserve(alive.size());
        for (NodeId u : alive)
            if (is_alive[u]) survivors.push_back(u);
        ComponentScan after = scan_components(g, survivors, is_alive);
        if (after.members.empty()) break;
        for (std::size_t c = 0; c < after.members.size(); ++c) {
            if (c == after.giant) continue;
            emit(after.members[c], CandidateSource::SlashburnComponent);
        }
        for (std::size_t c = 0; c < after.members.size(); ++c)
            if (c != after.giant)
                for (NodeId u : after.members[c]) is_alive[u] = 0;
        alive = after.members[after.giant];
        std::sort(alive.begin(), alive.end());
    }
    return out;
}

CandidateSet load_external_candidates(std::istream& in, const Graph& g, std::size_t min_size) {
    CandidateSet out;
    Deduper dedup;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string tok;
        std::vector<NodeId> nodes;
        while (ss >> tok) {
            auto id = g.find_label(tok);
            if (!id) throw ParseError("unknown node label '" + tok + "'", line_no);
            nodes.push_back(*id);
        }
        NodeSet set = NodeSet::from_unsorted(std::move(nodes));
        if (set.size() < min_size) continue;
        if (!dedup.insert(set)) continue;
        out.candidates.push_back({std::move(set), CandidateSource::External});
    }
    return out;
}

void write_candidates(std::ostream& out, const CandidateSet& candidates, const Graph& g) {
    for (const auto& c : candidates.candidates) {
        bool first = true;
        for (NodeId v : c.nodes) {
            if (!first) out << ' ';
            out << g.label(v);
            first = false;
        }
        out << '\n';
    }
}

} // namespace vog
