#include "vog/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace vog {

NodeSet NodeSet::from_unsorted(std::vector<NodeId> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return NodeSet(std::move(nodes));
}

bool NodeSet::contains(NodeId v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

namespace {

std::vector<std::string> split_tokens(const std::string& line, char delimiter) {
    std::vector<std::string> out;
    if (delimiter == 0) {
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok) out.push_back(tok);
    } else {
        std::size_t start = 0;
        while (start <= line.size()) {
            std::size_t end = line.find(delimiter, start);
            if (end == std::string::npos) end = line.size();
            std::string tok = line.substr(start, end - start);
            // trim surrounding whitespace
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.erase(tok.begin());
            while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.pop_back();
            if (!tok.empty()) out.push_back(tok);
            if (end == line.size()) break;
            start = end + 1;
        }
    }
    return out;
}

// Canonicalize a 1-based numeric label; throws on non-numeric or < 1.
std::string canonical_one_based(const std::string& tok, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("label '" + tok + "' is not a positive integer", line_no);
    if (value < 1) throw ParseError("label '" + tok + "' is not >= 1 (one-based input)", line_no);
    return std::to_string(value);
}

} // namespace

Graph Graph::load_edge_list(std::istream& in, const LoadOptions& opts) {
    std::unordered_map<std::string, NodeId> index;
    std::vector<std::string> labels;
    auto intern = [&](const std::string& label) -> NodeId {
        auto it = index.find(label);
        if (it != index.end()) return it->second;
        NodeId id = static_cast<NodeId>(labels.size());
        index.emplace(label, id);
        labels.push_back(label);
        return id;
    };

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto toks = split_tokens(line, opts.delimiter);
        if (toks.size() != 2)
            throw ParseError("expected two endpoint tokens, found " + std::to_string(toks.size()), line_no);
        saw_data = true;
        if (opts.one_based) {
            toks[0] = canonical_one_based(toks[0], line_no);
            toks[1] = canonical_one_based(toks[1], line_no);
        }
        if (toks[0] == toks[1]) {
            if (opts.keep_isolated) intern(toks[0]);
            continue; // self-loop dropped
        }
        NodeId u = intern(toks[0]);
        NodeId v = intern(toks[1]);
        edges.emplace_back(u, v);
    }
    if (!saw_data) throw ParseError("empty input: no edges found", line_no);

    Graph g = from_edges(labels.size(), std::move(edges), std::move(labels));
    return g;
}

Graph Graph::from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
    for (auto& [u, v] : edges) {
        if (u >= n || v >= n) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("self-loop in edge list");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.edge_count_ = edges.size();
    g.offsets_.assign(n + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.resize(2 * edges.size());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t u = 0; u < n; ++u)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));

    if (labels.empty()) {
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n) throw ValidationError("label count does not match node count");
    g.labels_ = std::move(labels);
    for (std::size_t i = 0; i < n; ++i) g.label_index_.emplace(g.labels_[i], static_cast<NodeId>(i));
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    auto span_u = neighbors(u);
    auto span_v = neighbors(v);
    const auto& probe = span_u.size() <= span_v.size() ? span_u : span_v;
    NodeId target = span_u.size() <= span_v.size() ? v : u;
    return std::binary_search(probe.begin(), probe.end(), target);
}

std::optional<NodeId> Graph::find_label(const std::string& label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

void Graph::save_edge_list(std::ostream& out) const {
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (v > u) out << labels_[u] << ' ' << labels_[v] << '\n';
}

Subgraph::Subgraph(const Graph& parent, NodeSet nodes) : parent_(&parent), nodes_(std::move(nodes)) {
    for (NodeId v : nodes_)
        if (v >= parent.node_count()) throw ValidationError("subgraph node out of range");
    std::size_t count = 0;
    for_each_induced_edge([&](NodeId, NodeId) { ++count; });
    induced_edges_ = count;
}

std::vector<std::size_t> Subgraph::degrees() const {
    std::vector<std::size_t> deg(nodes_.size(), 0);
    std::size_t i = 0;
    for (NodeId u : nodes_) {
        std::size_t d = 0;
        for (NodeId v : parent_->neighbors(u))
            if (nodes_.contains(v)) ++d;
        deg[i++] = d;
    }
    return deg;
}

Subgraph induced_subgraph(const Graph& g, NodeSet nodes) { return Subgraph(g, std::move(nodes)); }

} // namespace vog
