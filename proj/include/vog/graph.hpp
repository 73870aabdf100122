#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vog/error.hpp"

namespace vog {

using NodeId = std::uint32_t;

// Sorted, deduplicated set of internal node indices.
struct NodeSet {
    std::vector<NodeId> members;

    NodeSet() = default;
    explicit NodeSet(std::vector<NodeId> sorted_unique) : members(std::move(sorted_unique)) {}

    // Sorts and deduplicates.
    static NodeSet from_unsorted(std::vector<NodeId> nodes);

    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    bool contains(NodeId v) const;

    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }

    bool operator==(const NodeSet& other) const = default;
};

struct LoadOptions {
    // Treat labels as 1-based integers: validate and canonicalize them.
    bool one_based = false;
    // Keep nodes that appear only in dropped self-loops as isolated nodes.
    bool keep_isolated = false;
    // 0 means "any run of whitespace".
    char delimiter = 0;
};

// Immutable undirected simple graph in CSR form. Internal indices are
// assigned by first appearance in the input; external labels are kept in a
// bidirectional mapping.
class Graph {
public:
    Graph() = default;

    // One edge per line, two tokens; '#' lines and blank lines skipped.
    // Self-loops dropped, duplicate and reverse edges merged.
    static Graph load_edge_list(std::istream& in, const LoadOptions& opts = {});

    // Builds directly from internal-index pairs; labels default to decimal indices.
    static Graph from_edges(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {});

    std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const { return edge_count_; }
    std::uint64_t cell_count() const {
        auto n = static_cast<std::uint64_t>(node_count());
        return n * (n - 1) / 2;
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& label(NodeId u) const { return labels_[u]; }
    std::optional<NodeId> find_label(const std::string& label) const;

    // Each edge once, "label label" per line.
    void save_edge_list(std::ostream& out) const;

private:
    std::vector<std::uint64_t> offsets_; // n+1
    std::vector<NodeId> adjacency_;      // 2m, sorted per node
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> label_index_;
    std::size_t edge_count_ = 0;
};

// Node subset of a parent graph with its induced edge count cached.
class Subgraph {
public:
    Subgraph(const Graph& parent, NodeSet nodes);

    const Graph& parent() const { return *parent_; }
    const NodeSet& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    std::size_t induced_edge_count() const { return induced_edges_; }

    // Visits each induced edge once as (u, v) with u < v.
    template <typename Fn>
    void for_each_induced_edge(Fn&& fn) const;

    // Induced degree per member, in member (sorted index) order.
    std::vector<std::size_t> degrees() const;

private:
    const Graph* parent_;
    NodeSet nodes_;
    std::size_t induced_edges_ = 0;
};

Subgraph induced_subgraph(const Graph& g, NodeSet nodes);

template <typename Fn>
void Subgraph::for_each_induced_edge(Fn&& fn) const {
    for (NodeId u : nodes_) {
        for (NodeId v : parent_->neighbors(u)) {
            if (v > u && nodes_.contains(v)) fn(u, v);
        }
    }
}

} // namespace vog
