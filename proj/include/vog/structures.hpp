#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "vog/graph.hpp"

namespace vog {

// The six vocabulary types. Order fixed; used for type histograms and
// tie-breaking precedence in labeling.
enum class StructureType : std::uint8_t {
    FullClique = 0,
    NearClique,
    FullBipartite,
    NearBipartite,
    Star,
    Chain,
};

inline constexpr std::size_t kVocabularySize = 6;

std::string_view type_code(StructureType t); // "fc", "nc", "fb", "nb", "st", "ch"
StructureType type_from_code(std::string_view code);

struct FullClique {
    NodeSet nodes;
};

// presentEdges/absentEdges describe the connectivity inside the node set;
// the area is encoded exactly, so near cliques contribute no error.
struct NearClique {
    NodeSet nodes;
    std::uint64_t present_edges = 0;
    std::uint64_t absent_edges = 0;
};

struct FullBipartite {
    NodeSet left;
    NodeSet right;
};

struct NearBipartite {
    NodeSet left;
    NodeSet right;
    std::uint64_t present_edges = 0; // over the left x right cells
    std::uint64_t absent_edges = 0;
};

struct Star {
    NodeId hub = 0;
    NodeSet spokes;
};

struct Chain {
    std::vector<NodeId> nodes; // chain order; consecutive pairs are the area
};

class Structure {
public:
    using Payload = std::variant<FullClique, NearClique, FullBipartite, NearBipartite, Star, Chain>;

    Structure(FullClique s) : payload_(std::move(s)) {}
    Structure(NearClique s) : payload_(std::move(s)) {}
    Structure(FullBipartite s) : payload_(std::move(s)) {}
    Structure(NearBipartite s) : payload_(std::move(s)) {}
    Structure(Star s) : payload_(std::move(s)) {}
    Structure(Chain s) : payload_(std::move(s)) {}

    StructureType type() const { return static_cast<StructureType>(payload_.index()); }

    template <typename T>
    const T& as() const { return std::get<T>(payload_); }
    template <typename T>
    bool is() const { return std::holds_alternative<T>(payload_); }

    const Payload& payload() const { return payload_; }

    // Number of member nodes.
    std::size_t node_count() const;
    // All member nodes, sorted.
    NodeSet node_set() const;
    // Number of adjacency cells the structure describes.
    std::uint64_t area_size() const;
    bool is_exact() const {
        StructureType t = type();
        return t == StructureType::NearClique || t == StructureType::NearBipartite;
    }

    // Visits every cell of area(s) once as (u, v), u < v.
    template <typename Fn>
    void for_each_area_cell(Fn&& fn) const;

    // Throws ValidationError on any violated invariant; node ids checked
    // against n (pass the graph's node count).
    void validate(std::size_t n) const;

    bool operator==(const Structure& other) const { return payload_ == other.payload_; }

private:
    Payload payload_;
};

// Ordered list of structures; order is significant (quality-descending).
struct Model {
    std::vector<Structure> structures;

    std::size_t size() const { return structures.size(); }
    bool empty() const { return structures.empty(); }
    std::array<std::size_t, kVocabularySize> type_counts() const;
};

inline bool operator==(const FullClique& a, const FullClique& b) { return a.nodes == b.nodes; }
inline bool operator==(const NearClique& a, const NearClique& b) {
    return a.nodes == b.nodes && a.present_edges == b.present_edges && a.absent_edges == b.absent_edges;
}
inline bool operator==(const FullBipartite& a, const FullBipartite& b) {
    return a.left == b.left && a.right == b.right;
}
inline bool operator==(const NearBipartite& a, const NearBipartite& b) {
    return a.left == b.left && a.right == b.right && a.present_edges == b.present_edges &&
           a.absent_edges == b.absent_edges;
}
inline bool operator==(const Star& a, const Star& b) { return a.hub == b.hub && a.spokes == b.spokes; }
inline bool operator==(const Chain& a, const Chain& b) { return a.nodes == b.nodes; }

template <typename Fn>
void Structure::for_each_area_cell(Fn&& fn) const {
    auto pair = [&fn](NodeId a, NodeId b) {
        if (a > b) std::swap(a, b);
        fn(a, b);
    };
    switch (type()) {
    case StructureType::FullClique: {
        const auto& m = as<FullClique>().nodes.members;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) pair(m[i], m[j]);
        break;
    }
    case StructureType::NearClique: {
        const auto& m = as<NearClique>().nodes.members;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) pair(m[i], m[j]);
        break;
    }
    case StructureType::FullBipartite: {
        const auto& s = as<FullBipartite>();
        for (NodeId a : s.left)
            for (NodeId b : s.right) pair(a, b);
        break;
    }
    case StructureType::NearBipartite: {
        const auto& s = as<NearBipartite>();
        for (NodeId a : s.left)
            for (NodeId b : s.right) pair(a, b);
        break;
    }
    case StructureType::Star: {
        const auto& s = as<Star>();
        for (NodeId b : s.spokes) pair(s.hub, b);
        break;
    }
    case StructureType::Chain: {
        const auto& c = as<Chain>().nodes;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) pair(c[i], c[i + 1]);
        break;
    }
    }
}

} // namespace vog
