#include "vog/structures.hpp"

#include <algorithm>

namespace vog {

namespace {
constexpr std::array<std::string_view, kVocabularySize> kTypeCodes = {"fc", "nc", "fb", "nb", "st", "ch"};

bool sorted_unique(const std::vector<NodeId>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

bool disjoint(const NodeSet& a, const NodeSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib) ++ia;
        else ++ib;
    }
    return true;
}

void check_ids(const NodeSet& s, std::size_t n, const char* what) {
    if (!sorted_unique(s.members)) throw ValidationError(std::string(what) + ": node set not sorted/unique");
    if (!s.empty() && s.members.back() >= n) throw ValidationError(std::string(what) + ": node id out of range");
}
} // namespace

std::string_view type_code(StructureType t) { return kTypeCodes[static_cast<std::size_t>(t)]; }

StructureType type_from_code(std::string_view code) {
    for (std::size_t i = 0; i < kVocabularySize; ++i)
        if (kTypeCodes[i] == code) return static_cast<StructureType>(i);
    throw ValidationError("unknown structure type code '" + std::string(code) + "'");
}

std::size_t Structure::node_count() const {
    switch (type()) {
    case StructureType::FullClique: return as<FullClique>().nodes.size();
    case StructureType::NearClique: return as<NearClique>().nodes.size();
    case StructureType::FullBipartite: {
        const auto& s = as<FullBipartite>();
        return s.left.size() + s.right.size();
    }
    case StructureType::NearBipartite: {
        const auto& s = as<NearBipartite>();
        return s.left.size() + s.right.size();
    }
    case StructureType::Star: return 1 + as<Star>().spokes.size();
    case StructureType::Chain: return as<Chain>().nodes.size();
    }
    return 0;
}

NodeSet Structure::node_set() const {
    std::vector<NodeId> all;
    switch (type()) {
    case StructureType::FullClique: return as<FullClique>().nodes;
    case StructureType::NearClique: return as<NearClique>().nodes;
    case StructureType::FullBipartite: {
        const auto& s = as<FullBipartite>();
        all = s.left.members;
        all.insert(all.end(), s.right.begin(), s.right.end());
        break;
    }
    case StructureType::NearBipartite: {
        const auto& s = as<NearBipartite>();
        all = s.left.members;
        all.insert(all.end(), s.right.begin(), s.right.end());
        break;
    }
    case StructureType::Star: {
        const auto& s = as<Star>();
        all = s.spokes.members;
        all.push_back(s.hub);
        break;
    }
    case StructureType::Chain: all = as<Chain>().nodes; break;
    }
    return NodeSet::from_unsorted(std::move(all));
}

std::uint64_t Structure::area_size() const {
    switch (type()) {
    case StructureType::FullClique: {
        std::uint64_t k = as<FullClique>().nodes.size();
        return k * (k - 1) / 2;
    }
    case StructureType::NearClique: {
        std::uint64_t k = as<NearClique>().nodes.size();
        return k * (k - 1) / 2;
    }
    case StructureType::FullBipartite: {
        const auto& s = as<FullBipartite>();
        return std::uint64_t(s.left.size()) * s.right.size();
    }
    case StructureType::NearBipartite: {
        const auto& s = as<NearBipartite>();
        return std::uint64_t(s.left.size()) * s.right.size();
    }
    case StructureType::Star: return as<Star>().spokes.size();
    case StructureType::Chain: {
        std::size_t len = as<Chain>().nodes.size();
        return len == 0 ? 0 : len - 1;
    }
    }
    return 0;
}

void Structure::validate(std::size_t n) const {
    switch (type()) {
    case StructureType::FullClique: {
        const auto& s = as<FullClique>();
        check_ids(s.nodes, n, "fc");
        if (s.nodes.size() < 2) throw ValidationError("fc: needs at least 2 nodes");
        break;
    }
    case StructureType::NearClique: {
        const auto& s = as<NearClique>();
        check_ids(s.nodes, n, "nc");
        if (s.nodes.size() < 2) throw ValidationError("nc: needs at least 2 nodes");
        if (s.present_edges + s.absent_edges != area_size())
            throw ValidationError("nc: present + absent does not match area");
        break;
    }
    case StructureType::FullBipartite: {
        const auto& s = as<FullBipartite>();
        check_ids(s.left, n, "fb");
        check_ids(s.right, n, "fb");
        if (s.left.empty() || s.right.empty()) throw ValidationError("fb: both node sets must be non-empty");
        if (!disjoint(s.left, s.right)) throw ValidationError("fb: node sets overlap");
        break;
    }
    case StructureType::NearBipartite: {
        const auto& s = as<NearBipartite>();
        check_ids(s.left, n, "nb");
        check_ids(s.right, n, "nb");
        if (s.left.empty() || s.right.empty()) throw ValidationError("nb: both node sets must be non-empty");
        if (!disjoint(s.left, s.right)) throw ValidationError("nb: node sets overlap");
        if (s.present_edges + s.absent_edges != area_size())
            throw ValidationError("nb: present + absent does not match area");
        break;
    }
    case StructureType::Star: {
        const auto& s = as<Star>();
        check_ids(s.spokes, n, "st");
        if (s.hub >= n) throw ValidationError("st: hub out of range");
        if (s.spokes.size() < 2) throw ValidationError("st: needs at least 2 spokes");
        if (s.spokes.contains(s.hub)) throw ValidationError("st: hub listed among spokes");
        break;
    }
    case StructureType::Chain: {
        const auto& c = as<Chain>().nodes;
        if (c.size() < 2) throw ValidationError("ch: needs at least 2 nodes");
        std::vector<NodeId> sorted = c;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ValidationError("ch: repeated node");
        if (sorted.back() >= n) throw ValidationError("ch: node id out of range");
        break;
    }
    }
}

std::array<std::size_t, kVocabularySize> Model::type_counts() const {
    std::array<std::size_t, kVocabularySize> counts{};
    for (const auto& s : structures) ++counts[static_cast<std::size_t>(s.type())];
    return counts;
}

} // namespace vog
