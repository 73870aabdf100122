#include "vog/model_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace vog {

namespace {

void write_labels(std::ostream& out, const std::vector<NodeId>& nodes, const Graph& g) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i) out << ' ';
        out << g.label(nodes[i]);
    }
}

std::vector<std::string> comma_segments(const std::string& text) {
    std::vector<std::string> segments;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        segments.push_back(text.substr(start, end - start));
        if (end == text.size()) break;
        start = end + 1;
    }
    return segments;
}

std::vector<std::string> whitespace_tokens(const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::vector<NodeId> to_ids(const std::vector<std::string>& tokens, const Graph& g, std::size_t line_no) {
    std::vector<NodeId> ids;
    ids.reserve(tokens.size());
    for (const auto& tok : tokens) {
        auto id = g.find_label(tok);
        if (!id) throw ParseError("unknown node label '" + tok + "'", line_no);
        ids.push_back(*id);
    }
    return ids;
}

std::uint64_t induced_present(const Graph& g, const NodeSet& nodes) {
    std::uint64_t present = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (g.has_edge(nodes.members[i], nodes.members[j])) ++present;
    return present;
}

std::uint64_t between_present(const Graph& g, const NodeSet& left, const NodeSet& right) {
    std::uint64_t present = 0;
    for (NodeId a : left)
        for (NodeId b : right)
            if (g.has_edge(a, b)) ++present;
    return present;
}

} // namespace

void write_model(std::ostream& out, const Model& m, const Graph& g) {
    for (const auto& s : m.structures) {
        out << type_code(s.type()) << ' ';
        switch (s.type()) {
        case StructureType::FullClique:
            write_labels(out, s.as<FullClique>().nodes.members, g);
            break;
        case StructureType::NearClique: {
            const auto& nc = s.as<NearClique>();
            write_labels(out, nc.nodes.members, g);
            out << ", " << nc.present_edges;
            break;
        }
        case StructureType::FullBipartite: {
            const auto& fb = s.as<FullBipartite>();
            write_labels(out, fb.left.members, g);
            out << " , ";
            write_labels(out, fb.right.members, g);
            break;
        }
        case StructureType::NearBipartite: {
            const auto& nb = s.as<NearBipartite>();
            write_labels(out, nb.left.members, g);
            out << " , ";
            write_labels(out, nb.right.members, g);
            break;
        }
        case StructureType::Star: {
            const auto& st = s.as<Star>();
            out << g.label(st.hub) << ", ";
            write_labels(out, st.spokes.members, g);
            break;
        }
        case StructureType::Chain:
            write_labels(out, s.as<Chain>().nodes, g);
            break;
        }
        out << '\n';
    }
}

Model read_model(std::istream& in, const Graph& g) {
    Model m;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream ss(line);
        std::string code;
        ss >> code;
        StructureType type;
        try {
            type = type_from_code(code);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line_no);
        }
        std::string rest;
        std::getline(ss, rest);
        auto segments = comma_segments(rest);

        switch (type) {
        case StructureType::FullClique: {
            if (segments.size() != 1) throw ParseError("fc expects no comma", line_no);
            NodeSet nodes = NodeSet::from_unsorted(to_ids(whitespace_tokens(segments[0]), g, line_no));
            m.structures.push_back(Structure(FullClique{std::move(nodes)}));
            break;
        }
        case StructureType::NearClique: {
            if (segments.size() != 2) throw ParseError("nc expects '<nodes>, <presentEdgeCount>'", line_no);
            NodeSet nodes = NodeSet::from_unsorted(to_ids(whitespace_tokens(segments[0]), g, line_no));
            auto count_toks = whitespace_tokens(segments[1]);
            if (count_toks.size() != 1) throw ParseError("nc expects a single edge count", line_no);
            std::uint64_t stored = std::stoull(count_toks[0]);
            std::uint64_t present = induced_present(g, nodes);
            if (stored != present)
                throw ValidationError("line " + std::to_string(line_no) + ": nc edge count " +
                                      std::to_string(stored) + " does not match the graph (" +
                                      std::to_string(present) + ")");
            std::uint64_t k = nodes.size();
            std::uint64_t area = k * (k - 1) / 2;
            m.structures.push_back(Structure(NearClique{std::move(nodes), present, area - present}));
            break;
        }
        case StructureType::FullBipartite:
        case StructureType::NearBipartite: {
            if (segments.size() != 2) throw ParseError("bipartite core expects two node lists", line_no);
            NodeSet left = NodeSet::from_unsorted(to_ids(whitespace_tokens(segments[0]), g, line_no));
            NodeSet right = NodeSet::from_unsorted(to_ids(whitespace_tokens(segments[1]), g, line_no));
            if (type == StructureType::FullBipartite) {
                m.structures.push_back(Structure(FullBipartite{std::move(left), std::move(right)}));
            } else {
                std::uint64_t present = between_present(g, left, right);
                std::uint64_t area = static_cast<std::uint64_t>(left.size()) * right.size();
                m.structures.push_back(
                    Structure(NearBipartite{std::move(left), std::move(right), present, area - present}));
            }
            break;
        }
        case StructureType::Star: {
            if (segments.size() != 2) throw ParseError("st expects '<hub>, <spokes>'", line_no);
            auto hub_toks = whitespace_tokens(segments[0]);
            if (hub_toks.size() != 1) throw ParseError("st expects a single hub", line_no);
            NodeId hub = to_ids(hub_toks, g, line_no)[0];
            NodeSet spokes = NodeSet::from_unsorted(to_ids(whitespace_tokens(segments[1]), g, line_no));
            m.structures.push_back(Structure(Star{hub, std::move(spokes)}));
            break;
        }
        case StructureType::Chain: {
            if (segments.size() != 1) throw ParseError("ch expects no comma", line_no);
            std::vector<NodeId> order = to_ids(whitespace_tokens(segments[0]), g, line_no);
            m.structures.push_back(Structure(Chain{std::move(order)}));
            break;
        }
        }
        m.structures.back().validate(g.node_count());
    }
    return m;
}

namespace {

nlohmann::ordered_json report_json_fields(const CostReport& r) {
    nlohmann::ordered_json j;
    j["baseline_bits"] = r.baseline_bits;
    j["total_bits"] = r.total_bits;
    j["ratio"] = r.ratio();
    j["model_bits"] = r.model_bits;
    j["error_pos_bits"] = r.err_pos_bits;
    j["error_neg_bits"] = r.err_neg_bits;
    j["unexplained_edges"] = r.unexplained_edges;
    j["unexplained_edge_fraction"] = r.unexplained_edge_fraction;
    nlohmann::ordered_json counts;
    for (std::size_t t = 0; t < kVocabularySize; ++t)
        counts[std::string(type_code(static_cast<StructureType>(t)))] = r.type_counts[t];
    j["structure_counts"] = counts;
    return j;
}

} // namespace

std::string report_to_json(const Graph& g, const std::vector<SummaryResult>& all, std::size_t best_index) {
    nlohmann::ordered_json j;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    const auto& best = all[best_index];
    j["heuristic"] = best.heuristic.name();
    j["structures"] = best.model.size();
    j.update(report_json_fields(best.report));
    nlohmann::ordered_json rows;
    for (const auto& r : all) {
        nlohmann::ordered_json row = report_json_fields(r.report);
        row["structures"] = r.model.size();
        rows[r.heuristic.name()] = row;
    }
    j["heuristics"] = rows;
    return j.dump(2) + "\n";
}

std::string report_to_json(const Graph& g, const CostReport& report) {
    nlohmann::ordered_json j;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    j.update(report_json_fields(report));
    return j.dump(2) + "\n";
}

} // namespace vog
