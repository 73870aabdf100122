#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vog/assembler.hpp"
#include "vog/graph.hpp"
#include "vog/mdl.hpp"
#include "vog/structures.hpp"

namespace vog {

// One structure per line, external labels, model order preserved:
//   fc <node> <node> ...
//   nc <node> ..., <presentEdgeCount>
//   fb <A nodes...> , <B nodes...>
//   nb <A nodes...> , <B nodes...>
//   st <hub>, <spoke> <spoke> ...
//   ch <node> <node> ...
void write_model(std::ostream& out, const Model& m, const Graph& g);

// Near payloads are rebuilt from the graph; a stored near-clique edge count
// that disagrees with the graph is a validation error.
Model read_model(std::istream& in, const Graph& g);

// Flat key-value report (JSON text), one row per requested heuristic plus
// the chosen summary.
std::string report_to_json(const Graph& g, const std::vector<SummaryResult>& all,
                           std::size_t best_index);

// Single-model cost report (for cost recomputation runs).
std::string report_to_json(const Graph& g, const CostReport& report);

} // namespace vog
