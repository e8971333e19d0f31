#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "relforest/cascade.hpp"
#include "relforest/digraph.hpp"

namespace relforest {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ingested graph: labels in first-occurrence order plus the raw arc list.
struct ParsedGraph {
  std::vector<std::string> labels;
  std::vector<WeightedArc> arcs;
  std::vector<std::string> warnings;  // e.g. duplicate arcs that were collapsed

  int order() const { return static_cast<int>(labels.size()); }
  WeightedDigraph graph() const;
  int index_of(const std::string& label) const;  // -1 when unknown
};

/// Line format: `tail head weight` for an arc, a single token to declare an
/// isolated vertex, `#` starts a comment. Labels are arbitrary tokens.
ParsedGraph parse_edge_list(std::istream& in);

/// {"n": int, "arcs": [[tail, head, weight], ...], "labels": [...]?} with
/// integer vertex indices; labels default to the indices.
ParsedGraph parse_graph_json(std::istream& in);

/// Structured cascade output: per-k forests (parent arrays, -1 for roots, or
/// per-step arc deltas when deltas_only) plus the step trace.
nlohmann::ordered_json cascade_document(const std::vector<std::string>& labels,
                                        const CascadeResult& result,
                                        bool deltas_only);

/// Forests and weights read back from a cascade document.
struct ParsedCascade {
  int n = 0;
  std::vector<int> ks;
  std::vector<double> phi;
  std::vector<EnteringForest> forests;
};
ParsedCascade parse_cascade_document(const nlohmann::ordered_json& doc);

/// One `digraph` block per k, roots drawn as double circles.
std::string cascade_dot(const WeightedDigraph& g,
                        const std::vector<std::string>& labels,
                        const CascadeResult& result);

/// k / phi / increment columns, widest k first.
std::string cascade_table(const CascadeResult& result);

std::string arborescence_listing(const std::vector<std::string>& labels,
                                 const WeightedDigraph& g,
                                 const std::vector<VertexId>& parent);

/// Integral weights print without a decimal point.
std::string format_weight(double w);

}  // namespace relforest
