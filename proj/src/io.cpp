#include "relforest/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace relforest {
namespace {

double parse_finite_weight(const std::string& token, int line) {
  double w = 0.0;
  size_t used = 0;
  try {
    w = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || !std::isfinite(w)) {
    throw ParseError("line " + std::to_string(line) + ": bad weight '" +
                     token + "'");
  }
  return w;
}

std::string join_labels(const std::vector<std::string>& labels, VertexId v) {
  return v >= 0 && v < static_cast<int>(labels.size()) ? labels[v]
                                                       : std::to_string(v);
}

}  // namespace

WeightedDigraph ParsedGraph::graph() const {
  return WeightedDigraph::from_arcs(order(), arcs);
}

int ParsedGraph::index_of(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

ParsedGraph parse_edge_list(std::istream& in) {
  ParsedGraph out;
  std::unordered_map<std::string, VertexId> index;
  auto intern = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, out.order());
    if (fresh) out.labels.push_back(label);
    return it->second;
  };

  std::unordered_set<long long> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'tail head weight' or a lone vertex label");
    }
    VertexId tail = intern(tokens[0]);
    VertexId head = intern(tokens[1]);
    double w = parse_finite_weight(tokens[2], line_no);
    if (tail != head &&
        !seen.insert(static_cast<long long>(tail) << 32 | head).second) {
      out.warnings.push_back("line " + std::to_string(line_no) +
                             ": duplicate arc " + tokens[0] + " -> " +
                             tokens[1] + " collapsed to the minimum weight");
    }
    out.arcs.push_back({tail, head, w});
  }
  return out;
}

ParsedGraph parse_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") ||
      !doc["n"].is_number_integer() || !doc.contains("arcs") ||
      !doc["arcs"].is_array()) {
    throw ParseError("graph JSON needs integer 'n' and an 'arcs' array");
  }
  ParsedGraph out;
  const int n = doc["n"].get<int>();
  if (n < 0) throw ParseError("'n' is negative");
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array() ||
        static_cast<int>(doc["labels"].size()) != n) {
      throw ParseError("'labels' must list exactly n strings");
    }
    for (const auto& l : doc["labels"]) {
      if (!l.is_string()) throw ParseError("'labels' must list strings");
      out.labels.push_back(l.get<std::string>());
    }
  } else {
    for (int v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
  }
  for (const auto& entry : doc["arcs"]) {
    if (!entry.is_array() || entry.size() != 3 ||
        !entry[0].is_number_integer() || !entry[1].is_number_integer() ||
        !entry[2].is_number()) {
      throw ParseError("each arc must be [tail, head, weight]");
    }
    VertexId tail = entry[0].get<int>();
    VertexId head = entry[1].get<int>();
    double w = entry[2].get<double>();
    if (tail < 0 || tail >= n || head < 0 || head >= n) {
      throw ParseError("arc endpoint out of range");
    }
    if (!std::isfinite(w)) throw ParseError("arc weight must be finite");
    out.arcs.push_back({tail, head, w});
  }
  return out;
}

nlohmann::ordered_json cascade_document(const std::vector<std::string>& labels,
                                        const CascadeResult& result,
                                        bool deltas_only) {
  nlohmann::ordered_json doc;
  doc["format"] = "relforest-cascade/1";
  doc["n"] = result.n;
  doc["labels"] = labels;
  doc["outcome"] = result.outcome == CascadeOutcome::spanning_tree
                       ? "spanning_tree"
                       : "minimum_k";
  doc["k_min"] = result.k_min;
  doc["deltas_only"] = deltas_only;

  auto& forests = doc["forests"] = nlohmann::ordered_json::array();
  for (int k = result.n; k >= result.k_min; --k) {
    nlohmann::ordered_json entry;
    entry["k"] = k;
    entry["phi"] = result.phi_at(k);
    if (deltas_only) {
      auto& changed = entry["changed"] = nlohmann::ordered_json::array();
      if (k < result.n) {
        for (const Arc& a : result.steps[result.n - 1 - k].replaced)
          changed.push_back({a.tail, a.head});
      }
    } else {
      EnteringForest f = result.forest_at(k);
      auto& parent = entry["parent"] = nlohmann::ordered_json::array();
      for (VertexId v = 0; v < result.n; ++v) parent.push_back(f.parent(v));
    }
    forests.push_back(std::move(entry));
  }

  auto& trace = doc["trace"] = nlohmann::ordered_json::array();
  for (const StepRecord& s : result.steps) {
    nlohmann::ordered_json entry;
    entry["k"] = s.k;
    entry["y"] = s.dissolved_root;
    entry["x"] = s.absorbing_root;
    entry["increment"] = s.increment;
    entry["component"] = s.component;
    entry["exit"] = {s.exit.tail, s.exit.head};
    trace.push_back(std::move(entry));
  }
  return doc;
}

ParsedCascade parse_cascade_document(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("forests")) {
    throw ParseError("cascade document needs 'n' and 'forests'");
  }
  ParsedCascade out;
  out.n = doc["n"].get<int>();
  if (out.n < 1) throw ParseError("cascade document has no vertices");
  std::vector<VertexId> replayed(out.n, EnteringForest::kNoParent);
  for (const auto& entry : doc["forests"]) {
    out.ks.push_back(entry["k"].get<int>());
    out.phi.push_back(entry["phi"].get<double>());
    if (entry.contains("parent")) {
      std::vector<VertexId> parent;
      for (const auto& p : entry["parent"]) parent.push_back(p.get<int>());
      if (static_cast<int>(parent.size()) != out.n) {
        throw ParseError("parent array has the wrong length");
      }
      out.forests.emplace_back(std::move(parent));
    } else if (entry.contains("changed")) {
      for (const auto& pair : entry["changed"]) {
        VertexId v = pair[0].get<int>();
        if (v < 0 || v >= out.n) throw ParseError("changed vertex out of range");
        replayed[v] = pair[1].get<int>();
      }
      out.forests.emplace_back(replayed);
    } else {
      throw ParseError("forest entry has neither 'parent' nor 'changed'");
    }
  }
  return out;
}

std::string cascade_dot(const WeightedDigraph& g,
                        const std::vector<std::string>& labels,
                        const CascadeResult& result) {
  std::string out;
  for (int k = result.n; k >= result.k_min; --k) {
    EnteringForest f = result.forest_at(k);
    out += "digraph forest_k" + std::to_string(k) + " {\n";
    out += "  label=\"k=" + std::to_string(k) +
           ", phi=" + format_weight(result.phi_at(k)) + "\";\n";
    for (VertexId v = 0; v < result.n; ++v) {
      out += "  v" + std::to_string(v) + " [label=\"" +
             join_labels(labels, v) + "\", shape=" +
             (f.is_root(v) ? "doublecircle" : "circle") + "];\n";
    }
    for (const Arc& a : f.arcs()) {
      out += "  v" + std::to_string(a.tail) + " -> v" +
             std::to_string(a.head) + " [label=\"" +
             format_weight(g.weight(a.tail, a.head)) + "\"];\n";
    }
    out += "}\n";
  }
  return out;
}

std::string cascade_table(const CascadeResult& result) {
  std::vector<std::array<std::string, 3>> rows{{"k", "phi", "increment"}};
  for (int k = result.n; k >= result.k_min; --k) {
    rows.push_back({std::to_string(k), format_weight(result.phi_at(k)),
                    k == result.n
                        ? "-"
                        : format_weight(
                              result.steps[result.n - 1 - k].increment)});
  }
  size_t width[3] = {0, 0, 0};
  for (const auto& row : rows)
    for (int c = 0; c < 3; ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : rows) {
    for (int c = 0; c < 3; ++c) {
      out += std::string(width[c] - row[c].size() + (c ? 2 : 0), ' ');
      out += row[c];
    }
    out += "\n";
  }
  return out;
}

std::string arborescence_listing(const std::vector<std::string>& labels,
                                 const WeightedDigraph& g,
                                 const std::vector<VertexId>& parent) {
  double total = 0.0;
  for (VertexId v = 0; v < static_cast<int>(parent.size()); ++v)
    if (parent[v] != EnteringForest::kNoParent)
      total += g.weight(v, parent[v]);
  std::string out = "weight: " + format_weight(total) + "\n";
  for (VertexId v = 0; v < static_cast<int>(parent.size()); ++v) {
    if (parent[v] == EnteringForest::kNoParent) continue;
    out += join_labels(labels, v) + " -> " + join_labels(labels, parent[v]) +
           "  (" + format_weight(g.weight(v, parent[v])) + ")\n";
  }
  return out;
}

std::string format_weight(double w) {
  if (w == std::floor(w) && std::fabs(w) < 1e15) {
    return std::to_string(static_cast<long long>(w));
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", w);
  return buf;
}

}  // namespace relforest
