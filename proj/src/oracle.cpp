#include "relforest/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace relforest::oracle {
namespace {

void check_cap(const WeightedDigraph& g) {
  if (g.order() > kMaxVertices) {
    throw std::invalid_argument(
        "oracle cap exceeded: n=" + std::to_string(g.order()) + ", cap=" +
        std::to_string(kMaxVertices));
  }
}

std::vector<std::vector<VertexId>> finite_heads(const WeightedDigraph& g) {
  std::vector<std::vector<VertexId>> heads(g.order());
  for (VertexId q = 0; q < g.order(); ++q)
    for (VertexId p = 0; p < g.order(); ++p)
      if (p != q && g.has_arc(q, p)) heads[q].push_back(p);
  return heads;
}

// Odometer over one head choice per emitter; acyclic candidates only.
void for_each_assignment(const WeightedDigraph& g,
                         const std::vector<VertexId>& emitters,
                         const std::function<void(const EnteringForest&)>& fn) {
  auto heads = finite_heads(g);
  for (VertexId q : emitters)
    if (heads[q].empty()) return;

  std::vector<size_t> pick(emitters.size(), 0);
  for (;;) {
    std::vector<VertexId> parent(g.order(), EnteringForest::kNoParent);
    for (size_t i = 0; i < emitters.size(); ++i)
      parent[emitters[i]] = heads[emitters[i]][pick[i]];
    EnteringForest candidate(std::move(parent));
    if (!validate(candidate, g)) fn(candidate);

    size_t i = 0;
    while (i < pick.size() && ++pick[i] == heads[emitters[i]].size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) return;
  }
}

}  // namespace

void enumerate_forests(const WeightedDigraph& g, int k,
                       const std::function<void(const EnteringForest&)>& fn) {
  check_cap(g);
  const int n = g.order();
  if (k < 1 || k > n) {
    throw std::invalid_argument("tree count " + std::to_string(k) +
                                " out of range for n=" + std::to_string(n));
  }
  const int emitter_count = n - k;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != emitter_count) continue;
    std::vector<VertexId> emitters;
    for (VertexId v = 0; v < n; ++v)
      if (mask & (1u << v)) emitters.push_back(v);
    for_each_assignment(g, emitters, fn);
  }
}

long long count_forests(const WeightedDigraph& g, int k) {
  long long count = 0;
  enumerate_forests(g, k, [&](const EnteringForest&) { ++count; });
  return count;
}

double phi_oracle(const WeightedDigraph& g, int k) {
  double best = kInf;
  enumerate_forests(g, k, [&](const EnteringForest& f) {
    best = std::min(best, forest_weight(f, g));
  });
  return best;
}

std::optional<double> oracle_min_arborescence(const WeightedDigraph& g,
                                              VertexId root) {
  check_cap(g);
  if (root < 0 || root >= g.order()) {
    throw std::invalid_argument("root out of range");
  }
  std::vector<VertexId> emitters;
  for (VertexId v = 0; v < g.order(); ++v)
    if (v != root) emitters.push_back(v);
  std::optional<double> best;
  for_each_assignment(g, emitters, [&](const EnteringForest& f) {
    double w = forest_weight(f, g);
    if (!best || w < *best) best = w;
  });
  return best;
}

double oracle_mu_circ(const WeightedDigraph& g, std::span<const VertexId> s) {
  check_cap(g);
  std::vector<VertexId> emitters(s.begin(), s.end());
  std::sort(emitters.begin(), emitters.end());
  double best = kInf;
  for_each_assignment(g, emitters, [&](const EnteringForest& f) {
    best = std::min(best, arcset_weight(g, f.arcs(), emitters));
  });
  return best;
}

bool CheckReport::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const Item& i) { return i.pass; });
}

std::string CheckReport::summary() const {
  std::string out;
  for (const Item& i : items) {
    out += i.pass ? "[ok]   " : "[FAIL] ";
    out += i.name;
    if (!i.detail.empty()) out += " — " + i.detail;
    out += "\n";
  }
  return out;
}

CheckReport verify_cascade(const WeightedDigraph& g,
                           const CascadeResult& res) {
  check_cap(g);
  CheckReport report;
  auto add = [&report](const std::string& name, bool pass,
                       const std::string& detail = "") {
    report.items.push_back({name, pass, pass ? "" : detail});
  };

  const int n = g.order();
  bool shape_ok = res.n == n && res.k_min >= 1 && res.k_min <= n &&
                  static_cast<int>(res.phi.size()) == n - res.k_min + 1 &&
                  static_cast<int>(res.steps.size()) == n - res.k_min &&
                  res.phi_at(n) == 0.0;
  add("result shape", shape_ok, "per-k tables inconsistent with k_min");
  if (!shape_ok) return report;

  bool forests_ok = true;
  std::string forests_detail;
  for (int k = n; k >= res.k_min; --k) {
    EnteringForest f = res.forest_at(k);
    auto bad = validate(f, g);
    if (bad || static_cast<int>(f.roots().size()) != k) {
      forests_ok = false;
      forests_detail = "k=" + std::to_string(k) +
                       (bad ? ": " + *bad : ": wrong number of roots");
      break;
    }
  }
  add("forests valid", forests_ok, forests_detail);
  if (!forests_ok) return report;

  bool weights_ok = true;
  std::string weights_detail;
  for (int k = n; k >= res.k_min; --k) {
    double actual = forest_weight(res.forest_at(k), g);
    double expected = phi_oracle(g, k);
    if (actual != expected || res.phi_at(k) != actual) {
      weights_ok = false;
      weights_detail = "k=" + std::to_string(k) + ": forest weight " +
                       std::to_string(actual) + ", oracle " +
                       std::to_string(expected) + ", recorded " +
                       std::to_string(res.phi_at(k));
      break;
    }
  }
  add("per-k weights match enumeration", weights_ok, weights_detail);

  bool related_ok = true;
  std::string related_detail;
  for (int k = n - 1; k >= res.k_min; --k) {
    auto witness = is_descendant(res.forest_at(k + 1), res.forest_at(k));
    VertexId traced = res.steps[n - 1 - k].dissolved_root;
    if (!witness || *witness != traced) {
      related_ok = false;
      related_detail =
          "k=" + std::to_string(k) +
          (witness ? ": witness " + std::to_string(*witness) + " vs traced " +
                         std::to_string(traced)
                   : ": not a descendant");
      break;
    }
  }
  add("consecutive forests related", related_ok, related_detail);

  bool halt_ok;
  std::string halt_detail;
  if (res.outcome == CascadeOutcome::spanning_tree) {
    halt_ok = res.k_min == 1;
    halt_detail = "spanning tree claimed but k_min != 1";
  } else {
    halt_ok = phi_oracle(g, res.k_min - 1) == kInf;
    halt_detail = "halted at k_min=" + std::to_string(res.k_min) +
                  " although a forest with " + std::to_string(res.k_min - 1) +
                  " trees exists";
  }
  add("halting exact", halt_ok, halt_detail);

  bool ids_ok = true;
  std::string ids_detail;
  for (size_t i = 0; i < res.steps.size() && ids_ok; ++i) {
    const StepRecord& s = res.steps[i];
    EnteringForest before = res.forest_at(s.k + 1);
    EnteringForest after = res.forest_at(s.k);
    if (res.phi_at(s.k) != res.phi_at(s.k + 1) + s.increment) {
      ids_ok = false;
      ids_detail = "k=" + std::to_string(s.k) + ": increment mismatch";
      break;
    }
    std::vector<VertexId> y_tree, x_tree, z_tree;
    try {
      y_tree = tree_vertices(before, s.dissolved_root);
      x_tree = tree_vertices(before, s.absorbing_root);
      z_tree = tree_vertices(after, s.absorbing_root);
    } catch (const std::invalid_argument& e) {
      ids_ok = false;
      ids_detail = "k=" + std::to_string(s.k) + ": " + e.what();
      break;
    }
    double mu_circ_y = arcset_weight(g, after.arcs(), y_tree);
    double mu_bullet_y = arcset_weight(g, before.arcs(), y_tree);
    double d_before = arcset_weight(g, before.arcs(), s.component);
    double d_after = arcset_weight(g, after.arcs(), s.component);
    if (mu_circ_y != mu_bullet_y - d_before + d_after) {
      ids_ok = false;
      ids_detail =
          "k=" + std::to_string(s.k) + ": dissolution-cost identity broken";
      break;
    }
    double z_weight = arcset_weight(g, after.arcs(), z_tree);
    double x_weight = arcset_weight(g, before.arcs(), x_tree);
    if (z_weight != x_weight + mu_circ_y) {
      ids_ok = false;
      ids_detail =
          "k=" + std::to_string(s.k) + ": absorber-weight identity broken";
      break;
    }
  }
  add("step identities hold", ids_ok, ids_detail);

  return report;
}

WeightedDigraph random_digraph(std::mt19937_64& rng, int n, double density,
                               int weight_min, int weight_max) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(weight_min, weight_max);
  std::vector<WeightedArc> arcs;
  for (VertexId q = 0; q < n; ++q) {
    for (VertexId p = 0; p < n; ++p) {
      if (p == q) continue;
      if (coin(rng) < density)
        arcs.push_back({q, p, static_cast<double>(weight(rng))});
    }
  }
  return WeightedDigraph::from_arcs(n, arcs);
}

}  // namespace relforest::oracle
