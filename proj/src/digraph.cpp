#include "relforest/digraph.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace relforest {

WeightedDigraph::WeightedDigraph(int n) : n_(n) {
  if (n < 1) {
    throw std::invalid_argument("digraph needs at least one vertex, got " +
                                std::to_string(n));
  }
  w_.assign(static_cast<size_t>(n) * n, kInf);
}

WeightedDigraph WeightedDigraph::from_arcs(int n,
                                           std::span<const WeightedArc> arcs) {
  WeightedDigraph g(n);
  for (const WeightedArc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + ", " +
                                  std::to_string(a.head) +
                                  ") out of range for n=" + std::to_string(n));
    }
    if (std::isnan(a.weight)) {
      throw std::invalid_argument("arc (" + std::to_string(a.tail) + ", " +
                                  std::to_string(a.head) + ") has NaN weight");
    }
    if (a.tail == a.head) continue;  // a self-loop can never join a forest
    double& slot = g.w_[static_cast<size_t>(a.tail) * n + a.head];
    if (a.weight < slot) slot = a.weight;
  }
  return g;
}

int WeightedDigraph::arc_count() const {
  int count = 0;
  for (double w : w_)
    if (w < kInf) ++count;
  return count;
}

WeightedDigraph WeightedDigraph::transposed() const {
  WeightedDigraph t(n_);
  for (VertexId q = 0; q < n_; ++q)
    for (VertexId p = 0; p < n_; ++p)
      t.w_[static_cast<size_t>(p) * n_ + q] = weight(q, p);
  return t;
}

std::optional<OutArc> min_out_arc(const WeightedDigraph& g, VertexId q) {
  std::optional<OutArc> best;
  for (VertexId p = 0; p < g.order(); ++p) {
    if (p == q) continue;
    double w = g.weight(q, p);
    if (w < kInf && (!best || w < best->weight)) best = OutArc{p, w};
  }
  return best;
}

std::optional<OutArc> min_out_arc(const WeightedDigraph& g, VertexId q,
                                  const std::vector<bool>& allowed_heads) {
  std::optional<OutArc> best;
  for (VertexId p = 0; p < g.order(); ++p) {
    if (p == q || !allowed_heads[p]) continue;
    double w = g.weight(q, p);
    if (w < kInf && (!best || w < best->weight)) best = OutArc{p, w};
  }
  return best;
}

double arcset_weight(const WeightedDigraph& g, std::span<const Arc> arcs,
                     std::span<const VertexId> s) {
  std::vector<bool> in_s(g.order(), false);
  for (VertexId v : s) in_s[v] = true;
  double total = 0.0;
  for (const Arc& a : arcs)
    if (in_s[a.tail]) total += g.weight(a.tail, a.head);
  return total;
}

}  // namespace relforest
