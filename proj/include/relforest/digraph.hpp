#pragma once

#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace relforest {

using VertexId = int;

/// Weight of a missing arc. Real arcs are always finite.
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Directed arc endpoints; the weight lives in the host graph.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct WeightedArc {
  VertexId tail = 0;
  VertexId head = 0;
  double weight = 0.0;
};

/// Dense weighted digraph on vertices [0, n). Self-loops are excluded and
/// parallel arcs collapse to their minimum weight at construction. Immutable
/// once built.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(int n);

  /// Throws std::invalid_argument on out-of-range endpoints or NaN weights.
  static WeightedDigraph from_arcs(int n, std::span<const WeightedArc> arcs);

  int order() const { return n_; }
  double weight(VertexId tail, VertexId head) const {
    return w_[static_cast<size_t>(tail) * n_ + head];
  }
  bool has_arc(VertexId tail, VertexId head) const {
    return weight(tail, head) < kInf;
  }
  int arc_count() const;
  WeightedDigraph transposed() const;

 private:
  int n_;
  std::vector<double> w_;  // row-major: w_[tail * n_ + head]
};

struct OutArc {
  VertexId head = 0;
  double weight = 0.0;
};

/// Minimum-weight arc leaving q, ties broken toward the smallest head index.
/// Empty when q has no finite out-arc.
std::optional<OutArc> min_out_arc(const WeightedDigraph& g, VertexId q);

/// Same, with candidate heads restricted to those marked in allowed_heads.
std::optional<OutArc> min_out_arc(const WeightedDigraph& g, VertexId q,
                                  const std::vector<bool>& allowed_heads);

/// Sum of g-weights over the arcs whose tail lies in s; heads may lie outside
/// s. Tails must be pairwise distinct. Disjoint tail sets add up exactly.
double arcset_weight(const WeightedDigraph& g, std::span<const Arc> arcs,
                     std::span<const VertexId> s);

}  // namespace relforest
