#pragma once

#include <optional>
#include <vector>

#include "relforest/digraph.hpp"

namespace relforest {

/// Square extended-real weight table; w[q][p] is the weight of arc q -> p,
/// kInf when absent. Diagonal entries are ignored.
using WeightMatrix = std::vector<std::vector<double>>;

WeightMatrix dense_weights(const WeightedDigraph& g);

struct InArborescence {
  std::vector<VertexId> parent;  // parent[root] == -1
  double weight = 0.0;
};

/// Minimum spanning entering tree of the graph described by w, rooted at
/// root: every other vertex keeps exactly one outgoing arc and following
/// arcs from anywhere ends at root. Empty when no such tree exists.
/// Negative weights are fine; the arc count is fixed at |w|-1.
std::optional<InArborescence> min_in_arborescence(const WeightMatrix& w,
                                                  VertexId root);

}  // namespace relforest
