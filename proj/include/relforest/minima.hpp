#pragma once

#include <span>
#include <utility>
#include <vector>

#include "relforest/digraph.hpp"

namespace relforest {

struct MuCircResult {
  /// Least weight any spanning forest can spend on arcs leaving the vertices
  /// of s when all of them must emit; kInf when impossible.
  double value = kInf;
  /// Witness: exactly one arc per vertex of s realizing value, in s order.
  /// Empty when value is kInf.
  std::vector<Arc> h_arcs;
  /// Per vertex of s with a finite way out: the cheapest head outside s
  /// (smallest index on ties), kept for expanding the merged-vertex arcs.
  std::vector<std::pair<VertexId, VertexId>> exit_argmins;
};

/// Builds the merged-vertex graph on s plus a single stand-in for everything
/// outside s, solves the entering tree rooted at the stand-in, and expands
/// the stand-in arcs back to their recorded heads. s must be a nonempty
/// proper subset of the vertices.
MuCircResult mu_circ(const WeightedDigraph& g, std::span<const VertexId> s);

}  // namespace relforest
