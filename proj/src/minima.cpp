#include "relforest/minima.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "relforest/arborescence.hpp"
#include "relforest/forest.hpp"

namespace relforest {

MuCircResult mu_circ(const WeightedDigraph& g, std::span<const VertexId> s) {
  const int n = g.order();
  const int k = static_cast<int>(s.size());
  if (k == 0 || k >= n) {
    throw std::invalid_argument("s must be a nonempty proper vertex subset");
  }
  std::vector<VertexId> members(s.begin(), s.end());
  std::sort(members.begin(), members.end());
  if (members.front() < 0 || members.back() >= n ||
      std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw std::invalid_argument("s holds an out-of-range or repeated vertex");
  }

  std::vector<bool> outside(n, true);
  for (VertexId v : members) outside[v] = false;

  // Merged-vertex graph: members keep their internal weights; index k stands
  // for everything outside, reachable at each member's cheapest exit.
  WeightMatrix w(k + 1, std::vector<double>(k + 1, kInf));
  std::vector<VertexId> exit_head(k, EnteringForest::kNoParent);
  MuCircResult result;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      if (i != j) w[i][j] = g.weight(members[i], members[j]);
    if (auto exit = min_out_arc(g, members[i], outside)) {
      w[i][k] = exit->weight;
      exit_head[i] = exit->head;
      result.exit_argmins.emplace_back(members[i], exit->head);
    }
  }

  auto tree = min_in_arborescence(w, k);
  if (!tree) return result;  // value stays kInf, no witness

  result.h_arcs.reserve(k);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    VertexId head =
        tree->parent[i] == k ? exit_head[i] : members[tree->parent[i]];
    result.h_arcs.push_back({members[i], head});
    total += g.weight(members[i], head);
  }
  assert(total == tree->weight);
  result.value = total;
  return result;
}

}  // namespace relforest
