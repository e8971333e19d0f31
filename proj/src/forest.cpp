#include "relforest/forest.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace relforest {

EnteringForest::EnteringForest(int n) {
  if (n < 1) throw std::invalid_argument("forest needs at least one vertex");
  parent_.assign(n, kNoParent);
}

EnteringForest::EnteringForest(std::vector<VertexId> parent)
    : parent_(std::move(parent)) {
  const int n = order();
  if (n < 1) throw std::invalid_argument("forest needs at least one vertex");
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = parent_[v];
    if (p == v || p < kNoParent || p >= n) {
      throw std::invalid_argument("parent entry " + std::to_string(p) +
                                  " of vertex " + std::to_string(v) +
                                  " is out of range");
    }
  }
}

EnteringForest EnteringForest::from_arcs(int n, std::span<const Arc> arcs) {
  if (n < 1) throw std::invalid_argument("forest needs at least one vertex");
  std::vector<VertexId> parent(n, kNoParent);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n ||
        a.tail == a.head) {
      throw std::invalid_argument("bad arc (" + std::to_string(a.tail) + ", " +
                                  std::to_string(a.head) + ")");
    }
    if (parent[a.tail] != kNoParent) {
      throw std::invalid_argument("vertex " + std::to_string(a.tail) +
                                  " emits more than one arc");
    }
    parent[a.tail] = a.head;
  }
  return EnteringForest(std::move(parent));
}

int EnteringForest::arc_count() const {
  int count = 0;
  for (VertexId p : parent_)
    if (p != kNoParent) ++count;
  return count;
}

std::vector<VertexId> EnteringForest::roots() const {
  std::vector<VertexId> r;
  for (VertexId v = 0; v < order(); ++v)
    if (parent_[v] == kNoParent) r.push_back(v);
  return r;
}

std::vector<Arc> EnteringForest::arcs() const {
  std::vector<Arc> a;
  a.reserve(arc_count());
  for (VertexId v = 0; v < order(); ++v)
    if (parent_[v] != kNoParent) a.push_back({v, parent_[v]});
  return a;
}

std::optional<std::string> validate(const EnteringForest& f,
                                    const WeightedDigraph& g) {
  if (f.order() != g.order()) {
    return "forest has " + std::to_string(f.order()) + " vertices, graph has " +
           std::to_string(g.order());
  }
  const int n = f.order();
  for (VertexId v = 0; v < n; ++v) {
    VertexId p = f.parent(v);
    if (p != EnteringForest::kNoParent && !g.has_arc(v, p)) {
      return "arc " + std::to_string(v) + " -> " + std::to_string(p) +
             " is not in the graph";
    }
  }
  // Follow parent pointers; 0 = unseen, 1 = on current walk, 2 = done.
  std::vector<char> state(n, 0);
  for (VertexId start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    VertexId v = start;
    while (v != EnteringForest::kNoParent && state[v] == 0) {
      state[v] = 1;
      v = f.parent(v);
    }
    if (v != EnteringForest::kNoParent && state[v] == 1) {
      std::string msg = "cycle:";
      VertexId w = v;
      do {
        msg += " " + std::to_string(w) + " ->";
        w = f.parent(w);
      } while (w != v);
      msg += " " + std::to_string(v);
      return msg;
    }
    VertexId u = start;
    while (u != EnteringForest::kNoParent && state[u] == 1) {
      state[u] = 2;
      u = f.parent(u);
    }
  }
  return std::nullopt;
}

std::vector<VertexId> tree_vertices(const EnteringForest& f, VertexId r) {
  if (r < 0 || r >= f.order() || !f.is_root(r)) {
    throw std::invalid_argument("vertex " + std::to_string(r) +
                                " is not a root");
  }
  const int n = f.order();
  std::vector<std::vector<VertexId>> children(n);
  for (VertexId v = 0; v < n; ++v)
    if (!f.is_root(v)) children[f.parent(v)].push_back(v);
  std::vector<VertexId> out;
  std::vector<VertexId> stack{r};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (VertexId c : children[v]) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double forest_weight(const EnteringForest& f, const WeightedDigraph& g) {
  double total = 0.0;
  for (VertexId v = 0; v < f.order(); ++v)
    if (!f.is_root(v)) total += g.weight(v, f.parent(v));
  return total;
}

std::vector<Arc> replace_arcs(const EnteringForest& f,
                              std::span<const Arc> donor,
                              std::span<const VertexId> s) {
  std::vector<bool> in_s(f.order(), false);
  for (VertexId v : s) in_s[v] = true;
  std::vector<Arc> out;
  for (VertexId v = 0; v < f.order(); ++v)
    if (!in_s[v] && !f.is_root(v)) out.push_back({v, f.parent(v)});
  for (const Arc& a : donor)
    if (in_s[a.tail]) out.push_back(a);
  std::sort(out.begin(), out.end(),
            [](const Arc& a, const Arc& b) { return a.tail < b.tail; });
  return out;
}

RootIndex RootIndex::of(const EnteringForest& f) {
  const int n = f.order();
  RootIndex index;
  index.root_of.assign(n, EnteringForest::kNoParent);
  std::vector<VertexId> path;
  for (VertexId start = 0; start < n; ++start) {
    if (index.root_of[start] != EnteringForest::kNoParent) continue;
    VertexId v = start;
    path.clear();
    while (index.root_of[v] == EnteringForest::kNoParent && !f.is_root(v)) {
      if (static_cast<int>(path.size()) > n) {
        throw std::invalid_argument("forest contains a cycle");
      }
      path.push_back(v);
      v = f.parent(v);
    }
    VertexId r = f.is_root(v) ? v : index.root_of[v];
    index.root_of[v] = r;
    for (VertexId w : path) index.root_of[w] = r;
  }
  return index;
}

ExitSearchResult component_with_exit(std::span<const Arc> h_arcs, VertexId y,
                                     std::span<const VertexId> y_tree,
                                     const RootIndex& index) {
  std::unordered_set<VertexId> in_y(y_tree.begin(), y_tree.end());
  std::unordered_map<VertexId, VertexId> head_of;
  head_of.reserve(h_arcs.size());
  for (const Arc& a : h_arcs) {
    if (!in_y.count(a.tail) || !head_of.emplace(a.tail, a.head).second) {
      throw std::invalid_argument(
          "h_arcs must hold exactly one arc from every vertex of the tree");
    }
  }
  if (head_of.size() != in_y.size() || !in_y.count(y)) {
    throw std::invalid_argument(
        "h_arcs must hold exactly one arc from every vertex of the tree");
  }

  // Undirected adjacency over the arcs; heads outside the tree are recorded
  // as the exit and never expanded.
  std::unordered_map<VertexId, std::vector<VertexId>> adj;
  adj.reserve(2 * h_arcs.size());
  for (const Arc& a : h_arcs) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }

  ExitSearchResult result;
  int exits = 0;
  std::unordered_set<VertexId> seen{y};
  std::vector<VertexId> stack{y};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    result.component.push_back(v);
    for (VertexId w : adj.at(v)) {
      if (!in_y.count(w)) {
        // only reachable as the head of v's own arc
        if (head_of.at(v) == w) {
          result.exit = {v, w};
          ++exits;
        }
        continue;
      }
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (exits != 1) {
    throw std::invalid_argument(
        "component has " + std::to_string(exits) +
        " exit arcs; h_arcs do not describe a forest over the tree");
  }
  std::sort(result.component.begin(), result.component.end());
  result.absorbing_root = index.root_of[result.exit.head];
  return result;
}

std::optional<VertexId> is_descendant(const EnteringForest& parent,
                                      const EnteringForest& child) {
  if (parent.order() != child.order()) return std::nullopt;
  std::vector<VertexId> pr = parent.roots();
  std::vector<VertexId> cr = child.roots();
  if (cr.size() + 1 != pr.size()) return std::nullopt;

  // Child roots must be exactly the parent roots minus one vertex y.
  VertexId y = EnteringForest::kNoParent;
  size_t ci = 0;
  for (VertexId r : pr) {
    if (ci < cr.size() && cr[ci] == r) {
      ++ci;
    } else if (y == EnteringForest::kNoParent) {
      y = r;
    } else {
      return std::nullopt;
    }
  }
  if (ci != cr.size() || y == EnteringForest::kNoParent) return std::nullopt;

  // Every surviving tree is kept arc-for-arc.
  for (VertexId q : cr) {
    for (VertexId v : tree_vertices(parent, q)) {
      if (child.parent(v) != parent.parent(v)) return std::nullopt;
    }
  }

  // The dissolved tree re-emits from all its vertices and leaves through a
  // single arc; with the child acyclic that makes its restriction one tree.
  std::vector<VertexId> dissolved = tree_vertices(parent, y);
  std::vector<bool> in_y(parent.order(), false);
  for (VertexId v : dissolved) in_y[v] = true;
  int exits = 0;
  for (VertexId v : dissolved) {
    VertexId h = child.parent(v);
    if (h == EnteringForest::kNoParent) return std::nullopt;
    if (!in_y[h]) ++exits;
  }
  if (exits != 1) return std::nullopt;
  return y;
}

}  // namespace relforest
