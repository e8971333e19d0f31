#include "relforest/arborescence.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "relforest/forest.hpp"

namespace relforest {
namespace {

// Best known original arc between two supernodes, under the reductions
// accumulated so far. Ties go to the smaller head, then the smaller tail,
// which keeps every run reproducible.
struct Candidate {
  double weight = kInf;
  VertexId tail = -1;
  VertexId head = -1;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.weight == kInf) return false;
  if (a.head != b.head) return a.head < b.head;
  return a.tail < b.tail;
}

// One contracted cycle: the history nodes that formed it and the in-cycle
// arc each of them had selected. Unwinding discards exactly one of those
// arcs per cycle (the one whose subtree supplies the outside arc's tail).
struct ContractionTrace {
  struct Cycle {
    std::vector<int> members;       // history node ids
    std::vector<Arc> member_arcs;   // selected in-cycle arc per member
  };
  std::vector<Cycle> cycles;
};

}  // namespace

WeightMatrix dense_weights(const WeightedDigraph& g) {
  const int n = g.order();
  WeightMatrix w(n, std::vector<double>(n, kInf));
  for (VertexId q = 0; q < n; ++q)
    for (VertexId p = 0; p < n; ++p)
      if (p != q) w[q][p] = g.weight(q, p);
  return w;
}

std::optional<InArborescence> min_in_arborescence(const WeightMatrix& w,
                                                  VertexId root) {
  const int m = static_cast<int>(w.size());
  if (root < 0 || root >= m) {
    throw std::invalid_argument("root " + std::to_string(root) +
                                " out of range");
  }
  for (const auto& row : w) {
    if (static_cast<int>(row.size()) != m) {
      throw std::invalid_argument("weight table is not square");
    }
  }
  if (m == 1) return InArborescence{{EnteringForest::kNoParent}, 0.0};

  // cand[a][b]: best reduced original arc from supernode a to supernode b.
  std::vector<std::vector<Candidate>> cand(m, std::vector<Candidate>(m));
  for (VertexId a = 0; a < m; ++a)
    for (VertexId b = 0; b < m; ++b)
      if (a != b && w[a][b] < kInf) cand[a][b] = {w[a][b], a, b};

  std::vector<int> dsu(m);
  for (int i = 0; i < m; ++i) dsu[i] = i;
  auto find = [&dsu](int v) {
    while (dsu[v] != v) {
      dsu[v] = dsu[dsu[v]];
      v = dsu[v];
    }
    return v;
  };

  std::vector<bool> active(m, true);
  std::vector<char> status(m, 0);  // 0 unvisited, 1 on path, 2 settled
  status[root] = 2;
  std::vector<int> top_history(m);
  for (int i = 0; i < m; ++i) top_history[i] = i;
  std::vector<int> history_parent(m, -1);
  ContractionTrace trace;

  std::vector<Candidate> sel(m);
  std::vector<int> sel_target(m, -1);
  auto select_out_arc = [&](int a) -> bool {
    Candidate best;
    int target = -1;
    for (int b = 0; b < m; ++b) {
      if (b == a || !active[b]) continue;
      if (better(cand[a][b], best)) {
        best = cand[a][b];
        target = b;
      }
    }
    if (target < 0) return false;  // nothing leaves this supernode
    sel[a] = best;
    sel_target[a] = target;
    return true;
  };

  std::vector<int> path;
  for (int v0 = 0; v0 < m; ++v0) {
    if (!active[v0] || status[v0] != 0) continue;
    int cur = v0;
    for (;;) {
      if (status[cur] == 0) {
        status[cur] = 1;
        path.push_back(cur);
        if (!select_out_arc(cur)) return std::nullopt;
      }
      int next = find(sel_target[cur]);
      assert(next != cur);
      if (status[next] == 0) {
        cur = next;
        continue;
      }
      if (status[next] == 2) {
        for (int p : path) status[p] = 2;
        path.clear();
        break;
      }

      // status[next] == 1: the walk closed a cycle along the path suffix.
      auto cycle_begin =
          std::find(path.rbegin(), path.rend(), next).base() - 1;
      std::vector<int> cycle(cycle_begin, path.end());
      path.erase(cycle_begin, path.end());

      int rep = *std::min_element(cycle.begin(), cycle.end());
      std::vector<bool> in_cycle(m, false);
      for (int c : cycle) in_cycle[c] = true;

      ContractionTrace::Cycle record;
      const int node_id = m + static_cast<int>(trace.cycles.size());
      for (int c : cycle) {
        record.members.push_back(top_history[c]);
        record.member_arcs.push_back({sel[c].tail, sel[c].head});
        history_parent[top_history[c]] = node_id;
      }
      history_parent.push_back(-1);
      trace.cycles.push_back(std::move(record));

      // Merge rows and columns into rep. Arcs leaving a member are reduced
      // by the weight of the in-cycle arc that choosing them would displace;
      // arcs entering the cycle keep their weight.
      for (int b = 0; b < m; ++b) {
        if (!active[b] || in_cycle[b]) continue;
        Candidate best_out, best_in;
        for (int c : cycle) {
          Candidate out = cand[c][b];
          if (out.weight < kInf) out.weight -= sel[c].weight;
          if (better(out, best_out)) best_out = out;
          if (better(cand[b][c], best_in)) best_in = cand[b][c];
        }
        cand[rep][b] = best_out;
        cand[b][rep] = best_in;
      }

      for (int c : cycle) {
        if (c != rep) {
          dsu[c] = rep;
          active[c] = false;
        }
      }
      top_history[rep] = node_id;
      status[rep] = 0;
      cur = rep;
    }
  }

  // Expansion: walk the contraction history top-down, giving every history
  // node exactly one original arc whose tail lies in its subtree.
  std::vector<VertexId> parent(m, EnteringForest::kNoParent);
  struct Pending {
    int node;
    Arc arc;
  };
  std::vector<Pending> todo;
  for (int a = 0; a < m; ++a) {
    if (!active[a] || a == root) continue;
    todo.push_back({top_history[a], {sel[a].tail, sel[a].head}});
  }
  while (!todo.empty()) {
    Pending item = todo.back();
    todo.pop_back();
    if (item.node < m) {
      assert(item.node == item.arc.tail);
      parent[item.arc.tail] = item.arc.head;
      continue;
    }
    const ContractionTrace::Cycle& cycle = trace.cycles[item.node - m];
    // Which member's subtree holds the tail of the inherited arc?
    int owner = item.arc.tail;
    while (owner >= 0 && history_parent[owner] != item.node)
      owner = history_parent[owner];
    if (owner < 0) throw std::logic_error("expansion lost an arc owner");
    for (size_t i = 0; i < cycle.members.size(); ++i) {
      if (cycle.members[i] == owner) {
        todo.push_back({owner, item.arc});
      } else {
        todo.push_back({cycle.members[i], cycle.member_arcs[i]});
      }
    }
  }

  InArborescence result;
  result.parent = std::move(parent);
  for (int v = 0; v < m; ++v) {
    if (v == root) continue;
    if (result.parent[v] < 0) throw std::logic_error("expansion missed a vertex");
    result.weight += w[v][result.parent[v]];
  }
  return result;
}

}  // namespace relforest
