#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relforest/digraph.hpp"

namespace relforest {

/// Spanning entering forest stored as a parent map: parent(v) is the head of
/// the unique arc leaving v, or kNoParent when v is a root. Acyclicity is not
/// enforced by the type; run validate() after assembling one from raw arcs.
class EnteringForest {
 public:
  static constexpr VertexId kNoParent = -1;

  explicit EnteringForest(int n);  // all vertices roots
  explicit EnteringForest(std::vector<VertexId> parent);
  static EnteringForest from_arcs(int n, std::span<const Arc> arcs);

  int order() const { return static_cast<int>(parent_.size()); }
  VertexId parent(VertexId v) const { return parent_[v]; }
  bool is_root(VertexId v) const { return parent_[v] == kNoParent; }
  int arc_count() const;
  std::vector<VertexId> roots() const;
  std::vector<Arc> arcs() const;  // ordered by tail

  friend bool operator==(const EnteringForest&, const EnteringForest&) =
      default;

 private:
  std::vector<VertexId> parent_;
};

/// Empty when f is a well-formed forest over g; otherwise describes the first
/// violation found (an arc missing from g, or a cycle).
std::optional<std::string> validate(const EnteringForest& f,
                                    const WeightedDigraph& g);

/// Vertices of the tree rooted at r, ascending. r must be a root.
std::vector<VertexId> tree_vertices(const EnteringForest& f, VertexId r);

/// Total weight of f's arcs in g.
double forest_weight(const EnteringForest& f, const WeightedDigraph& g);

/// Arcs of f with tails outside s plus arcs of donor with tails inside s.
/// The result is raw: callers splice donors known to keep it a forest and
/// validate downstream.
std::vector<Arc> replace_arcs(const EnteringForest& f,
                              std::span<const Arc> donor,
                              std::span<const VertexId> s);

/// root_of[v] = root of the tree containing v.
struct RootIndex {
  std::vector<VertexId> root_of;
  static RootIndex of(const EnteringForest& f);
};

struct ExitSearchResult {
  std::vector<VertexId> component;  // D, ascending
  Arc exit;                         // unique arc from D whose head leaves Y
  VertexId absorbing_root = 0;      // root of the tree containing exit.head
};

/// Undirected search through h_arcs starting at y. h_arcs must hold exactly
/// one arc from every vertex of y_tree and no others. Returns the connected
/// component (within y_tree) containing y together with its unique exit arc;
/// the exit head and its tree are never entered. Runs in O(|y_tree|).
ExitSearchResult component_with_exit(std::span<const Arc> h_arcs, VertexId y,
                                     std::span<const VertexId> y_tree,
                                     const RootIndex& index);

/// When child arises from parent by dissolving exactly one of parent's trees
/// into a neighbouring tree through a single exit arc (all other trees kept
/// arc-for-arc), returns the dissolved root. Both forests must be validated.
std::optional<VertexId> is_descendant(const EnteringForest& parent,
                                      const EnteringForest& child);

}  // namespace relforest
