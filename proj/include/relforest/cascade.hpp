#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "relforest/digraph.hpp"
#include "relforest/forest.hpp"

namespace relforest {

/// Per-root bookkeeping while the cascade runs. mu_bullet is the weight the
/// current forest spends on the root's tree; mu_circ_value and exit_forest
/// cache the tree's dissolution cost and witness arcs while the root sits in
/// the pending lists.
struct RootRecord {
  double mu_bullet = 0.0;
  std::optional<double> mu_circ_value;
  std::vector<Arc> exit_forest;
};

enum class StepStatus {
  progressed,             // one more merge done, more remain
  halted_minimum_k,       // no tree can dissolve; tree count is minimal
  finished_spanning_tree  // a single tree remains
};

enum class CascadeOutcome { spanning_tree, minimum_k };

struct StepRecord {
  int k = 0;                        // tree count after this merge
  VertexId dissolved_root = 0;      // y
  VertexId absorbing_root = 0;      // x
  double increment = 0.0;           // mu_circ(y) - mu_bullet(y)
  std::vector<VertexId> component;  // D: the part of y's tree re-rooted
  Arc exit;                         // (w, u): the arc that leaves y's tree
  std::vector<Arc> replaced;        // new arcs of the component's vertices
};

struct CascadeOptions {
  bool check_invariants = true;  // recheck bookkeeping after every merge
  bool store_snapshots = true;   // keep a full forest per k, not just deltas
};

/// Everything the cascade produced: one minimal forest per achieved tree
/// count k = n, n-1, ..., k_min, each a descendant of the previous one.
struct CascadeResult {
  int n = 0;
  CascadeOutcome outcome = CascadeOutcome::minimum_k;
  int k_min = 0;
  bool has_snapshots = true;
  std::vector<double> phi;              // phi[i] for k = n - i
  std::vector<EnteringForest> forests;  // aligned with phi when snapshots on
  std::vector<StepRecord> steps;        // steps[i] produced k = n - 1 - i

  bool achieved(int k) const { return k >= k_min && k <= n; }
  double phi_at(int k) const;
  /// Stored snapshot, or replayed from the per-step deltas.
  EnteringForest forest_at(int k) const;
};

/// The cascade state machine. Construction performs the first merge (or
/// recognizes a terminal graph); each step() turns the current minimal
/// forest into its minimal related descendant with one tree fewer.
class Cascade {
 public:
  explicit Cascade(const WeightedDigraph& g, CascadeOptions opts = {});

  StepStatus status() const { return status_; }
  StepStatus step();
  CascadeResult take_result();

  // Introspection, mainly for tests.
  const EnteringForest& forest() const { return forest_; }
  std::optional<VertexId> study_root() const { return study_; }
  std::vector<std::pair<double, VertexId>> pending_increments() const;
  const RootRecord& record(VertexId root) const { return records_[root]; }
  int merges() const { return merges_; }

 private:
  void perform_merge();
  void snapshot();
  void check_after_merge(double mu_circ_y, double mu_bullet_y,
                         double weight_d_before, const StepRecord& rec);

  WeightedDigraph g_;
  CascadeOptions opts_;
  EnteringForest forest_;
  RootIndex index_;
  std::vector<RootRecord> records_;
  std::set<std::pair<double, VertexId>> delta_;  // (increment, root) ascending
  std::optional<VertexId> study_;                // x: root under study
  int merges_ = 0;
  double phi_running_ = 0.0;
  StepStatus status_ = StepStatus::progressed;
  CascadeResult result_;
};

CascadeResult run_cascade(const WeightedDigraph& g, CascadeOptions opts = {});

}  // namespace relforest
