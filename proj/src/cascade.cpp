#include "relforest/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "relforest/minima.hpp"

namespace relforest {
namespace {

// Integer weights compare exactly; the tolerance only absorbs associativity
// drift when the input carries general reals.
bool nearly_equal(double a, double b) {
  if (a == b) return true;
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= 1e-9 * scale;
}

}  // namespace

double CascadeResult::phi_at(int k) const {
  if (!achieved(k)) {
    throw std::out_of_range("no forest with " + std::to_string(k) + " trees");
  }
  return phi[n - k];
}

EnteringForest CascadeResult::forest_at(int k) const {
  if (!achieved(k)) {
    throw std::out_of_range("no forest with " + std::to_string(k) + " trees");
  }
  if (has_snapshots) return forests[n - k];
  std::vector<VertexId> parent(n, EnteringForest::kNoParent);
  for (int i = 0; i < n - k; ++i)
    for (const Arc& a : steps[i].replaced) parent[a.tail] = a.head;
  return EnteringForest(std::move(parent));
}

Cascade::Cascade(const WeightedDigraph& g, CascadeOptions opts)
    : g_(g), opts_(opts), forest_(g.order()) {
  const int n = g.order();
  index_.root_of.resize(n);
  std::iota(index_.root_of.begin(), index_.root_of.end(), 0);
  records_.assign(n, RootRecord{});
  result_.n = n;
  result_.has_snapshots = opts_.store_snapshots;
  snapshot();  // the empty forest: n trees, weight 0

  // Every tree is a single vertex, so its dissolution cost is simply the
  // cheapest arc leaving it.
  for (VertexId q = 0; q < n; ++q) {
    if (auto arc = min_out_arc(g, q)) {
      records_[q].mu_circ_value = arc->weight;
      records_[q].exit_forest = {{q, arc->head}};
      delta_.insert({arc->weight, q});
    }
  }
  if (delta_.empty()) {
    // No arcs at all: the empty forest is already as coarse as it gets.
    status_ = merges_ == n - 1 ? StepStatus::finished_spanning_tree
                               : StepStatus::halted_minimum_k;
    return;
  }
  perform_merge();
}

StepStatus Cascade::step() {
  if (status_ != StepStatus::progressed) {
    throw std::logic_error("step() called on a terminal cascade");
  }
  const VertexId x = *study_;

  // The only stale entry is the tree under study; everything else kept its
  // vertex set through the last merge.
  std::vector<VertexId> x_tree;
  for (VertexId v = 0; v < g_.order(); ++v)
    if (index_.root_of[v] == x) x_tree.push_back(v);
  MuCircResult mu = mu_circ(g_, x_tree);

  if (mu.value < kInf) {
    records_[x].mu_circ_value = mu.value;
    records_[x].exit_forest = std::move(mu.h_arcs);
    delta_.insert({mu.value - records_[x].mu_bullet, x});
  } else if (delta_.empty()) {
    status_ = StepStatus::halted_minimum_k;
    return status_;
  }
  perform_merge();
  return status_;
}

void Cascade::perform_merge() {
  const int n = g_.order();
  const auto [increment, y] = *delta_.begin();
  RootRecord& y_record = records_[y];
  const double mu_circ_y = *y_record.mu_circ_value;
  const double mu_bullet_y = y_record.mu_bullet;
  const std::vector<Arc>& h = y_record.exit_forest;

  std::vector<VertexId> y_tree;
  y_tree.reserve(h.size());
  for (const Arc& a : h) y_tree.push_back(a.tail);

  ExitSearchResult found = component_with_exit(h, y, y_tree, index_);
  const VertexId x = found.absorbing_root;

  double weight_d_before = 0.0;
  for (VertexId v : found.component)
    if (!forest_.is_root(v)) weight_d_before += g_.weight(v, forest_.parent(v));

  StepRecord rec;
  rec.k = n - merges_ - 1;
  rec.dissolved_root = y;
  rec.absorbing_root = x;
  rec.increment = increment;
  rec.component = found.component;
  rec.exit = found.exit;
  for (const Arc& a : h) {
    if (std::binary_search(rec.component.begin(), rec.component.end(), a.tail))
      rec.replaced.push_back(a);
  }

  forest_ = EnteringForest::from_arcs(
      n, replace_arcs(forest_, h, found.component));
  for (VertexId v : y_tree) index_.root_of[v] = x;

  delta_.erase(delta_.begin());
  RootRecord& x_record = records_[x];
  if (x_record.mu_circ_value) {
    delta_.erase({*x_record.mu_circ_value - x_record.mu_bullet, x});
    x_record.mu_circ_value.reset();
    x_record.exit_forest.clear();
  }
  x_record.mu_bullet += mu_circ_y;
  y_record.mu_circ_value.reset();
  y_record.exit_forest.clear();

  phi_running_ += increment;
  ++merges_;
  study_ = x;
  result_.steps.push_back(std::move(rec));
  snapshot();
  if (opts_.check_invariants) {
    check_after_merge(mu_circ_y, mu_bullet_y, weight_d_before,
                      result_.steps.back());
  }
  status_ = merges_ == n - 1 ? StepStatus::finished_spanning_tree
                             : StepStatus::progressed;
}

void Cascade::snapshot() {
  result_.phi.push_back(phi_running_);
  if (opts_.store_snapshots) result_.forests.push_back(forest_);
}

void Cascade::check_after_merge(double mu_circ_y, double mu_bullet_y,
                                double weight_d_before,
                                const StepRecord& rec) {
  if (auto bad = validate(forest_, g_)) {
    throw std::logic_error("cascade produced an invalid forest: " + *bad);
  }

  // The dissolution cost must decompose into the dissolved tree's old weight
  // minus what the re-rooted component used to spend plus what it spends now.
  double weight_d_after = 0.0;
  for (const Arc& a : rec.replaced)
    weight_d_after += g_.weight(a.tail, a.head);
  double expected = mu_bullet_y - weight_d_before + weight_d_after;
  if (!nearly_equal(mu_circ_y, expected)) {
    throw std::logic_error(
        "dissolution-cost identity violated at k=" + std::to_string(rec.k));
  }

  // Maintained tree weight of the absorber vs a fresh recount.
  double recounted = 0.0;
  for (VertexId v = 0; v < g_.order(); ++v)
    if (index_.root_of[v] == rec.absorbing_root && !forest_.is_root(v))
      recounted += g_.weight(v, forest_.parent(v));
  if (!nearly_equal(recounted, records_[rec.absorbing_root].mu_bullet)) {
    throw std::logic_error(
        "tree-weight bookkeeping drifted at k=" + std::to_string(rec.k));
  }

  if (!nearly_equal(forest_weight(forest_, g_), phi_running_)) {
    throw std::logic_error(
        "forest weight disagrees with accumulated increments at k=" +
        std::to_string(rec.k));
  }
}

std::vector<std::pair<double, VertexId>> Cascade::pending_increments() const {
  return {delta_.begin(), delta_.end()};
}

CascadeResult Cascade::take_result() {
  if (status_ == StepStatus::progressed) {
    throw std::logic_error("take_result() before the cascade finished");
  }
  result_.outcome = status_ == StepStatus::finished_spanning_tree
                        ? CascadeOutcome::spanning_tree
                        : CascadeOutcome::minimum_k;
  result_.k_min = g_.order() - merges_;
  return std::move(result_);
}

CascadeResult run_cascade(const WeightedDigraph& g, CascadeOptions opts) {
  Cascade cascade(g, opts);
  while (cascade.status() == StepStatus::progressed) cascade.step();
  return cascade.take_result();
}

}  // namespace relforest
