#include <random>
#include <stdexcept>

#include "doctest.h"
#include "relforest/cascade.hpp"
#include "relforest/oracle.hpp"
#include "test_support.hpp"

using namespace relforest;
using testing::complete_equal;
using testing::g3;

namespace {

// Second, independent count: scan every parent vector outright instead of
// going through emitter subsets.
long long count_by_parent_scan(const WeightedDigraph& g, int k) {
  const int n = g.order();
  long long count = 0;
  std::vector<VertexId> parent(n, EnteringForest::kNoParent);
  auto recurse = [&](auto&& self, int v) -> void {
    if (v == n) {
      EnteringForest f(parent);
      if (static_cast<int>(f.roots().size()) == k && !validate(f, g)) ++count;
      return;
    }
    parent[v] = EnteringForest::kNoParent;
    self(self, v + 1);
    for (VertexId p = 0; p < n; ++p) {
      if (p == v || !g.has_arc(v, p)) continue;
      parent[v] = p;
      self(self, v + 1);
    }
    parent[v] = EnteringForest::kNoParent;
  };
  recurse(recurse, 0);
  return count;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("phi on the fixture") {
  WeightedDigraph g = g3();
  CHECK(oracle::phi_oracle(g, 3) == 0);
  CHECK(oracle::phi_oracle(g, 2) == 1);
  CHECK(oracle::phi_oracle(g, 1) == 4);
}

TEST_CASE("phi at k = n is the empty forest") {
  std::mt19937_64 rng(17);
  for (int n = 1; n <= 5; ++n) {
    WeightedDigraph g = oracle::random_digraph(rng, n, 0.5, -9, 9);
    CHECK(oracle::phi_oracle(g, n) == 0);
    CHECK(oracle::count_forests(g, n) == 1);
  }
}

TEST_CASE("minimum arborescences on the fixture") {
  WeightedDigraph g = g3();
  CHECK(*oracle::oracle_min_arborescence(g, 1) == 4);
  CHECK(*oracle::oracle_min_arborescence(g, 0) == 5);
  WeightedDigraph lonely = WeightedDigraph::from_arcs(1, {});
  CHECK(*oracle::oracle_min_arborescence(lonely, 0) == 0);
}

TEST_CASE("dissolution minima on the fixture") {
  WeightedDigraph g = g3();
  std::vector<VertexId> two{2};
  std::vector<VertexId> pair{0, 1};
  CHECK(oracle::oracle_mu_circ(g, two) == 3);
  CHECK(oracle::oracle_mu_circ(g, pair) == 5);

  // An isolated pocket with only internal cycles cannot dissolve.
  std::vector<WeightedArc> arcs{{0, 1, 1}, {1, 0, 1}, {2, 0, 1}};
  WeightedDigraph pocket = WeightedDigraph::from_arcs(3, arcs);
  CHECK(oracle::oracle_mu_circ(pocket, pair) == kInf);
}

TEST_CASE("the complete three-vertex graph has six one-arc forests") {
  CHECK(oracle::count_forests(complete_equal(3, 1.0), 2) == 6);
}

TEST_CASE("both counting routines agree up to four vertices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    WeightedDigraph g = oracle::random_digraph(rng, n, 0.6, -9, 9);
    for (int k = 1; k <= n; ++k)
      CHECK(oracle::count_forests(g, k) == count_by_parent_scan(g, k));
  }
}

TEST_CASE("the cap and the argument ranges are enforced") {
  WeightedDigraph big(9);
  CHECK_THROWS_AS(oracle::phi_oracle(big, 1), std::invalid_argument);
  WeightedDigraph g = g3();
  CHECK_THROWS_AS(oracle::phi_oracle(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::phi_oracle(g, 4), std::invalid_argument);
  CHECK_THROWS_AS(oracle::oracle_min_arborescence(g, 5),
                  std::invalid_argument);
}

TEST_CASE("verify_cascade accepts the fixture run") {
  WeightedDigraph g = g3();
  oracle::CheckReport report = oracle::verify_cascade(g, run_cascade(g));
  CHECK(report.ok());
  CHECK(report.items.size() >= 5);
}

TEST_CASE("verify_cascade accepts a halted run") {
  // Two mutually unreachable pockets: no spanning tree exists.
  std::vector<WeightedArc> arcs{{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}};
  WeightedDigraph g = WeightedDigraph::from_arcs(4, arcs);
  CascadeResult res = run_cascade(g);
  CHECK(res.k_min == 2);
  CHECK(oracle::verify_cascade(g, res).ok());
}

TEST_CASE("verify_cascade flags a corrupted forest") {
  WeightedDigraph g = g3();
  CascadeResult res = run_cascade(g);
  // Swap the spanning tree for the dearer one rooted at 0.
  res.forests[2] = EnteringForest({-1, 0, 0});
  res.phi[2] = 5;
  oracle::CheckReport report = oracle::verify_cascade(g, res);
  CHECK(!report.ok());
  bool weight_failed = false;
  for (const auto& item : report.items)
    if (!item.pass && item.name.find("weights") != std::string::npos)
      weight_failed = true;
  CHECK(weight_failed);
}

TEST_CASE("verify_cascade flags a wrong witness") {
  WeightedDigraph g = g3();
  CascadeResult res = run_cascade(g);
  res.steps[1].dissolved_root = 0;  // the traced root was 2
  CHECK(!oracle::verify_cascade(g, res).ok());
}

TEST_SUITE_END();
