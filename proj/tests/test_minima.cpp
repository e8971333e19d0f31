#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "relforest/forest.hpp"
#include "relforest/minima.hpp"
#include "relforest/oracle.hpp"
#include "test_support.hpp"

using namespace relforest;
using testing::g3;

TEST_SUITE_BEGIN("minima");

TEST_CASE("a single vertex dissolves along its cheapest exit") {
  std::vector<VertexId> s{2};
  MuCircResult r = mu_circ(g3(), s);
  CHECK(r.value == 3);
  CHECK(r.h_arcs == std::vector<Arc>{{2, 0}});
  REQUIRE(r.exit_argmins.size() == 1);
  CHECK(r.exit_argmins[0] == std::pair<VertexId, VertexId>{2, 0});
}

TEST_CASE("internal cycles force the dearer exit") {
  // {0,1} would like 0 -> 1 -> 0, so vertex 1 must pay for the way out.
  std::vector<VertexId> s{0, 1};
  MuCircResult r = mu_circ(g3(), s);
  CHECK(r.value == 5);
  CHECK(r.h_arcs == std::vector<Arc>{{0, 1}, {1, 2}});
}

TEST_CASE("no exit means no dissolution") {
  std::vector<WeightedArc> arcs{{0, 1, 2}};
  WeightedDigraph g = WeightedDigraph::from_arcs(3, arcs);
  std::vector<VertexId> s{0, 1};
  MuCircResult r = mu_circ(g, s);
  CHECK(r.value == kInf);
  CHECK(r.h_arcs.empty());
}

TEST_CASE("preconditions are enforced") {
  WeightedDigraph g = g3();
  CHECK_THROWS_AS(mu_circ(g, {}), std::invalid_argument);
  std::vector<VertexId> everything{0, 1, 2};
  CHECK_THROWS_AS(mu_circ(g, everything), std::invalid_argument);
  std::vector<VertexId> repeated{0, 0};
  CHECK_THROWS_AS(mu_circ(g, repeated), std::invalid_argument);
}

TEST_CASE("values agree with enumeration on random subsets") {
  std::mt19937_64 rng(2718);
  int finite = 0, infinite = 0;
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    double density = (trial % 3 == 0) ? 0.3 : (trial % 3 == 1) ? 0.6 : 1.0;
    WeightedDigraph g = oracle::random_digraph(rng, n, density, -9, 9);
    std::vector<VertexId> s;
    for (VertexId v = 0; v < n; ++v)
      if (rng() % 2) s.push_back(v);
    if (s.empty() || static_cast<int>(s.size()) == n) continue;

    MuCircResult fast = mu_circ(g, s);
    CHECK(fast.value == oracle::oracle_mu_circ(g, s));
    if (fast.value == kInf) {
      ++infinite;
      continue;
    }
    ++finite;

    // The witness emits exactly once per member, pays exactly the value, and
    // is acyclic through the subset.
    REQUIRE(fast.h_arcs.size() == s.size());
    std::vector<VertexId> tails;
    for (const Arc& a : fast.h_arcs) {
      tails.push_back(a.tail);
      CHECK(g.has_arc(a.tail, a.head));
    }
    std::vector<VertexId> sorted_s = s;
    std::sort(sorted_s.begin(), sorted_s.end());
    CHECK(tails == sorted_s);
    CHECK(arcset_weight(g, fast.h_arcs, s) == fast.value);
    EnteringForest as_forest =
        EnteringForest::from_arcs(n, fast.h_arcs);
    CHECK(!validate(as_forest, g));
    for (const auto& [q, p] : fast.exit_argmins) {
      CHECK(!std::binary_search(sorted_s.begin(), sorted_s.end(), p));
      CHECK(std::binary_search(sorted_s.begin(), sorted_s.end(), q));
    }
  }
  CHECK(finite > 40);
  CHECK(infinite > 5);
}

TEST_SUITE_END();
