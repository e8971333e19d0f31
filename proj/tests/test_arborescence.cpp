#include <random>
#include <stdexcept>

#include "doctest.h"
#include "relforest/arborescence.hpp"
#include "relforest/forest.hpp"
#include "relforest/oracle.hpp"
#include "test_support.hpp"

using namespace relforest;
using testing::g3;

TEST_SUITE_BEGIN("arborescence");

TEST_CASE("a single vertex is its own tree") {
  WeightMatrix w{{kInf}};
  auto tree = min_in_arborescence(w, 0);
  REQUIRE(tree);
  CHECK(tree->parent == std::vector<VertexId>{-1});
  CHECK(tree->weight == 0);
}

TEST_CASE("the fixture rooted at 1 costs 4") {
  auto tree = min_in_arborescence(dense_weights(g3()), 1);
  REQUIRE(tree);
  CHECK(tree->weight == 4);
  CHECK(tree->parent == std::vector<VertexId>{1, -1, 0});
}

TEST_CASE("the fixture rooted at 0 costs 5") {
  auto tree = min_in_arborescence(dense_weights(g3()), 0);
  REQUIRE(tree);
  CHECK(tree->weight == 5);
  CHECK(tree->parent == std::vector<VertexId>{-1, 0, 0});
}

TEST_CASE("unreachable roots are infeasible") {
  std::vector<WeightedArc> arcs{{0, 1, 3}};
  WeightedDigraph g = WeightedDigraph::from_arcs(2, arcs);
  CHECK(!min_in_arborescence(dense_weights(g), 0));
  auto other_way = min_in_arborescence(dense_weights(g), 1);
  REQUIRE(other_way);
  CHECK(other_way->weight == 3);
}

TEST_CASE("cycles contract and reexpand") {
  // 0 and 1 prefer each other; the tree must break the two-cycle.
  std::vector<WeightedArc> arcs{
      {0, 1, 1}, {1, 0, 1}, {0, 2, 10}, {1, 2, 5}};
  WeightedDigraph g = WeightedDigraph::from_arcs(3, arcs);
  auto tree = min_in_arborescence(dense_weights(g), 2);
  REQUIRE(tree);
  CHECK(tree->weight == 6);
  CHECK(tree->parent == std::vector<VertexId>{1, 2, -1});
}

TEST_CASE("negative weights are fine") {
  std::vector<WeightedArc> arcs{
      {0, 1, -5}, {1, 0, -7}, {2, 0, -1}, {1, 2, 2}, {0, 2, 4}};
  WeightedDigraph g = WeightedDigraph::from_arcs(3, arcs);
  auto tree = min_in_arborescence(dense_weights(g), 2);
  REQUIRE(tree);
  CHECK(*oracle::oracle_min_arborescence(g, 2) == tree->weight);
}

TEST_CASE("bad roots and ragged tables are rejected") {
  WeightMatrix w{{kInf, 1.0}, {1.0, kInf}};
  CHECK_THROWS_AS(min_in_arborescence(w, 2), std::invalid_argument);
  WeightMatrix ragged{{kInf, 1.0}, {1.0}};
  CHECK_THROWS_AS(min_in_arborescence(ragged, 0), std::invalid_argument);
}

TEST_CASE("weights agree with enumeration on random graphs") {
  std::mt19937_64 rng(614);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    double density = (trial % 3 == 0) ? 0.3 : (trial % 3 == 1) ? 0.6 : 1.0;
    WeightedDigraph g = oracle::random_digraph(rng, n, density, -9, 9);
    VertexId root = static_cast<VertexId>(rng() % n);
    auto fast = min_in_arborescence(dense_weights(g), root);
    auto slow = oracle::oracle_min_arborescence(g, root);
    REQUIRE(fast.has_value() == slow.has_value());
    if (!fast) {
      ++infeasible;
      continue;
    }
    ++feasible;
    CHECK(fast->weight == *slow);
    // The structure itself must be a valid tree with the requested root.
    EnteringForest f(fast->parent);
    CHECK(!validate(f, g));
    CHECK(f.roots() == std::vector<VertexId>{root});
    CHECK(forest_weight(f, g) == fast->weight);
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 10);
}

TEST_SUITE_END();
