#pragma once

#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "relforest/cascade.hpp"
#include "relforest/digraph.hpp"
#include "relforest/forest.hpp"

namespace relforest::oracle {

/// Enumeration is exponential; refuse anything larger.
inline constexpr int kMaxVertices = 8;

/// Calls fn once for every spanning entering forest of g with exactly k
/// trees. Candidates are built by choosing the emitting vertex set and one
/// finite-weight head per emitter; cyclic candidates are rejected.
void enumerate_forests(const WeightedDigraph& g, int k,
                       const std::function<void(const EnteringForest&)>& fn);

long long count_forests(const WeightedDigraph& g, int k);

/// Exact minimum total weight over spanning forests with k trees, kInf when
/// no such forest exists.
double phi_oracle(const WeightedDigraph& g, int k);

/// Exact minimum over spanning entering trees rooted at root; empty if none.
std::optional<double> oracle_min_arborescence(const WeightedDigraph& g,
                                              VertexId root);

/// Exact minimum of the weight contributed by s over spanning forests in
/// which every vertex of s emits an arc; kInf when the class is empty.
double oracle_mu_circ(const WeightedDigraph& g, std::span<const VertexId> s);

struct CheckReport {
  struct Item {
    std::string name;
    bool pass = true;
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const;
  std::string summary() const;
};

/// Replays a cascade result against the enumeration: per-k weights, the
/// relatedness of consecutive forests, halting exactness, and the step
/// bookkeeping identities.
CheckReport verify_cascade(const WeightedDigraph& g, const CascadeResult& res);

/// Seeded random digraph with integer weights, for verification suites.
WeightedDigraph random_digraph(std::mt19937_64& rng, int n, double density,
                               int weight_min, int weight_max);

}  // namespace relforest::oracle
