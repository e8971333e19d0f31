#include <random>
#include <sstream>

#include "doctest.h"
#include "relforest/cascade.hpp"
#include "relforest/io.hpp"
#include "relforest/oracle.hpp"
#include "test_support.hpp"

using namespace relforest;
using testing::g3;

TEST_SUITE_BEGIN("io");

TEST_CASE("edge lists with comments, labels and lone vertices") {
  std::istringstream in(
      "# cities\n"
      "a b 1.5\n"
      "b a 2\n"
      "loner\n"
      "\n"
      "a loner -4  # trailing note\n");
  ParsedGraph parsed = parse_edge_list(in);
  CHECK(parsed.labels == std::vector<std::string>{"a", "b", "loner"});
  CHECK(parsed.warnings.empty());
  WeightedDigraph g = parsed.graph();
  CHECK(g.weight(0, 1) == 1.5);
  CHECK(g.weight(1, 0) == 2);
  CHECK(g.weight(0, 2) == -4);
  CHECK(parsed.index_of("loner") == 2);
  CHECK(parsed.index_of("nope") == -1);
}

TEST_CASE("duplicate arcs warn and collapse to the minimum") {
  std::istringstream in("a b 5\na b 3\n");
  ParsedGraph parsed = parse_edge_list(in);
  REQUIRE(parsed.warnings.size() == 1);
  CHECK(parsed.warnings[0].find("duplicate") != std::string::npos);
  CHECK(parsed.graph().weight(0, 1) == 3);
}

TEST_CASE("malformed lines are parse errors") {
  std::istringstream two_tokens("a b\n");
  CHECK_THROWS_AS(parse_edge_list(two_tokens), ParseError);
  std::istringstream bad_weight("a b weighty\n");
  CHECK_THROWS_AS(parse_edge_list(bad_weight), ParseError);
  std::istringstream inf_weight("a b inf\n");
  CHECK_THROWS_AS(parse_edge_list(inf_weight), ParseError);
  std::istringstream partial_weight("a b 1.5x\n");
  CHECK_THROWS_AS(parse_edge_list(partial_weight), ParseError);
}

TEST_CASE("json graphs parse with optional labels") {
  std::istringstream in(
      R"({"n": 3, "arcs": [[0, 1, 1], [1, 0, 2], [1, 2, 4], [2, 0, 3]]})");
  ParsedGraph parsed = parse_graph_json(in);
  CHECK(parsed.labels == std::vector<std::string>{"0", "1", "2"});
  WeightedDigraph g = parsed.graph();
  CHECK(g.weight(2, 0) == 3);

  std::istringstream bad(R"({"arcs": []})");
  CHECK_THROWS_AS(parse_graph_json(bad), ParseError);
  std::istringstream range(R"({"n": 2, "arcs": [[0, 5, 1]]})");
  CHECK_THROWS_AS(parse_graph_json(range), ParseError);
}

TEST_CASE("documents round-trip the forests and weights") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    WeightedDigraph g = oracle::random_digraph(rng, n, 0.6, -9, 9);
    CascadeResult res = run_cascade(g);
    std::vector<std::string> labels;
    for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));

    for (bool deltas_only : {false, true}) {
      auto doc = cascade_document(labels, res, deltas_only);
      auto reparsed = nlohmann::ordered_json::parse(doc.dump(2));
      ParsedCascade back = parse_cascade_document(reparsed);
      REQUIRE(back.ks.size() == res.phi.size());
      for (size_t i = 0; i < back.ks.size(); ++i) {
        CHECK(back.phi[i] == res.phi_at(back.ks[i]));
        CHECK(back.forests[i] == res.forest_at(back.ks[i]));
      }
    }
  }
}

TEST_CASE("documents are byte-identical across runs") {
  WeightedDigraph g = g3();
  std::vector<std::string> labels{"A", "B", "C"};
  std::string first =
      cascade_document(labels, run_cascade(g), false).dump(2);
  std::string second =
      cascade_document(labels, run_cascade(g), false).dump(2);
  CHECK(first == second);
}

TEST_CASE("the table lists k, phi and the increments") {
  CascadeResult res = run_cascade(g3());
  CHECK(cascade_table(res) ==
        "k  phi  increment\n"
        "3    0          -\n"
        "2    1          1\n"
        "1    4          3\n");
}

TEST_CASE("dot output marks roots and carries weights") {
  CascadeResult res = run_cascade(g3());
  std::vector<std::string> labels{"A", "B", "C"};
  std::string dot = cascade_dot(g3(), labels, res);
  CHECK(dot.find("digraph forest_k3") != std::string::npos);
  CHECK(dot.find("digraph forest_k1") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("v2 -> v0 [label=\"3\"]") != std::string::npos);
}

TEST_CASE("transposing the input swaps the forest orientation only") {
  // An outgoing-forest reading of the transposed fixture must match the
  // fixture's own weights per k.
  WeightedDigraph g = g3();
  WeightedDigraph t = g.transposed();
  CascadeResult plain = run_cascade(g);
  CascadeResult swapped = run_cascade(t.transposed());
  CHECK(plain.phi == swapped.phi);
}

TEST_CASE("weights format compactly") {
  CHECK(format_weight(4.0) == "4");
  CHECK(format_weight(-9.0) == "-9");
  CHECK(format_weight(0.0) == "0");
  CHECK(format_weight(1.5) == "1.5");
}

TEST_SUITE_END();
