// relforest: minimum-weight spanning entering forests, one per tree count,
// each forest a related descendant of the previous one.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relforest/cascade.hpp"
#include "relforest/io.hpp"
#include "relforest/arborescence.hpp"
#include "relforest/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

struct InputOptions {
  std::string path;
  std::string format = "edges";
};

relforest::ParsedGraph load_graph(const InputOptions& in) {
  std::ifstream file;
  std::istream* stream = &std::cin;
  if (in.path != "-") {
    file.open(in.path);
    if (!file) throw relforest::ParseError("cannot open " + in.path);
    stream = &file;
  }
  relforest::ParsedGraph parsed = in.format == "json"
                                      ? relforest::parse_graph_json(*stream)
                                      : relforest::parse_edge_list(*stream);
  for (const std::string& w : parsed.warnings)
    std::cerr << "warning: " << w << "\n";
  return parsed;
}

void add_input_options(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("input", in.path, "edge list file, or - for stdin")
      ->required();
  cmd.add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"edges", "json"}))
      ->capture_default_str();
}

int cmd_cascade(const InputOptions& in, const std::string& emit,
                const std::string& output, bool table, bool deltas_only,
                bool outgoing) {
  relforest::ParsedGraph parsed = load_graph(in);
  if (parsed.order() == 0) {
    // Nothing to span; emit an empty document so pipelines stay happy.
    std::cout << "{\"format\":\"relforest-cascade/1\",\"n\":0}" << std::endl;
    return kExitOk;
  }
  relforest::WeightedDigraph g = parsed.graph();
  if (outgoing) g = g.transposed();

  relforest::CascadeOptions opts;
  opts.store_snapshots = !deltas_only;
  relforest::CascadeResult result = relforest::run_cascade(g, opts);

  if (table) std::cout << relforest::cascade_table(result);

  std::string document =
      emit == "dot"
          ? relforest::cascade_dot(g, parsed.labels, result)
          : relforest::cascade_document(parsed.labels, result, deltas_only)
                    .dump(2) +
                "\n";
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw relforest::ParseError("cannot write " + output);
    out << document;
  } else if (!table) {
    std::cout << document;
  }
  return kExitOk;
}

int cmd_arborescence(const InputOptions& in, const std::string& root_label) {
  relforest::ParsedGraph parsed = load_graph(in);
  int root = parsed.index_of(root_label);
  if (root < 0) {
    throw relforest::ParseError("unknown root label '" + root_label + "'");
  }
  relforest::WeightedDigraph g = parsed.graph();
  auto tree = relforest::min_in_arborescence(relforest::dense_weights(g), root);
  if (!tree) {
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }
  std::cout << relforest::arborescence_listing(parsed.labels, g, tree->parent);
  return kExitOk;
}

int cmd_verify(int max_n, int samples, const std::string& densities_csv,
               const std::string& weight_range, unsigned long long seed) {
  if (max_n > relforest::oracle::kMaxVertices) {
    throw relforest::ParseError("--max-n must stay within the oracle cap of " +
                                std::to_string(relforest::oracle::kMaxVertices));
  }
  std::vector<double> densities;
  std::stringstream list(densities_csv);
  for (std::string item; std::getline(list, item, ',');) {
    try {
      densities.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw relforest::ParseError("bad density '" + item + "'");
    }
  }
  if (densities.empty()) throw relforest::ParseError("no densities given");
  auto colon = weight_range.find(':');
  if (colon == std::string::npos) {
    throw relforest::ParseError("--weight-range wants LO:HI");
  }
  int weight_min = 0, weight_max = 0;
  try {
    weight_min = std::stoi(weight_range.substr(0, colon));
    weight_max = std::stoi(weight_range.substr(colon + 1));
  } catch (const std::exception&) {
    throw relforest::ParseError("bad --weight-range '" + weight_range + "'");
  }
  if (weight_min > weight_max) {
    throw relforest::ParseError("--weight-range is empty");
  }

  if (samples == 0) {
    std::cout << "warning: zero samples requested; vacuous pass\n";
    return kExitOk;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, max_n);
  int failures = 0;
  for (int i = 0; i < samples; ++i) {
    int n = size(rng);
    double density = densities[i % densities.size()];
    relforest::WeightedDigraph g = relforest::oracle::random_digraph(
        rng, n, density, weight_min, weight_max);
    try {
      relforest::CascadeResult result = relforest::run_cascade(g);
      relforest::oracle::CheckReport report =
          relforest::oracle::verify_cascade(g, result);
      if (!report.ok()) {
        ++failures;
        std::cout << "sample " << i << " (n=" << n << ", density=" << density
                  << "): FAILED\n"
                  << report.summary();
      }
    } catch (const std::logic_error& e) {
      ++failures;
      std::cout << "sample " << i << " (n=" << n << ", density=" << density
                << "): internal check fired: " << e.what() << "\n";
    }
  }
  std::cout << "verify: " << (samples - failures) << "/" << samples
            << " samples ok (seed " << seed << ")\n";
  return failures == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "cascade of minimum-weight related spanning entering forests"};
  app.require_subcommand(1);

  InputOptions cascade_in;
  std::string emit = "json";
  std::string output;
  bool table = false;
  bool deltas_only = false;
  bool outgoing = false;
  CLI::App* cascade = app.add_subcommand(
      "cascade", "build the minimal forest for every achievable tree count");
  add_input_options(*cascade, cascade_in);
  cascade->add_option("--emit", emit, "document format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  cascade->add_option("-o,--output", output, "write the document to a file");
  cascade->add_flag("--table", table, "print the k/phi/increment table");
  cascade->add_flag("--deltas-only", deltas_only,
                    "store per-step arc changes instead of full forests");
  cascade->add_flag("--outgoing", outgoing,
                    "treat the input as outgoing forests (transpose weights)");

  InputOptions arb_in;
  std::string root_label;
  CLI::App* arb = app.add_subcommand(
      "arborescence", "minimum spanning entering tree with a given root");
  add_input_options(*arb, arb_in);
  arb->add_option("--root", root_label, "root vertex label")->required();

  int max_n = 6;
  int samples = 100;
  std::string densities = "0.3,0.6,1.0";
  std::string weight_range = "-9:9";
  unsigned long long seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "check the cascade against brute-force enumeration");
  verify->add_option("--max-n", max_n, "largest graph order")
      ->capture_default_str();
  verify->add_option("--samples", samples, "number of random graphs")
      ->capture_default_str();
  verify->add_option("--densities", densities, "comma-separated arc densities")
      ->capture_default_str();
  verify->add_option("--weight-range", weight_range, "integer weights LO:HI")
      ->capture_default_str();
  verify->add_option("--seed", seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (cascade->parsed()) {
      return cmd_cascade(cascade_in, emit, output, table, deltas_only,
                         outgoing);
    }
    if (arb->parsed()) return cmd_arborescence(arb_in, root_label);
    return cmd_verify(max_n, samples, densities, weight_range, seed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const relforest::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
