// pancake: command-line front end for the pancake/star embedding library.
//
//   pancake gen      --topology pancake --n 4 [--format csv|dot] [--out FILE]
//   pancake hamilton --n 4 [--k 4] [--check] [--out FILE]
//   pancake rep      --mode rule-r-encode 27351864
//   pancake embed    --guest ghc --host star --n 5 --out e.json
//   pancake verify   --in e.json [--out report.json] [--format json|csv]
//   pancake suite    --n 3..5
//
// Exit status: 0 success, 1 a bound or check failed, 2 usage or file error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "pancake/pancake.hpp"

namespace {

using namespace pancake;

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

struct Options {
  std::string topology;
  int n = 0;
  std::optional<int> k;
  std::optional<int> p;
  std::string guest;
  std::string host = "pancake";
  std::string mode;
  std::string value;
  std::string in;
  std::string out;
  std::string format;
  std::string n_range;
  bool check = false;
  bool no_routes = false;
  std::optional<int> bound;
  int cap = kDefaultDimensionCap;
  unsigned long long seed = 20240101;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_cap(int n, int cap) {
  if (n > cap) {
    throw ResourceLimitError("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap) +
                             "; pass --cap to raise it");
  }
}

/// Writes to --out when given, otherwise to stdout.
template <typename Writer>
void emit(const std::string& path, Writer&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  write(file);
  if (!file) throw std::runtime_error("error while writing '" + path + "'");
}

GraphKind resolve_topology(const Options& o) {
  if (o.topology.find('(') != std::string::npos) return parse_graph_kind(o.topology);
  const std::string& t = o.topology;
  if (t == "pancake") return pancake_graph(o.n);
  if (t == "star") return star_graph(o.n);
  if (t == "ring") return ring_graph(o.n);
  if (t == "line") return line_graph(o.n);
  if (t == "grid2d") {
    if (!o.k) throw UsageError("grid2d needs --n N1 --k N2");
    return grid2d_graph(o.n, *o.k);
  }
  if (t == "mixed_grid" || t == "mixed-grid") return mixed_grid_graph(o.n);
  if (t == "hypercube") return hypercube_graph(o.n);
  if (t == "ghc") return ghc_graph(o.n);
  throw UsageError("unknown topology '" + t +
                   "' (pancake, star, ring, line, grid2d, mixed_grid, hypercube, ghc)");
}

int cmd_gen(const Options& o) {
  const GraphKind g = resolve_topology(o);
  if (g.is_host()) {
    require_cap(g.first, o.cap);
  } else if (vertex_count(g) > factorial(o.cap)) {
    throw ResourceLimitError("graph has more than " + std::to_string(o.cap) + "! vertices; pass --cap");
  }
  const auto edges = guest_edges(g);
  std::cout << "graph: " << to_string(g) << "\n"
            << "vertices: " << vertex_count(g) << "\n"
            << "edges: " << edges.size() << "\n";
  if (!o.out.empty()) {
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format != "csv" && format != "dot") throw UsageError("gen supports --format csv or dot");
    emit(o.out, [&](std::ostream& os) {
      if (format == "dot") {
        write_edge_list_dot(os, g, edges);
      } else {
        write_edge_list_csv(os, g, edges);
      }
    });
  }
  return 0;
}

int cmd_hamilton(const Options& o) {
  require_cap(o.n, o.cap);
  const int k = o.k.value_or(o.n);
  const auto cycle = hamiltonian_cycle(identity(o.n), k);
  emit(o.out, [&](std::ostream& os) {
    for (const auto& p : cycle) os << to_string(p) << '\n';
  });
  if (o.check) {
    const auto result = check_hamiltonian(identity(o.n), k);
    std::cout << "hamiltonian check: " << (result.ok ? "pass" : "FAIL " + result.detail) << '\n';
    if (!result.ok) return kExitFailedCheck;
  }
  return 0;
}

int cmd_rep(const Options& o) {
  if (o.mode == "left-count-encode") {
    std::cout << to_string(left_count_encode(parse_permutation(o.value))) << '\n';
  } else if (o.mode == "left-count-decode") {
    std::cout << to_string(left_count_decode(parse_label(o.value))) << '\n';
  } else if (o.mode == "rule-r-encode") {
    std::cout << to_string(rule_r_encode(parse_permutation(o.value))) << '\n';
  } else if (o.mode == "rule-r-decode") {
    std::cout << to_string(rule_r_decode(parse_label(o.value))) << '\n';
  } else {
    throw UsageError("--mode must be one of left-count-encode, left-count-decode, "
                     "rule-r-encode, rule-r-decode");
  }
  return 0;
}

constexpr const char* kSupportedEmbeddings =
    "supported: ring/pancake (--k), line/pancake (--k = length), grid2d-nfact/pancake, "
    "grid2d-family/pancake (--p), mixed-grid/pancake, mixed-grid/star, hypercube/pancake "
    "(Q_(n-1) via the mixed grid), hypercube-ghc/pancake (Q_d via the GHC), ghc/pancake, ghc/star";

Embedding build_embedding(const Options& o) {
  const bool routes = !o.no_routes;
  const std::string combo = o.guest + "/" + o.host;
  auto need = [&](const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(combo + " needs " + flag);
    return *v;
  };
  if (combo == "ring/pancake") return embed_ring(o.k.value_or(o.n), o.n);
  if (combo == "line/pancake") return embed_line(need(o.k, "--k (line length)"), o.n);
  if (combo == "grid2d-nfact/pancake") return embed_grid_nfact(o.n);
  if (combo == "grid2d-family/pancake") return embed_grid_family(need(o.p, "--p"), o.n);
  if (combo == "mixed-grid/pancake") return embed_mixed_grid_pancake(o.n, routes);
  if (combo == "mixed-grid/star") return embed_mixed_grid_star(o.n, routes);
  if (combo == "hypercube/pancake") return embed_hypercube_via_mixed_grid(o.n, routes);
  if (combo == "hypercube-ghc/pancake") return embed_qd_via_ghc(o.n, routes);
  if (combo == "ghc/pancake") return embed_ghc_pancake(o.n, routes);
  if (combo == "ghc/star") return embed_ghc_star(o.n, routes);
  throw UsageError("unsupported embedding " + combo + "; " + kSupportedEmbeddings);
}

int cmd_embed(const Options& o) {
  require_cap(o.n, o.cap);
  const Embedding e = build_embedding(o);
  if (auto problem = check_embedding(e)) throw std::logic_error("constructed embedding invalid: " + *problem);
  const std::string text = embedding_to_json(e).dump(1);
  if (o.out.empty()) {
    std::cout << text << '\n';
    return 0;
  }
  emit(o.out, [&](std::ostream& os) { os << text << '\n'; });
  std::cout << "embedded " << to_string(e.guest) << " into " << to_string(e.host) << ": "
            << e.map.size() << " map entries, "
            << (e.routes ? std::to_string(e.routes->size()) + " routes" : std::string("no routes"))
            << '\n';
  for (const auto& line : e.fallback_log) std::cerr << "fallback: " << line << '\n';
  return 0;
}

int cmd_verify(const Options& o) {
  std::ifstream file(o.in);
  if (!file) throw std::runtime_error("cannot read '" + o.in + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("'") + o.in + "' is not valid JSON: " + ex.what());
  }
  const Embedding e = embedding_from_json(doc);
  require_cap(e.host.first, o.cap);

  std::vector<std::string> route_errors;
  if (auto problem = check_embedding(e)) route_errors.push_back(*problem);
  MeasureOptions options;
  options.bound = o.bound;
  const DistanceTable table = bfs_from_identity(e.host, o.cap);
  const EmbedReport report = measure(e, table, options);

  const std::string format = o.format.empty() ? "json" : o.format;
  if (format != "json" && format != "csv") throw UsageError("verify supports --format json or csv");
  if (!o.out.empty()) {
    emit(o.out, [&](std::ostream& os) {
      if (format == "csv") {
        write_histogram_csv(os, report);
      } else {
        os << report_to_json(report, route_errors).dump(1) << '\n';
      }
    });
  }
  std::cout << "guest: " << to_string(report.guest) << "\n"
            << "host: " << to_string(report.host) << "\n"
            << "dilation: " << report.dilation << "\n"
            << "congestion: "
            << (report.congestion ? std::to_string(*report.congestion) : std::string("n/a"))
            << (report.congestion_source == CongestionSource::shortest_path_routes
                    ? " (shortest-path routing)"
                    : "")
            << "\n"
            << "expansion: " << report.expansion.numerator << "/" << report.expansion.denominator << "\n"
            << "bound: " << (report.bound ? std::to_string(*report.bound) : std::string("none")) << "\n"
            << "violations: " << report.violations.size() << "\n";
  for (const auto& err : route_errors) std::cout << "invalid: " << err << "\n";
  return report.violations.empty() && route_errors.empty() ? 0 : kExitFailedCheck;
}

std::pair<int, int> parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw UsageError("--n expects N or LOW..HIGH, got '" + text + "'");
  }
}

int cmd_suite(const Options& o) {
  const auto [low, high] = parse_range(o.n_range);
  const auto rows = run_suite(low, high, o.cap, o.seed);
  bool all = true;
  std::ostringstream table;
  table << std::left << std::setw(38) << "claim" << std::setw(4) << "n" << std::setw(11) << "param"
        << std::setw(10) << "measured" << std::setw(7) << "bound"
        << "status\n";
  for (const auto& r : rows) {
    all = all && r.pass;
    table << std::left << std::setw(38) << r.claim << std::setw(4) << r.n << std::setw(11) << r.parameter
          << std::setw(10) << r.measured << std::setw(7) << r.bound << (r.pass ? "pass" : "FAIL");
    if (!r.note.empty()) table << "  " << r.note;
    table << '\n';
  }
  emit(o.out, [&](std::ostream& os) { os << table.str(); });
  std::cout << (all ? "all claims pass" : "some claims FAIL") << '\n';
  return all ? 0 : kExitFailedCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pancake and star network embeddings"};
  app.require_subcommand(1);
  Options o;

  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", o.cap, "Dimension cap for exhaustive work")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "Write the edge list of a topology");
  gen->add_option("--topology", o.topology, "Family name or textual form, e.g. grid2d(3,4)")->required();
  gen->add_option("--n", o.n, "Dimension, size, length, N1 or d");
  gen->add_option("--k", o.k, "N2 for grid2d");
  gen->add_option("--format", o.format, "csv or dot")->check(CLI::IsMember({"csv", "dot"}));
  gen->add_option("--out", o.out, "Output file");
  add_cap(gen);

  auto* hamilton = app.add_subcommand("hamilton", "List the pancake-sequence order of a k-pancake");
  hamilton->add_option("--n", o.n, "Host dimension")->required();
  hamilton->add_option("--k", o.k, "Order k (default n)");
  hamilton->add_flag("--check", o.check, "Verify the Hamiltonian cycle");
  hamilton->add_option("--out", o.out, "Output file");
  add_cap(hamilton);

  auto* rep = app.add_subcommand("rep", "Convert between permutations and labels");
  rep->add_option("--mode", o.mode, "left-count-encode, left-count-decode, rule-r-encode, rule-r-decode")
      ->required();
  rep->add_option("value", o.value, "Permutation or label text")->required();

  auto* embed = app.add_subcommand("embed", "Build an embedding document");
  embed->add_option("--guest", o.guest, kSupportedEmbeddings)->required();
  embed->add_option("--host", o.host, "pancake or star")->capture_default_str();
  embed->add_option("--n", o.n, "Host dimension")->required();
  embed->add_option("--k", o.k, "Ring order or line length");
  embed->add_option("--p", o.p, "Grid family parameter");
  embed->add_flag("--no-routes", o.no_routes, "Omit constructive routes");
  embed->add_option("--out", o.out, "Output file (default stdout)");
  add_cap(embed);

  auto* verify = app.add_subcommand("verify", "Measure an embedding document");
  verify->add_option("--in", o.in, "Embedding document")->required();
  verify->add_option("--out", o.out, "Report file");
  verify->add_option("--format", o.format, "json or csv (histogram)")->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--bound", o.bound, "Override the declared dilation bound");
  add_cap(verify);

  auto* suite = app.add_subcommand("suite", "Check every construction over a range of n");
  suite->add_option("--n", o.n_range, "N or LOW..HIGH")->required();
  suite->add_option("--out", o.out, "Write the table to a file");
  suite->add_option("--seed", o.seed, "Seed for sampled checks")->capture_default_str();
  add_cap(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*hamilton) return cmd_hamilton(o);
    if (*rep) return cmd_rep(o);
    if (*embed) return cmd_embed(o);
    if (*verify) return cmd_verify(o);
    if (*suite) return cmd_suite(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
