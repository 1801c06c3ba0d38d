#pragma once

// Exhaustive measurement: BFS distance tables, embedding metrics,
// Hamiltonicity and 4-cycle checks, and the alternating-generator identity.
//
// Distances between arbitrary vertices come from a single BFS out of the
// identity: left multiplication is an automorphism of a Cayley graph whose
// edges are right multiplications, so d(u, v) = d(I, u^-1 v).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pancake/embedding.hpp"
#include "pancake/permutation.hpp"
#include "pancake/routing.hpp"
#include "pancake/topology.hpp"

namespace pancake {

inline constexpr int kDefaultDimensionCap = 8;

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DistanceTable {
 public:
  DistanceTable(GraphKind host, std::vector<std::uint8_t> dist)
      : host_(host), dist_(std::move(dist)) {}

  const GraphKind& host() const { return host_; }
  int dimension() const { return host_.first; }
  Permutation source() const { return identity(host_.first); }

  int at(const Permutation& p) const {
    if (p.size() != host_.first) throw std::invalid_argument("distance table: dimension mismatch");
    return dist_[rank(p)];
  }
  int at_rank(std::uint64_t r) const { return dist_[r]; }
  std::size_t size() const { return dist_.size(); }

  int eccentricity() const { return *std::max_element(dist_.begin(), dist_.end()); }

 private:
  GraphKind host_;
  std::vector<std::uint8_t> dist_;
};

inline DistanceTable bfs_from_identity(const GraphKind& host, int cap = kDefaultDimensionCap) {
  if (!host.is_host()) throw std::invalid_argument("bfs_from_identity: " + to_string(host) + " is not a host");
  const int n = host.first;
  if (n > cap) {
    throw ResourceLimitError("bfs_from_identity: n=" + std::to_string(n) + " exceeds dimension cap " +
                             std::to_string(cap) + " (raise the cap explicitly)");
  }
  constexpr std::uint8_t kUnseen = std::numeric_limits<std::uint8_t>::max();
  std::vector<std::uint8_t> dist(factorial(n), kUnseen);
  std::deque<Permutation> queue{identity(n)};
  dist[rank(queue.front())] = 0;
  while (!queue.empty()) {
    const Permutation u = std::move(queue.front());
    queue.pop_front();
    const std::uint8_t du = dist[rank(u)];
    for (int i = 2; i <= n; ++i) {
      Permutation v = host_move(host.family, u, i);
      auto& dv = dist[rank(v)];
      if (dv == kUnseen) {
        dv = static_cast<std::uint8_t>(du + 1);
        queue.push_back(std::move(v));
      }
    }
  }
  return DistanceTable(host, std::move(dist));
}

inline int cayley_distance(const Permutation& u, const Permutation& v, const DistanceTable& table) {
  if (u.size() != table.dimension() || v.size() != table.dimension()) {
    throw std::invalid_argument("cayley_distance: dimension mismatch with table");
  }
  return table.at(compose(invert(u), v));
}

/// Shortest path from u to v; among equally short continuations the
/// lexicographically smallest next vertex is taken.
inline HostPath lex_shortest_path(const Permutation& u, const Permutation& v,
                                  const DistanceTable& table) {
  const Family host = table.host().family;
  HostPath path{host, {u}, {}};
  int remaining = cayley_distance(u, v, table);
  while (remaining > 0) {
    std::optional<Permutation> best;
    int best_move = 0;
    for (int i = 2; i <= u.size(); ++i) {
      Permutation w = host_move(host, path.vertices.back(), i);
      if (cayley_distance(w, v, table) == remaining - 1 && (!best || w < *best)) {
        best = std::move(w);
        best_move = i;
      }
    }
    path.vertices.push_back(std::move(*best));
    path.moves.push_back(best_move);
    --remaining;
  }
  return path;
}

// ---------------------------------------------------------------------------

enum class CongestionSource { none, constructive_routes, shortest_path_routes };

struct Expansion {
  std::uint64_t numerator = 1;
  std::uint64_t denominator = 1;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const Expansion&, const Expansion&) = default;
};

struct Violation {
  Edge edge;
  int hops = 0;
};

struct EmbedReport {
  GraphKind guest;
  GraphKind host;
  int dilation = 0;
  std::optional<std::size_t> congestion;
  CongestionSource congestion_source = CongestionSource::none;
  /// Longest constructive route, when routes exist.
  std::optional<std::size_t> route_dilation;
  Expansion expansion;
  std::map<int, std::size_t> histogram;  // hop count -> guest edges
  std::optional<int> bound;
  std::vector<Violation> violations;
  /// A guest edge realizing the dilation.
  std::optional<Edge> witness;
};

struct MeasureOptions {
  /// Overrides the embedding's own dilation bound.
  std::optional<int> bound;
  /// For embeddings without routes, derive congestion from lex_shortest_path.
  bool shortest_path_congestion = true;
};

/// Maximum number of routes crossing one undirected host edge.
inline std::size_t congestion_of(const std::vector<HostPath>& routes) {
  struct PairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
      return std::hash<std::uint64_t>{}(k.first * 0x9e3779b97f4a7c15ull ^ k.second);
    }
  };
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, std::size_t, PairHash> load;
  std::size_t worst = 0;
  for (const HostPath& r : routes) {
    for (std::size_t t = 0; t + 1 < r.vertices.size(); ++t) {
      std::uint64_t a = rank(r.vertices[t]);
      std::uint64_t b = rank(r.vertices[t + 1]);
      if (a > b) std::swap(a, b);
      worst = std::max(worst, ++load[{a, b}]);
    }
  }
  return worst;
}

inline EmbedReport measure(const Embedding& e, const DistanceTable& table,
                           const MeasureOptions& options = {}) {
  if (table.host() != e.host) {
    throw std::invalid_argument("measure: table built for " + to_string(table.host()) +
                                ", embedding host is " + to_string(e.host));
  }
  if (e.map.size() != vertex_count(e.guest)) {
    throw std::invalid_argument("measure: unmapped guest vertices (" + std::to_string(e.map.size()) +
                                " of " + std::to_string(vertex_count(e.guest)) + " mapped)");
  }
  EmbedReport report;
  report.guest = e.guest;
  report.host = e.host;
  report.bound = options.bound ? options.bound : e.dilation_bound;
  const std::uint64_t hosts = vertex_count(e.host);
  const std::uint64_t guests = vertex_count(e.guest);
  const std::uint64_t g = std::gcd(hosts, guests);
  report.expansion = {hosts / g, guests / g};

  const auto edges = guest_edges(e.guest);
  for (const Edge& edge : edges) {
    const int hops = cayley_distance(e.map[edge.u], e.map[edge.v], table);
    ++report.histogram[hops];
    if (!report.witness || hops > report.dilation) {
      report.witness = edge;
      report.dilation = hops;
    }
    if (report.bound && hops > *report.bound) report.violations.push_back({edge, hops});
  }

  if (e.routes) {
    report.congestion = congestion_of(*e.routes);
    report.congestion_source = CongestionSource::constructive_routes;
    std::size_t longest = 0;
    for (const HostPath& r : *e.routes) longest = std::max(longest, r.length());
    report.route_dilation = longest;
  } else if (options.shortest_path_congestion) {
    std::vector<HostPath> routes;
    routes.reserve(edges.size());
    for (const Edge& edge : edges) {
      routes.push_back(lex_shortest_path(e.map[edge.u], e.map[edge.v], table));
    }
    report.congestion = congestion_of(routes);
    report.congestion_source = CongestionSource::shortest_path_routes;
  }
  return report;
}

// ---------------------------------------------------------------------------

struct CheckResult {
  bool ok = true;
  std::string detail;
  explicit operator bool() const { return ok; }
};

/// Checks that (start, seq) traces a Hamiltonian cycle of the k-pancake
/// containing `start`, closed by g_k, with every (k-1)-subpancake visited in
/// one contiguous run.
inline CheckResult check_hamiltonian_sequence(const Permutation& start, int k, const GenSeq& seq) {
  const int n = start.size();
  if (k < 3 || k > n) return {false, "order k=" + std::to_string(k) + " outside [3, n]"};
  if (seq.max_index() > k) return {false, "sequence uses a generator above g_k"};
  const std::vector<Permutation> walk = apply_gen_seq(start, seq);
  const std::uint64_t expected = factorial(k);
  if (walk.size() != expected) {
    return {false, "walk has " + std::to_string(walk.size()) + " entries, expected " +
                       std::to_string(expected)};
  }
  std::unordered_set<Permutation> seen;
  for (std::size_t t = 0; t < walk.size(); ++t) {
    for (int pos = k + 1; pos <= n; ++pos) {
      if (walk[t].at(pos) != start.at(pos)) {
        return {false, "entry " + std::to_string(t) + " leaves the k-pancake of the start"};
      }
    }
    if (!seen.insert(walk[t]).second) {
      return {false, "entry " + std::to_string(t) + " (" + to_string(walk[t]) + ") repeats"};
    }
    if (t > 0 && !host_adjacent(Family::pancake, walk[t - 1], walk[t])) {
      return {false, "entries " + std::to_string(t - 1) + " and " + std::to_string(t) +
                         " are not adjacent"};
    }
  }
  if (prefix_reverse(walk.back(), k) != start) {
    return {false, "closing edge via g_" + std::to_string(k) + " missing"};
  }
  std::set<int> finished;
  for (std::size_t t = 0; t < walk.size(); ++t) {
    const int block = walk[t].at(k);
    if (finished.count(block)) {
      return {false, "subpancake with symbol " + std::to_string(block) + " at position " +
                         std::to_string(k) + " is visited in two runs"};
    }
    if (t + 1 < walk.size() && walk[t + 1].at(k) != block) finished.insert(block);
  }
  return {};
}

inline CheckResult check_hamiltonian(const Permutation& start, int k) {
  if (k < 3 || k > start.size()) return {false, "order k=" + std::to_string(k) + " outside [3, n]"};
  return check_hamiltonian_sequence(start, k, pancake_sequence(k));
}

/// True iff no two distinct length-2 generator words g_i g_k and g_j g_l
/// (i != k, j != l, i != j, k != l) coincide, i.e. P_n has no 4-cycle.
inline bool check_no_4cycle(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("check_no_4cycle: need 2 <= n <= 6");
  const Permutation id = identity(n);
  for (int i = 2; i <= n; ++i) {
    for (int k = 2; k <= n; ++k) {
      if (i == k) continue;
      const Permutation ik = prefix_reverse(prefix_reverse(id, i), k);
      for (int j = 2; j <= n; ++j) {
        for (int l = 2; l <= n; ++l) {
          if (j == l || j == i || l == k) continue;
          if (prefix_reverse(prefix_reverse(id, j), l) == ik) return false;
        }
      }
    }
  }
  return true;
}

/// Searches an explicit undirected edge list for a 4-cycle.
inline bool has_4cycle(const std::vector<Edge>& edges) {
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> adj;
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [v, nbrs] : adj) {
    // Two distinct neighbors of v sharing a second common neighbor close a 4-cycle.
    std::unordered_map<std::uint64_t, int> reach;
    for (std::uint64_t a : nbrs) {
      for (std::uint64_t w : adj[a]) {
        if (w != v && ++reach[w] >= 2) return true;
      }
    }
  }
  return false;
}

/// (g_i g_{i+1}) repeated `repetitions` times, applied to the identity.
inline bool generator_identity_holds(int n, int i, int repetitions) {
  if (i < 2 || i + 1 > n) throw std::invalid_argument("generator_identity_holds: need 2 <= i <= n-1");
  Permutation p = identity(n);
  for (int r = 0; r < repetitions; ++r) p = prefix_reverse(prefix_reverse(p, i), i + 1);
  return p.is_identity();
}

inline bool check_generator_identity(int n) {
  if (n < 3) throw std::invalid_argument("check_generator_identity: need n >= 3");
  for (int i = 2; i <= n - 1; ++i) {
    if (!generator_identity_holds(n, i, i + 1)) return false;
  }
  return true;
}

}  // namespace pancake
