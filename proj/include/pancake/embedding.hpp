#pragma once

// Guest -> host embeddings into pancake and star networks.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "pancake/permutation.hpp"
#include "pancake/representation.hpp"
#include "pancake/routing.hpp"
#include "pancake/topology.hpp"

namespace pancake {

struct Embedding {
  GraphKind guest;
  GraphKind host;
  /// Image of every guest vertex, indexed by guest enumeration order.
  std::vector<Permutation> map;
  /// One host path per guest edge, aligned with guest_edges(guest).
  std::optional<std::vector<HostPath>> routes;
  /// Dilation constant claimed for this construction, when there is one.
  std::optional<int> dilation_bound;
  /// Guest edges whose transcribed chain was replaced by a BFS path.
  std::vector<std::string> fallback_log;
};

/// First violated invariant of `e`, or nullopt when it is well formed.
inline std::optional<std::string> check_embedding(const Embedding& e) {
  if (!e.host.is_host()) return "host " + to_string(e.host) + " is not a pancake or star";
  if (e.guest.is_host()) return "guest " + to_string(e.guest) + " must be a coordinate graph";
  if (e.map.size() != vertex_count(e.guest)) {
    return "map has " + std::to_string(e.map.size()) + " entries for " +
           std::to_string(vertex_count(e.guest)) + " guest vertices";
  }
  std::unordered_set<Permutation> images;
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    if (e.map[v].size() != e.host.first) {
      return "image of " + vertex_text(e.guest, v) + " is not a vertex of " + to_string(e.host);
    }
    if (!images.insert(e.map[v]).second) {
      return "map is not injective: " + to_string(e.map[v]) + " is hit twice";
    }
  }
  if (e.routes) {
    const auto edges = guest_edges(e.guest);
    if (e.routes->size() != edges.size()) return "route count does not match guest edge count";
    for (std::size_t t = 0; t < edges.size(); ++t) {
      const HostPath& r = (*e.routes)[t];
      const std::string label =
          vertex_text(e.guest, edges[t].u) + "-" + vertex_text(e.guest, edges[t].v);
      if (auto c = validate_path(r, e.host); !c) return "route " + label + ": " + c.message;
      if (r.front() != e.map[edges[t].u] || r.back() != e.map[edges[t].v]) {
        return "route " + label + " does not join the images of its endpoints";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Pancake sequences and Hamiltonian cycles.

/// G_2 = [2]; G_k = G_{k-1}, k, G_{k-1}, k, ..., G_{k-1} with k copies of
/// G_{k-1}. |G_k| = k! - 1.
inline GenSeq pancake_sequence(int k) {
  if (k < 2) throw std::invalid_argument("pancake_sequence: need k >= 2");
  if (k > kMaxDimension) throw std::invalid_argument("pancake_sequence: k above 20");
  GenSeq seq{2};
  for (int order = 3; order <= k; ++order) {
    GenSeq next;
    for (int copy = 0; copy < order; ++copy) {
      if (copy > 0) next.push_back(order);
      next.append(seq);
    }
    seq = std::move(next);
  }
  return seq;
}

inline std::vector<Permutation> hamiltonian_cycle(const Permutation& start, int k) {
  if (k < 3 || k > start.size()) {
    throw std::invalid_argument("hamiltonian_cycle: need 3 <= k <= n, got k=" +
                                std::to_string(k));
  }
  return apply_gen_seq(start, pancake_sequence(k));
}

// ---------------------------------------------------------------------------

namespace detail {

template <typename Router>
std::vector<HostPath> route_all(const Embedding& e, Router&& router, std::vector<std::string>& log) {
  std::vector<HostPath> routes;
  const auto edges = guest_edges(e.guest);
  routes.reserve(edges.size());
  FallbackLog fallback;
  for (const Edge& edge : edges) {
    routes.push_back(router(e.map[edge.u], e.map[edge.v], &fallback));
  }
  log = std::move(fallback.entries);
  return routes;
}

inline void require_dimension(int n, int low, const char* what) {
  if (n < low || n > kMaxDimension) {
    throw std::invalid_argument(std::string(what) + ": host dimension " + std::to_string(n) +
                                " outside [" + std::to_string(low) + ", 20]");
  }
}

}  // namespace detail

/// Ring of size k! onto the Hamiltonian cycle of the k-pancake through the
/// identity of P_n. Dilation 1, congestion 1.
inline Embedding embed_ring(int k, int n) {
  detail::require_dimension(n, 3, "embed_ring");
  if (k < 3 || k > n) throw std::invalid_argument("embed_ring: need 3 <= k <= n");
  Embedding e{ring_graph(static_cast<int>(factorial(k))), pancake_graph(n),
              hamiltonian_cycle(identity(n), k), std::nullopt, 1, {}};
  std::vector<HostPath> routes;
  for (const Edge& edge : guest_edges(e.guest)) {
    const auto& u = e.map[edge.u];
    const auto& v = e.map[edge.v];
    routes.push_back(HostPath{Family::pancake, {u, v}, {host_generator_between(Family::pancake, u, v)}});
  }
  e.routes = std::move(routes);
  return e;
}

/// Line of length `len` along the pancake-sequence order of P_n.
inline Embedding embed_line(int len, int n) {
  detail::require_dimension(n, 2, "embed_line");
  if (len < 1 || static_cast<std::uint64_t>(len) > factorial(n)) {
    throw std::invalid_argument("embed_line: need 1 <= length <= n!");
  }
  std::vector<Permutation> order =
      n >= 3 ? hamiltonian_cycle(identity(n), n) : apply_gen_seq(identity(n), pancake_sequence(2));
  order.resize(static_cast<std::size_t>(len));
  Embedding e{line_graph(len), pancake_graph(n), std::move(order), std::nullopt, 1, {}};
  std::vector<HostPath> routes;
  for (const Edge& edge : guest_edges(e.guest)) {
    const auto& u = e.map[edge.u];
    const auto& v = e.map[edge.v];
    routes.push_back(HostPath{Family::pancake, {u, v}, {host_generator_between(Family::pancake, u, v)}});
  }
  e.routes = std::move(routes);
  return e;
}

/// Row shifts of the grid family, top to bottom. Row 0 carries no shift;
/// then sigma(n, 1..n-1), sigma(n-1, 1..n-2), ..., sigma(p+1, 1..p).
inline std::vector<CyclicShift> grid_family_row_shifts(int p, int n) {
  std::vector<CyclicShift> rows{CyclicShift{n, 0}};
  for (int k = n; k >= p + 1; --k) {
    for (int i = 1; i <= k - 1; ++i) rows.push_back({k, i});
  }
  return rows;
}

namespace detail {
inline Embedding shifted_rows(int p, int n, std::optional<int> bound) {
  const std::vector<Permutation> row0 = apply_gen_seq(identity(n), pancake_sequence(p));
  const auto shifts = grid_family_row_shifts(p, n);
  Embedding e{grid2d_graph(static_cast<int>(shifts.size()), static_cast<int>(row0.size())),
              pancake_graph(n), {}, std::nullopt, bound, {}};
  e.map.reserve(shifts.size() * row0.size());
  for (const CyclicShift& s : shifts) {
    const Permutation shift = cyclic_shift_word(s, n);
    for (const Permutation& pi : row0) e.map.push_back(compose(pi, shift));
  }
  return e;
}
}  // namespace detail

/// n x (n-1)! grid: node (i, j) -> pi_j * sigma(n, i), where pi_j walks the
/// first (n-1)-subpancake in pancake-sequence order. No constructive routes.
inline Embedding embed_grid_nfact(int n) {
  detail::require_dimension(n, 3, "embed_grid_nfact");
  return detail::shifted_rows(n - 1, n, 7);
}

/// (1 + sum_{k=p+1..n} (k-1)) x p! grid built from the first p-pancake.
inline Embedding embed_grid_family(int p, int n) {
  detail::require_dimension(n, 3, "embed_grid_family");
  if (p < 2 || p > n - 1) throw std::invalid_argument("embed_grid_family: need 2 <= p <= n-1");
  return detail::shifted_rows(p, n, 4);
}

namespace detail {
template <typename Decode>
std::vector<Permutation> decode_all(const GraphKind& guest, Decode&& decode) {
  std::vector<Permutation> out;
  for (const GridCoord& c : guest_vertices(guest)) out.push_back(decode(label_of(c)));
  return out;
}
}  // namespace detail

/// 2 x 3 x ... x n grid via the left-count coding; dilation <= 6.
inline Embedding embed_mixed_grid_pancake(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_mixed_grid_pancake");
  Embedding e{mixed_grid_graph(n), pancake_graph(n),
              detail::decode_all(mixed_grid_graph(n), left_count_decode), std::nullopt, 6, {}};
  if (with_routes) e.routes = detail::route_all(e, route_mixed_grid_pancake, e.fallback_log);
  return e;
}

/// Same vertex map into the n-star; dilation <= 3.
inline Embedding embed_mixed_grid_star(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_mixed_grid_star");
  Embedding e{mixed_grid_graph(n), star_graph(n),
              detail::decode_all(mixed_grid_graph(n), left_count_decode), std::nullopt, 3, {}};
  if (with_routes) e.routes = detail::route_all(e, route_mixed_grid_star, e.fallback_log);
  return e;
}

/// Q_{n-1}: bit t (0-based, most significant first) becomes digit a_{t+2}.
inline Embedding embed_hypercube_via_mixed_grid(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_hypercube_via_mixed_grid");
  Embedding e{hypercube_graph(n - 1), pancake_graph(n),
              detail::decode_all(hypercube_graph(n - 1), left_count_decode), std::nullopt, 6, {}};
  if (with_routes) e.routes = detail::route_all(e, route_mixed_grid_pancake, e.fallback_log);
  return e;
}

/// Generalized hypercube via the rule-R coding; dilation <= 8.
inline Embedding embed_ghc_pancake(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_ghc_pancake");
  Embedding e{ghc_graph(n), pancake_graph(n), detail::decode_all(ghc_graph(n), rule_r_decode),
              std::nullopt, 8, {}};
  if (with_routes) e.routes = detail::route_all(e, route_ghc_pancake, e.fallback_log);
  return e;
}

/// Generalized hypercube into the n-star; dilation <= 4.
inline Embedding embed_ghc_star(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_ghc_star");
  Embedding e{ghc_graph(n), star_graph(n), detail::decode_all(ghc_graph(n), rule_r_decode),
              std::nullopt, 4, {}};
  if (with_routes) e.routes = detail::route_all(e, route_ghc_star, e.fallback_log);
  return e;
}

inline int floor_log2(int v) {
  int out = 0;
  while (v > 1) {
    v >>= 1;
    ++out;
  }
  return out;
}

/// d = sum_{i=2..n} floor(lg i).
inline int qd_dimension(int n) {
  int d = 0;
  for (int i = 2; i <= n; ++i) d += floor_log2(i);
  return d;
}

/// Hypercube bits -> GHC label: coordinate i takes floor(lg i) bits, groups in
/// ascending i, most significant bit first within a group.
inline GhcLabel qd_bits_to_label(const std::vector<int>& bits, int n) {
  if (static_cast<int>(bits.size()) != qd_dimension(n)) {
    throw std::invalid_argument("qd_bits_to_label: expected " + std::to_string(qd_dimension(n)) +
                                " bits");
  }
  std::vector<int> digits;
  std::size_t at = 0;
  for (int i = 2; i <= n; ++i) {
    int v = 0;
    for (int b = 0; b < floor_log2(i); ++b) v = 2 * v + bits[at++];
    digits.push_back(v);
  }
  return GhcLabel(std::move(digits));
}

/// Q_d into P_n through the GHC; dilation <= 8.
inline Embedding embed_qd_via_ghc(int n, bool with_routes = true) {
  detail::require_dimension(n, 3, "embed_qd_via_ghc");
  const GraphKind guest = hypercube_graph(qd_dimension(n));
  std::vector<Permutation> map;
  for (const GridCoord& c : guest_vertices(guest)) {
    map.push_back(rule_r_decode(qd_bits_to_label(c.coords, n)));
  }
  Embedding e{guest, pancake_graph(n), std::move(map), std::nullopt, 8, {}};
  if (with_routes) e.routes = detail::route_all(e, route_ghc_pancake, e.fallback_log);
  return e;
}

}  // namespace pancake
