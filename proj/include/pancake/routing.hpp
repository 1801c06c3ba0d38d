#pragma once

// Constructive host paths.
//
// Every constructor replays a fixed chain of generator moves. Moves that
// would reverse a prefix of length <= 1 (or swap position 1 with itself)
// are elided, so a chain of nominal length L yields a path of length <= L.
// Each result is validated; when a chain does not reach its target the
// constructor substitutes a BFS shortest path and records the event in the
// optional FallbackLog.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pancake/permutation.hpp"
#include "pancake/representation.hpp"
#include "pancake/topology.hpp"

namespace pancake {

struct HostPath {
  Family host = Family::pancake;
  std::vector<Permutation> vertices;
  std::vector<int> moves;  // prefix-reversal index (pancake) or swap position (star)

  std::size_t length() const { return moves.size(); }
  const Permutation& front() const { return vertices.front(); }
  const Permutation& back() const { return vertices.back(); }
};

inline HostPath reversed(HostPath path) {
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.moves.begin(), path.moves.end());
  return path;
}

struct PathCheck {
  bool ok = true;
  std::size_t step = 0;  // first offending step when !ok
  std::string message;
  explicit operator bool() const { return ok; }
};

inline PathCheck validate_path(const HostPath& path, const GraphKind& host) {
  auto fail = [](std::size_t step, std::string why) {
    return PathCheck{false, step, std::move(why)};
  };
  if (!host.is_host()) return fail(0, "host kind " + to_string(host) + " is not a Cayley host");
  if (path.host != host.family) return fail(0, "path moves belong to a different host family");
  if (path.vertices.empty()) return fail(0, "path has no vertices");
  if (path.moves.size() + 1 != path.vertices.size()) {
    return fail(0, "path has " + std::to_string(path.moves.size()) + " moves for " +
                       std::to_string(path.vertices.size()) + " vertices");
  }
  for (const auto& v : path.vertices) {
    if (v.size() != host.first) return fail(0, "vertex " + to_string(v) + " has wrong dimension");
  }
  for (std::size_t t = 0; t < path.moves.size(); ++t) {
    const int i = path.moves[t];
    if (i < 2 || i > host.first) {
      return fail(t, "step " + std::to_string(t) + ": degenerate move " + std::to_string(i));
    }
    const Permutation expected = host_move(host.family, path.vertices[t], i);
    if (expected != path.vertices[t + 1]) {
      return fail(t, "step " + std::to_string(t) + ": move " + std::to_string(i) + " on " +
                         to_string(path.vertices[t]) + " gives " + to_string(expected) +
                         ", path has " + to_string(path.vertices[t + 1]));
    }
  }
  return {};
}

/// Collects pairs whose transcribed chain had to be replaced by BFS.
struct FallbackLog {
  std::vector<std::string> entries;
  bool empty() const { return entries.empty(); }
};

/// Breadth-first shortest path from u to v with generators tried in
/// ascending order.
inline HostPath shortest_host_path(Family host, const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("shortest_host_path: dimension mismatch");
  const int n = u.size();
  struct Step {
    std::uint64_t parent;
    int move;
  };
  std::unordered_map<std::uint64_t, Step> seen;
  const std::uint64_t start = rank(u);
  const std::uint64_t goal = rank(v);
  seen.emplace(start, Step{start, 0});
  std::deque<Permutation> queue{u};
  while (!queue.empty() && !seen.count(goal)) {
    const Permutation cur = queue.front();
    queue.pop_front();
    const std::uint64_t r = rank(cur);
    for (int i = 2; i <= n; ++i) {
      Permutation next = host_move(host, cur, i);
      const std::uint64_t rn = rank(next);
      if (seen.emplace(rn, Step{r, i}).second) queue.push_back(std::move(next));
    }
  }
  HostPath path{host, {}, {}};
  for (std::uint64_t at = goal; at != start; at = seen.at(at).parent) {
    path.vertices.push_back(unrank(n, at));
    path.moves.push_back(seen.at(at).move);
  }
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.moves.begin(), path.moves.end());
  return path;
}

namespace detail {

class PathBuilder {
 public:
  PathBuilder(Family host, Permutation start) : path_{host, {std::move(start)}, {}} {}

  // No-op for i <= 1: reversing or swapping a single symbol changes nothing.
  PathBuilder& move(int i) {
    if (i >= 2) {
      path_.vertices.push_back(host_move(path_.host, path_.vertices.back(), i));
      path_.moves.push_back(i);
    }
    return *this;
  }

  HostPath take() { return std::move(path_); }

 private:
  HostPath path_;
};

inline HostPath checked(HostPath path, const Permutation& from, const Permutation& to,
                        std::size_t bound, const char* what, FallbackLog* log) {
  const GraphKind host{path.host, from.size(), 0};
  const bool ok = validate_path(path, host).ok && path.front() == from && path.back() == to &&
                  path.length() <= bound;
  if (ok) return path;
  if (log) {
    log->entries.push_back(std::string(what) + ": chain failed for " + to_string(from) +
                           " -> " + to_string(to) + ", using BFS");
  }
  return shortest_host_path(path.host, from, to);
}

// Transposition of positions p < q in six prefix reversals:
// A x B y C -> x A' B y C -> y B' A x C -> B y A x C -> B' y A x C
//           -> A' y B x C -> A y B x C   (' marks a reversed block)
inline HostPath pancake_transposition(const Permutation& x, int p, int q) {
  PathBuilder b(Family::pancake, x);
  b.move(p).move(q).move(q - p).move(q - p - 1).move(q - 1).move(p - 1);
  return b.take();
}

// Star transposition of positions p < q.
inline HostPath star_transposition(const Permutation& x, int p, int q) {
  PathBuilder b(Family::star, x);
  if (p == 1) {
    b.move(q);
  } else {
    b.move(q).move(p).move(q);
  }
  return b.take();
}

inline std::vector<int> differing_positions(const Permutation& x, const Permutation& y) {
  std::vector<int> out;
  for (int k = 1; k <= x.size(); ++k) {
    if (x.at(k) != y.at(k)) out.push_back(k);
  }
  return out;
}

inline void require_same_dimension(const Permutation& x, const Permutation& y, const char* what) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// Path from p to p * sigma(l, m): ABC -> A'BC -> B'AC -> BAC with |A| = l-m,
/// |B| = m. Empty path for m = 0 or m = l.
inline HostPath route_sigma(const Permutation& p, CyclicShift s, FallbackLog* log = nullptr) {
  const int n = p.size();
  if (s.length > n || s.length < 1 || s.amount < 0 || s.amount > s.length) {
    throw std::invalid_argument("route_sigma: need 0 <= m <= l <= n, got l=" +
                                std::to_string(s.length) + " m=" + std::to_string(s.amount));
  }
  if (s.amount == 0 || s.amount == s.length) return HostPath{Family::pancake, {p}, {}};
  detail::PathBuilder b(Family::pancake, p);
  b.move(s.length - s.amount).move(s.length).move(s.amount);
  return detail::checked(b.take(), p, compose(p, cyclic_shift_word(s, n)), 3, "route_sigma", log);
}

/// Block-boundary step of the grid family: from base * sigma(k, k-1) to
/// base * sigma(k-1, 1) where x = base * sigma(k, k-1).
///   A x_{k-1} x_k x_1 B -> x_k x_{k-1} A' x_1 B -> x_1 A x_{k-1} x_k B
///                       -> A' x_1 x_{k-1} x_k B -> x_{k-1} x_1 A x_k B
inline HostPath route_grid_family_step(const Permutation& x, int k, FallbackLog* log = nullptr) {
  const int n = x.size();
  if (k < 3 || k > n) {
    throw std::invalid_argument("route_grid_family_step: need 3 <= k <= n, got k=" +
                                std::to_string(k));
  }
  const Permutation base = compose(x, invert(cyclic_shift_word({k, k - 1}, n)));
  const Permutation target = compose(base, cyclic_shift_word({k - 1, 1}, n));
  detail::PathBuilder b(Family::pancake, x);
  b.move(k - 1).move(k).move(k - 2).move(k - 1);
  return detail::checked(b.take(), x, target, 4, "route_grid_family_step", log);
}

namespace detail {
// x and y must be adjacent in the mixed grid under the left-count coding;
// returns the positions (p, q), p < q, that the transposition exchanges.
inline std::pair<int, int> mixed_grid_pair(const Permutation& x, const Permutation& y) {
  require_same_dimension(x, y, "mixed-grid route");
  const auto rx = left_count_encode(x);
  const auto ry = left_count_encode(y);
  const auto digits = differing_digits(rx, ry);
  if (digits.size() != 1 || std::abs(rx.digit(digits[0]) - ry.digit(digits[0])) != 1) {
    throw NotUnitDifference("inputs " + to_string(x) + ", " + to_string(y) +
                            " are not mixed-grid adjacent");
  }
  const auto pos = differing_positions(x, y);
  if (pos.size() != 2) {
    throw NotUnitDifference("mixed-grid neighbors must differ by one transposition");
  }
  return {pos[0], pos[1]};
}
}  // namespace detail

/// Pancake path of length <= 6 between mixed-grid neighbors.
inline HostPath route_mixed_grid_pancake(const Permutation& x, const Permutation& y,
                                         FallbackLog* log = nullptr) {
  const auto [p, q] = detail::mixed_grid_pair(x, y);
  return detail::checked(detail::pancake_transposition(x, p, q), x, y, 6,
                         "route_mixed_grid_pancake", log);
}

/// Star path of length <= 3 between mixed-grid neighbors:
/// aAxByC -> yAxBaC -> xAyBaC -> aAyBxC.
inline HostPath route_mixed_grid_star(const Permutation& x, const Permutation& y,
                                      FallbackLog* log = nullptr) {
  const auto [p, q] = detail::mixed_grid_pair(x, y);
  return detail::checked(detail::star_transposition(x, p, q), x, y, 3, "route_mixed_grid_star",
                         log);
}

namespace detail {
inline Diff3 ghc_pair(const Permutation& x, const Permutation& y) {
  require_same_dimension(x, y, "ghc route");
  if (differing_digits(rule_r_encode(x), rule_r_encode(y)).size() != 1) {
    throw NotUnitDifference("inputs " + to_string(x) + ", " + to_string(y) +
                            " are not GHC adjacent under rule R");
  }
  return diff3_decompose(x, y);
}

// X = AxByCzD -> z C' y B' x A' D -> x B y C z A' D -> B' x y C z A' D
//   -> B x y C z A' D -> C' y x B' z A' D -> C y x B' z A' D
//   -> y C' x B' z A' D -> A z B x C y D
inline HostPath pancake_rotation(const Permutation& x, int p1, int p2, int p3) {
  PathBuilder b(Family::pancake, x);
  b.move(p3)
      .move(p3 - p1 + 1)
      .move(p2 - p1)
      .move(p2 - p1 - 1)
      .move(p3 - p1)
      .move(p3 - p2 - 1)
      .move(p3 - p2)
      .move(p3);
  return b.take();
}

// X = aAxByCzD -> yAxBaCzD -> zAxBaCyD -> xAzBaCyD -> aAzBxCyD; when x
// already sits in position 1 two swaps close the cycle.
inline HostPath star_rotation(const Permutation& x, int p1, int p2, int p3) {
  PathBuilder b(Family::star, x);
  if (p1 == 1) {
    b.move(p2).move(p3);
  } else {
    b.move(p2).move(p3).move(p1).move(p2);
  }
  return b.take();
}
}  // namespace detail

/// Pancake path of length <= 8 between GHC neighbors (rule-R coding).
inline HostPath route_ghc_pancake(const Permutation& x, const Permutation& y,
                                  FallbackLog* log = nullptr) {
  const Diff3 d = detail::ghc_pair(x, y);
  const auto& pos = d.positions;
  HostPath path;
  switch (d.shape) {
    case Diff3Shape::transposition:
      path = detail::pancake_transposition(x, pos[0], pos[1]);
      break;
    case Diff3Shape::rotate_forward:
      path = detail::pancake_rotation(x, pos[0], pos[1], pos[2]);
      break;
    case Diff3Shape::rotate_backward:
      path = reversed(detail::pancake_rotation(y, pos[0], pos[1], pos[2]));
      break;
  }
  return detail::checked(std::move(path), x, y, 8, "route_ghc_pancake", log);
}

/// Star path of length <= 4 between GHC neighbors (rule-R coding).
inline HostPath route_ghc_star(const Permutation& x, const Permutation& y,
                               FallbackLog* log = nullptr) {
  const Diff3 d = detail::ghc_pair(x, y);
  const auto& pos = d.positions;
  HostPath path;
  switch (d.shape) {
    case Diff3Shape::transposition:
      path = detail::star_transposition(x, pos[0], pos[1]);
      break;
    case Diff3Shape::rotate_forward:
      path = detail::star_rotation(x, pos[0], pos[1], pos[2]);
      break;
    case Diff3Shape::rotate_backward:
      path = reversed(detail::star_rotation(y, pos[0], pos[1], pos[2]));
      break;
  }
  return detail::checked(std::move(path), x, y, 4, "route_ghc_star", log);
}

}  // namespace pancake
