#pragma once

// Claim-by-claim measurement over a range of dimensions. Each row compares a
// measured value against the constant the construction promises.

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "pancake/embedding.hpp"
#include "pancake/representation.hpp"
#include "pancake/routing.hpp"
#include "pancake/verify.hpp"

namespace pancake {

struct ClaimRow {
  std::string claim;
  int n = 0;
  std::string parameter;  // e.g. "k=4", "p=3", empty when not applicable
  long measured = 0;
  long bound = 0;
  bool pass = false;
  std::string note;
};

namespace detail {

inline ClaimRow at_most(std::string claim, int n, std::string parameter, long measured, long bound,
                        std::string note = {}) {
  return {std::move(claim), n, std::move(parameter), measured, bound, measured <= bound, std::move(note)};
}

inline ClaimRow holds(std::string claim, int n, std::string parameter, bool ok, std::string note = {}) {
  return {std::move(claim), n, std::move(parameter), ok ? 1 : 0, 1, ok, std::move(note)};
}

template <typename Decode, typename Encode>
bool is_bijection(int n, Decode&& decode, Encode&& encode) {
  std::unordered_set<Permutation> images;
  for (const GridCoord& c : guest_vertices(ghc_graph(n))) {
    const auto label = label_of(c);
    const Permutation p = decode(label);
    if (encode(p) != label || !images.insert(p).second) return false;
  }
  return images.size() == factorial(n);
}

inline std::string witness_note(const EmbedReport& r) {
  if (!r.witness) return {};
  return "max at " + vertex_text(r.guest, r.witness->u) + "-" + vertex_text(r.guest, r.witness->v);
}

}  // namespace detail

/// seed drives the sampled distance cross-check; every other row is exhaustive.
inline std::vector<ClaimRow> run_suite(int n_low, int n_high, int cap = kDefaultDimensionCap,
                                       std::uint64_t seed = 20240101) {
  using detail::at_most;
  using detail::holds;
  if (n_low < 3 || n_high < n_low) throw std::invalid_argument("run_suite: need 3 <= n_low <= n_high");
  if (n_high > cap) {
    throw ResourceLimitError("run_suite: n=" + std::to_string(n_high) + " exceeds dimension cap " +
                             std::to_string(cap));
  }
  std::vector<ClaimRow> rows;
  std::mt19937_64 rng(seed);
  for (int n = n_low; n <= n_high; ++n) {
    const DistanceTable pancake_table = bfs_from_identity(pancake_graph(n), cap);
    const DistanceTable star_table = bfs_from_identity(star_graph(n), cap);

    {
      std::uniform_int_distribution<std::uint64_t> pick(0, factorial(n) - 1);
      bool agree = true;
      for (int trial = 0; trial < 100; ++trial) {
        const Permutation u = unrank(n, pick(rng));
        const Permutation v = unrank(n, pick(rng));
        agree = agree &&
                cayley_distance(u, v, pancake_table) == static_cast<int>(shortest_host_path(Family::pancake, u, v).length()) &&
                cayley_distance(u, v, star_table) == static_cast<int>(shortest_host_path(Family::star, u, v).length());
      }
      rows.push_back(holds("distance table vs pairwise BFS", n, "100 pairs", agree));
    }

    rows.push_back(holds("generator identity", n, "", check_generator_identity(n)));
    for (int k = 3; k <= n; ++k) {
      const auto c = check_hamiltonian(identity(n), k);
      rows.push_back(holds("Hamiltonian cycle", n, "k=" + std::to_string(k), c.ok, c.detail));
    }
    if (n <= 6) rows.push_back(holds("no 4-cycle", n, "", check_no_4cycle(n)));

    for (int k = 3; k <= n; ++k) {
      const auto r = measure(embed_ring(k, n), pancake_table);
      rows.push_back(at_most("ring dilation", n, "k=" + std::to_string(k), r.dilation, 1));
      rows.push_back(at_most("ring congestion", n, "k=" + std::to_string(k),
                             static_cast<long>(r.congestion.value_or(0)), 1));
    }
    for (std::uint64_t len : {std::uint64_t{1}, std::uint64_t{7}, factorial(n)}) {
      if (len > factorial(n)) continue;
      const auto r = measure(embed_line(static_cast<int>(len), n), pancake_table);
      rows.push_back(at_most("line dilation", n, "len=" + std::to_string(len), r.dilation, 1));
    }

    std::size_t longest_shift = 0;
    bool short_ends_ok = true;
    for (int l = 2; l <= n; ++l) {
      for (int m = 1; m <= l - 1; ++m) {
        const auto len = route_sigma(identity(n), {l, m}).length();
        longest_shift = std::max(longest_shift, len);
        if ((m == 1 || m == l - 1) && len > 2) short_ends_ok = false;
      }
    }
    rows.push_back(at_most("shift route length", n, "", static_cast<long>(longest_shift), 3));
    rows.push_back(holds("shift route length 2 at m in {1,l-1}", n, "", short_ends_ok));

    {
      const auto r = measure(embed_grid_nfact(n), pancake_table, {std::nullopt, false});
      rows.push_back(at_most("grid n x (n-1)! dilation", n, "", r.dilation, 7, detail::witness_note(r)));
    }
    for (int p = 2; p <= n - 1; ++p) {
      const auto e = embed_grid_family(p, n);
      const auto r = measure(e, pancake_table, {std::nullopt, false});
      rows.push_back(at_most("grid family dilation", n, "p=" + std::to_string(p), r.dilation, 4,
                             detail::witness_note(r)));
      std::size_t longest = 0;
      bool valid = true;
      const auto shifts = grid_family_row_shifts(p, n);
      const int cols = e.guest.second;
      for (std::size_t row = 1; row + 1 < shifts.size(); ++row) {
        if (shifts[row + 1].length != shifts[row].length - 1) continue;
        const int k = shifts[row].length;
        for (int j = 0; j < cols; ++j) {
          FallbackLog log;
          const auto& from = e.map[row * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
          const auto& to = e.map[(row + 1) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
          const auto path = route_grid_family_step(from, k, &log);
          valid = valid && log.empty() && path.back() == to;
          longest = std::max(longest, path.length());
        }
      }
      rows.push_back(at_most("grid family block-step route length", n, "p=" + std::to_string(p),
                             valid ? static_cast<long>(longest) : 99, 4,
                             longest == 0 ? "no block steps" : ""));
    }

    struct Case {
      const char* claim;
      Embedding embedding;
      const DistanceTable* table;
      int bound;
    };
    std::vector<Case> cases;
    cases.push_back({"mixed grid -> pancake", embed_mixed_grid_pancake(n), &pancake_table, 6});
    cases.push_back({"mixed grid -> star", embed_mixed_grid_star(n), &star_table, 3});
    cases.push_back({"Q_(n-1) -> pancake", embed_hypercube_via_mixed_grid(n), &pancake_table, 6});
    cases.push_back({"GHC -> pancake", embed_ghc_pancake(n), &pancake_table, 8});
    cases.push_back({"GHC -> star", embed_ghc_star(n), &star_table, 4});
    cases.push_back({"Q_d -> pancake", embed_qd_via_ghc(n), &pancake_table, 8});
    for (const Case& c : cases) {
      const auto r = measure(c.embedding, *c.table);
      const std::string routes_note =
          "routes max " + std::to_string(r.route_dilation.value_or(0)) + ", congestion " +
          std::to_string(r.congestion.value_or(0)) +
          (c.embedding.fallback_log.empty() ? "" : ", BFS fallbacks " + std::to_string(c.embedding.fallback_log.size()));
      rows.push_back(at_most(std::string(c.claim) + " dilation", n, "", r.dilation, c.bound,
                             detail::witness_note(r)));
      rows.push_back(at_most(std::string(c.claim) + " route length", n, "",
                             static_cast<long>(r.route_dilation.value_or(0)), c.bound, routes_note));
    }

    rows.push_back(holds("Left-count bijection", n, "", detail::is_bijection(n, left_count_decode, left_count_encode)));
    rows.push_back(holds("Rule-R bijection", n, "", detail::is_bijection(n, rule_r_decode, rule_r_encode)));

    if (n <= 6) {
      bool shape_ok = true;
      const auto g = ghc_graph(n);
      for (const Edge& edge : guest_edges(g)) {
        const auto x = rule_r_decode(label_of(coord_of(g, edge.u)));
        const auto y = rule_r_decode(label_of(coord_of(g, edge.v)));
        try {
          const Diff3 d = diff3_decompose(x, y);
          shape_ok = shape_ok && reconstruct_x(d) == x && reconstruct_y(d) == y;
        } catch (const NotUnitDifference&) {
          shape_ok = false;
        }
      }
      rows.push_back(holds("GHC neighbour difference shape", n, "", shape_ok));
    }
  }
  return rows;
}

}  // namespace pancake
