#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support.hpp"

using namespace pancake;
using support::perm;
using support::words;

TEST_CASE("distance tables") {
  CHECK(bfs_from_identity(pancake_graph(3)).eccentricity() == 3);
  CHECK(bfs_from_identity(pancake_graph(4)).eccentricity() == 4);
  CHECK(bfs_from_identity(pancake_graph(5)).eccentricity() == 5);
  CHECK(bfs_from_identity(pancake_graph(6)).eccentricity() == 7);
  int star3 = 0;
  for (const auto& [w, d] : oracle::bfs('s', oracle::ident(3))) star3 = std::max(star3, d);
  CHECK(bfs_from_identity(star_graph(3)).eccentricity() == star3);
  CHECK_THROWS_AS(bfs_from_identity(pancake_graph(9)), ResourceLimitError);
  CHECK_THROWS(bfs_from_identity(ring_graph(6)));
}

TEST_CASE("table distances match oracle BFS from the identity, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (char host : {'p', 's'}) {
      const auto table = bfs_from_identity(host == 'p' ? pancake_graph(n) : star_graph(n));
      for (const auto& [w, d] : oracle::bfs(host, oracle::ident(n))) REQUIRE(table.at(perm(w)) == d);
    }
  }
}

TEST_CASE("cayley distance is symmetric and edge-Lipschitz") {
  const auto table = bfs_from_identity(pancake_graph(6));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(6) - 1);
  for (int t = 0; t < 300; ++t) {
    const auto u = unrank(6, pick(rng));
    const auto v = unrank(6, pick(rng));
    REQUIRE(cayley_distance(u, v, table) == cayley_distance(v, u, table));
  }
  CHECK(cayley_distance(perm("123456"), perm("123456"), table) == 0);
  CHECK(cayley_distance(perm("123456"), perm("321456"), table) == 1);
  const auto t5 = bfs_from_identity(pancake_graph(5));
  for (const Edge& e : guest_edges(pancake_graph(5))) {
    REQUIRE(std::abs(t5.at(unrank(5, e.u)) - t5.at(unrank(5, e.v))) <= 1);
  }
  CHECK_THROWS(cayley_distance(perm("1234"), perm("1234"), table));
}

TEST_CASE("lex shortest paths are shortest and valid") {
  const auto table = bfs_from_identity(star_graph(5));
  const auto p = lex_shortest_path(perm("12345"), perm("54321"), table);
  CHECK(validate_path(p, star_graph(5)).ok);
  CHECK(static_cast<int>(p.length()) == oracle::distance('s', oracle::ident(5), oracle::word("54321")));
  CHECK(lex_shortest_path(perm("12345"), perm("54321"), table).vertices == p.vertices);
}

TEST_CASE("measured ring embeddings") {
  const auto table = bfs_from_identity(pancake_graph(4));
  const auto r = measure(embed_ring(4, 4), table);
  CHECK(r.dilation == 1);
  CHECK(r.congestion == 1u);
  CHECK(r.expansion == Expansion{1, 1});
  CHECK(r.violations.empty());
  CHECK(measure(embed_ring(3, 4), table).expansion == Expansion{4, 1});
  CHECK(measure(embed_qd_via_ghc(4), table).expansion == Expansion{3, 2});
  CHECK(measure(embed_hypercube_via_mixed_grid(4), table).expansion == Expansion{3, 1});
  CHECK_THROWS(measure(embed_ring(4, 5), table));
}

TEST_CASE("measured histograms match oracle BFS and the frozen prototype values") {
  for (int n = 4; n <= 5; ++n) {
    const auto lc = oracle::decode_table(n, oracle::left_count);
    const auto rr = oracle::decode_table(n, oracle::rule_r);
    const auto mixed = oracle::label_edges(n, oracle::mixed_adjacent);
    const auto ghc = oracle::label_edges(n, oracle::ghc_adjacent);
    const auto& frozen = support::frozen_label_histograms().at(n);
    auto via = [](const std::map<oracle::Word, oracle::Word>& t) { return [&t](const oracle::Word& l) { return t.at(l); }; };
    CHECK(oracle::histogram('p', mixed, via(lc)) == frozen.mixed_pancake);
    CHECK(oracle::histogram('s', mixed, via(lc)) == frozen.mixed_star);
    CHECK(oracle::histogram('p', ghc, via(rr)) == frozen.ghc_pancake);
    CHECK(oracle::histogram('s', ghc, via(rr)) == frozen.ghc_star);
  }
  for (int n = 4; n <= 6; ++n) {
    const auto& frozen = support::frozen_label_histograms().at(n);
    const auto pt = bfs_from_identity(pancake_graph(n));
    const auto st = bfs_from_identity(star_graph(n));
    CHECK(support::as_int_map(measure(embed_mixed_grid_pancake(n, false), pt).histogram) == frozen.mixed_pancake);
    CHECK(support::as_int_map(measure(embed_mixed_grid_star(n, false), st).histogram) == frozen.mixed_star);
    CHECK(support::as_int_map(measure(embed_ghc_pancake(n, false), pt).histogram) == frozen.ghc_pancake);
    CHECK(support::as_int_map(measure(embed_ghc_star(n, false), st).histogram) == frozen.ghc_star);
  }
}

TEST_CASE("shifted-rows grid histograms") {
  for (const auto& [key, frozen] : support::frozen_grid_histograms()) {
    const auto [n, p] = key;
    INFO("n=" << n << " p=" << p);
    const auto r = measure(embed_grid_family(p, n), bfs_from_identity(pancake_graph(n)), {std::nullopt, false});
    CHECK(support::as_int_map(r.histogram) == frozen);
    if (n <= 5) CHECK(oracle::shifted_rows_histogram(p, n) == frozen);
  }
}

TEST_CASE("violations and witnesses") {
  const auto table = bfs_from_identity(pancake_graph(5));
  const auto r = measure(embed_grid_family(3, 5), table);
  CHECK(r.dilation == 5);
  CHECK(r.violations.size() == 2);
  REQUIRE(r.witness);
  CHECK(cayley_distance(embed_grid_family(3, 5).map[r.witness->u], embed_grid_family(3, 5).map[r.witness->v], table) == 5);
  CHECK(r.congestion_source == CongestionSource::shortest_path_routes);
  MeasureOptions loose;
  loose.bound = 5;
  CHECK(measure(embed_grid_family(3, 5), table, loose).violations.empty());
}

TEST_CASE("routes never beat distances") {
  const auto table = bfs_from_identity(pancake_graph(5));
  for (const Embedding& e : {embed_mixed_grid_pancake(5), embed_ghc_pancake(5)}) {
    const auto r = measure(e, table);
    REQUIRE(r.route_dilation);
    CHECK(static_cast<int>(*r.route_dilation) >= r.dilation);
    CHECK(*r.congestion >= 1u);
  }
}

TEST_CASE("hamiltonian and generator checks") {
  CHECK(check_hamiltonian(identity(4), 4).ok);
  CHECK(check_hamiltonian(identity(3), 3).ok);
  auto seq = pancake_sequence(4).indices();
  seq[3] = 2;
  CHECK_FALSE(check_hamiltonian_sequence(identity(4), 4, GenSeq(seq)).ok);
  CHECK_FALSE(check_hamiltonian(identity(4), 2).ok);
  CHECK(check_generator_identity(3));
  CHECK(check_generator_identity(8));
  CHECK_FALSE(generator_identity_holds(5, 3, 3));
  CHECK(generator_identity_holds(5, 3, 4));
  for (int n = 3; n <= 6; ++n) CHECK(check_no_4cycle(n));
  CHECK_FALSE(has_4cycle(guest_edges(pancake_graph(4))));
  CHECK(has_4cycle(guest_edges(grid2d_graph(2, 2))));
  CHECK_FALSE(has_4cycle(guest_edges(star_graph(4))));
}
