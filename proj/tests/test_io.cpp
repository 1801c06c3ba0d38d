#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "support.hpp"

using namespace pancake;
using support::perm;

TEST_CASE("embedding documents round-trip") {
  for (const Embedding& e : {embed_ring(4, 4), embed_ghc_star(4), embed_grid_nfact(4), embed_qd_via_ghc(4),
                             embed_line(1, 3)}) {
    const auto doc = embedding_to_json(e);
    CHECK(doc["format_version"] == "1.0");
    CHECK(doc["document"] == "embedding");
    const auto back = embedding_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.guest == e.guest);
    CHECK(back.host == e.host);
    CHECK(back.map == e.map);
    CHECK(back.dilation_bound == e.dilation_bound);
    REQUIRE(back.routes.has_value() == e.routes.has_value());
    if (e.routes) {
      for (std::size_t t = 0; t < e.routes->size(); ++t) {
        REQUIRE((*back.routes)[t].vertices == (*e.routes)[t].vertices);
        REQUIRE((*back.routes)[t].moves == (*e.routes)[t].moves);
      }
    }
  }
}

TEST_CASE("embedding document layout") {
  const auto doc = embedding_to_json(embed_ring(3, 3));
  CHECK(doc["guest"] == "ring(6)");
  CHECK(doc["host"] == "pancake(3)");
  CHECK(doc["map"][1] == nlohmann::json::array({"1", "213"}));
  CHECK(doc["routes"][0][0] == nlohmann::json::array({"0", "1"}));
  CHECK(doc["routes"][0][1] == nlohmann::json::array({"123", "213"}));
}

TEST_CASE("readers reject other major versions and malformed documents") {
  auto doc = embedding_to_json(embed_ring(3, 4));
  auto bad = doc;
  bad["format_version"] = "2.0";
  CHECK_THROWS_AS(embedding_from_json(bad), FormatError);
  auto minor = doc;
  minor["format_version"] = "1.7";
  CHECK_NOTHROW(embedding_from_json(minor));
  auto missing = doc;
  missing.erase("format_version");
  CHECK_THROWS_AS(embedding_from_json(missing), FormatError);
  auto report = doc;
  report["document"] = "report";
  CHECK_THROWS_AS(embedding_from_json(report), FormatError);
  auto twice = doc;
  twice["map"][1][0] = "0";
  CHECK_THROWS_AS(embedding_from_json(twice), FormatError);
  auto wrong_dim = doc;
  wrong_dim["map"][0][1] = "123";
  CHECK_THROWS_AS(embedding_from_json(wrong_dim), FormatError);
  auto garbage = doc;
  garbage["map"] = 7;
  CHECK_THROWS_AS(embedding_from_json(garbage), FormatError);
  auto non_edge = doc;
  non_edge["routes"][0][0] = nlohmann::json::array({"0", "2"});
  CHECK_THROWS_AS(embedding_from_json(non_edge), FormatError);
}

TEST_CASE("broken routes survive parsing and fail check_embedding") {
  auto doc = embedding_to_json(embed_ring(3, 4));
  doc["routes"][0][1] = nlohmann::json::array({"1234", "4321"});
  const auto e = embedding_from_json(doc);
  CHECK(check_embedding(e));
  auto reversed_doc = embedding_to_json(embed_ring(3, 4));
  auto entry = reversed_doc["routes"][0];
  reversed_doc["routes"][0] = nlohmann::json::array(
      {nlohmann::json::array({entry[0][1], entry[0][0]}), nlohmann::json::array({entry[1][1], entry[1][0]})});
  CHECK_FALSE(check_embedding(embedding_from_json(reversed_doc)));
}

TEST_CASE("reports") {
  const auto e = embed_ghc_star(4);
  const auto r = measure(e, bfs_from_identity(e.host));
  const auto doc = report_to_json(r);
  CHECK(doc["format_version"] == "1.0");
  CHECK(doc["document"] == "report");
  CHECK(doc["dilation"] == 4);
  CHECK(doc["congestion_routing"] == "constructive");
  CHECK(doc["expansion"]["numerator"] == 1);
  CHECK(doc["histogram"]["1"] == 26);
  CHECK(doc["violations"].empty());
  CHECK(doc["witness"].size() == 2);
  std::ostringstream csv;
  write_histogram_csv(csv, r);
  CHECK(csv.str() == "hops,edges\n1,26\n2,20\n3,20\n4,6\n");
  const auto grid = measure(embed_grid_family(3, 5), bfs_from_identity(pancake_graph(5)));
  const auto gdoc = report_to_json(grid, {"x"});
  CHECK(gdoc["violations"].size() == 2);
  CHECK(gdoc["violations"][0]["hops"] == 5);
  CHECK(gdoc["congestion_routing"] == "shortest-path");
  CHECK(gdoc["route_errors"] == nlohmann::json::array({"x"}));
}
