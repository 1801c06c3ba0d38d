#pragma once

// Embedding and report documents.
//
// Both are JSON objects carrying "format_version" ("<major>.<minor>");
// readers reject any major version other than kFormatMajor.
//
// embedding: { format_version, document: "embedding", guest, host,
//              dilation_bound (int|null), map: [[guest, host], ...],
//              routes: [[[u, v], [host, ...]], ...] (optional) }
// report:    { format_version, document: "report", guest, host, dilation,
//              congestion (int|null), congestion_routing, route_dilation,
//              expansion: {numerator, denominator}, histogram: {hops: edges},
//              bound, violations: [{edge: [u, v], hops}], witness,
//              route_errors: [...] }

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pancake/embedding.hpp"
#include "pancake/topology.hpp"
#include "pancake/verify.hpp"

namespace pancake {

inline constexpr int kFormatMajor = 1;
inline constexpr const char* kFormatVersion = "1.0";

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void check_version(const nlohmann::json& doc, const char* document) {
  if (!doc.is_object()) throw FormatError("document is not a JSON object");
  if (!doc.contains("format_version") || !doc["format_version"].is_string()) {
    throw FormatError("missing format_version");
  }
  const std::string version = doc["format_version"];
  const auto dot = version.find('.');
  int major = -1;
  try {
    major = std::stoi(version.substr(0, dot));
  } catch (const std::logic_error&) {
    throw FormatError("malformed format_version '" + version + "'");
  }
  if (major != kFormatMajor) {
    throw FormatError("unsupported format_version '" + version + "' (reader handles " +
                      std::to_string(kFormatMajor) + ".x)");
  }
  if (doc.value("document", std::string()) != document) {
    throw FormatError(std::string("expected a ") + document + " document");
  }
}

inline std::string_view congestion_routing_name(CongestionSource s) {
  switch (s) {
    case CongestionSource::constructive_routes: return "constructive";
    case CongestionSource::shortest_path_routes: return "shortest-path";
    case CongestionSource::none: break;
  }
  return "none";
}

}  // namespace detail

inline nlohmann::json embedding_to_json(const Embedding& e) {
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["document"] = "embedding";
  doc["guest"] = to_string(e.guest);
  doc["host"] = to_string(e.host);
  doc["dilation_bound"] = e.dilation_bound ? nlohmann::json(*e.dilation_bound) : nlohmann::json();
  auto& map = doc["map"] = nlohmann::json::array();
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    map.push_back(nlohmann::json::array({vertex_text(e.guest, v), to_string(e.map[v])}));
  }
  if (e.routes) {
    auto& routes = doc["routes"] = nlohmann::json::array();
    const auto edges = guest_edges(e.guest);
    for (std::size_t t = 0; t < edges.size(); ++t) {
      nlohmann::json hops = nlohmann::json::array();
      for (const auto& p : (*e.routes)[t].vertices) hops.push_back(to_string(p));
      routes.push_back(nlohmann::json::array(
          {nlohmann::json::array({vertex_text(e.guest, edges[t].u), vertex_text(e.guest, edges[t].v)}),
           std::move(hops)}));
    }
  }
  return doc;
}

/// Parses an embedding document. Structural problems raise FormatError;
/// semantic ones (non-injective maps, broken routes) are left to
/// check_embedding so that verification can report them.
inline Embedding embedding_from_json(const nlohmann::json& doc) {
  detail::check_version(doc, "embedding");
  try {
    Embedding e;
    e.guest = parse_graph_kind(doc.at("guest").get<std::string>());
    e.host = parse_graph_kind(doc.at("host").get<std::string>());
    if (!e.host.is_host()) throw FormatError("host must be pancake(n) or star(n)");
    if (doc.contains("dilation_bound") && !doc["dilation_bound"].is_null()) {
      e.dilation_bound = doc["dilation_bound"].get<int>();
    }
    const auto count = vertex_count(e.guest);
    std::vector<std::optional<Permutation>> slots(count);
    for (const auto& entry : doc.at("map")) {
      if (!entry.is_array() || entry.size() != 2) throw FormatError("map entries must be pairs");
      const auto v = parse_vertex(e.guest, entry[0].get<std::string>());
      if (slots[v]) throw FormatError("guest vertex " + entry[0].get<std::string>() + " mapped twice");
      Permutation image = parse_permutation(entry[1].get<std::string>());
      if (image.size() != e.host.first) throw FormatError("host vertex of wrong dimension");
      slots[v] = std::move(image);
    }
    for (std::size_t v = 0; v < count; ++v) {
      if (!slots[v]) throw FormatError("guest vertex " + vertex_text(e.guest, v) + " is unmapped");
      e.map.push_back(std::move(*slots[v]));
    }
    if (doc.contains("routes")) {
      const auto edges = guest_edges(e.guest);
      std::vector<std::optional<HostPath>> routes(edges.size());
      for (const auto& entry : doc.at("routes")) {
        if (!entry.is_array() || entry.size() != 2 || entry[0].size() != 2) {
          throw FormatError("routes entries must be [[u, v], [host, ...]]");
        }
        auto a = parse_vertex(e.guest, entry[0][0].get<std::string>());
        auto b = parse_vertex(e.guest, entry[0][1].get<std::string>());
        HostPath path{e.host.family, {}, {}};
        for (const auto& hop : entry[1]) path.vertices.push_back(parse_permutation(hop.get<std::string>()));
        if (path.vertices.empty()) throw FormatError("empty route");
        if (a > b) {
          std::swap(a, b);
          path = reversed(std::move(path));
        }
        const auto it = std::lower_bound(edges.begin(), edges.end(), Edge{a, b});
        if (it == edges.end() || *it != Edge{a, b}) throw FormatError("route for a non-edge");
        for (std::size_t t = 0; t + 1 < path.vertices.size(); ++t) {
          // 0 marks a step that is not a host edge; validate_path rejects it.
          path.moves.push_back(host_generator_between(e.host.family, path.vertices[t], path.vertices[t + 1]));
        }
        routes[static_cast<std::size_t>(it - edges.begin())] = std::move(path);
      }
      std::vector<HostPath> ordered;
      for (auto& r : routes) {
        if (!r) throw FormatError("routes do not cover every guest edge");
        ordered.push_back(std::move(*r));
      }
      e.routes = std::move(ordered);
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw FormatError(std::string("malformed embedding document: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw FormatError(std::string("malformed embedding document: ") + ex.what());
  } catch (const std::out_of_range& ex) {
    throw FormatError(std::string("malformed embedding document: ") + ex.what());
  }
}

inline nlohmann::json report_to_json(const EmbedReport& r,
                                     const std::vector<std::string>& route_errors = {}) {
  auto edge_json = [&](const Edge& e) {
    return nlohmann::json::array({vertex_text(r.guest, e.u), vertex_text(r.guest, e.v)});
  };
  nlohmann::json doc;
  doc["format_version"] = kFormatVersion;
  doc["document"] = "report";
  doc["guest"] = to_string(r.guest);
  doc["host"] = to_string(r.host);
  doc["dilation"] = r.dilation;
  doc["congestion"] = r.congestion ? nlohmann::json(*r.congestion) : nlohmann::json();
  doc["congestion_routing"] = detail::congestion_routing_name(r.congestion_source);
  doc["route_dilation"] = r.route_dilation ? nlohmann::json(*r.route_dilation) : nlohmann::json();
  doc["expansion"] = {{"numerator", r.expansion.numerator}, {"denominator", r.expansion.denominator}};
  auto& hist = doc["histogram"] = nlohmann::json::object();
  for (const auto& [hops, count] : r.histogram) hist[std::to_string(hops)] = count;
  doc["bound"] = r.bound ? nlohmann::json(*r.bound) : nlohmann::json();
  auto& violations = doc["violations"] = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back(nlohmann::json::object({{"edge", edge_json(v.edge)}, {"hops", v.hops}}));
  doc["witness"] = r.witness ? edge_json(*r.witness) : nlohmann::json();
  doc["route_errors"] = route_errors;
  return doc;
}

inline void write_histogram_csv(std::ostream& os, const EmbedReport& r) {
  os << "hops,edges\n";
  for (const auto& [hops, count] : r.histogram) os << hops << ',' << count << '\n';
}

}  // namespace pancake
