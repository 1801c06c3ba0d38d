#pragma once

// Implicit host and guest graphs.
//
// Host networks (pancake, star) have permutations as vertices and compute
// adjacency on demand. Guest networks (ring, line, grid2d, mixed_grid,
// hypercube, ghc) are mixed-radix coordinate spaces; their vertices are
// enumerated in lexicographic coordinate order, so a vertex index doubles as
// its canonical ordering key.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pancake/permutation.hpp"

namespace pancake {

enum class Family { pancake, star, ring, line, grid2d, mixed_grid, hypercube, ghc };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::pancake: return "pancake";
    case Family::star: return "star";
    case Family::ring: return "ring";
    case Family::line: return "line";
    case Family::grid2d: return "grid2d";
    case Family::mixed_grid: return "mixed_grid";
    case Family::hypercube: return "hypercube";
    case Family::ghc: return "ghc";
  }
  return "?";
}

struct GraphKind {
  Family family = Family::pancake;
  int first = 2;   // n, size, length, N1 or d
  int second = 0;  // N2 for grid2d, unused otherwise

  bool is_host() const { return family == Family::pancake || family == Family::star; }

  friend bool operator==(const GraphKind&, const GraphKind&) = default;
};

inline void validate(const GraphKind& g) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument(std::string(family_name(g.family)) + ": " + why);
  };
  switch (g.family) {
    case Family::pancake:
    case Family::star:
      if (g.first < 2 || g.first > kMaxDimension) fail("need 2 <= n <= 20");
      break;
    case Family::ring:
      if (g.first < 3) fail("need size >= 3");
      break;
    case Family::line:
      if (g.first < 1) fail("need length >= 1");
      break;
    case Family::grid2d:
      if (g.first < 1 || g.second < 1) fail("need N1, N2 >= 1");
      break;
    case Family::mixed_grid:
    case Family::ghc:
      if (g.first < 2 || g.first > kMaxDimension) fail("need 2 <= n <= 20");
      break;
    case Family::hypercube:
      if (g.first < 1 || g.first > 62) fail("need 1 <= d <= 62");
      break;
  }
}

inline GraphKind make_kind(Family f, int first, int second = 0) {
  GraphKind g{f, first, second};
  validate(g);
  return g;
}

inline GraphKind pancake_graph(int n) { return make_kind(Family::pancake, n); }
inline GraphKind star_graph(int n) { return make_kind(Family::star, n); }
inline GraphKind ring_graph(int size) { return make_kind(Family::ring, size); }
inline GraphKind line_graph(int length) { return make_kind(Family::line, length); }
inline GraphKind grid2d_graph(int rows, int cols) { return make_kind(Family::grid2d, rows, cols); }
inline GraphKind mixed_grid_graph(int n) { return make_kind(Family::mixed_grid, n); }
inline GraphKind hypercube_graph(int d) { return make_kind(Family::hypercube, d); }
inline GraphKind ghc_graph(int n) { return make_kind(Family::ghc, n); }

inline std::string to_string(const GraphKind& g) {
  std::string out(family_name(g.family));
  out += '(' + std::to_string(g.first);
  if (g.family == Family::grid2d) out += ',' + std::to_string(g.second);
  return out + ')';
}

inline std::ostream& operator<<(std::ostream& os, const GraphKind& g) {
  return os << to_string(g);
}

/// Parses the textual form produced by to_string, e.g. "grid2d(4,6)".
inline GraphKind parse_graph_kind(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    throw std::invalid_argument("malformed graph kind '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, open);
  const std::string args(text.substr(open + 1, text.size() - open - 2));
  static constexpr Family kAll[] = {Family::pancake, Family::star,      Family::ring,
                                    Family::line,    Family::grid2d,    Family::mixed_grid,
                                    Family::hypercube, Family::ghc};
  for (Family f : kAll) {
    if (family_name(f) != name) continue;
    try {
      std::size_t used = 0;
      const int first = std::stoi(args, &used);
      int second = 0;
      if (f == Family::grid2d) {
        if (used >= args.size() || args[used] != ',') throw std::invalid_argument("arity");
        std::size_t used2 = 0;
        second = std::stoi(args.substr(used + 1), &used2);
        used += 1 + used2;
      }
      if (used != args.size()) throw std::invalid_argument("trailing");
      return make_kind(f, first, second);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed graph kind '" + std::string(text) + "'");
    }
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Mixed-radix labels a_2 ... a_n with 0 <= a_i <= i-1.

class MixedRadixLabel {
 public:
  MixedRadixLabel() = default;

  /// `digits` holds a_2 ... a_n in that order.
  explicit MixedRadixLabel(std::vector<int> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("label: need n >= 2");
    for (std::size_t t = 0; t < digits_.size(); ++t) {
      const int i = static_cast<int>(t) + 2;
      if (digits_[t] < 0 || digits_[t] > i - 1) {
        throw std::invalid_argument("label: digit a_" + std::to_string(i) + "=" +
                                    std::to_string(digits_[t]) + " outside [0, " +
                                    std::to_string(i - 1) + "]");
      }
    }
  }

  /// n, the number of permutation symbols the label codes.
  int dimension() const { return static_cast<int>(digits_.size()) + 1; }

  /// a_i for 2 <= i <= n.
  int digit(int i) const {
    if (i < 2 || i > dimension()) {
      throw std::out_of_range("label: digit index " + std::to_string(i));
    }
    return digits_[static_cast<std::size_t>(i - 2)];
  }

  const std::vector<int>& digits() const { return digits_; }

  friend bool operator==(const MixedRadixLabel&, const MixedRadixLabel&) = default;
  friend auto operator<=>(const MixedRadixLabel&, const MixedRadixLabel&) = default;

 private:
  std::vector<int> digits_;
};

using GhcLabel = MixedRadixLabel;

// Digits concatenated when every a_i fits one digit (n <= 10), else commas.
inline std::string to_string(const MixedRadixLabel& r) {
  std::string out;
  const bool compact = r.dimension() <= 10;
  for (std::size_t t = 0; t < r.digits().size(); ++t) {
    if (!compact && t > 0) out += ',';
    out += std::to_string(r.digits()[t]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const MixedRadixLabel& r) {
  return os << to_string(r);
}

inline MixedRadixLabel parse_label(std::string_view text) {
  std::vector<int> d;
  auto bad = [&] {
    return std::invalid_argument("malformed label text '" + std::string(text) + "'");
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      const std::string_view field = text.substr(start, comma - start);
      if (field.empty() || !std::all_of(field.begin(), field.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
        throw bad();
      }
      d.push_back(std::stoi(std::string(field)));
      start = comma + 1;
    }
  } else {
    if (text.empty() || text.size() > 9) throw bad();
    for (char c : text) {
      if (c < '0' || c > '9') throw bad();
      d.push_back(c - '0');
    }
  }
  return MixedRadixLabel(std::move(d));
}

// ---------------------------------------------------------------------------
// Host adjacency.

inline std::vector<Permutation> pancake_neighbors(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("pancake_neighbors: need n >= 2");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int i = 2; i <= p.size(); ++i) out.push_back(prefix_reverse(p, i));
  return out;
}

inline std::vector<Permutation> star_neighbors(const Permutation& p) {
  if (p.size() < 2) throw std::invalid_argument("star_neighbors: need n >= 2");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(p.size() - 1));
  for (int i = 2; i <= p.size(); ++i) out.push_back(star_swap(p, i));
  return out;
}

/// Applies generator `i` of the given host family.
inline Permutation host_move(Family host, const Permutation& p, int i) {
  if (host == Family::pancake) return prefix_reverse(p, i);
  if (host == Family::star) return star_swap(p, i);
  throw std::invalid_argument("host_move: not a host family");
}

inline std::vector<Permutation> host_neighbors(Family host, const Permutation& p) {
  if (host == Family::pancake) return pancake_neighbors(p);
  if (host == Family::star) return star_neighbors(p);
  throw std::invalid_argument("host_neighbors: not a host family");
}

/// Generator index joining u to v in the host, or 0 when they are not adjacent.
inline int host_generator_between(Family host, const Permutation& u, const Permutation& v) {
  if (u.size() != v.size() || u.size() < 2) return 0;
  const int n = u.size();
  if (host == Family::pancake) {
    int last_diff = 0;
    for (int k = n; k >= 1; --k) {
      if (u.at(k) != v.at(k)) {
        last_diff = k;
        break;
      }
    }
    if (last_diff < 2) return 0;
    for (int k = 1; k <= last_diff; ++k) {
      if (v.at(k) != u.at(last_diff - k + 1)) return 0;
    }
    return last_diff;
  }
  if (host == Family::star) {
    std::vector<int> diff;
    for (int k = 1; k <= n; ++k) {
      if (u.at(k) != v.at(k)) diff.push_back(k);
    }
    if (diff.size() == 2 && diff[0] == 1) return diff[1];
    return 0;
  }
  return 0;
}

inline bool host_adjacent(Family host, const Permutation& u, const Permutation& v) {
  return host_generator_between(host, u, v) != 0;
}

struct SubpancakeId {
  int last_symbol = 0;
  friend bool operator==(const SubpancakeId&, const SubpancakeId&) = default;
};

inline SubpancakeId subpancake_of(const Permutation& p) {
  return SubpancakeId{p.at(p.size())};
}

// ---------------------------------------------------------------------------
// Guest coordinate spaces.

struct GridCoord {
  std::vector<int> coords;
  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// Extent of every coordinate; the first coordinate is the most significant.
inline std::vector<int> radices(const GraphKind& g) {
  validate(g);
  switch (g.family) {
    case Family::ring:
    case Family::line:
      return {g.first};
    case Family::grid2d:
      return {g.first, g.second};
    case Family::mixed_grid:
    case Family::ghc: {
      std::vector<int> r;
      for (int i = 2; i <= g.first; ++i) r.push_back(i);
      return r;
    }
    case Family::hypercube:
      return std::vector<int>(static_cast<std::size_t>(g.first), 2);
    default:
      throw std::invalid_argument("radices: " + to_string(g) + " is not a coordinate graph");
  }
}

inline std::uint64_t vertex_count(const GraphKind& g) {
  validate(g);
  if (g.is_host()) return factorial(g.first);
  std::uint64_t total = 1;
  for (int r : radices(g)) total *= static_cast<std::uint64_t>(r);
  return total;
}

inline GridCoord coord_of(const GraphKind& g, std::uint64_t index) {
  const auto r = radices(g);
  GridCoord c{std::vector<int>(r.size())};
  for (std::size_t t = r.size(); t-- > 0;) {
    c.coords[t] = static_cast<int>(index % static_cast<std::uint64_t>(r[t]));
    index /= static_cast<std::uint64_t>(r[t]);
  }
  if (index != 0) throw std::out_of_range("coord_of: index out of range");
  return c;
}

inline std::uint64_t index_of(const GraphKind& g, const GridCoord& c) {
  const auto r = radices(g);
  if (c.coords.size() != r.size()) throw std::invalid_argument("index_of: wrong arity");
  std::uint64_t index = 0;
  for (std::size_t t = 0; t < r.size(); ++t) {
    if (c.coords[t] < 0 || c.coords[t] >= r[t]) {
      throw std::out_of_range("index_of: coordinate outside extent");
    }
    index = index * static_cast<std::uint64_t>(r[t]) + static_cast<std::uint64_t>(c.coords[t]);
  }
  return index;
}

inline GhcLabel label_of(const GridCoord& c) { return GhcLabel(c.coords); }
inline GridCoord coord_of(const GhcLabel& r) { return GridCoord{r.digits()}; }

inline std::vector<GridCoord> guest_vertices(const GraphKind& g) {
  if (g.is_host()) {
    throw std::invalid_argument("guest_vertices: use host_vertices for " + to_string(g));
  }
  const std::uint64_t count = vertex_count(g);
  std::vector<GridCoord> out;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) out.push_back(coord_of(g, v));
  return out;
}

inline std::vector<Permutation> host_vertices(const GraphKind& g) {
  if (!g.is_host()) throw std::invalid_argument("host_vertices: not a host family");
  std::vector<Permutation> out;
  out.reserve(factorial(g.first));
  for_each_permutation(g.first, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

/// Undirected edge between vertex indices, u < v.
struct Edge {
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Every undirected edge once, (smaller, larger), sorted lexicographically.
/// Host vertices are indexed by lexicographic rank.
inline std::vector<Edge> guest_edges(const GraphKind& g) {
  validate(g);
  std::vector<Edge> out;
  if (g.is_host()) {
    const int n = g.first;
    for_each_permutation(n, [&](const Permutation& p) {
      const std::uint64_t u = rank(p);
      for (const auto& q : host_neighbors(g.family, p)) {
        const std::uint64_t v = rank(q);
        if (u < v) out.push_back({u, v});
      }
    });
    std::sort(out.begin(), out.end());
    return out;
  }
  if (g.family == Family::ring) {
    const auto size = static_cast<std::uint64_t>(g.first);
    for (std::uint64_t v = 0; v + 1 < size; ++v) out.push_back({v, v + 1});
    out.push_back({0, size - 1});
    std::sort(out.begin(), out.end());
    return out;
  }
  // Unit step in one coordinate (meshes) or any change in one coordinate
  // (ghc; hypercube coincides with both).
  const bool any_change = g.family == Family::ghc || g.family == Family::hypercube;
  const auto r = radices(g);
  const std::uint64_t count = vertex_count(g);
  for (std::uint64_t u = 0; u < count; ++u) {
    GridCoord c = coord_of(g, u);
    for (std::size_t t = 0; t < r.size(); ++t) {
      const int original = c.coords[t];
      const int top = any_change ? r[t] - 1 : std::min(original + 1, r[t] - 1);
      for (int value = original + 1; value <= top; ++value) {
        c.coords[t] = value;
        out.push_back({u, index_of(g, c)});
      }
      c.coords[t] = original;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Vertex text forms.

inline std::string vertex_text(const GraphKind& g, std::uint64_t index) {
  if (g.is_host()) return to_string(unrank(g.first, index));
  const GridCoord c = coord_of(g, index);
  switch (g.family) {
    case Family::ring:
    case Family::line:
      return std::to_string(c.coords[0]);
    case Family::grid2d:
      return '(' + std::to_string(c.coords[0]) + ',' + std::to_string(c.coords[1]) + ')';
    case Family::mixed_grid:
    case Family::ghc:
      return to_string(label_of(c));
    case Family::hypercube: {
      std::string bits;
      for (int b : c.coords) bits += static_cast<char>('0' + b);
      return bits;
    }
    default:
      break;
  }
  throw std::logic_error("vertex_text: unreachable");
}

inline std::uint64_t parse_vertex(const GraphKind& g, std::string_view text) {
  if (g.is_host()) {
    const Permutation p = parse_permutation(text);
    if (p.size() != g.first) throw std::invalid_argument("vertex dimension mismatch");
    return rank(p);
  }
  auto bad = [&] {
    return std::invalid_argument("malformed " + std::string(family_name(g.family)) +
                                 " vertex '" + std::string(text) + "'");
  };
  GridCoord c;
  try {
    switch (g.family) {
      case Family::ring:
      case Family::line: {
        std::size_t used = 0;
        c.coords = {std::stoi(std::string(text), &used)};
        if (used != text.size()) throw bad();
        break;
      }
      case Family::grid2d: {
        if (text.size() < 5 || text.front() != '(' || text.back() != ')') throw bad();
        const std::string inner(text.substr(1, text.size() - 2));
        const auto comma = inner.find(',');
        if (comma == std::string::npos) throw bad();
        std::size_t u1 = 0, u2 = 0;
        const int a = std::stoi(inner.substr(0, comma), &u1);
        const int b = std::stoi(inner.substr(comma + 1), &u2);
        if (u1 != comma || u2 != inner.size() - comma - 1) throw bad();
        c.coords = {a, b};
        break;
      }
      case Family::mixed_grid:
      case Family::ghc:
        c = coord_of(parse_label(text));
        break;
      case Family::hypercube:
        for (char ch : text) {
          if (ch != '0' && ch != '1') throw bad();
          c.coords.push_back(ch - '0');
        }
        break;
      default:
        throw bad();
    }
    return index_of(g, c);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

// ---------------------------------------------------------------------------
// Export.

namespace detail {
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}
}  // namespace detail

inline void write_edge_list_csv(std::ostream& os, const GraphKind& g,
                                const std::vector<Edge>& edges) {
  os << "u,v\n";
  for (const Edge& e : edges) {
    os << detail::csv_field(vertex_text(g, e.u)) << ','
       << detail::csv_field(vertex_text(g, e.v)) << '\n';
  }
}

inline void write_edge_list_dot(std::ostream& os, const GraphKind& g,
                                const std::vector<Edge>& edges) {
  os << "graph \"" << to_string(g) << "\" {\n";
  for (const Edge& e : edges) {
    os << "  \"" << vertex_text(g, e.u) << "\" -- \"" << vertex_text(g, e.v) << "\";\n";
  }
  os << "}\n";
}

}  // namespace pancake
