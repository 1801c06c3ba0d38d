#pragma once

// Brute-force reference implementations for the tests. Nothing here calls the
// library: words are plain vectors, graphs are explored with std::map BFS,
// codings are read straight off their definitions, and inverses are found by
// search.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

inline Word word(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

inline std::string text(const Word& w) {
  std::string s;
  for (int x : w) s += static_cast<char>('0' + x);
  return s;
}

inline Word ident(int n) {
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  return w;
}

inline std::vector<Word> all_words(int n) {
  std::vector<Word> out;
  Word w = ident(n);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline Word flip(Word w, int i) {
  std::reverse(w.begin(), w.begin() + i);
  return w;
}

inline Word swap1(Word w, int i) {
  std::swap(w[0], w[i - 1]);
  return w;
}

inline std::vector<Word> neighbours(char host, const Word& w) {
  std::vector<Word> out;
  for (int i = 2; i <= static_cast<int>(w.size()); ++i) out.push_back(host == 'p' ? flip(w, i) : swap1(w, i));
  return out;
}

/// Hop distances from `src` to every vertex, by plain BFS over the words.
inline std::map<Word, int> bfs(char host, const Word& src) {
  std::map<Word, int> dist{{src, 0}};
  std::queue<Word> q;
  q.push(src);
  while (!q.empty()) {
    Word u = q.front();
    q.pop();
    for (const Word& v : neighbours(host, u)) {
      if (dist.emplace(v, dist[u] + 1).second) q.push(v);
    }
  }
  return dist;
}

inline int distance(char host, const Word& u, const Word& v) { return bfs(host, u).at(v); }

/// (p.q)(k) = p(q(k)), read position by position.
inline Word compose(const Word& p, const Word& q) {
  Word r(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) r[k] = p[q[k] - 1];
  return r;
}

/// Searches all words for q with p.q = identity.
inline Word brute_inverse(const Word& p) {
  const Word id = ident(static_cast<int>(p.size()));
  for (const Word& q : all_words(static_cast<int>(p.size()))) {
    if (compose(p, q) == id) return q;
  }
  return {};
}

// Codings straight from their definitions.

/// a_i = number of symbols smaller than i standing to the left of i.
inline Word left_count(const Word& w) {
  Word a;
  for (int i = 2; i <= static_cast<int>(w.size()); ++i) {
    int c = 0;
    for (int x : w) {
      if (x == i) break;
      if (x < i) ++c;
    }
    a.push_back(c);
  }
  return a;
}

/// For k = n down to 2: a_k = x_k - 1, then exchange the symbols x_k and k.
inline Word rule_r(Word w) {
  const int n = static_cast<int>(w.size());
  Word a(n - 1);
  for (int k = n; k >= 2; --k) {
    const int xk = w[k - 1];
    a[k - 2] = xk - 1;
    for (int& s : w) {
      if (s == xk) {
        s = k;
      } else if (s == k) {
        s = xk;
      }
    }
  }
  return a;
}

/// All labels a_2..a_n with 0 <= a_i <= i-1, first digit most significant.
inline std::vector<Word> all_labels(int n) {
  std::vector<Word> out{{}};
  for (int i = 2; i <= n; ++i) {
    std::vector<Word> next;
    for (const Word& prefix : out) {
      for (int d = 0; d < i; ++d) {
        Word w = prefix;
        w.push_back(d);
        next.push_back(std::move(w));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// label -> word for a coding, built by encoding every word.
template <typename Code>
std::map<Word, Word> decode_table(int n, Code code) {
  std::map<Word, Word> out;
  for (const Word& w : all_words(n)) out.emplace(code(w), w);
  return out;
}

/// Preimage of a label under a coding, found by scanning every word.
template <typename Code>
Word preimage(const Word& label, int n, Code code) {
  for (const Word& w : all_words(n)) {
    if (code(w) == label) return w;
  }
  return {};
}

// Guest adjacency from label pairs.

inline int positions_differing(const Word& a, const Word& b) {
  int c = 0;
  for (std::size_t t = 0; t < a.size(); ++t) c += a[t] != b[t];
  return c;
}

inline bool ghc_adjacent(const Word& a, const Word& b) { return positions_differing(a, b) == 1; }

inline bool mixed_adjacent(const Word& a, const Word& b) {
  if (positions_differing(a, b) != 1) return false;
  for (std::size_t t = 0; t < a.size(); ++t) {
    if (a[t] != b[t]) return std::abs(a[t] - b[t]) == 1;
  }
  return false;
}

template <typename Adjacent>
std::vector<std::pair<Word, Word>> label_edges(int n, Adjacent adjacent) {
  const auto labels = all_labels(n);
  std::vector<std::pair<Word, Word>> out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    for (std::size_t t = s + 1; t < labels.size(); ++t) {
      if (adjacent(labels[s], labels[t])) out.emplace_back(labels[s], labels[t]);
    }
  }
  return out;
}

/// Hop histogram of an edge set mapped into a host, distances by per-source BFS.
template <typename Map>
std::map<int, int> histogram(char host, const std::vector<std::pair<Word, Word>>& edges, Map image) {
  std::map<Word, std::map<Word, int>> cache;
  std::map<int, int> hist;
  for (const auto& [u, v] : edges) {
    const Word a = image(u);
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, bfs(host, a)).first;
    ++hist[it->second.at(image(v))];
  }
  return hist;
}

/// Pancake sequence G_k by its recursive definition.
inline Word pancake_sequence(int k) {
  if (k == 2) return {2};
  const Word inner = pancake_sequence(k - 1);
  Word out;
  for (int copy = 0; copy < k; ++copy) {
    if (copy > 0) out.push_back(k);
    out.insert(out.end(), inner.begin(), inner.end());
  }
  return out;
}

/// The 24-entry order of P_4 under the pancake sequence, as printed.
inline const std::vector<std::string>& p4_order() {
  static const std::vector<std::string> order{
      "1234", "2134", "3124", "1324", "2314", "3214", "4123", "1423", "2413", "4213", "1243", "2143",
      "3412", "4312", "1342", "3142", "4132", "1432", "2341", "3241", "4231", "2431", "3421", "4321"};
  return order;
}

/// sigma(l, m) = (l-m+1)..l 1..(l-m) (l+1)..n.
inline Word sigma(int l, int m, int n) {
  Word w;
  for (int s = l - m + 1; s <= l; ++s) w.push_back(s);
  for (int s = 1; s <= l - m; ++s) w.push_back(s);
  for (int s = l + 1; s <= n; ++s) w.push_back(s);
  return w;
}

/// Images of the shifted-rows grid: row 0 is the walk of G_p from the
/// identity, later rows right-multiply it by sigma(n,1..n-1), then
/// sigma(n-1,1..n-2), down to sigma(p+1,1..p). Returns rows of images.
inline std::vector<std::vector<Word>> shifted_rows(int p, int n) {
  std::vector<Word> first{ident(n)};
  for (int i : pancake_sequence(p)) first.push_back(flip(first.back(), i));
  std::vector<std::vector<Word>> rows{first};
  for (int l = n; l >= p + 1; --l) {
    for (int m = 1; m <= l - 1; ++m) {
      std::vector<Word> row;
      for (const Word& pi : first) row.push_back(compose(pi, sigma(l, m, n)));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Hop histogram of the shifted-rows grid in P_n (horizontal and vertical edges).
inline std::map<int, int> shifted_rows_histogram(int p, int n) {
  const auto rows = shifted_rows(p, n);
  std::map<int, int> hist;
  std::map<Word, std::map<Word, int>> cache;
  auto d = [&](const Word& a, const Word& b) {
    auto it = cache.find(a);
    if (it == cache.end()) it = cache.emplace(a, bfs('p', a)).first;
    return it->second.at(b);
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c + 1 < rows[r].size()) ++hist[d(rows[r][c], rows[r][c + 1])];
      if (r + 1 < rows.size()) ++hist[d(rows[r][c], rows[r + 1][c])];
    }
  }
  return hist;
}

/// Any 4-cycle in an explicit undirected edge list, by checking every
/// pair of vertices for two common neighbours.
inline bool any_4cycle(const std::vector<std::pair<int, int>>& edges) {
  std::map<int, std::set<int>> adj;
  for (auto [u, v] : edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  for (const auto& [u, nu] : adj) {
    for (const auto& [v, nv] : adj) {
      if (v <= u) continue;
      int common = 0;
      for (int w : nu) common += static_cast<int>(nv.count(w));
      if (common >= 2) return true;
    }
  }
  return false;
}

}  // namespace oracle
