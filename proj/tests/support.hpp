#pragma once

// Conversions between library values and oracle words, plus the hop
// histograms measured by an independent prototype and frozen here.

#include <map>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pancake/pancake.hpp"

namespace support {

inline oracle::Word words(const pancake::Permutation& p) { return p.word(); }
inline oracle::Word words(const pancake::MixedRadixLabel& r) { return r.digits(); }
inline pancake::Permutation perm(const oracle::Word& w) { return pancake::Permutation(w); }
inline pancake::Permutation perm(const std::string& s) { return pancake::parse_permutation(s); }

inline std::map<int, int> as_int_map(const std::map<int, std::size_t>& h) {
  std::map<int, int> out;
  for (auto [k, v] : h) out[k] = static_cast<int>(v);
  return out;
}

/// Shifted-rows grid histograms keyed by (n, p); p = n-1 is the n x (n-1)! grid.
inline const std::map<std::pair<int, int>, std::map<int, int>>& frozen_grid_histograms() {
  static const std::map<std::pair<int, int>, std::map<int, int>> h{
      {{4, 2}, {{1, 2}, {2, 8}, {3, 3}, {4, 3}}},
      {{4, 3}, {{1, 7}, {2, 18}, {3, 10}, {4, 3}}},
      {{5, 2}, {{1, 2}, {2, 14}, {3, 6}, {4, 6}}},
      {{5, 3}, {{1, 7}, {2, 36}, {3, 23}, {4, 14}, {5, 2}}},
      {{5, 4}, {{1, 26}, {2, 96}, {3, 58}, {4, 23}, {5, 8}}},
      {{6, 2}, {{1, 2}, {2, 22}, {3, 10}, {4, 9}}},
      {{6, 3}, {{1, 7}, {2, 60}, {3, 41}, {4, 25}, {5, 4}}},
      {{6, 4}, {{1, 26}, {2, 192}, {3, 136}, {4, 70}, {5, 19}, {6, 3}}},
      {{6, 5}, {{1, 123}, {2, 600}, {3, 398}, {4, 123}, {5, 55}, {6, 15}}},
  };
  return h;
}

struct LabelHistograms {
  std::map<int, int> mixed_pancake, mixed_star, ghc_pancake, ghc_star;
};

inline const std::map<int, LabelHistograms>& frozen_label_histograms() {
  static const std::map<int, LabelHistograms> h{
      {4,
       {{{1, 16}, {3, 28}, {4, 2}},
        {{1, 18}, {3, 28}},
        {{1, 20}, {2, 8}, {3, 38}, {4, 6}},
        {{1, 26}, {2, 20}, {3, 20}, {4, 6}}}},
      {5,
       {{{1, 80}, {3, 220}, {4, 16}, {5, 10}},
        {{1, 96}, {3, 230}},
        {{1, 100}, {2, 40}, {3, 238}, {4, 174}, {5, 48}},
        {{1, 154}, {2, 172}, {3, 172}, {4, 102}}}},
      {6,
       {{{1, 480}, {3, 1800}, {4, 120}, {5, 96}, {6, 60}},
        {{1, 600}, {3, 1956}},
        {{1, 600}, {2, 240}, {3, 1668}, {4, 1524}, {5, 1128}, {6, 240}},
        {{1, 1044}, {2, 1512}, {3, 1512}, {4, 1332}}}},
  };
  return h;
}

}  // namespace support
