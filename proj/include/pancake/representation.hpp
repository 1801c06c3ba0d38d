#pragma once

// Two mixed-radix codings of permutations onto labels a_2 ... a_n.
//
// left-count: a_i counts the symbols smaller than i standing left of i.
// rule-R:     scan k = n .. 2; record (symbol at position k) - 1, then
//             exchange that symbol with symbol k.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pancake/permutation.hpp"
#include "pancake/topology.hpp"

namespace pancake {

using LeftCountRep = MixedRadixLabel;
using RuleRRep = MixedRadixLabel;

inline LeftCountRep left_count_encode(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("left_count_encode: need n >= 2");
  std::vector<int> digits;
  digits.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 2; i <= n; ++i) {
    int smaller_left = 0;
    for (int pos = 1; p.at(pos) != i; ++pos) {
      if (p.at(pos) < i) ++smaller_left;
    }
    digits.push_back(smaller_left);
  }
  return LeftCountRep(std::move(digits));
}

// Symbols 1..i-1 are already placed when i is inserted, so inserting i at
// offset a_i puts exactly a_i smaller symbols to its left. Later insertions
// do not change relative order.
inline Permutation left_count_decode(const LeftCountRep& r) {
  std::vector<int> w{1};
  for (int i = 2; i <= r.dimension(); ++i) {
    w.insert(w.begin() + r.digit(i), i);
  }
  return Permutation(std::move(w));
}

inline RuleRRep rule_r_encode(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw std::invalid_argument("rule_r_encode: need n >= 2");
  std::vector<int> w = p.word();
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) where[w[k]] = k;
  std::vector<int> digits(static_cast<std::size_t>(n - 1));
  for (int k = n; k >= 2; --k) {
    const int s = w[k - 1];
    digits[k - 2] = s - 1;
    // exchange symbols s and k
    const int ps = where[s];
    const int pk = where[k];
    std::swap(w[ps], w[pk]);
    where[s] = pk;
    where[k] = ps;
  }
  return RuleRRep(std::move(digits));
}

// Each forward step is an involution on symbol values; replaying the
// exchanges in the opposite order from the identity inverts the coding.
inline Permutation rule_r_decode(const RuleRRep& r) {
  const int n = r.dimension();
  std::vector<int> w(static_cast<std::size_t>(n));
  std::vector<int> where(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k < n; ++k) {
    w[k] = k + 1;
    where[k + 1] = k;
  }
  for (int k = 2; k <= n; ++k) {
    const int s = r.digit(k) + 1;
    const int ps = where[s];
    const int pk = where[k];
    std::swap(w[ps], w[pk]);
    where[s] = pk;
    where[k] = ps;
  }
  return Permutation(std::move(w));
}

/// Digits (i values) at which two labels of equal dimension differ.
inline std::vector<int> differing_digits(const MixedRadixLabel& a, const MixedRadixLabel& b) {
  if (a.dimension() != b.dimension()) {
    throw std::invalid_argument("differing_digits: dimension mismatch");
  }
  std::vector<int> out;
  for (int i = 2; i <= a.dimension(); ++i) {
    if (a.digit(i) != b.digit(i)) out.push_back(i);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Three-position differences.

/// How the symbols at the listed positions move from X to Y.
enum class Diff3Shape {
  transposition,    // X = A x B y C,     Y = A y B x C
  rotate_forward,   // X = A x B y C z D, Y = A z B x C y D
  rotate_backward,  // X = A x B y C z D, Y = A y B z C x D
};

struct Diff3 {
  Diff3Shape shape = Diff3Shape::transposition;
  std::vector<int> positions;  // 1-based, strictly increasing
  std::vector<int> symbols_x;  // symbols of X at `positions`
  std::vector<int> symbols_y;  // symbols of Y at `positions`
  // Segments around the listed positions; `d` is empty for a transposition.
  std::vector<int> a, b, c, d;
};

class NotUnitDifference : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Diff3 diff3_decompose(const Permutation& x, const Permutation& y) {
  if (x.size() != y.size()) throw std::invalid_argument("diff3_decompose: dimension mismatch");
  Diff3 out;
  for (int k = 1; k <= x.size(); ++k) {
    if (x.at(k) != y.at(k)) {
      out.positions.push_back(k);
      out.symbols_x.push_back(x.at(k));
      out.symbols_y.push_back(y.at(k));
    }
  }
  const auto& sx = out.symbols_x;
  const auto& sy = out.symbols_y;
  if (out.positions.size() == 2) {
    out.shape = Diff3Shape::transposition;
  } else if (out.positions.size() == 3 && sy[0] == sx[2] && sy[1] == sx[0] && sy[2] == sx[1]) {
    out.shape = Diff3Shape::rotate_forward;
  } else if (out.positions.size() == 3 && sy[0] == sx[1] && sy[1] == sx[2] && sy[2] == sx[0]) {
    out.shape = Diff3Shape::rotate_backward;
  } else {
    throw NotUnitDifference("not a rule-R unit difference: words differ in " +
                            std::to_string(out.positions.size()) +
                            " positions without a single-cycle pattern");
  }
  const auto& w = x.word();
  std::vector<std::vector<int>*> segments{&out.a, &out.b, &out.c, &out.d};
  int from = 1;
  for (std::size_t t = 0; t <= out.positions.size(); ++t) {
    const int to = t < out.positions.size() ? out.positions[t] : x.size() + 1;
    segments[t]->assign(w.begin() + (from - 1), w.begin() + (to - 1));
    from = to + 1;
  }
  return out;
}

namespace detail {
inline Permutation assemble(const Diff3& d, const std::vector<int>& symbols) {
  std::vector<int> w = d.a;
  const std::vector<int>* gaps[] = {&d.b, &d.c, &d.d};
  for (std::size_t t = 0; t < symbols.size(); ++t) {
    w.push_back(symbols[t]);
    w.insert(w.end(), gaps[t]->begin(), gaps[t]->end());
  }
  return Permutation(std::move(w));
}
}  // namespace detail

inline Permutation reconstruct_x(const Diff3& d) { return detail::assemble(d, d.symbols_x); }
inline Permutation reconstruct_y(const Diff3& d) { return detail::assemble(d, d.symbols_y); }

}  // namespace pancake
