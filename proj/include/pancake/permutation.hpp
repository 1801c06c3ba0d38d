#pragma once

// Permutation arithmetic on one-line words.
//
// A permutation of {1..n} is stored as its one-line word x_1 x_2 ... x_n,
// i.e. pi(k) = x_k. Positions and symbols are 1-based in every public
// contract. Composition follows (p * q)(k) = p(q(k)), which makes
// right-multiplication by a generator word act on positions: compose(p, g_i)
// reverses the first i symbols of p.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pancake {

/// Largest dimension whose n! fits in 64 bits.
inline constexpr int kMaxDimension = 20;

inline std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw std::out_of_range("factorial: argument " + std::to_string(n) +
                            " outside [0, 20]");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

class Permutation {
 public:
  Permutation() = default;

  /// Takes a one-line word over {1..n}; throws unless it is a bijection.
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty()) {
      throw std::invalid_argument("permutation: empty word");
    }
    if (size() > kMaxDimension) {
      throw std::invalid_argument("permutation: dimension above 20");
    }
    std::vector<bool> seen(word_.size() + 1, false);
    for (int s : word_) {
      if (s < 1 || s > size() || seen[s]) {
        throw std::invalid_argument("permutation: word is not a bijection on {1.." +
                                    std::to_string(size()) + "}");
      }
      seen[s] = true;
    }
  }

  Permutation(std::initializer_list<int> word)
      : Permutation(std::vector<int>(word)) {}

  int size() const { return static_cast<int>(word_.size()); }

  /// Symbol at 1-based position `pos`.
  int at(int pos) const {
    if (pos < 1 || pos > size()) {
      throw std::out_of_range("permutation: position " + std::to_string(pos) +
                              " outside [1, " + std::to_string(size()) + "]");
    }
    return word_[pos - 1];
  }

  /// 1-based position holding symbol `s`.
  int position_of(int s) const {
    auto it = std::find(word_.begin(), word_.end(), s);
    if (it == word_.end()) {
      throw std::out_of_range("permutation: symbol " + std::to_string(s) +
                              " not present");
    }
    return static_cast<int>(it - word_.begin()) + 1;
  }

  const std::vector<int>& word() const { return word_; }

  bool is_identity() const {
    for (int k = 0; k < size(); ++k) {
      if (word_[k] != k + 1) return false;
    }
    return true;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

/// Ordered list of prefix-reversal indices, each at least 2.
class GenSeq {
 public:
  GenSeq() = default;
  explicit GenSeq(std::vector<int> indices) : indices_(std::move(indices)) {
    for (int i : indices_) {
      if (i < 2) {
        throw std::invalid_argument("generator sequence: index " +
                                    std::to_string(i) + " below 2");
      }
    }
  }
  GenSeq(std::initializer_list<int> indices)
      : GenSeq(std::vector<int>(indices)) {}

  const std::vector<int>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  int operator[](std::size_t t) const { return indices_[t]; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  /// Largest index, 0 for the empty sequence.
  int max_index() const {
    return indices_.empty() ? 0 : *std::max_element(indices_.begin(), indices_.end());
  }

  void append(const GenSeq& other) {
    indices_.insert(indices_.end(), other.indices_.begin(), other.indices_.end());
  }
  void push_back(int i) {
    if (i < 2) throw std::invalid_argument("generator sequence: index below 2");
    indices_.push_back(i);
  }

  friend bool operator==(const GenSeq&, const GenSeq&) = default;

 private:
  std::vector<int> indices_;
};

/// sigma(length, amount): rotates the first `length` symbols so that the last
/// `amount` of them move to the front.
struct CyclicShift {
  int length = 1;
  int amount = 0;

  friend bool operator==(const CyclicShift&, const CyclicShift&) = default;
};

inline Permutation identity(int n) {
  if (n < 1) {
    throw std::invalid_argument("identity: invalid dimension " + std::to_string(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

inline Permutation prefix_reverse(const Permutation& p, int i) {
  if (i < 2 || i > p.size()) {
    throw std::invalid_argument("prefix_reverse: invalid generator index " +
                                std::to_string(i) + " for n=" + std::to_string(p.size()));
  }
  std::vector<int> w = p.word();
  std::reverse(w.begin(), w.begin() + i);
  return Permutation(std::move(w));
}

inline Permutation star_swap(const Permutation& p, int i) {
  if (i < 2 || i > p.size()) {
    throw std::invalid_argument("star_swap: invalid position " + std::to_string(i) +
                                " for n=" + std::to_string(p.size()));
  }
  std::vector<int> w = p.word();
  std::swap(w[0], w[static_cast<std::size_t>(i - 1)]);
  return Permutation(std::move(w));
}

/// (p * q)(k) = p(q(k)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("compose: mismatched dimensions " +
                                std::to_string(p.size()) + " and " +
                                std::to_string(q.size()));
  }
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int k = 0; k < p.size(); ++k) w[k] = p.word()[q.word()[k] - 1];
  return Permutation(std::move(w));
}

inline Permutation invert(const Permutation& p) {
  std::vector<int> w(static_cast<std::size_t>(p.size()));
  for (int k = 0; k < p.size(); ++k) w[p.word()[k] - 1] = k + 1;
  return Permutation(std::move(w));
}

/// One-line word of g_i on n symbols: i (i-1) ... 1 (i+1) ... n.
inline Permutation generator_word(int i, int n) {
  return prefix_reverse(identity(n), i);
}

/// One-line word of sigma(l, m): (l-m+1) ... l 1 ... (l-m) (l+1) ... n.
/// sigma(l, 0) and sigma(l, l) are the identity.
inline Permutation cyclic_shift_word(CyclicShift s, int n) {
  if (s.length < 1 || s.length > n || s.amount < 0 || s.amount > s.length) {
    throw std::invalid_argument("cyclic_shift_word: need 0 <= m <= l <= n, got l=" +
                                std::to_string(s.length) + " m=" +
                                std::to_string(s.amount) + " n=" + std::to_string(n));
  }
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int x = s.length - s.amount + 1; x <= s.length; ++x) w.push_back(x);
  for (int x = 1; x <= s.length - s.amount; ++x) w.push_back(x);
  for (int x = s.length + 1; x <= n; ++x) w.push_back(x);
  return Permutation(std::move(w));
}

/// pi_0 = p, pi_t = prefix_reverse(pi_{t-1}, s[t]).
inline std::vector<Permutation> apply_gen_seq(const Permutation& p, const GenSeq& s) {
  if (s.max_index() > p.size()) {
    throw std::invalid_argument("apply_gen_seq: index " + std::to_string(s.max_index()) +
                                " exceeds n=" + std::to_string(p.size()));
  }
  std::vector<Permutation> out;
  out.reserve(s.size() + 1);
  out.push_back(p);
  for (int i : s) out.push_back(prefix_reverse(out.back(), i));
  return out;
}

// Lexicographic rank in [0, n!), used to index distance tables.
inline std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < n; ++k) {
    const int s = p.word()[k];
    int smaller_unused = 0;
    for (int t = 1; t < s; ++t) {
      if (!(used & (1u << t))) ++smaller_unused;
    }
    used |= 1u << s;
    r = r * static_cast<std::uint64_t>(n - k) + static_cast<std::uint64_t>(smaller_unused);
  }
  return r;
}

inline Permutation unrank(int n, std::uint64_t r) {
  if (r >= factorial(n)) {
    throw std::out_of_range("unrank: rank " + std::to_string(r) + " >= " +
                            std::to_string(n) + "!");
  }
  std::vector<int> digits(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    const auto radix = static_cast<std::uint64_t>(n - k);
    digits[k] = static_cast<int>(r % radix);
    r /= radix;
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    w.push_back(pool[digits[k]]);
    pool.erase(pool.begin() + digits[k]);
  }
  return Permutation(std::move(w));
}

/// Calls `f` on every permutation of {1..n} in lexicographic order.
template <typename F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    f(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

// Textual form: contiguous digits for n <= 9, comma-separated otherwise.
inline std::string to_string(const Permutation& p) {
  std::string out;
  const bool compact = p.size() <= 9;
  for (int k = 0; k < p.size(); ++k) {
    if (!compact && k > 0) out += ',';
    out += std::to_string(p.word()[k]);
  }
  return out;
}

inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t comma = std::min(text.find(',', start), text.size());
      std::string_view field = text.substr(start, comma - start);
      while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
      while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
      if (field.empty() ||
          !std::all_of(field.begin(), field.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed permutation text '" + std::string(text) + "'");
      }
      w.push_back(std::stoi(std::string(field)));
      start = comma + 1;
    }
  } else {
    if (text.empty() || text.size() > 9) {
      throw std::invalid_argument("malformed permutation text '" + std::string(text) +
                                  "': digit strings only allowed for n <= 9");
    }
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("malformed permutation text '" + std::string(text) + "'");
      }
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

inline std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << to_string(p);
}

}  // namespace pancake

template <>
struct std::hash<pancake::Permutation> {
  std::size_t operator()(const pancake::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int s : p.word()) h = (h ^ static_cast<std::size_t>(s)) * 1099511628211ull;
    return h;
  }
};
