#pragma once

// Brute-force reference implementations. Everything here is written straight
// from the definitions and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace oracle {

using Blocks = std::vector<std::vector<int>>;

// All set partitions of [n], built by inserting n into an existing block or a
// new one. Blocks are sorted internally and ordered by their minima.
inline std::vector<Blocks> all_partitions(int n) {
  std::vector<Blocks> out{{}};
  for (int x = 1; x <= n; ++x) {
    std::vector<Blocks> next;
    for (const Blocks& p : out) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        Blocks q = p;
        q[b].push_back(x);
        next.push_back(std::move(q));
      }
      Blocks q = p;
      q.push_back({x});
      next.push_back(std::move(q));
    }
    out = std::move(next);
  }
  return out;
}

inline std::vector<Blocks> partitions(int n, int k) {
  std::vector<Blocks> out;
  for (auto& p : all_partitions(n)) {
    if (static_cast<int>(p.size()) == k) out.push_back(std::move(p));
  }
  return out;
}

inline int size_of(const Blocks& p) {
  int n = 0;
  for (const auto& b : p) n += static_cast<int>(b.size());
  return n;
}

// w[i] = 1-based index of the block containing i (w[0] unused).
inline std::vector<int> word(const Blocks& p) {
  std::vector<int> w(static_cast<std::size_t>(size_of(p)) + 1, 0);
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (int x : p[b]) w[static_cast<std::size_t>(x)] = static_cast<int>(b) + 1;
  }
  return w;
}

inline bool is_opener(const Blocks& p, int j) {
  for (const auto& b : p) {
    if (*std::min_element(b.begin(), b.end()) == j) return true;
  }
  return false;
}

inline bool is_closer(const Blocks& p, int j) {
  for (const auto& b : p) {
    if (*std::max_element(b.begin(), b.end()) == j) return true;
  }
  return false;
}

// Coordinate statistic by its literal definition:
//   right/left  -> compare block index  w_j > w_i / w_j < w_i
//   opener/closer -> j ranges over O or F
//   smaller/bigger -> j < i / j > i
struct Coord {
  bool right;
  bool opener;
  bool smaller;
};

inline std::int64_t coord(const Blocks& p, Coord c, int i) {
  const auto w = word(p);
  const int n = size_of(p);
  std::int64_t count = 0;
  for (int j = 1; j <= n; ++j) {
    if (c.opener ? !is_opener(p, j) : !is_closer(p, j)) continue;
    if (c.smaller ? !(j < i) : !(j > i)) continue;
    const int wi = w[static_cast<std::size_t>(i)];
    const int wj = w[static_cast<std::size_t>(j)];
    if (c.right ? wj > wi : wj < wi) ++count;
  }
  return count;
}

inline std::int64_t coord_sum(const Blocks& p, Coord c) {
  std::int64_t total = 0;
  for (int i = 1; i <= size_of(p); ++i) total += coord(p, c, i);
  return total;
}

constexpr Coord ROS{true, true, true};
constexpr Coord ROB{true, true, false};
constexpr Coord RCS{true, false, true};
constexpr Coord RCB{true, false, false};
constexpr Coord LOS{false, true, true};
constexpr Coord LOB{false, true, false};
constexpr Coord LCS{false, false, true};
constexpr Coord LCB{false, false, false};

inline std::int64_t nk1(const Blocks& p) {
  return static_cast<std::int64_t>(size_of(p)) * (static_cast<std::int64_t>(p.size()) - 1);
}

inline std::int64_t mak(const Blocks& p) { return coord_sum(p, ROS) + coord_sum(p, LCS); }
inline std::int64_t makp(const Blocks& p) { return coord_sum(p, LOB) + coord_sum(p, RCB); }
inline std::int64_t lmak(const Blocks& p) { return nk1(p) - coord_sum(p, LOS) - coord_sum(p, RCS); }
inline std::int64_t lmakp(const Blocks& p) { return nk1(p) - coord_sum(p, LCB) - coord_sum(p, ROB); }

// Elements of later blocks that are smaller / larger than b; earlier blocks larger than b.
inline std::int64_t rinv(const Blocks& p, int b) {
  const auto w = word(p);
  std::int64_t c = 0;
  for (int a = 1; a <= size_of(p); ++a) {
    if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)] && a < b) ++c;
  }
  return c;
}

inline std::int64_t nrinv(const Blocks& p, int b) {
  const auto w = word(p);
  std::int64_t c = 0;
  for (int a = 1; a <= size_of(p); ++a) {
    if (w[static_cast<std::size_t>(a)] > w[static_cast<std::size_t>(b)] && a > b) ++c;
  }
  return c;
}

inline std::int64_t linv(const Blocks& p, int b) {
  const auto w = word(p);
  std::int64_t c = 0;
  for (int a = 1; a <= size_of(p); ++a) {
    if (w[static_cast<std::size_t>(a)] < w[static_cast<std::size_t>(b)] && a > b) ++c;
  }
  return c;
}

inline std::int64_t mak_l(const Blocks& p, int l) {
  const auto& b = p[static_cast<std::size_t>(l - 1)];
  const int g = *std::max_element(b.begin(), b.end());
  return mak(p) - nrinv(p, g) + static_cast<std::int64_t>(p.size()) - l;
}

// B_i > B_j: every letter of B_i exceeds every letter of B_j.
inline bool dominates(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a) {
    for (int y : b) {
      if (x <= y) return false;
    }
  }
  return true;
}

inline std::int64_t bmaj(const Blocks& p) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (dominates(p[i], p[i + 1])) t += static_cast<std::int64_t>(i) + 1;
  }
  return t;
}

inline std::int64_t binv(const Blocks& p) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (dominates(p[i], p[j])) ++t;
    }
  }
  return t;
}

// Every block order of every partition in P_n^k.
inline std::vector<Blocks> ordered_partitions(int n, int k) {
  std::vector<Blocks> out;
  for (const Blocks& p : partitions(n, k)) {
    std::vector<int> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    do {
      Blocks q;
      for (int i : order) q.push_back(p[static_cast<std::size_t>(i)]);
      out.push_back(std::move(q));
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return out;
}

// Integer polynomial as exponent -> coefficient.
using Poly = std::map<int, std::int64_t>;

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  return out;
}

// S_q(n, k) as the sum over restricted growth words of q^{sum (w_i - 1)}.
inline Poly q_stirling(int n, int k) {
  Poly out;
  for (const Blocks& p : partitions(n, k)) {
    const auto w = word(p);
    int e = 0;
    for (int i = 1; i <= n; ++i) e += w[static_cast<std::size_t>(i)] - 1;
    ++out[e];
  }
  if (n == 0 && k == 0) out[0] = 1;
  return out;
}

inline Poly q_factorial(int k) {
  Poly out{{0, 1}};
  for (int i = 1; i <= k; ++i) {
    Poly qi;
    for (int e = 0; e < i; ++e) qi[e] = 1;
    out = mul(out, qi);
  }
  return out;
}

template <class Stat>
Poly generating_function(const std::vector<Blocks>& family, Stat stat) {
  Poly out;
  for (const auto& p : family) ++out[static_cast<int>(stat(p))];
  return out;
}

}  // namespace oracle
