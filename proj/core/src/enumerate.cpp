#include "qpart/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qpart {

RgfEnumerator::RgfEnumerator(int n, int k, std::span<const int> prefix) : k_(k) {
  if (n < 0 || k < 0 || k > n || (k == 0 && n > 0)) return;
  if (prefix.size() > static_cast<std::size_t>(n)) return;

  const auto len = static_cast<std::size_t>(n);
  current_ = SetPartition(std::vector<int>(len, 0), k);
  prefix_max_.assign(len, 0);
  int running = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const int w = prefix[i];
    if (w < 1 || w > running + 1 || w > k) return;
    running = std::max(running, w);
    current_.word_[i] = w;
    prefix_max_[i] = running;
  }
  const int remaining = n - static_cast<int>(prefix.size());
  if (k - running > remaining) return;

  fixed_ = prefix.size();
  fill_suffix(fixed_);
  done_ = false;
}

// Writes the lexicographically smallest completion of positions [from, n):
// ones, then the missing letters m+1..k at the very end.
void RgfEnumerator::fill_suffix(std::size_t from) {
  auto& w = current_.word_;
  const std::size_t n = w.size();
  int m = from == 0 ? 0 : prefix_max_[from - 1];
  for (std::size_t i = from; i < n; ++i) {
    const auto after = static_cast<int>(n - 1 - i);
    const int letter = k_ - std::max(m, 1) > after ? m + 1 : 1;
    w[i] = letter;
    m = std::max(m, letter);
    prefix_max_[i] = m;
  }
}

void RgfEnumerator::next() {
  if (done_) return;
  auto& w = current_.word_;
  const std::size_t n = w.size();
  const std::size_t lowest = std::max<std::size_t>(fixed_, 1);
  for (std::size_t i = n; i-- > lowest;) {
    const int base = prefix_max_[i - 1];
    const int candidate = w[i] + 1;
    if (candidate > base + 1 || candidate > k_) continue;
    const int new_max = std::max(base, candidate);
    const auto after = static_cast<int>(n - 1 - i);
    if (k_ - new_max > after) continue;
    w[i] = candidate;
    prefix_max_[i] = new_max;
    fill_suffix(i + 1);
    return;
  }
  done_ = true;
}

OrderedEnumerator::OrderedEnumerator(int n, int k) : canonical_(n, k) {
  order_.resize(static_cast<std::size_t>(std::max(k, 0)));
  std::iota(order_.begin(), order_.end(), 1);
  if (!canonical_.done()) refresh();
}

void OrderedEnumerator::refresh() {
  current_ = OrderedSetPartition::arrange(canonical_.current(), order_);
}

void OrderedEnumerator::next() {
  if (canonical_.done()) return;
  if (!std::next_permutation(order_.begin(), order_.end())) {
    // order_ is back to the identity
    canonical_.next();
    if (canonical_.done()) return;
  }
  refresh();
}

std::vector<std::vector<int>> rgf_prefixes(int n, int k, int length) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0 || k > n || (k == 0 && n > 0)) return out;
  length = std::clamp(length, 0, n);
  std::vector<int> prefix;
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int running) -> void {
    const auto depth = static_cast<int>(prefix.size());
    if (k - running > n - depth) return;
    if (depth == length) {
      out.push_back(prefix);
      return;
    }
    const int top = std::min(running + 1, k);
    for (int w = 1; w <= top; ++w) {
      prefix.push_back(w);
      self(self, std::max(running, w));
      prefix.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::uint64_t stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // S(0, 0)
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      std::uint64_t a = 0;
      std::uint64_t b = 0;
      if (__builtin_mul_overflow(static_cast<std::uint64_t>(j), row[static_cast<std::size_t>(j)], &a) ||
          __builtin_add_overflow(a, row[static_cast<std::size_t>(j - 1)], &b)) {
        throw std::overflow_error("S(n, k) exceeds 64 bits");
      }
      row[static_cast<std::size_t>(j)] = b;
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

std::uint64_t bell(int n) {
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    if (__builtin_add_overflow(total, stirling2(n, k), &total)) {
      throw std::overflow_error("Bell number exceeds 64 bits");
    }
  }
  return total;
}

}  // namespace qpart
