#pragma once

// q-integers, q-factorials, q-Stirling numbers of the second kind and
// generating functions of statistics over partition families.
//
//   S_q(n, k) = q^{k-1} S_q(n-1, k-1) + [k]_q S_q(n-1, k)   for 1 <= k <= n
//   S_q(n, k) = delta_{nk}                                   if n = 0 or k = 0

#include <concepts>
#include <cstdint>
#include <mutex>
#include <optional>
#include <ranges>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpart/qpolynomial.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"

namespace qpart {

/// [k]_q = 1 + q + ... + q^{k-1}; [0]_q = 0. Throws std::invalid_argument for k < 0.
QPolynomial q_int(int k);
/// [k]_q! = [1]_q [2]_q ... [k]_q; [0]_q! = 1.
QPolynomial q_factorial(int k);

/// Memo table for S_q(n, k) with 0 <= n <= n_max. Lookups from several
/// threads are safe; filling is serialized.
class QStirlingTable {
 public:
  explicit QStirlingTable(int n_max);

  int n_max() const noexcept { return n_max_; }
  /// S_q(n, k). Zero for k > n. Throws std::out_of_range for n > n_max or negative arguments.
  QPolynomial get(int n, int k) const;

 private:
  void fill_through(int n) const;

  int n_max_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<QPolynomial>> rows_;  // rows_[n][k], 0 <= k <= n
};

QPolynomial q_stirling(int n, int k);

/// q^{-C(k,2)} S_q(n, k). Throws ConsistencyError if a term would get a
/// negative exponent (the lowest term of S_q(n, k) is q^{C(k,2)}).
QPolynomial shifted_stirling(int n, int k);

/// A statistic took a negative value, so it cannot be an exponent.
class NegativeExponentError : public std::domain_error {
 public:
  NegativeExponentError(const std::string& witness, std::int64_t value)
      : std::domain_error("statistic is " + std::to_string(value) + " on " + witness),
        witness_(witness),
        value_(value) {}
  const std::string& witness() const noexcept { return witness_; }
  std::int64_t value() const noexcept { return value_; }

 private:
  std::string witness_;
  std::int64_t value_;
};

/// Histogram of exponents, i.e. a polynomial with machine-word counts.
/// Adding past 2^64 - 1 throws std::overflow_error.
class ExponentCounter {
 public:
  void add(std::int64_t exponent, std::uint64_t count = 1);
  void merge(const ExponentCounter& other);
  std::uint64_t total() const noexcept { return total_; }
  QPolynomial polynomial() const;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Sum over `family` of q^{statistic(member)}. The empty family gives zero.
/// Throws NegativeExponentError naming the first member with a negative value.
template <class Range, class Fn>
  requires std::invocable<Fn&, const std::ranges::range_value_t<Range>&>
QPolynomial generating_function(Range&& family, Fn&& statistic) {
  ExponentCounter counter;
  for (const auto& member : family) {
    const std::int64_t value = statistic(member);
    if (value < 0) throw NegativeExponentError(to_string(member), value);
    counter.add(value);
  }
  return counter.polynomial();
}

template <class Range>
QPolynomial generating_function(Range&& family, const CombinedStatistic& statistic) {
  return generating_function(std::forward<Range>(family),
                             [&statistic](const auto& m) { return evaluate(m.view(), statistic); });
}

}  // namespace qpart
