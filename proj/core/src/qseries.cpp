#include "qpart/qseries.hpp"

#include "qpart/error.hpp"

namespace qpart {

QPolynomial q_int(int k) {
  if (k < 0) throw std::invalid_argument("[k]_q needs k >= 0, got " + std::to_string(k));
  return QPolynomial::from_dense(std::vector<BigInt>(static_cast<std::size_t>(k), BigInt(1)));
}

QPolynomial q_factorial(int k) {
  if (k < 0) throw std::invalid_argument("[k]_q! needs k >= 0, got " + std::to_string(k));
  QPolynomial out(1);
  for (int i = 2; i <= k; ++i) out *= q_int(i);
  return out;
}

QStirlingTable::QStirlingTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
}

void QStirlingTable::fill_through(int n) const {
  std::unique_lock lock(mutex_);
  while (static_cast<int>(rows_.size()) <= n) {
    const int m = static_cast<int>(rows_.size());
    std::vector<QPolynomial> row(static_cast<std::size_t>(m) + 1);
    if (m == 0) {
      row[0] = QPolynomial(1);
    } else {
      const auto& prev = rows_.back();
      for (int k = 1; k <= m; ++k) {
        QPolynomial value = prev[static_cast<std::size_t>(k - 1)].shifted(k - 1);
        if (k <= m - 1) value += q_int(k) * prev[static_cast<std::size_t>(k)];
        row[static_cast<std::size_t>(k)] = std::move(value);
      }
    }
    rows_.push_back(std::move(row));
  }
}

QPolynomial QStirlingTable::get(int n, int k) const {
  if (n < 0 || k < 0) throw std::out_of_range("S_q(n, k) needs n, k >= 0");
  if (n > n_max_) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds table bound " +
                            std::to_string(n_max_));
  }
  if (k > n) return {};
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(rows_.size()) > n) return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  fill_through(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

QPolynomial q_stirling(int n, int k) {
  if (n < 0 || k < 0) throw std::out_of_range("S_q(n, k) needs n, k >= 0");
  return QStirlingTable(n).get(n, k);
}

QPolynomial shifted_stirling(int n, int k) {
  const QPolynomial s = q_stirling(n, k);
  if (s.is_zero()) return s;
  const int shift = k * (k - 1) / 2;
  if (s.min_degree() < shift) {
    throw ConsistencyError("S_q(" + std::to_string(n) + ", " + std::to_string(k) +
                           ") has a term below q^" + std::to_string(shift));
  }
  return s.shifted(-shift);
}

void ExponentCounter::add(std::int64_t exponent, std::uint64_t count) {
  if (exponent < 0) throw std::domain_error("negative exponent " + std::to_string(exponent));
  const auto e = static_cast<std::size_t>(exponent);
  if (e >= counts_.size()) counts_.resize(e + 1, 0);
  if (__builtin_add_overflow(counts_[e], count, &counts_[e]) ||
      __builtin_add_overflow(total_, count, &total_)) {
    throw std::overflow_error("exponent count exceeds 64 bits");
  }
}

void ExponentCounter::merge(const ExponentCounter& other) {
  for (std::size_t e = 0; e < other.counts_.size(); ++e) {
    if (other.counts_[e] != 0) add(static_cast<std::int64_t>(e), other.counts_[e]);
  }
}

QPolynomial ExponentCounter::polynomial() const {
  std::vector<BigInt> dense;
  dense.reserve(counts_.size());
  for (std::uint64_t c : counts_) dense.emplace_back(c);
  return QPolynomial::from_dense(std::move(dense));
}

}  // namespace qpart
