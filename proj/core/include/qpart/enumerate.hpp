#pragma once

// Exhaustive enumeration of P_n^k and OP_n^k.
//
// Canonical partitions come out in lexicographic order of their RGF words.
// Ordered partitions come out grouped by canonical partition (in that same
// order); within a group the block arrangements follow the lexicographic
// order of the permutation sigma with (B_sigma(1), ..., B_sigma(k)).

#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/// Steps through the RGF words of length n with maximum letter exactly k,
/// optionally restricted to words starting with a fixed prefix.
class RgfEnumerator {
 public:
  /// An infeasible prefix (not an RGF, or unable to reach k letters) yields
  /// an empty enumeration.
  RgfEnumerator(int n, int k, std::span<const int> prefix = {});

  bool done() const noexcept { return done_; }
  const SetPartition& current() const noexcept { return current_; }
  void next();

 private:
  void fill_suffix(std::size_t from);

  SetPartition current_;
  std::vector<int> prefix_max_;
  int k_ = 0;
  std::size_t fixed_ = 0;
  bool done_ = true;
};

/// Single-pass range over P_n^k.
class PartitionRange {
 public:
  struct sentinel {};
  class iterator {
   public:
    using value_type = SetPartition;
    using difference_type = std::ptrdiff_t;
    using reference = const SetPartition&;

    iterator() = default;
    explicit iterator(RgfEnumerator* e) : e_(e) {}
    reference operator*() const { return e_->current(); }
    const SetPartition* operator->() const { return &e_->current(); }
    iterator& operator++() {
      e_->next();
      return *this;
    }
    void operator++(int) { e_->next(); }
    friend bool operator==(const iterator& it, sentinel) { return it.e_->done(); }

   private:
    RgfEnumerator* e_ = nullptr;
  };

  PartitionRange(int n, int k) : enumerator_(n, k) {}
  iterator begin() { return iterator(&enumerator_); }
  sentinel end() const { return {}; }

 private:
  RgfEnumerator enumerator_;
};

/// Steps through OP_n^k: every canonical partition in RGF order, each with
/// all k! block arrangements.
class OrderedEnumerator {
 public:
  OrderedEnumerator(int n, int k);

  bool done() const noexcept { return canonical_.done(); }
  const OrderedSetPartition& current() const noexcept { return current_; }
  /// The block arrangement of current(): position j holds canonical block order()[j-1].
  std::span<const int> order() const noexcept { return order_; }
  void next();

 private:
  void refresh();

  RgfEnumerator canonical_;
  std::vector<int> order_;
  OrderedSetPartition current_;
};

class OrderedRange {
 public:
  struct sentinel {};
  class iterator {
   public:
    using value_type = OrderedSetPartition;
    using difference_type = std::ptrdiff_t;
    using reference = const OrderedSetPartition&;

    iterator() = default;
    explicit iterator(OrderedEnumerator* e) : e_(e) {}
    reference operator*() const { return e_->current(); }
    iterator& operator++() {
      e_->next();
      return *this;
    }
    void operator++(int) { e_->next(); }
    friend bool operator==(const iterator& it, sentinel) { return it.e_->done(); }

   private:
    OrderedEnumerator* e_ = nullptr;
  };

  OrderedRange(int n, int k) : enumerator_(n, k) {}
  iterator begin() { return iterator(&enumerator_); }
  sentinel end() const { return {}; }

 private:
  OrderedEnumerator enumerator_;
};

/// Every element of P_n^k exactly once, in RGF lexicographic order.
inline PartitionRange enumerate_partitions(int n, int k) { return {n, k}; }
/// Every element of OP_n^k exactly once.
inline OrderedRange enumerate_ordered(int n, int k) { return {n, k}; }

template <class Fn>
void for_each_partition(int n, int k, Fn&& fn) {
  for (RgfEnumerator e(n, k); !e.done(); e.next()) fn(e.current());
}

template <class Fn>
void for_each_ordered(int n, int k, Fn&& fn) {
  for (OrderedEnumerator e(n, k); !e.done(); e.next()) fn(e.current());
}

/// All RGF prefixes of the given length that extend to some word of P_n^k,
/// in lexicographic order. Used to split the enumeration across workers.
std::vector<std::vector<int>> rgf_prefixes(int n, int k, int length);

/// Stirling number of the second kind S(n, k). Throws std::overflow_error past 64 bits.
std::uint64_t stirling2(int n, int k);
/// Bell number: sum over k of S(n, k).
std::uint64_t bell(int n);

}  // namespace qpart
