#pragma once

// Set partitions of [n] = {1, ..., n} and their ordered variants.
//
// Both partition types store a block-index word: letter i-1 of the word is
// the (1-based) position of the block that contains element i. For a
// SetPartition the blocks are ordered by their minima, so the word is a
// restricted growth function (RGF). For an OrderedSetPartition the block
// order is arbitrary and the word is only a surjection onto [k].
//
// Elements are 1-based everywhere in the public API.

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace qpart {

using Element = int;
using Block = std::vector<Element>;

/// A restricted growth word w_1 ... w_n: w_1 = 1 and w_i <= max(w_1..w_{i-1}) + 1.
class RgfWord {
 public:
  RgfWord() = default;
  /// Throws ValidationError naming the first (1-based) offending index.
  explicit RgfWord(std::vector<int> letters);

  std::span<const int> letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }
  int max_letter() const noexcept { return max_letter_; }

  friend bool operator==(const RgfWord&, const RgfWord&) = default;

 private:
  std::vector<int> letters_;
  int max_letter_ = 0;
};

/// Non-owning view over a block-index word. Statistics operate on this.
struct WordView {
  std::span<const int> word;
  int blocks = 0;

  int size() const noexcept { return static_cast<int>(word.size()); }
  /// Block position of element `i` (1-based element, 1-based block).
  int operator[](Element i) const noexcept { return word[static_cast<std::size_t>(i - 1)]; }
};

class OrderedSetPartition;

/// A partition of [n] into k blocks, blocks ordered by increasing minima.
class SetPartition {
 public:
  /// The empty partition of [0].
  SetPartition() = default;

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int block_count() const noexcept { return blocks_; }
  std::span<const int> word() const noexcept { return word_; }
  WordView view() const noexcept { return {word_, blocks_}; }
  operator WordView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  int block_of(Element i) const noexcept { return word_[static_cast<std::size_t>(i - 1)]; }
  std::vector<Block> blocks() const;
  /// Elements of block `index` (1-based), increasing.
  Block block(int index) const;
  /// Smallest element of block `index`, p(B_index).
  Element opener(int index) const;
  /// Largest element of block `index`, g(B_index).
  Element closer(int index) const;

  OrderedSetPartition as_ordered() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
  friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
    return a.word_ <=> b.word_;
  }

 private:
  friend SetPartition from_rgf(const RgfWord&);
  friend SetPartition from_blocks(std::vector<Block>);
  friend class RgfEnumerator;

  SetPartition(std::vector<int> word, int blocks) : word_(std::move(word)), blocks_(blocks) {}

  std::vector<int> word_;
  int blocks_ = 0;
};

/// A sequence (B_1, ..., B_k) of disjoint non-empty blocks covering [n], in any order.
class OrderedSetPartition {
 public:
  OrderedSetPartition() = default;

  /// Blocks are kept in the given order; each block is sorted internally.
  /// Throws ValidationError on overlap, gaps or empty blocks.
  static OrderedSetPartition from_blocks(std::vector<Block> blocks);
  /// Arranges the blocks of `p` so that position j holds canonical block order[j-1].
  /// `order` must be a permutation of 1..k.
  static OrderedSetPartition arrange(const SetPartition& p, std::span<const int> order);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  int block_count() const noexcept { return blocks_; }
  std::span<const int> word() const noexcept { return word_; }
  WordView view() const noexcept { return {word_, blocks_}; }
  operator WordView() const noexcept { return view(); }  // NOLINT(google-explicit-constructor)

  std::vector<Block> blocks() const;
  /// The canonical partition obtained by sorting blocks by their minima.
  SetPartition canonical() const;

  friend bool operator==(const OrderedSetPartition&, const OrderedSetPartition&) = default;

 private:
  OrderedSetPartition(std::vector<int> word, int blocks)
      : word_(std::move(word)), blocks_(blocks) {}

  std::vector<int> word_;
  int blocks_ = 0;
};

/// Builds the canonical partition from arbitrary blocks. Throws ValidationError
/// naming the offending element or block on overlap, gap or empty block.
SetPartition from_blocks(std::vector<Block> blocks);
SetPartition from_rgf(const RgfWord& w);
RgfWord to_rgf(const SetPartition& p);

/// Per-element role used by traces and Motzkin paths. `Opener` and `Closer`
/// refer to the non-singleton sets O_s and F_s.
enum class ElementKind { Opener, Closer, Passant, Singleton };

const char* to_string(ElementKind kind) noexcept;

/// Openers (block minima), closers (block maxima), passants and singletons.
/// Every set is sorted increasingly.
struct ElementClassification {
  std::vector<Element> openers;
  std::vector<Element> closers;
  std::vector<Element> passants;
  std::vector<Element> singletons;
  std::vector<Element> openers_ns;  // O \ S
  std::vector<Element> closers_ns;  // F \ S

  friend bool operator==(const ElementClassification&, const ElementClassification&) = default;
};

ElementClassification classify(WordView p);

/// Kind of every element, index i-1 holding element i.
std::vector<ElementKind> element_kinds(WordView p);

/// Trace data of a canonical partition; index i-1 holds element i.
///   level[i-1] = l_i, the number of incomplete blocks in the trace T_{i-1};
///   gamma[i-1] = 1 + the number of incomplete blocks of T_i left of i's block.
struct TraceProfile {
  std::vector<int> level;
  std::vector<int> gamma;
  std::vector<ElementKind> kinds;

  int l(Element i) const { return level[static_cast<std::size_t>(i - 1)]; }
  int g(Element i) const { return gamma[static_cast<std::size_t>(i - 1)]; }
  ElementKind kind(Element i) const { return kinds[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const TraceProfile&, const TraceProfile&) = default;
};

TraceProfile trace_profile(const SetPartition& p);

/// Inverse of trace_profile: openers and singletons open a new rightmost
/// block; closers and passants join the gamma-th currently incomplete block
/// (closers seal it). Opener/singleton gammas must equal 1 + the current
/// incomplete count. Throws ValidationError on any inconsistency.
SetPartition rebuild_from_profile(std::span<const ElementKind> kinds, std::span<const int> gamma);

}  // namespace qpart
