#include "qpart/partition.hpp"

#include <algorithm>
#include <string>

#include "qpart/error.hpp"

namespace qpart {

namespace {

std::vector<Block> collect_blocks(std::span<const int> word, int k) {
  std::vector<Block> out(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < word.size(); ++i) {
    out[static_cast<std::size_t>(word[i] - 1)].push_back(static_cast<Element>(i + 1));
  }
  return out;
}

// Sorts each block and checks that together they cover 1..n exactly once.
// Returns the block-index word for the blocks in their given order.
std::vector<int> word_of_blocks(std::vector<Block>& blocks) {
  std::size_t n = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      throw ValidationError("block " + std::to_string(b + 1) + " is empty");
    }
    std::sort(blocks[b].begin(), blocks[b].end());
    n += blocks[b].size();
  }
  std::vector<int> word(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Element e : blocks[b]) {
      if (e < 1) {
        throw ValidationError("element " + std::to_string(e) + " in block " +
                              std::to_string(b + 1) + " is not positive");
      }
      if (static_cast<std::size_t>(e) > n) {
        // With n elements in total, anything above n forces a gap or an overlap.
        throw ValidationError("element " + std::to_string(e) + " exceeds n = " +
                              std::to_string(n) + "; some smaller element is missing or repeated");
      }
      int& slot = word[static_cast<std::size_t>(e - 1)];
      if (slot != 0) {
        throw ValidationError("element " + std::to_string(e) + " appears in blocks " +
                              std::to_string(slot) + " and " + std::to_string(b + 1));
      }
      slot = static_cast<int>(b + 1);
    }
  }
  // Sizes add up to n and nothing overlaps, so every slot is filled.
  return word;
}

}  // namespace

RgfWord::RgfWord(std::vector<int> letters) : letters_(std::move(letters)) {
  int running = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const int w = letters_[i];
    if (w < 1 || w > running + 1) {
      throw ValidationError("restricted growth violated at index " + std::to_string(i + 1) +
                            ": letter " + std::to_string(w) + " with running maximum " +
                            std::to_string(running));
    }
    running = std::max(running, w);
  }
  max_letter_ = running;
}

std::vector<Block> SetPartition::blocks() const { return collect_blocks(word_, blocks_); }

Block SetPartition::block(int index) const {
  if (index < 1 || index > blocks_) {
    throw std::out_of_range("block index " + std::to_string(index) + " out of range");
  }
  Block b;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] == index) b.push_back(static_cast<Element>(i + 1));
  }
  return b;
}

Element SetPartition::opener(int index) const {
  if (index < 1 || index > blocks_) {
    throw std::out_of_range("block index " + std::to_string(index) + " out of range");
  }
  const auto it = std::find(word_.begin(), word_.end(), index);
  return static_cast<Element>(it - word_.begin() + 1);
}

Element SetPartition::closer(int index) const {
  if (index < 1 || index > blocks_) {
    throw std::out_of_range("block index " + std::to_string(index) + " out of range");
  }
  const auto it = std::find(word_.rbegin(), word_.rend(), index);
  return static_cast<Element>(word_.rend() - it);
}

OrderedSetPartition SetPartition::as_ordered() const {
  return OrderedSetPartition::from_blocks(blocks());
}

OrderedSetPartition OrderedSetPartition::from_blocks(std::vector<Block> blocks) {
  std::vector<int> word = word_of_blocks(blocks);
  return OrderedSetPartition(std::move(word), static_cast<int>(blocks.size()));
}

OrderedSetPartition OrderedSetPartition::arrange(const SetPartition& p,
                                                 std::span<const int> order) {
  const int k = p.block_count();
  if (static_cast<int>(order.size()) != k) {
    throw ValidationError("block order has " + std::to_string(order.size()) +
                          " entries, expected " + std::to_string(k));
  }
  // position_of[canonical block] = position in the ordered partition
  std::vector<int> position_of(static_cast<std::size_t>(k) + 1, 0);
  for (int pos = 1; pos <= k; ++pos) {
    const int c = order[static_cast<std::size_t>(pos - 1)];
    if (c < 1 || c > k || position_of[static_cast<std::size_t>(c)] != 0) {
      throw ValidationError("block order is not a permutation of 1.." + std::to_string(k));
    }
    position_of[static_cast<std::size_t>(c)] = pos;
  }
  std::vector<int> word(p.word().begin(), p.word().end());
  for (int& w : word) w = position_of[static_cast<std::size_t>(w)];
  return OrderedSetPartition(std::move(word), k);
}

std::vector<Block> OrderedSetPartition::blocks() const { return collect_blocks(word_, blocks_); }

SetPartition OrderedSetPartition::canonical() const {
  // Relabel letters by order of first appearance.
  std::vector<int> relabel(static_cast<std::size_t>(blocks_) + 1, 0);
  std::vector<int> word(word_.size());
  int next = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    int& r = relabel[static_cast<std::size_t>(word_[i])];
    if (r == 0) r = ++next;
    word[i] = r;
  }
  return from_rgf(RgfWord(std::move(word)));
}

SetPartition from_blocks(std::vector<Block> blocks) {
  std::vector<int> word = word_of_blocks(blocks);
  // Renumber blocks by increasing minimum: first appearance order in the word.
  std::vector<int> relabel(blocks.size() + 1, 0);
  int next = 0;
  for (int& w : word) {
    int& r = relabel[static_cast<std::size_t>(w)];
    if (r == 0) r = ++next;
    w = r;
  }
  return SetPartition(std::move(word), static_cast<int>(blocks.size()));
}

SetPartition from_rgf(const RgfWord& w) {
  return SetPartition(std::vector<int>(w.letters().begin(), w.letters().end()), w.max_letter());
}

RgfWord to_rgf(const SetPartition& p) {
  return RgfWord(std::vector<int>(p.word().begin(), p.word().end()));
}

const char* to_string(ElementKind kind) noexcept {
  switch (kind) {
    case ElementKind::Opener: return "opener";
    case ElementKind::Closer: return "closer";
    case ElementKind::Passant: return "passant";
    case ElementKind::Singleton: return "singleton";
  }
  return "?";
}

namespace {

struct Extremes {
  std::vector<Element> first;  // indexed by block position, 1-based
  std::vector<Element> last;
};

Extremes extremes(WordView p) {
  Extremes e{std::vector<Element>(static_cast<std::size_t>(p.blocks) + 1, 0),
             std::vector<Element>(static_cast<std::size_t>(p.blocks) + 1, 0)};
  for (Element i = 1; i <= p.size(); ++i) {
    const auto b = static_cast<std::size_t>(p[i]);
    if (e.first[b] == 0) e.first[b] = i;
    e.last[b] = i;
  }
  return e;
}

}  // namespace

std::vector<ElementKind> element_kinds(WordView p) {
  const Extremes ex = extremes(p);
  std::vector<ElementKind> kinds(static_cast<std::size_t>(p.size()));
  for (Element i = 1; i <= p.size(); ++i) {
    const auto b = static_cast<std::size_t>(p[i]);
    const bool is_first = ex.first[b] == i;
    const bool is_last = ex.last[b] == i;
    ElementKind k = ElementKind::Passant;
    if (is_first && is_last) {
      k = ElementKind::Singleton;
    } else if (is_first) {
      k = ElementKind::Opener;
    } else if (is_last) {
      k = ElementKind::Closer;
    }
    kinds[static_cast<std::size_t>(i - 1)] = k;
  }
  return kinds;
}

ElementClassification classify(WordView p) {
  ElementClassification c;
  const auto kinds = element_kinds(p);
  for (Element i = 1; i <= p.size(); ++i) {
    switch (kinds[static_cast<std::size_t>(i - 1)]) {
      case ElementKind::Opener:
        c.openers.push_back(i);
        c.openers_ns.push_back(i);
        break;
      case ElementKind::Closer:
        c.closers.push_back(i);
        c.closers_ns.push_back(i);
        break;
      case ElementKind::Singleton:
        c.openers.push_back(i);
        c.closers.push_back(i);
        c.singletons.push_back(i);
        break;
      case ElementKind::Passant:
        c.passants.push_back(i);
        break;
    }
  }
  return c;
}

TraceProfile trace_profile(const SetPartition& p) {
  const WordView v = p.view();
  const Extremes ex = extremes(v);
  const auto n = static_cast<std::size_t>(v.size());
  TraceProfile t{std::vector<int>(n), std::vector<int>(n), element_kinds(v)};

  for (Element i = 1; i <= v.size(); ++i) {
    // Block b is incomplete in T_j iff first[b] <= j < last[b].
    int incomplete_before = 0;
    int left_incomplete = 0;
    const int own = v[i];
    for (int b = 1; b <= v.blocks; ++b) {
      const auto bb = static_cast<std::size_t>(b);
      if (ex.first[bb] <= i - 1 && i - 1 < ex.last[bb]) ++incomplete_before;
      if (b < own && ex.first[bb] <= i && i < ex.last[bb]) ++left_incomplete;
    }
    t.level[static_cast<std::size_t>(i - 1)] = incomplete_before;
    t.gamma[static_cast<std::size_t>(i - 1)] = left_incomplete + 1;
  }
  return t;
}

SetPartition rebuild_from_profile(std::span<const ElementKind> kinds, std::span<const int> gamma) {
  if (kinds.size() != gamma.size()) {
    throw ValidationError("profile has " + std::to_string(kinds.size()) + " kinds but " +
                          std::to_string(gamma.size()) + " gamma values");
  }
  std::vector<int> word(kinds.size(), 0);
  std::vector<int> incomplete;  // block positions, left to right
  int blocks = 0;
  for (std::size_t idx = 0; idx < kinds.size(); ++idx) {
    const int i = static_cast<int>(idx + 1);
    const int g = gamma[idx];
    const int open = static_cast<int>(incomplete.size());
    switch (kinds[idx]) {
      case ElementKind::Opener:
      case ElementKind::Singleton:
        if (g != open + 1) {
          throw ValidationError("element " + std::to_string(i) + ": opening gamma " +
                                std::to_string(g) + " must equal " + std::to_string(open + 1));
        }
        word[idx] = ++blocks;
        if (kinds[idx] == ElementKind::Opener) incomplete.push_back(blocks);
        break;
      case ElementKind::Closer:
      case ElementKind::Passant: {
        if (open == 0) {
          throw ValidationError("element " + std::to_string(i) + " (" + to_string(kinds[idx]) +
                                ") has no incomplete block to join");
        }
        if (g < 1 || g > open) {
          throw ValidationError("element " + std::to_string(i) + ": gamma " + std::to_string(g) +
                                " outside 1.." + std::to_string(open));
        }
        const auto slot = static_cast<std::size_t>(g - 1);
        word[idx] = incomplete[slot];
        if (kinds[idx] == ElementKind::Closer) {
          incomplete.erase(incomplete.begin() + static_cast<std::ptrdiff_t>(slot));
        }
        break;
      }
    }
  }
  if (!incomplete.empty()) {
    throw ValidationError(std::to_string(incomplete.size()) +
                          " block(s) still incomplete after the last element");
  }
  return from_rgf(RgfWord(std::move(word)));
}

}  // namespace qpart
