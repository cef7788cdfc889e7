#include "qpart/text.hpp"

#include <cctype>
#include <limits>

#include "qpart/error.hpp"

namespace qpart {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

  int read_int() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= s_.size() || !is_digit(s_[pos_])) {
      if (pos_ >= s_.size()) throw ParseError("expected an integer, found end of input", pos_);
      throw ParseError(std::string("expected an integer, found '") + s_[pos_] + "'", pos_);
    }
    long long value = 0;
    while (pos_ < s_.size() && is_digit(s_[pos_])) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(value);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Block> parse_blocks(std::string_view text) {
  Cursor c(text);
  std::vector<Block> blocks;
  if (c.at_end()) return blocks;
  blocks.emplace_back();
  blocks.back().push_back(c.read_int());
  while (!c.at_end()) {
    const char sep = c.peek();
    if (sep == ',') {
      c.advance();
      blocks.back().push_back(c.read_int());
    } else if (sep == '/') {
      c.advance();
      blocks.emplace_back();
      blocks.back().push_back(c.read_int());
    } else {
      throw ParseError(std::string("unexpected character '") + sep + "'", c.position());
    }
  }
  return blocks;
}

SetPartition parse_partition(std::string_view text) { return from_blocks(parse_blocks(text)); }

OrderedSetPartition parse_ordered(std::string_view text) {
  return OrderedSetPartition::from_blocks(parse_blocks(text));
}

RgfWord parse_rgf(std::string_view text) {
  Cursor c(text);
  std::vector<int> letters;
  while (!c.at_end()) letters.push_back(c.read_int());
  return RgfWord(std::move(letters));
}

std::string format_blocks(const std::vector<Block>& blocks) {
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b > 0) out += '/';
    for (std::size_t j = 0; j < blocks[b].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(blocks[b][j]);
    }
  }
  return out;
}

std::string to_string(const SetPartition& p) { return format_blocks(p.blocks()); }
std::string to_string(const OrderedSetPartition& p) { return format_blocks(p.blocks()); }

std::string to_string(const RgfWord& w) {
  std::string out;
  for (int letter : w.letters()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

}  // namespace qpart
