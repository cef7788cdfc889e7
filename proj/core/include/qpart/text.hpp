#pragma once

// Partition text grammar: blocks separated by '/', elements by ',',
// whitespace ignored. Example: "1,4,8/2/3,7,9/5,6". The empty string is the
// partition of [0]. RGF text is space-separated letters: "1 2 3 1 4 4 3 1 3".

#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

/// Raw blocks in the order written. Throws ParseError with a character offset.
std::vector<Block> parse_blocks(std::string_view text);

/// Parses and canonicalizes; structural problems raise ValidationError.
SetPartition parse_partition(std::string_view text);
/// Parses keeping the written block order.
OrderedSetPartition parse_ordered(std::string_view text);
RgfWord parse_rgf(std::string_view text);

std::string format_blocks(const std::vector<Block>& blocks);
std::string to_string(const SetPartition& p);
std::string to_string(const OrderedSetPartition& p);
std::string to_string(const RgfWord& w);

}  // namespace qpart
