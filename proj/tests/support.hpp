#pragma once

#include "oracle.hpp"
#include "qpart/partition.hpp"
#include "qpart/qpolynomial.hpp"

namespace test {

inline qpart::SetPartition to_partition(const oracle::Blocks& b) { return qpart::from_blocks(b); }
inline qpart::OrderedSetPartition to_ordered(const oracle::Blocks& b) {
  return qpart::OrderedSetPartition::from_blocks(b);
}

inline oracle::Poly to_poly(const qpart::QPolynomial& p) {
  oracle::Poly out;
  for (const auto& [e, c] : p.terms()) out[e] = static_cast<std::int64_t>(c);
  return out;
}

}  // namespace test
