#pragma once

// Partition statistics.
//
// Everything takes a WordView, so canonical and ordered partitions are both
// accepted: w_i is the position of the block holding i, the openers are the
// block minima and the closers the block maxima, whatever the block order.
// The exceptions are mak_l and stat_i, which are defined for canonical
// partitions only and reject anything else.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/partition.hpp"

namespace qpart {

using StatValue = std::int64_t;

/// The eight coordinate statistics. The name reads side (right/left block),
/// reference (opener/closer) and comparison (smaller/bigger element).
enum class CoordKind { ROS, ROB, RCS, RCB, LOS, LOB, LCS, LCB };

enum class Side { Left, Right };
enum class Reference { Opener, Closer };
enum class Comparison { Smaller, Bigger };

struct CoordTriple {
  Side side;
  Reference reference;
  Comparison comparison;
};

inline constexpr std::array<CoordKind, 8> kAllCoordKinds = {
    CoordKind::ROS, CoordKind::ROB, CoordKind::RCS, CoordKind::RCB,
    CoordKind::LOS, CoordKind::LOB, CoordKind::LCS, CoordKind::LCB};

constexpr CoordTriple triple(CoordKind kind) noexcept {
  const auto v = static_cast<int>(kind);
  return {v < 4 ? Side::Right : Side::Left,
          (v & 2) == 0 ? Reference::Opener : Reference::Closer,
          (v & 1) == 0 ? Comparison::Smaller : Comparison::Bigger};
}

std::string_view name(CoordKind kind) noexcept;
std::optional<CoordKind> parse_coord_kind(std::string_view name) noexcept;

/// Coordinate `kind` at element i, e.g. ROS counts openers j < i with w_j > w_i.
/// Throws std::out_of_range when i is not in [n].
StatValue coord_stat(WordView p, CoordKind kind, Element i);
/// All coordinates of one kind; index i-1 holds element i.
std::vector<StatValue> coord_row(WordView p, CoordKind kind);
StatValue coord_sum(WordView p, CoordKind kind);

/// All eight coordinate sums computed in one pass.
struct CoordinateSums {
  std::array<StatValue, 8> values{};
  StatValue operator[](CoordKind kind) const noexcept {
    return values[static_cast<std::size_t>(kind)];
  }
};
CoordinateSums coord_sums(WordView p);

// mak = ros + lcs, makp = lob + rcb,
// lmak = n(k-1) - (los + rcs), lmakp = n(k-1) - (lcb + rob).
StatValue mak(WordView p);
StatValue makp(WordView p);
StatValue lmak(WordView p);
StatValue lmakp(WordView p);

// Element-level inversion counts for b in block j:
//   rinv  = #{a in a later block : a < b}
//   nrinv = #{a in a later block : a > b}
//   linv  = #{a in an earlier block : a > b}
StatValue rinv(WordView p, Element b);
StatValue nrinv(WordView p, Element b);
StatValue linv(WordView p, Element b);

StatValue linv_openers(WordView p);  // sum of linv over block minima
StatValue rinv_closers(WordView p);  // sum of rinv over block maxima
StatValue linv_closers(WordView p);  // sum of linv over block maxima

/// mak(p) - nrinv(g(B_l), p) + k - l, for 1 <= l <= k; mak_k = mak.
StatValue mak_l(WordView p, int l);

/// For a canonical partition with k+1 blocks and 1 <= i <= k+1:
/// k - rinv_closers(p) - nrinv(g(B_i), p). May be negative.
StatValue stat_i(WordView p, int i);

/// Block-level major index and inversion count under the dominance order
/// B_i > B_j  <=>  min(B_i) > max(B_j).
StatValue bmaj(WordView p);
StatValue binv(WordView p);

/// True when blocks appear in order of increasing minima.
bool is_canonical(WordView p) noexcept;

// ---------------------------------------------------------------------------
// Named statistics for the command line and JSON output.

enum class StatisticId {
  ROS, ROB, RCS, RCB, LOS, LOB, LCS, LCB,
  Mak, Makp, Lmak, Lmakp, MakL, Bmaj, Binv, Rinv, Nrinv, Linv
};

struct Statistic {
  StatisticId id;
  int parameter = 0;  // l for mak_l
};

/// A sum of named statistics such as "mak+bmaj". Terms may carry a block
/// parameter: "mak_l:2" or "mak_2".
struct CombinedStatistic {
  std::vector<Statistic> terms;
};

std::string_view name(StatisticId id) noexcept;
std::string to_string(const Statistic& s);
std::string to_string(const CombinedStatistic& s);

/// Parses "mak", "mak+bmaj", "mak_l:3", "mak_3". `default_l` fills a bare
/// "mak_l". Throws std::invalid_argument on unknown names.
CombinedStatistic parse_statistic(std::string_view text, int default_l = 0);

/// Value of one statistic. rinv, nrinv and linv are summed over all elements.
StatValue evaluate(WordView p, const Statistic& s);
StatValue evaluate(WordView p, const CombinedStatistic& s);

}  // namespace qpart
