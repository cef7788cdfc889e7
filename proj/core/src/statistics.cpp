#include "qpart/statistics.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/container/small_vector.hpp>

#include "qpart/error.hpp"

namespace qpart {

namespace {

using SmallVec = boost::container::small_vector<Element, 32>;

// Block minima and maxima indexed by block position (slot 0 unused).
struct Extremes {
  SmallVec first;
  SmallVec last;
};

Extremes extremes(WordView p) {
  const auto k = static_cast<std::size_t>(p.blocks);
  Extremes e{SmallVec(k + 1, 0), SmallVec(k + 1, 0)};
  for (Element i = 1; i <= p.size(); ++i) {
    const auto b = static_cast<std::size_t>(p[i]);
    if (e.first[b] == 0) e.first[b] = i;
    e.last[b] = i;
  }
  return e;
}

void check_element(WordView p, Element i) {
  if (i < 1 || i > p.size()) {
    throw std::out_of_range("element " + std::to_string(i) + " outside [1, " +
                            std::to_string(p.size()) + "]");
  }
}

// Counts blocks b satisfying the kind's triple relative to element i.
// Each block has exactly one opener and one closer, so counting reference
// elements j is counting blocks.
StatValue coord_at(const Extremes& ex, int blocks, CoordKind kind, Element i, int wi) {
  const CoordTriple t = triple(kind);
  const auto& ref = t.reference == Reference::Opener ? ex.first : ex.last;
  StatValue count = 0;
  int lo = 1;
  int hi = blocks;
  if (t.side == Side::Right) {
    lo = wi + 1;
  } else {
    hi = wi - 1;
  }
  for (int b = lo; b <= hi; ++b) {
    const Element j = ref[static_cast<std::size_t>(b)];
    if (t.comparison == Comparison::Smaller ? j < i : j > i) ++count;
  }
  return count;
}

}  // namespace

std::string_view name(CoordKind kind) noexcept {
  switch (kind) {
    case CoordKind::ROS: return "ros";
    case CoordKind::ROB: return "rob";
    case CoordKind::RCS: return "rcs";
    case CoordKind::RCB: return "rcb";
    case CoordKind::LOS: return "los";
    case CoordKind::LOB: return "lob";
    case CoordKind::LCS: return "lcs";
    case CoordKind::LCB: return "lcb";
  }
  return "?";
}

std::optional<CoordKind> parse_coord_kind(std::string_view text) noexcept {
  for (CoordKind k : kAllCoordKinds) {
    if (name(k) == text) return k;
  }
  return std::nullopt;
}

StatValue coord_stat(WordView p, CoordKind kind, Element i) {
  check_element(p, i);
  return coord_at(extremes(p), p.blocks, kind, i, p[i]);
}

std::vector<StatValue> coord_row(WordView p, CoordKind kind) {
  const Extremes ex = extremes(p);
  std::vector<StatValue> row(static_cast<std::size_t>(p.size()));
  for (Element i = 1; i <= p.size(); ++i) {
    row[static_cast<std::size_t>(i - 1)] = coord_at(ex, p.blocks, kind, i, p[i]);
  }
  return row;
}

StatValue coord_sum(WordView p, CoordKind kind) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (Element i = 1; i <= p.size(); ++i) total += coord_at(ex, p.blocks, kind, i, p[i]);
  return total;
}

CoordinateSums coord_sums(WordView p) {
  const Extremes ex = extremes(p);
  CoordinateSums s;
  auto& v = s.values;
  for (Element i = 1; i <= p.size(); ++i) {
    const int wi = p[i];
    for (int b = 1; b <= p.blocks; ++b) {
      if (b == wi) continue;
      const Element o = ex.first[static_cast<std::size_t>(b)];
      const Element c = ex.last[static_cast<std::size_t>(b)];
      // b != w_i, so neither o nor c equals i.
      const std::size_t base = b > wi ? 0 : 4;  // right kinds, then left kinds
      ++v[base + (o < i ? 0 : 1)];              // ?OS / ?OB
      ++v[base + (c < i ? 2 : 3)];              // ?CS / ?CB
    }
  }
  return s;
}

StatValue mak(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (Element i = 1; i <= p.size(); ++i) {
    const int wi = p[i];
    for (int b = 1; b < wi; ++b) {
      if (ex.last[static_cast<std::size_t>(b)] < i) ++total;  // lcs
    }
    for (int b = wi + 1; b <= p.blocks; ++b) {
      if (ex.first[static_cast<std::size_t>(b)] < i) ++total;  // ros
    }
  }
  return total;
}

StatValue makp(WordView p) {
  const CoordinateSums s = coord_sums(p);
  return s[CoordKind::LOB] + s[CoordKind::RCB];
}

StatValue lmak(WordView p) {
  const CoordinateSums s = coord_sums(p);
  return static_cast<StatValue>(p.size()) * (p.blocks - 1) - (s[CoordKind::LOS] + s[CoordKind::RCS]);
}

StatValue lmakp(WordView p) {
  const CoordinateSums s = coord_sums(p);
  return static_cast<StatValue>(p.size()) * (p.blocks - 1) - (s[CoordKind::LCB] + s[CoordKind::ROB]);
}

StatValue rinv(WordView p, Element b) {
  check_element(p, b);
  StatValue count = 0;
  for (Element a = 1; a < b; ++a) {
    if (p[a] > p[b]) ++count;
  }
  return count;
}

StatValue nrinv(WordView p, Element b) {
  check_element(p, b);
  StatValue count = 0;
  for (Element a = b + 1; a <= p.size(); ++a) {
    if (p[a] > p[b]) ++count;
  }
  return count;
}

StatValue linv(WordView p, Element b) {
  check_element(p, b);
  StatValue count = 0;
  for (Element a = b + 1; a <= p.size(); ++a) {
    if (p[a] < p[b]) ++count;
  }
  return count;
}

StatValue linv_openers(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (int b = 1; b <= p.blocks; ++b) total += linv(p, ex.first[static_cast<std::size_t>(b)]);
  return total;
}

StatValue rinv_closers(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (int b = 1; b <= p.blocks; ++b) total += rinv(p, ex.last[static_cast<std::size_t>(b)]);
  return total;
}

StatValue linv_closers(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (int b = 1; b <= p.blocks; ++b) total += linv(p, ex.last[static_cast<std::size_t>(b)]);
  return total;
}

bool is_canonical(WordView p) noexcept {
  int running = 0;
  for (Element i = 1; i <= p.size(); ++i) {
    if (p[i] > running + 1) return false;
    running = std::max(running, p[i]);
  }
  return running == p.blocks;
}

namespace {

Element closer_of(WordView p, int block) {
  for (Element i = p.size(); i >= 1; --i) {
    if (p[i] == block) return i;
  }
  throw std::out_of_range("block " + std::to_string(block) + " is empty");
}

void require_canonical(WordView p, const char* what) {
  if (!is_canonical(p)) {
    throw ValidationError(std::string(what) + " is defined for canonical partitions only");
  }
}

}  // namespace

StatValue mak_l(WordView p, int l) {
  require_canonical(p, "mak_l");
  if (l < 1 || l > p.blocks) {
    throw std::out_of_range("mak_l: l = " + std::to_string(l) + " outside [1, " +
                            std::to_string(p.blocks) + "]");
  }
  return mak(p) - nrinv(p, closer_of(p, l)) + p.blocks - l;
}

StatValue stat_i(WordView p, int i) {
  require_canonical(p, "stat_i");
  if (i < 1 || i > p.blocks) {
    throw std::out_of_range("stat_i: i = " + std::to_string(i) + " outside [1, " +
                            std::to_string(p.blocks) + "]");
  }
  const int k = p.blocks - 1;
  return k - rinv_closers(p) - nrinv(p, closer_of(p, i));
}

StatValue bmaj(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (int b = 1; b < p.blocks; ++b) {
    if (ex.first[static_cast<std::size_t>(b)] > ex.last[static_cast<std::size_t>(b + 1)]) total += b;
  }
  return total;
}

StatValue binv(WordView p) {
  const Extremes ex = extremes(p);
  StatValue total = 0;
  for (int a = 1; a <= p.blocks; ++a) {
    for (int b = a + 1; b <= p.blocks; ++b) {
      if (ex.first[static_cast<std::size_t>(a)] > ex.last[static_cast<std::size_t>(b)]) ++total;
    }
  }
  return total;
}

// ---------------------------------------------------------------------------

namespace {

struct NamedStatistic {
  std::string_view name;
  StatisticId id;
};

constexpr std::array<NamedStatistic, 18> kNames = {{
    {"ros", StatisticId::ROS},   {"rob", StatisticId::ROB},     {"rcs", StatisticId::RCS},
    {"rcb", StatisticId::RCB},   {"los", StatisticId::LOS},     {"lob", StatisticId::LOB},
    {"lcs", StatisticId::LCS},   {"lcb", StatisticId::LCB},     {"mak", StatisticId::Mak},
    {"makp", StatisticId::Makp}, {"lmak", StatisticId::Lmak},   {"lmakp", StatisticId::Lmakp},
    {"mak_l", StatisticId::MakL}, {"bmaj", StatisticId::Bmaj},  {"binv", StatisticId::Binv},
    {"rinv", StatisticId::Rinv}, {"nrinv", StatisticId::Nrinv}, {"linv", StatisticId::Linv},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 9 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("bad block index in statistic '" + std::string(context) + "'");
  }
  return std::stoi(std::string(digits));
}

Statistic parse_term(std::string_view term, int default_l) {
  term = trim(term);
  for (const auto& n : kNames) {
    if (n.name == term) {
      if (n.id == StatisticId::MakL) {
        if (default_l < 1) {
          throw std::invalid_argument("mak_l needs a block index (mak_l:<l> or --l)");
        }
        return {n.id, default_l};
      }
      return {n.id, 0};
    }
  }
  if (term.starts_with("mak_l:")) return {StatisticId::MakL, parse_positive(term.substr(6), term)};
  if (term.starts_with("mak_")) return {StatisticId::MakL, parse_positive(term.substr(4), term)};
  throw std::invalid_argument("unknown statistic '" + std::string(term) + "'");
}

}  // namespace

std::string_view name(StatisticId id) noexcept {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "?";
}

std::string to_string(const Statistic& s) {
  if (s.id == StatisticId::MakL) return "mak_" + std::to_string(s.parameter);
  return std::string(name(s.id));
}

std::string to_string(const CombinedStatistic& s) {
  std::string out;
  for (const auto& t : s.terms) {
    if (!out.empty()) out += '+';
    out += to_string(t);
  }
  return out;
}

CombinedStatistic parse_statistic(std::string_view text, int default_l) {
  CombinedStatistic out;
  while (true) {
    const auto plus = text.find('+');
    out.terms.push_back(parse_term(text.substr(0, plus), default_l));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return out;
}

StatValue evaluate(WordView p, const Statistic& s) {
  switch (s.id) {
    case StatisticId::ROS: return coord_sum(p, CoordKind::ROS);
    case StatisticId::ROB: return coord_sum(p, CoordKind::ROB);
    case StatisticId::RCS: return coord_sum(p, CoordKind::RCS);
    case StatisticId::RCB: return coord_sum(p, CoordKind::RCB);
    case StatisticId::LOS: return coord_sum(p, CoordKind::LOS);
    case StatisticId::LOB: return coord_sum(p, CoordKind::LOB);
    case StatisticId::LCS: return coord_sum(p, CoordKind::LCS);
    case StatisticId::LCB: return coord_sum(p, CoordKind::LCB);
    case StatisticId::Mak: return mak(p);
    case StatisticId::Makp: return makp(p);
    case StatisticId::Lmak: return lmak(p);
    case StatisticId::Lmakp: return lmakp(p);
    case StatisticId::MakL: return mak_l(p, s.parameter);
    case StatisticId::Bmaj: return bmaj(p);
    case StatisticId::Binv: return binv(p);
    case StatisticId::Rinv:
    case StatisticId::Nrinv:
    case StatisticId::Linv: {
      StatValue total = 0;
      for (Element b = 1; b <= p.size(); ++b) {
        total += s.id == StatisticId::Rinv    ? rinv(p, b)
                 : s.id == StatisticId::Nrinv ? nrinv(p, b)
                                              : linv(p, b);
      }
      return total;
    }
  }
  throw std::logic_error("unhandled statistic");
}

StatValue evaluate(WordView p, const CombinedStatistic& s) {
  StatValue total = 0;
  for (const auto& t : s.terms) total += evaluate(p, t);
  return total;
}

}  // namespace qpart
