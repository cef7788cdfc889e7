#include "qpart/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "qpart/bijections.hpp"
#include "qpart/enumerate.hpp"
#include "qpart/motzkin.hpp"
#include "qpart/partition.hpp"
#include "qpart/qseries.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"

namespace qpart {

namespace {

constexpr std::array<std::string_view, 10> kSuites = {
    "theorem1", "theorem2", "theorem3", "lemma1",  "eq4",
    "los-linv", "phi-i",    "eq13",     "motzkin", "euler-mahonian"};

struct Tally {
  std::size_t cap = 10;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;

  void fail(std::string witness, std::string expected, std::string actual) {
    ++failure_count;
    if (failures.size() < cap) {
      failures.push_back({std::move(witness), std::move(expected), std::move(actual)});
    }
  }

  void merge(Tally&& other) {
    cases += other.cases;
    failure_count += other.failure_count;
    for (auto& f : other.failures) {
      if (failures.size() >= cap) break;
      failures.push_back(std::move(f));
    }
  }
};

/// fn(i) for every i in [0, count), spread over `threads` workers. Results
/// come back in index order whatever the scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, int threads, Fn fn) {
  std::vector<Result> results(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::size_t error_index = count;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < error_index) {
          error_index = i;
          error = std::current_exception();
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return results;
}

std::vector<std::vector<int>> chunk_prefixes(int n, int k, int threads) {
  if (threads <= 1) return {{}};
  const std::size_t wanted = 16 * static_cast<std::size_t>(threads);
  int length = 0;
  auto prefixes = rgf_prefixes(n, k, length);
  while (prefixes.size() < wanted && length < n) prefixes = rgf_prefixes(n, k, ++length);
  return prefixes;
}

/// Visits P_n^k chunk by chunk and returns the chunk accumulators in RGF order.
template <class Acc, class Visit>
std::vector<Acc> sweep(int n, int k, int threads, const Acc& initial, Visit visit) {
  const auto prefixes = chunk_prefixes(n, k, threads);
  return parallel_map<Acc>(prefixes.size(), threads, [&](std::size_t c) {
    Acc acc = initial;
    for (RgfEnumerator e(n, k, prefixes[c]); !e.done(); e.next()) visit(e.current(), acc);
    return acc;
  });
}

Tally merged(std::vector<Tally>&& parts, std::size_t cap) {
  Tally out;
  out.cap = cap;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

void record(VerificationReport& report, int n, int k, Tally&& t, std::size_t cap) {
  report.cases += t.cases;
  report.failure_count += t.failure_count;
  for (auto& f : t.failures) {
    if (report.failures.size() >= cap) break;
    report.failures.push_back(std::move(f));
  }
  report.breakdown.push_back({n, k, t.cases});
}

std::string str(std::int64_t v) { return std::to_string(v); }

std::vector<Element> mirror(const std::vector<Element>& set, int n) {
  std::vector<Element> out;
  for (Element i : set) out.push_back(n + 1 - i);
  std::sort(out.begin(), out.end());
  return out;
}

std::string set_text(const std::vector<Element>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// Runs a pointwise check over every P_n^k with 1 <= k <= n <= n_max.
void pointwise(VerificationReport& report, const VerifyOptions& o,
               const std::function<void(const SetPartition&, Tally&)>& check) {
  Tally proto;
  proto.cap = o.max_witnesses;
  for (int n = 1; n <= o.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto parts = sweep(n, k, o.threads, proto, [&](const SetPartition& p, Tally& t) {
        ++t.cases;
        try {
          check(p, t);
        } catch (const std::exception& e) {
          t.fail(to_string(p), "no error", e.what());
        }
      });
      record(report, n, k, merged(std::move(parts), o.max_witnesses), o.max_witnesses);
    }
  }
}

// ---------------------------------------------------------------------------

int opener_level_sum(const SetPartition& p) {
  const TraceProfile t = trace_profile(p);
  int total = 0;
  for (Element o : classify(p).openers) total += t.l(o) + 1;
  return total;
}

void theorem1(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    const SetPartition image = phi(p);
    const std::string w = to_string(p);
    if (image.size() != p.size() || image.block_count() != p.block_count()) {
      t.fail(w, "image in the same P_n^k", to_string(image));
      return;
    }
    const SetPartition back = phi(image);
    if (back != p) t.fail(w, "phi(phi(p)) = " + w, to_string(back));
    if (mak(p) != makp(image)) {
      t.fail(w, "makp(phi(p)) = mak(p) = " + str(mak(p)), str(makp(image)));
    }
    const auto expected_closers = mirror(classify(p).openers_ns, p.size());
    const auto actual_closers = classify(image).closers_ns;
    if (actual_closers != expected_closers) {
      t.fail(w, "F_s(phi(p)) = " + set_text(expected_closers), set_text(actual_closers));
    }
    if (opener_level_sum(p) != opener_level_sum(image)) {
      t.fail(w, "sum over openers of (l+1) preserved: " + str(opener_level_sum(p)),
             str(opener_level_sum(image)));
    }
  });
}

void theorem2(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    const StatValue m = mak(p);
    const StatValue mp = makp(p);
    const StatValue n_k = static_cast<StatValue>(p.size()) * (p.block_count() - 1);
    const StatValue los = coord_sum(p, CoordKind::LOS);
    if (m != lmakp(p)) t.fail(to_string(p), "lmakp = mak = " + str(m), str(lmakp(p)));
    if (mp != lmak(p)) t.fail(to_string(p), "lmak = makp = " + str(mp), str(lmak(p)));
    const StatValue via_inversions = los - rinv_closers(p) + linv_openers(p);
    if (m != via_inversions) {
      t.fail(to_string(p), "los - rinv(F) + linv(O) = mak = " + str(m), str(via_inversions));
    }
    const StatValue via_closers = n_k - los - linv_closers(p);
    if (mp != via_closers) {
      t.fail(to_string(p), "n(k-1) - los - linv(F) = makp = " + str(mp), str(via_closers));
    }
    if (coord_sum(p, CoordKind::LOB) != 0) {
      t.fail(to_string(p), "lob = 0", str(coord_sum(p, CoordKind::LOB)));
    }
  });
}

struct Counters {
  Tally tally;
  std::vector<ExponentCounter> counters;

  void merge(Counters&& other) {
    tally.merge(std::move(other.tally));
    for (std::size_t i = 0; i < counters.size(); ++i) counters[i].merge(other.counters[i]);
  }
};

Counters merged(std::vector<Counters>&& parts, const Counters& initial) {
  Counters out = initial;
  for (auto& p : parts) out.merge(std::move(p));
  return out;
}

void add_exponent(Counters& acc, std::size_t slot, StatValue value, const auto& member) {
  if (value < 0) {
    acc.tally.fail(to_string(member), "non-negative exponent", str(value));
    return;
  }
  acc.counters[slot].add(value);
}

void theorem3(VerificationReport& r, const VerifyOptions& o) {
  const QStirlingTable table(o.n_max);
  // Enumerated generating function of mak, kept for the recurrence check.
  std::map<std::pair<int, int>, QPolynomial> mak_gf;
  auto gf = [&mak_gf](int n, int k) -> QPolynomial {
    if (k == 0) return n == 0 ? QPolynomial(1) : QPolynomial();
    if (k > n) return {};
    return mak_gf.at({n, k});
  };

  for (int n = 1; n <= o.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      Counters initial;
      initial.tally.cap = o.max_witnesses;
      initial.counters.resize(4 + static_cast<std::size_t>(k));
      auto parts = sweep(n, k, o.threads, initial, [k](const SetPartition& p, Counters& acc) {
        const CoordinateSums s = coord_sums(p);
        const StatValue n_k = static_cast<StatValue>(p.size()) * (k - 1);
        add_exponent(acc, 0, mak(p), p);
        add_exponent(acc, 1, s[CoordKind::LOB] + s[CoordKind::RCB], p);
        add_exponent(acc, 2, n_k - (s[CoordKind::LOS] + s[CoordKind::RCS]), p);
        add_exponent(acc, 3, n_k - (s[CoordKind::LCB] + s[CoordKind::ROB]), p);
        for (int l = 1; l <= k; ++l) add_exponent(acc, 3 + static_cast<std::size_t>(l), mak_l(p, l), p);
      });
      Counters all = merged(std::move(parts), initial);
      Tally& t = all.tally;
      const QPolynomial expected = table.get(n, k);
      const std::string where = "P_" + std::to_string(n) + "^" + std::to_string(k);
      static constexpr std::array<const char*, 4> kFixed = {"mak", "makp", "lmak", "lmakp"};
      for (std::size_t slot = 0; slot < all.counters.size(); ++slot) {
        const QPolynomial actual = all.counters[slot].polynomial();
        const std::string stat =
            slot < 4 ? kFixed[slot] : "mak_" + std::to_string(slot - 3);
        ++t.cases;
        if (actual != expected) t.fail(where + " " + stat, to_string(expected), to_string(actual));
      }
      mak_gf.emplace(std::pair{n, k}, all.counters[0].polynomial());

      ++t.cases;
      const BigInt count(stirling2(n, k));
      if (expected.at_one() != count) {
        t.fail(where + " S_q at q=1", count.str(), expected.at_one().str());
      }

      // Removing n splits P_n^k by whether n is a singleton.
      if (n >= 2) {
        ++t.cases;
        const QPolynomial rhs = gf(n - 1, k - 1).shifted(k - 1) + q_int(k) * gf(n - 1, k);
        if (gf(n, k) != rhs) t.fail(where + " recurrence", to_string(rhs), to_string(gf(n, k)));
      }
      record(r, n, k, std::move(t), o.max_witnesses);
    }
  }
}

void lemma1(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    const int n = p.size();
    const int k = p.block_count();
    const TraceProfile tr = trace_profile(p);
    const ElementClassification c = classify(p);

    // closed_before[i] = #{a in F : a < i}
    std::vector<StatValue> closed_before(static_cast<std::size_t>(n) + 2, 0);
    {
      std::size_t next = 0;
      StatValue count = 0;
      for (Element i = 1; i <= n; ++i) {
        closed_before[static_cast<std::size_t>(i)] = count;
        if (next < c.closers.size() && c.closers[next] == i) {
          ++count;
          ++next;
        }
      }
    }
    StatValue closed_sum = 0;
    for (Element i = 1; i <= n; ++i) closed_sum += closed_before[static_cast<std::size_t>(i)];

    StatValue mak_form = closed_sum;
    StatValue makp_form = -closed_sum;
    for (Element i = 1; i <= n; ++i) {
      const ElementKind kind = tr.kind(i);
      if (kind == ElementKind::Closer || kind == ElementKind::Passant) {
        mak_form += tr.l(i) - tr.g(i);
        makp_form += k - tr.g(i);
      }
    }
    for (Element a : c.openers) makp_form += k - 1 - tr.l(a);

    const std::string w = to_string(p);
    if (mak_form != mak(p)) t.fail(w, "trace form of mak = " + str(mak(p)), str(mak_form));
    if (makp_form != makp(p)) t.fail(w, "trace form of makp = " + str(makp(p)), str(makp_form));

    StatValue closer_levels = 0;
    StatValue opener_levels = 0;
    for (Element f : c.closers_ns) closer_levels += tr.l(f);
    for (Element a : c.openers_ns) opener_levels += tr.l(a) + 1;
    if (closer_levels != opener_levels) {
      t.fail(w, "sum of closer levels = " + str(opener_levels), str(closer_levels));
    }

    const auto matching = match_openers_closers(p);
    std::set<Element> targets;
    for (const auto& [a, f] : matching) {
      targets.insert(f);
      if (tr.l(f) != tr.l(a) + 1) {
        t.fail(w, "matched closer " + str(f) + " at level " + str(tr.l(a) + 1), str(tr.l(f)));
      }
    }
    if (matching.size() != c.openers_ns.size() || targets.size() != c.closers_ns.size()) {
      t.fail(w, "matching is a bijection O_s -> F_s", str(static_cast<StatValue>(targets.size())) + " closers hit");
    }
  });
}

void eq4(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    const int n = p.size();
    const int k = p.block_count();
    const TraceProfile tr = trace_profile(p);
    const ElementClassification c = classify(p);
    StatValue summed = static_cast<StatValue>(c.openers.size());
    for (Element i = 1; i <= n; ++i) {
      const auto openers_after = std::count_if(c.openers.begin(), c.openers.end(), [i](Element a) { return a > i; });
      const auto closers_before = std::count_if(c.closers.begin(), c.closers.end(), [i](Element a) { return a < i; });
      const StatValue base = tr.l(i) + openers_after + closers_before;
      const ElementKind kind = tr.kind(i);
      const bool opens = kind == ElementKind::Opener || kind == ElementKind::Singleton;
      const StatValue value = base + (opens ? 1 : 0);
      if (value != k) {
        t.fail(to_string(p), "block count " + str(k) + " at element " + str(i), str(value));
      }
      summed += base;
    }
    const StatValue nk = static_cast<StatValue>(n) * k;
    if (summed != nk) t.fail(to_string(p), "summed identity nk = " + str(nk), str(summed));
  });
}

void los_linv(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    StatValue expected = 0;
    for (Element x : classify(p).openers) {
      if (x != 1) expected += p.size() - x + 1;
    }
    const StatValue actual = coord_sum(p, CoordKind::LOS) + linv_openers(p);
    if (actual != expected) t.fail(to_string(p), "los + linv(O) = " + str(expected), str(actual));
  });
}

std::uint64_t opener_mask(const SetPartition& p) {
  std::uint64_t mask = 0;
  for (Element x : classify(p).openers) mask |= std::uint64_t{1} << (x - 1);
  return mask;
}

void phi_i_suite(VerificationReport& r, const VerifyOptions& o) {
  if (o.n_max > 64) throw std::invalid_argument("phi-i suite supports n <= 64");
  for (int n = 1; n <= o.n_max; ++n) {
    for (int blocks = 2; blocks <= n; ++blocks) {
      std::map<std::uint64_t, std::vector<SetPartition>> classes;
      for_each_partition(n, blocks, [&](const SetPartition& p) { classes[opener_mask(p)].push_back(p); });
      std::vector<const std::vector<SetPartition>*> list;
      for (const auto& [mask, members] : classes) list.push_back(&members);

      auto parts = parallel_map<Tally>(list.size(), o.threads, [&](std::size_t c) {
        Tally t;
        t.cap = o.max_witnesses;
        const auto& members = *list[c];
        const std::uint64_t mask = opener_mask(members.front());
        for (int i = 1; i < blocks; ++i) {
          std::set<SetPartition> images;
          for (const SetPartition& p : members) {
            ++t.cases;
            try {
              const SetPartition image = phi_i(p, i);
              images.insert(image);
              if (opener_mask(image) != mask) {
                t.fail(to_string(p), "phi_" + str(i) + " stays in the opener class", to_string(image));
              }
              const StatValue before = stat_i(p, i);
              const StatValue after = stat_i(image, i + 1) - 1;
              if (before != after) {
                t.fail(to_string(p), "stat_" + str(i) + " = stat_" + str(i + 1) + "(phi_" + str(i) +
                                         ") - 1 = " + str(after), str(before));
              }
            } catch (const std::exception& e) {
              t.fail(to_string(p), "phi_" + str(i) + " defined", e.what());
            }
          }
          if (images.size() != members.size()) {
            t.fail(to_string(members.front()) + " (class)",
                   "phi_" + str(i) + " injective on " + str(static_cast<StatValue>(members.size())) + " members",
                   str(static_cast<StatValue>(images.size())) + " distinct images");
          }
        }
        return t;
      });
      record(r, n, blocks, merged(std::move(parts), o.max_witnesses), o.max_witnesses);
    }
  }
}

void eq13(VerificationReport& r, const VerifyOptions& o) {
  for (int n = 1; n <= o.n_max; ++n) {
    for (int blocks = 1; blocks <= n; ++blocks) {
      const int k = blocks - 1;
      Counters initial;
      initial.tally.cap = o.max_witnesses;
      initial.counters.resize(static_cast<std::size_t>(blocks) + 1);
      auto parts = sweep(n, blocks, o.threads, initial, [&](const SetPartition& p, Counters& acc) {
        const StatValue m = mak(p);
        add_exponent(acc, 0, m, p);
        for (int i = 0; i <= k; ++i) {
          add_exponent(acc, static_cast<std::size_t>(i) + 1, m + k - nrinv(p, p.closer(i + 1)), p);
        }
      });
      Counters all = merged(std::move(parts), initial);
      Tally& t = all.tally;
      const QPolynomial base = all.counters[0].polynomial();
      for (int i = 0; i <= k; ++i) {
        ++t.cases;
        const QPolynomial lhs = all.counters[static_cast<std::size_t>(i) + 1].polynomial();
        const QPolynomial rhs = base.shifted(i);
        if (lhs != rhs) {
          t.fail("P_" + str(n) + "^" + str(blocks) + " i=" + str(i), to_string(rhs), to_string(lhs));
        }
      }
      record(r, n, blocks, std::move(t), o.max_witnesses);
    }
  }
}

// Depth-first generation of every valid labelled path of length n.
template <class Fn>
void for_each_path(int n, Fn&& fn) {
  LabeledMotzkinPath path;
  path.steps.reserve(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int height) -> void {
    const int remaining = n - path.size();
    if (remaining == 0) {
      if (height == 0) fn(path);
      return;
    }
    if (height > remaining) return;
    auto push = [&](Step s, int next_height) {
      path.steps.push_back(s);
      self(self, next_height);
      path.steps.pop_back();
    };
    push({StepKind::NE, 1, false}, height + 1);
    push({StepKind::E, 1, true}, height);
    for (int label = 1; label <= height; ++label) {
      push({StepKind::E, label, false}, height);
      push({StepKind::SE, label, false}, height - 1);
    }
  };
  rec(rec, 0);
}

void motzkin_suite(VerificationReport& r, const VerifyOptions& o) {
  pointwise(r, o, [](const SetPartition& p, Tally& t) {
    const std::string w = to_string(p);
    const LabeledMotzkinPath path = encode(p);
    if (!is_valid(path)) {
      t.fail(w, "valid path", to_string(path));
      return;
    }
    const SetPartition back = decode(path);
    if (back != p) t.fail(w, "decode(encode(p)) = " + w, to_string(back));
    const LabeledMotzkinPath mirrored = reflect(path);
    if (reflect(mirrored) != path) t.fail(w, "reflect twice = " + to_string(path), to_string(reflect(mirrored)));
    const SetPartition via_path = decode(mirrored);
    const SetPartition via_phi = phi(p);
    if (via_path != via_phi) t.fail(w, "decode(reflect(encode(p))) = phi(p) = " + to_string(via_phi), to_string(via_path));
  });

  for (int n = 1; n <= o.n_max; ++n) {
    Tally t;
    t.cap = o.max_witnesses;
    std::vector<std::uint64_t> by_k(static_cast<std::size_t>(n) + 1, 0);
    for_each_path(n, [&](const LabeledMotzkinPath& path) {
      ++t.cases;
      int openings = 0;
      for (const Step& s : path.steps) {
        if (s.kind == StepKind::NE || (s.kind == StepKind::E && s.starred)) ++openings;
      }
      ++by_k[static_cast<std::size_t>(openings)];
      try {
        const SetPartition p = decode(path);
        if (encode(p) != path) t.fail(to_string(path), "encode(decode(path)) = path", to_string(encode(p)));
        if (p.block_count() != openings) {
          t.fail(to_string(path), str(openings) + " blocks", str(p.block_count()));
        }
      } catch (const std::exception& e) {
        t.fail(to_string(path), "decodable path", e.what());
      }
    });
    for (int k = 1; k <= n; ++k) {
      if (by_k[static_cast<std::size_t>(k)] != stirling2(n, k)) {
        t.fail("paths of length " + str(n) + " with " + str(k) + " openings",
               std::to_string(stirling2(n, k)), std::to_string(by_k[static_cast<std::size_t>(k)]));
      }
    }
    if (t.cases != bell(n)) {
      t.fail("paths of length " + str(n), "Bell(" + str(n) + ") = " + std::to_string(bell(n)), std::to_string(t.cases));
    }
    record(r, n, 0, std::move(t), o.max_witnesses);
  }
}

void euler_mahonian(VerificationReport& r, const VerifyOptions& o) {
  const QStirlingTable table(o.n_max);
  static constexpr std::array<const char*, 8> kNames = {
      "mak+bmaj", "makp+bmaj", "lmakp+bmaj", "lmak+bmaj",
      "mak+binv", "makp+binv", "lmakp+binv", "lmak+binv"};
  for (int n = 1; n <= o.n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      Counters initial;
      initial.tally.cap = o.max_witnesses;
      initial.counters.resize(kNames.size());
      auto parts = sweep(n, k, o.threads, initial, [k](const SetPartition& p, Counters& acc) {
        std::vector<int> order(static_cast<std::size_t>(k));
        std::iota(order.begin(), order.end(), 1);
        do {
          const OrderedSetPartition op = OrderedSetPartition::arrange(p, order);
          ++acc.tally.cases;
          const CoordinateSums s = coord_sums(op);
          const StatValue n_k = static_cast<StatValue>(op.size()) * (k - 1);
          const StatValue m = mak(op);
          const StatValue mp = s[CoordKind::LOB] + s[CoordKind::RCB];
          const StatValue lm = n_k - (s[CoordKind::LOS] + s[CoordKind::RCS]);
          const StatValue lmp = n_k - (s[CoordKind::LCB] + s[CoordKind::ROB]);
          if (m != lmp) acc.tally.fail(to_string(op), "lmakp = mak = " + str(m), str(lmp));
          if (mp != lm) acc.tally.fail(to_string(op), "lmak = makp = " + str(mp), str(lm));
          const StatValue bm = bmaj(op);
          const StatValue bi = binv(op);
          const std::array<StatValue, 4> base = {m, mp, lmp, lm};
          for (std::size_t j = 0; j < 4; ++j) {
            add_exponent(acc, j, base[j] + bm, op);
            add_exponent(acc, j + 4, base[j] + bi, op);
          }
        } while (std::next_permutation(order.begin(), order.end()));
      });
      Counters all = merged(std::move(parts), initial);
      Tally& t = all.tally;
      const QPolynomial expected = q_factorial(k) * table.get(n, k);
      for (std::size_t j = 0; j < kNames.size(); ++j) {
        ++t.cases;
        const QPolynomial actual = all.counters[j].polynomial();
        if (actual != expected) {
          t.fail("OP_" + str(n) + "^" + str(k) + " " + kNames[j], to_string(expected), to_string(actual));
        }
      }
      record(r, n, k, std::move(t), o.max_witnesses);
    }
  }
}

using SuiteFn = void (*)(VerificationReport&, const VerifyOptions&);

SuiteFn suite_function(std::string_view name) {
  if (name == "theorem1") return theorem1;
  if (name == "theorem2") return theorem2;
  if (name == "theorem3") return theorem3;
  if (name == "lemma1") return lemma1;
  if (name == "eq4") return eq4;
  if (name == "los-linv") return los_linv;
  if (name == "phi-i") return phi_i_suite;
  if (name == "eq13") return eq13;
  if (name == "motzkin") return motzkin_suite;
  if (name == "euler-mahonian") return euler_mahonian;
  return nullptr;
}

}  // namespace

QPolynomial sweep_generating_function(int n, int k, const CombinedStatistic& stat, bool ordered,
                                      int threads) {
  if (n < 0 || k < 0) throw std::invalid_argument("n and k must be >= 0");
  struct Acc {
    ExponentCounter counter;
    std::optional<NegativeExponentError> negative;
  };
  auto add = [&stat](Acc& acc, const auto& member) {
    if (acc.negative) return;
    const StatValue v = evaluate(member.view(), stat);
    if (v < 0) {
      acc.negative.emplace(to_string(member), v);
      return;
    }
    acc.counter.add(v);
  };
  auto parts = sweep(n, k, threads, Acc{}, [&](const SetPartition& p, Acc& acc) {
    if (!ordered) {
      add(acc, p);
      return;
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 1);
    do {
      add(acc, OrderedSetPartition::arrange(p, order));
    } while (std::next_permutation(order.begin(), order.end()));
  });
  ExponentCounter total;
  for (const Acc& part : parts) {
    if (part.negative) throw *part.negative;
    total.merge(part.counter);
  }
  return total.polynomial();
}

std::span<const std::string_view> suite_names() noexcept { return kSuites; }

bool is_suite(std::string_view name) noexcept { return suite_function(name) != nullptr; }

VerificationReport run_suite(std::string_view suite, const VerifyOptions& options) {
  const SuiteFn fn = suite_function(suite);
  if (fn == nullptr) throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  if (options.n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  VerificationReport report;
  report.suite = std::string(suite);
  report.n_max = options.n_max;
  report.k_min = 1;
  report.k_max = options.n_max;
  const auto start = std::chrono::steady_clock::now();
  fn(report, options);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<VerificationReport> run_suites(std::string_view suite, const VerifyOptions& options) {
  std::vector<VerificationReport> out;
  if (suite == "all") {
    for (std::string_view s : kSuites) out.push_back(run_suite(s, options));
  } else {
    out.push_back(run_suite(suite, options));
  }
  return out;
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.3f", report.seconds);
  os << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "  n<=" << report.n_max
     << "  k=" << report.k_min << ".." << report.k_max << "  cases=" << report.cases
     << "  failures=" << report.failure_count << "  time=" << seconds << "s\n";

  std::map<int, std::vector<const CaseCount*>> by_n;
  for (const auto& c : report.breakdown) by_n[c.n].push_back(&c);
  for (const auto& [n, rows] : by_n) {
    std::uint64_t total = 0;
    for (const auto* c : rows) total += c->cases;
    os << "  n=" << n << ": " << total;
    if (rows.size() > 1 || rows.front()->k != 0) {
      os << " [";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << (i ? " " : "");
        if (rows[i]->k == 0) {
          os << "paths:";
        } else {
          os << "k=" << rows[i]->k << ":";
        }
        os << rows[i]->cases;
      }
      os << "]";
    }
    os << '\n';
  }
  for (const auto& f : report.failures) {
    os << "  FAIL " << f.witness << "\n    expected: " << f.expected << "\n    actual:   " << f.actual
       << '\n';
  }
  return os.str();
}

std::string to_json(const VerificationReport& report, bool include_timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"witness", f.witness}, {"expected", f.expected}, {"actual", f.actual}});
  }
  nlohmann::json breakdown = nlohmann::json::array();
  for (const auto& c : report.breakdown) breakdown.push_back({{"n", c.n}, {"k", c.k}, {"cases", c.cases}});
  nlohmann::json j{
      {"suite", report.suite},
      {"passed", report.passed()},
      {"n_max", report.n_max},
      {"k_range", {report.k_min, report.k_max}},
      {"cases", report.cases},
      {"failure_count", report.failure_count},
      {"failures", failures},
      {"breakdown", breakdown},
  };
  if (include_timing) j["seconds"] = report.seconds;
  return j.dump();
}

}  // namespace qpart
