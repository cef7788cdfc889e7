#pragma once

// Exhaustive verification suites over P_n^k and OP_n^k.
//
// Suites:
//   theorem1        phi is an involution, mak(p) = makp(phi(p)), closers mirror openers
//   theorem2        mak = lmakp and makp = lmak pointwise, with the inversion-count forms
//   theorem3        generating functions of mak, makp, lmak, lmakp, mak_l equal S_q(n, k),
//                   plus the enumerated recurrence in n
//   lemma1          trace identities for mak, makp and the opener/closer level balance
//   eq4             per-element block count identity and its sum over [n]
//   los-linv        los + linv over openers depends only on the opener set
//   phi-i           block exchanges are bijections on each opener class and shift stat_i
//   eq13            sum of q^{mak + k - nrinv(g(B_{i+1}))} equals q^i times sum of q^{mak}
//   motzkin         path encoding round trips, reflection realizes phi, path counts are Bell
//   euler-mahonian  eight combined statistics on OP_n^k have generating function [k]_q! S_q(n, k)
//
// Work is split by RGF prefix into chunks. Per-chunk results are merged in
// lexicographic order, so the report does not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qpart/qpolynomial.hpp"
#include "qpart/statistics.hpp"

namespace qpart {

struct Failure {
  std::string witness;
  std::string expected;
  std::string actual;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct CaseCount {
  int n = 0;
  int k = 0;
  std::uint64_t cases = 0;

  friend bool operator==(const CaseCount&, const CaseCount&) = default;
};

struct VerificationReport {
  std::string suite;
  int n_max = 0;
  int k_min = 1;
  int k_max = 0;
  std::uint64_t cases = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // first `max_witnesses` failures in enumeration order
  std::vector<CaseCount> breakdown;
  double seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
};

struct VerifyOptions {
  int n_max = 6;
  int threads = 1;
  std::size_t max_witnesses = 10;
};

std::span<const std::string_view> suite_names() noexcept;
bool is_suite(std::string_view name) noexcept;

/// Runs one suite. Throws std::invalid_argument for an unknown name.
VerificationReport run_suite(std::string_view suite, const VerifyOptions& options);
/// "all" expands to every suite in the order of suite_names().
std::vector<VerificationReport> run_suites(std::string_view suite, const VerifyOptions& options);

/// Sum of q^{stat} over P_n^k (or OP_n^k when `ordered`), computed on
/// `threads` workers. The result does not depend on the thread count.
/// Throws NegativeExponentError if the statistic goes negative.
QPolynomial sweep_generating_function(int n, int k, const CombinedStatistic& stat, bool ordered,
                                      int threads = 1);

std::string to_text(const VerificationReport& report);
std::string to_json(const VerificationReport& report, bool include_timing = true);

}  // namespace qpart
