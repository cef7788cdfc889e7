// qpart: command-line front end for the qpart library.
//
// Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpart/bijections.hpp"
#include "qpart/enumerate.hpp"
#include "qpart/error.hpp"
#include "qpart/motzkin.hpp"
#include "qpart/partition.hpp"
#include "qpart/qseries.hpp"
#include "qpart/statistics.hpp"
#include "qpart/text.hpp"
#include "qpart/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  int threads = 1;
};

json poly_json(const qpart::QPolynomial& p) { return json::parse(qpart::to_json(p))["coeffs"]; }

// ---------------------------------------------------------------- enumerate

struct EnumerateArgs {
  int n = 0;
  int k = 0;
  bool ordered = false;
};

int cmd_enumerate(const Globals& g, const EnumerateArgs& a) {
  if (a.n < 0 || a.k < 0) throw UsageError("n and k must be non-negative");
  if (a.k > a.n) throw UsageError("k = " + std::to_string(a.k) + " exceeds n = " + std::to_string(a.n));
  json list = json::array();
  auto emit = [&](const auto& p) {
    if (g.json) {
      list.push_back(qpart::to_string(p));
    } else {
      std::cout << qpart::to_string(p) << '\n';
    }
  };
  if (a.ordered) {
    qpart::for_each_ordered(a.n, a.k, emit);
  } else {
    qpart::for_each_partition(a.n, a.k, emit);
  }
  if (g.json) std::cout << list.dump() << '\n';
  return kExitOk;
}

// -------------------------------------------------------------------- stats

struct StatsArgs {
  std::string partition;
  std::vector<std::string> stats;
  bool per_element = false;
  bool ordered = false;
  int l = 0;
};

constexpr qpart::CoordKind kRowOrder[] = {
    qpart::CoordKind::ROS, qpart::CoordKind::LCS, qpart::CoordKind::LOB, qpart::CoordKind::RCB,
    qpart::CoordKind::LCB, qpart::CoordKind::ROB, qpart::CoordKind::LOS, qpart::CoordKind::RCS};

std::vector<qpart::CoordKind> requested_rows(const std::vector<std::string>& names) {
  if (names.empty()) return {std::begin(kRowOrder), std::end(kRowOrder)};
  std::vector<qpart::CoordKind> out;
  for (const auto& n : names) {
    const auto kind = qpart::parse_coord_kind(n);
    if (!kind) throw UsageError("per-element rows exist only for coordinate statistics, not '" + n + "'");
    out.push_back(*kind);
  }
  return out;
}

// Rows laid out block by block: "ros   0 2 3 / 0 2 / ...".
template <class P>
void print_rows(const P& p, const std::vector<qpart::CoordKind>& kinds) {
  const auto blocks = p.blocks();
  std::size_t width = 2;
  for (auto kind : kinds) width = std::max(width, qpart::name(kind).size());
  auto line = [&](std::string_view label, auto value_of) {
    std::string out(label);
    out.resize(width + 2, ' ');
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b > 0) out += " /";
      for (std::size_t j = 0; j < blocks[b].size(); ++j) {
        if (b > 0 || j > 0) out += ' ';
        out += value_of(blocks[b][j]);
      }
    }
    std::cout << out << '\n';
  };
  line("pi", [](qpart::Element e) { return std::to_string(e); });
  for (auto kind : kinds) {
    const auto row = qpart::coord_row(p, kind);
    line(qpart::name(kind), [&](qpart::Element e) { return std::to_string(row[static_cast<std::size_t>(e - 1)]); });
  }
}

template <class P>
int stats_for(const Globals& g, const StatsArgs& a, const P& p) {
  if (a.per_element) {
    const auto kinds = requested_rows(a.stats);
    if (g.json) {
      json rows = json::object();
      for (auto kind : kinds) rows[std::string(qpart::name(kind))] = qpart::coord_row(p, kind);
      std::cout << json{{"partition", qpart::to_string(p)}, {"rows", rows}}.dump() << '\n';
    } else {
      print_rows(p, kinds);
    }
    return kExitOk;
  }
  std::vector<std::string> names = a.stats;
  if (names.empty()) names = {"mak", "makp", "lmak", "lmakp"};
  std::vector<qpart::CombinedStatistic> parsed;
  for (const auto& n : names) {
    try {
      parsed.push_back(qpart::parse_statistic(n, a.l));
    } catch (const qpart::ValidationError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (g.json) {
    json out{{"partition", qpart::to_string(p)}};
    for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = qpart::evaluate(p, parsed[i]);
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  std::string header;
  std::string values;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) {
      header += ',';
      values += ',';
    }
    header += names[i];
    values += std::to_string(qpart::evaluate(p, parsed[i]));
  }
  std::cout << header << '\n' << values << '\n';
  return kExitOk;
}

int cmd_stats(const Globals& g, const StatsArgs& a) {
  if (a.ordered) return stats_for(g, a, qpart::parse_ordered(a.partition));
  return stats_for(g, a, qpart::parse_partition(a.partition));
}

// ------------------------------------------------------------------- genfun

struct GenfunArgs {
  int n = 0;
  int k = 0;
  std::string stat = "mak";
  int l = 0;
  bool ordered = false;
  std::string compare = "none";
};

int cmd_genfun(const Globals& g, const GenfunArgs& a) {
  if (a.n < 0 || a.k < 0) throw UsageError("n and k must be non-negative");
  if (a.k > a.n) throw UsageError("k = " + std::to_string(a.k) + " exceeds n = " + std::to_string(a.n));
  qpart::CombinedStatistic stat;
  try {
    stat = qpart::parse_statistic(a.stat, a.l);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const qpart::QPolynomial actual = qpart::sweep_generating_function(a.n, a.k, stat, a.ordered, g.threads);

  std::optional<qpart::QPolynomial> expected;
  if (a.compare == "qstirling") {
    expected = qpart::q_stirling(a.n, a.k);
  } else if (a.compare == "qstirling-times-qfact") {
    expected = qpart::q_factorial(a.k) * qpart::q_stirling(a.n, a.k);
  }

  std::string verdict;
  std::string witness;
  if (expected) {
    if (*expected == actual) {
      verdict = "EQUAL";
    } else {
      verdict = "DIFFER";
      const int top = std::max(expected->degree(), actual.degree());
      for (int e = 0; e <= top; ++e) {
        if (expected->coefficient(e) != actual.coefficient(e)) {
          witness = "q^" + std::to_string(e) + ": expected " + expected->coefficient(e).str() + ", got " +
                    actual.coefficient(e).str();
          break;
        }
      }
    }
  }

  if (g.json) {
    json out{{"n", a.n}, {"k", a.k}, {"stat", qpart::to_string(stat)}, {"ordered", a.ordered},
             {"polynomial", poly_json(actual)}};
    if (expected) {
      out["compare"] = a.compare;
      out["expected"] = poly_json(*expected);
      out["verdict"] = verdict;
      if (!witness.empty()) out["witness"] = witness;
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << qpart::to_string(actual) << '\n';
    if (expected) std::cout << verdict << (witness.empty() ? "" : " at " + witness) << '\n';
  }
  return verdict == "DIFFER" ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------- qstirling

struct QStirlingArgs {
  int n = 0;
  std::optional<int> k;
  bool shifted = false;
};

int cmd_qstirling(const Globals& g, const QStirlingArgs& a) {
  if (a.n < 0) throw UsageError("n must be non-negative");
  if (a.k && (*a.k < 0 || *a.k > a.n)) throw UsageError("k must lie in [0, n]");
  auto value = [&](int k) { return a.shifted ? qpart::shifted_stirling(a.n, k) : qpart::q_stirling(a.n, k); };
  if (a.k) {
    const auto p = value(*a.k);
    if (g.json) {
      std::cout << json{{"n", a.n}, {"k", *a.k}, {"shifted", a.shifted}, {"polynomial", poly_json(p)}}.dump()
                << '\n';
    } else {
      std::cout << qpart::to_string(p) << '\n';
    }
    return kExitOk;
  }
  json rows = json::array();
  for (int k = a.n == 0 ? 0 : 1; k <= a.n; ++k) {
    const auto p = value(k);
    if (g.json) {
      rows.push_back({{"k", k}, {"polynomial", poly_json(p)}});
    } else {
      std::cout << "k=" << k << ": " << qpart::to_string(p) << '\n';
    }
  }
  if (g.json) std::cout << json{{"n", a.n}, {"shifted", a.shifted}, {"rows", rows}}.dump() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- bijections

struct PhiArgs {
  std::string partition;
  bool certificate = false;
};

int cmd_phi(const Globals& g, const PhiArgs& a) {
  const auto p = qpart::parse_partition(a.partition);
  if (a.certificate) {
    std::cout << qpart::to_json(qpart::phi_certificate(p)) << '\n';
    return kExitOk;
  }
  const auto image = qpart::phi(p);
  if (g.json) {
    std::cout << json{{"partition", qpart::to_string(p)}, {"image", qpart::to_string(image)}}.dump() << '\n';
  } else {
    std::cout << qpart::to_string(image) << '\n';
  }
  return kExitOk;
}

struct PhiIArgs {
  std::string partition;
  int i = 0;
};

int cmd_phi_i(const Globals& g, const PhiIArgs& a) {
  const auto p = qpart::parse_partition(a.partition);
  const auto image = qpart::phi_i(p, a.i);
  if (g.json) {
    std::cout << json{{"partition", qpart::to_string(p)}, {"i", a.i}, {"image", qpart::to_string(image)}}.dump()
              << '\n';
  } else {
    std::cout << qpart::to_string(image) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------ motzkin

struct MotzkinArgs {
  std::string input;
  bool reflect = false;
  bool ascii = false;
  bool decode = false;
};

int cmd_motzkin(const Globals& g, const MotzkinArgs& a) {
  qpart::LabeledMotzkinPath path;
  if (a.decode) {
    const auto first = a.input.find_first_not_of(" \t");
    path = first != std::string::npos && a.input[first] == '{' ? qpart::path_from_json(a.input)
                                                                 : qpart::parse_path(a.input);
  } else {
    path = qpart::encode(qpart::parse_partition(a.input));
  }
  if (a.reflect) path = qpart::reflect(path);

  if (a.decode) {
    const auto p = qpart::decode(path);
    if (g.json) {
      std::cout << json{{"partition", qpart::to_string(p)}}.dump() << '\n';
    } else {
      std::cout << qpart::to_string(p) << '\n';
    }
    return kExitOk;
  }
  if (g.json) {
    std::cout << qpart::to_json(path) << '\n';
  } else if (a.ascii) {
    std::cout << qpart::render_ascii(path);
  } else {
    std::cout << qpart::to_string(path) << '\n';
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  int n_max = 6;
  std::size_t max_witnesses = 10;
};

int cmd_verify(const Globals& g, const VerifyArgs& a) {
  if (a.suite != "all" && !qpart::is_suite(a.suite)) throw UsageError("unknown suite '" + a.suite + "'");
  if (a.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (g.threads < 1) throw UsageError("--threads must be at least 1");
  qpart::VerifyOptions options;
  options.n_max = a.n_max;
  options.threads = g.threads;
  options.max_witnesses = a.max_witnesses;

  bool passed = true;
  json reports = json::array();
  std::vector<std::string_view> suites;
  if (a.suite == "all") {
    const auto names = qpart::suite_names();
    suites.assign(names.begin(), names.end());
  } else {
    suites.push_back(a.suite);
  }
  for (std::string_view s : suites) {
    const auto report = qpart::run_suite(s, options);
    passed = passed && report.passed();
    if (g.json) {
      reports.push_back(json::parse(qpart::to_json(report)));
    } else {
      std::cout << qpart::to_text(report) << std::flush;
    }
  }
  if (g.json) std::cout << (reports.size() == 1 ? reports[0] : reports).dump() << '\n';
  return passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set partition statistics, bijections and q-Stirling identities"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Emit JSON");
  app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);

  std::function<int()> run;

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List P_n^k (or OP_n^k) in RGF order");
  enumerate->add_option("--n", ea.n)->required();
  enumerate->add_option("--k", ea.k)->required();
  enumerate->add_flag("--ordered", ea.ordered, "Ordered set partitions");
  enumerate->callback([&] { run = [&] { return cmd_enumerate(g, ea); }; });

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Statistics of one partition");
  stats->add_option("partition", sa.partition, "e.g. 1,4,8/2,9/3,7/5,6")->required();
  stats->add_option("--stats", sa.stats, "Comma-separated names, e.g. mak,makp or mak+bmaj")->delimiter(',');
  stats->add_flag("--per-element", sa.per_element, "Coordinate rows, block by block");
  stats->add_flag("--ordered", sa.ordered, "Keep the given block order");
  stats->add_option("--l", sa.l, "Block index for mak_l");
  stats->callback([&] { run = [&] { return cmd_stats(g, sa); }; });

  GenfunArgs ga;
  auto* genfun = app.add_subcommand("genfun", "Generating function of a statistic");
  genfun->add_option("--n", ga.n)->required();
  genfun->add_option("--k", ga.k)->required();
  genfun->add_option("--stat", ga.stat, "Statistic, e.g. mak, mak_l:2, mak+bmaj");
  genfun->add_option("--l", ga.l, "Block index for mak_l");
  genfun->add_flag("--ordered", ga.ordered, "Sum over OP_n^k");
  genfun->add_option("--compare", ga.compare)
      ->check(CLI::IsMember({"none", "qstirling", "qstirling-times-qfact"}));
  genfun->callback([&] { run = [&] { return cmd_genfun(g, ga); }; });

  QStirlingArgs qa;
  auto* qstirling = app.add_subcommand("qstirling", "q-Stirling numbers S_q(n, k)");
  qstirling->add_option("--n", qa.n)->required();
  qstirling->add_option("--k", qa.k, "Omit to print every k");
  qstirling->add_flag("--shifted", qa.shifted, "Divide by q^C(k,2)");
  qstirling->callback([&] { run = [&] { return cmd_qstirling(g, qa); }; });

  PhiArgs pa;
  auto* phi = app.add_subcommand("phi", "Apply the mak/makp involution");
  phi->add_option("partition", pa.partition)->required();
  phi->add_flag("--certificate", pa.certificate, "Emit the gamma matrices as JSON");
  phi->callback([&] { run = [&] { return cmd_phi(g, pa); }; });

  PhiIArgs pia;
  auto* phi_i = app.add_subcommand("phi-i", "Exchange blocks i and i+1 within the opener class");
  phi_i->add_option("partition", pia.partition)->required();
  phi_i->add_option("--i", pia.i)->required();
  phi_i->callback([&] { run = [&] { return cmd_phi_i(g, pia); }; });

  MotzkinArgs ma;
  auto* motzkin = app.add_subcommand("motzkin", "Labelled Motzkin path of a partition");
  motzkin->add_option("input", ma.input, "Partition, or a path with --decode")->required();
  motzkin->add_flag("--reflect", ma.reflect, "Mirror the path");
  motzkin->add_flag("--ascii", ma.ascii, "Draw the path");
  motzkin->add_flag("--decode", ma.decode, "Input is a path; print its partition");
  motzkin->callback([&] { run = [&] { return cmd_motzkin(g, ma); }; });

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", va.suite, "Suite name or 'all'")->required();
  verify->add_option("--n-max", va.n_max);
  verify->add_option("--max-witnesses", va.max_witnesses);
  verify->callback([&] { run = [&] { return cmd_verify(g, va); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
