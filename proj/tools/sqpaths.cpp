// Command-line front end: statistics of single preference functions,
// JSON-lines enumeration, the identity check registry, and CSV tables.
//
// Exit status: 0 success, 1 identity violation, 2 usage error.

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sqpaths/checks.hpp"
#include "sqpaths/kernels.hpp"
#include "sqpaths/paths.hpp"
#include "sqpaths/schedules.hpp"
#include "sqpaths/symfunc.hpp"

namespace {

using namespace sqpaths;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string join(const std::vector<int>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

int enumeration_bound(bool allow_eight) { return allow_eight ? 8 : 7; }

// ---------------------------------------------------------------- stats

int cmd_stats(const std::string& text) {
  const PrefFunc p = PrefFunc::parse(text);
  if (p.size() > 16) throw UsageError("stats: at most 16 cars");
  std::cout << to_json_line(p, stats(p)) << '\n';
  return 0;
}

// ---------------------------------------------------------------- enumerate

struct EnumerateFilters {
  bool parking_only = false;
  std::optional<Perm> diagword;
  std::optional<int> deviation;
  std::optional<int> touch;

  bool keep(const StatRecord& s) const {
    if (parking_only && !s.parking) return false;
    if (diagword && s.diagword != *diagword) return false;
    if (deviation && s.deviation != *deviation) return false;
    if (touch && s.touch != *touch) return false;
    return true;
  }
};

int cmd_enumerate(int n, const EnumerateFilters& filters, int threads, bool allow_eight) {
  try {
    check_enumeration_bound(n, enumeration_bound(allow_eight));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + (allow_eight || n != 8 ? "" : " (pass --allow-8)"));
  }
  if (filters.diagword && (static_cast<int>(filters.diagword->size()) != n || !is_permutation(*filters.diagword))) {
    throw UsageError("--diagword must be a permutation of 1.." + std::to_string(n));
  }
  const std::uint64_t block = pref_count(n) / static_cast<std::uint64_t>(n);
  auto render = [&](int first) {
    std::string out;
    for (std::uint64_t r = 0; r < block; ++r) {
      const PrefFunc p = pref_from_rank(static_cast<std::uint64_t>(first - 1) * block + r, n);
      const StatRecord s = stats(p);
      if (filters.keep(s)) {
        out += to_json_line(p, s);
        out += '\n';
      }
    }
    return out;
  };
  // Blocks of equal f(1) are rendered in waves of `threads` and printed in order.
  for (int wave = 1; wave <= n; wave += threads) {
    const int last = std::min(n, wave + threads - 1);
    std::vector<std::string> text(last - wave + 1);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
    for (int first = wave; first <= last; ++first) text[first - wave] = render(first);
    for (const auto& t : text) std::fwrite(t.data(), 1, t.size(), stdout);
  }
  std::fflush(stdout);
  return 0;
}

// ---------------------------------------------------------------- check

int cmd_check(const CheckSpec& spec, bool timing) {
  const CheckReport report = run_check(spec);
  std::cout << report.to_json_line(timing) << '\n';
  return report.pass ? 0 : kExitViolation;
}

int cmd_list_checks() {
  for (const CheckInfo& info : registered_checks()) {
    const bool ranged = info.id != "lemma-parlem";
    std::cout << info.id << ','
              << (ranged ? std::to_string(info.default_n_min) + ".." + std::to_string(info.default_n_max) : "-") << ','
              << info.summary << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- table

std::map<PermCode, DiagwordTally> grouped_tallies(int n, int threads, int bound) {
  const KeyFn key = [](const PrefFunc&, const StatRecord& s) {
    return (static_cast<std::int64_t>(encode_perm(s.diagword)) << 8) | s.deviation;
  };
  const KeyedTally kt = threads <= 1 ? keyed_tally_serial(n, key, stats, bound)
                                     : keyed_tally_parallel(n, threads, key, stats, bound);
  std::map<PermCode, DiagwordTally> out;
  for (const auto& [k, tally] : kt) out[static_cast<PermCode>(k >> 8)][static_cast<int>(k & 0xff)] = tally;
  return out;
}

QTPoly brute_polynomial(const DiagwordTally& d, int l) {
  auto it = d.find(l);
  return it == d.end() ? QTPoly{} : to_qt(it->second);
}

int table_schedules(const std::string& tau_text, int threads, bool allow_eight) {
  if (tau_text.empty()) throw UsageError("table schedules needs --tau");
  const Perm tau = parse_perm(tau_text);
  const RunDecomposition rd(tau);
  const int n = static_cast<int>(tau.size());
  const bool brute = n <= enumeration_bound(allow_eight);
  DiagwordTally tally;
  if (brute) {
    tally = threads <= 1 ? diagword_tally_serial(tau, stats, 8) : diagword_tally_parallel(tau, threads, stats, 8);
  }
  std::vector<int> lengths;
  for (const auto& run : rd.runs) lengths.push_back(static_cast<int>(run.size()));

  bool all_match = true;
  std::cout << "tau,l,maj,rho,by_car,right_to_left,multiset,closed_form,brute_force,match\n";
  for (int l = 0; l < rd.count(); ++l) {
    const auto w = schedule_l(tau, l);
    std::string by_car;
    for (std::size_t p = 0; p < rd.runs.size(); ++p) {
      if (p > 0) by_car += '|';
      std::vector<int> vals;
      for (int c : rd.runs[p]) vals.push_back(w[c]);
      by_car += join(vals);
    }
    std::vector<int> rtl;
    for (auto it = tau.rbegin(); it != tau.rend(); ++it) rtl.push_back(w[*it]);
    std::vector<int> multiset = rtl;
    std::sort(multiset.begin(), multiset.end());
    const QTPoly closed = pref_closed_form(tau, l);
    std::string brute_text = "-";
    std::string match = "-";
    if (brute) {
      const QTPoly b = brute_polynomial(tally, l);
      brute_text = b.to_string();
      match = b == closed ? "yes" : "no";
      all_match = all_match && b == closed;
    }
    std::cout << perm_string(tau) << ',' << l << ',' << maj(tau) << ',' << join(lengths) << ',' << by_car << ','
              << join(rtl) << ',' << join(multiset) << ',' << closed.to_string() << ',' << brute_text << ',' << match
              << '\n';
  }
  return all_match ? 0 : kExitViolation;
}

int table_polynomials(int n, int threads, bool allow_eight) {
  if (n < 1 || n > enumeration_bound(allow_eight)) {
    throw UsageError("table polynomials: --n must lie in [1, " + std::to_string(enumeration_bound(allow_eight)) + "]");
  }
  const auto g = grouped_tallies(n, threads, 8);
  bool all_match = true;
  std::cout << "tau,l,closed_form,brute_force,match\n";
  for (const Perm& tau : all_perms(n)) {
    const RunDecomposition rd(tau);
    auto it = g.find(encode_perm(tau));
    for (int l = 0; l < rd.count(); ++l) {
      const QTPoly closed = pref_closed_form(tau, l);
      const QTPoly b = it == g.end() ? QTPoly{} : brute_polynomial(it->second, l);
      all_match = all_match && b == closed;
      std::cout << perm_string(tau) << ',' << l << ',' << closed.to_string() << ',' << b.to_string() << ','
                << (b == closed ? "yes" : "no") << '\n';
    }
  }
  return all_match ? 0 : kExitViolation;
}

int table_enk(int n) {
  if (n < 1 || n > kDefaultSymDegree) {
    throw UsageError("table enk: --n must lie in [1, " + std::to_string(kDefaultSymDegree) + "]");
  }
  const auto e = e_nk(n);
  std::cout << "n,k,partition,coefficient\n";
  for (int k = 1; k <= n; ++k) {
    for (const auto& [lambda, c] : e[k - 1].coeffs()) {
      std::cout << n << ',' << k << ',' << join(lambda) << ',' << c.coefficient(0).to_string() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parking functions, preference functions and square paths: statistics, enumeration, identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration kernels")->check(CLI::Range(1, 256));

  auto* stats_cmd = app.add_subcommand("stats", "Statistics of one preference function as a JSON line");
  std::string f_text;
  stats_cmd->add_option("f", f_text, "Preference vector, e.g. 1,5,1,2,1")->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "All preference functions on n cars as JSON lines");
  int enum_n = 0;
  EnumerateFilters filters;
  std::string diagword_text;
  int deviation = -1;
  int touch = -1;
  bool enum_allow_eight = false;
  enum_cmd->add_option("--n", enum_n, "Number of cars")->required();
  enum_cmd->add_flag("--parking-only", filters.parking_only, "Only parking functions");
  enum_cmd->add_option("--diagword", diagword_text, "Only this diagonal word");
  enum_cmd->add_option("--deviation", deviation, "Only this deviation")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--touch", touch, "Only this touch number")->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--allow-8", enum_allow_eight, "Permit n = 8");

  auto* check_cmd = app.add_subcommand("check", "Run a registered identity check");
  std::string check_id;
  std::string n_text;
  std::string check_tau;
  int check_l = -1;
  CheckSpec spec;
  bool timing = false;
  bool list = false;
  check_cmd->add_option("id", check_id, "Check id (see --list)");
  check_cmd->add_flag("--list", list, "List registered checks");
  check_cmd->add_option("--n", n_text, "n or a range a..b");
  check_cmd->add_option("--tau", check_tau, "Restrict to one permutation");
  check_cmd->add_option("--l", check_l, "Restrict to one deviation l");
  check_cmd->add_option("--max", spec.max, "lemma-parlem: largest rectangle side for random partitions");
  check_cmd->add_option("--samples", spec.samples, "lemma-parlem: number of random partitions");
  check_cmd->add_option("--seed", spec.seed, "lemma-parlem: random seed");
  check_cmd->add_flag("--allow-8", spec.allow_eight, "Permit brute force over 8 cars");
  check_cmd->add_flag("--timing", timing, "Include wall time in the report");

  auto* table_cmd = app.add_subcommand("table", "CSV tables");
  std::string kind;
  std::string table_tau;
  int table_n = 0;
  bool table_allow_eight = false;
  table_cmd->add_option("kind", kind, "schedules | polynomials | enk")
      ->required()
      ->check(CLI::IsMember({"schedules", "polynomials", "enk"}));
  table_cmd->add_option("--tau", table_tau, "Permutation (schedules)");
  table_cmd->add_option("--n", table_n, "Number of cars / degree (polynomials, enk)");
  table_cmd->add_flag("--allow-8", table_allow_eight, "Permit brute force over 8 cars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*stats_cmd) return cmd_stats(f_text);
    if (*enum_cmd) {
      if (!diagword_text.empty()) filters.diagword = parse_perm(diagword_text);
      if (deviation >= 0) filters.deviation = deviation;
      if (touch >= 0) filters.touch = touch;
      return cmd_enumerate(enum_n, filters, threads, enum_allow_eight);
    }
    if (*check_cmd) {
      if (list) return cmd_list_checks();
      if (check_id.empty()) throw UsageError("check: missing id (see check --list)");
      spec.id = check_id;
      spec.threads = threads;
      if (!n_text.empty()) {
        const auto [lo, hi] = parse_n_range(n_text);
        spec.n_min = lo;
        spec.n_max = hi;
      }
      if (!check_tau.empty()) spec.tau = parse_perm(check_tau);
      if (check_l >= 0) spec.l = check_l;
      if (check_cmd->count("--l") > 0 && check_l < 0) throw UsageError("--l must be nonnegative");
      return cmd_check(spec, timing);
    }
    if (*table_cmd) {
      if (kind == "schedules") return table_schedules(table_tau, threads, table_allow_eight);
      if (kind == "polynomials") return table_polynomials(table_n, threads, table_allow_eight);
      return table_enk(table_n);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << '\n';
    return kExitViolation;
  }
  return kExitUsage;
}
