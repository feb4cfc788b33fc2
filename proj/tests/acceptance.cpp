// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any
// failure. Expected values below are typed in by hand, not recomputed.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "sqpaths/checks.hpp"
#include "sqpaths/kernels.hpp"
#include "sqpaths/paths.hpp"
#include "sqpaths/schedules.hpp"

using namespace sqpaths;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures within one criterion.
class Probe {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
    ok_ = ok_ && ok;
  }
  Outcome outcome(std::string summary) const { return {ok_, ok_ ? std::move(summary) : failure_}; }

 private:
  bool ok_ = true;
  std::string failure_;
};

QTPoly t_pow(int k) { return QTPoly::monomial(1, 0, k); }
QTPoly q_pow(int k) { return QTPoly::monomial(1, k, 0); }
QTPoly one_plus_q() { return QTPoly(1) + QTPoly::q(); }

std::vector<int> per_car(const std::vector<int>& w) { return {w.begin() + 1, w.end()}; }

std::vector<std::vector<int>> by_run(const Perm& tau, const std::vector<int>& w) {
  std::vector<std::vector<int>> out;
  for (const auto& run : runs(tau)) {
    out.emplace_back();
    for (int c : run) out.back().push_back(w[c]);
  }
  return out;
}

CheckSpec spec_for(const std::string& id, std::optional<int> lo = {}, std::optional<int> hi = {}) {
  CheckSpec spec;
  spec.id = id;
  spec.n_min = lo;
  spec.n_max = hi;
  return spec;
}

// Runs the checks and fails on the first report that does not pass.
void run_checks(Probe& probe, const std::vector<CheckSpec>& specs, std::string& summary) {
  for (const CheckSpec& spec : specs) {
    const CheckReport r = run_check(spec);
    probe.expect(r.pass, r.to_json_line());
    if (!summary.empty()) summary += ", ";
    const std::string params = r.parameters.contains("n") ? "n=" + r.parameters["n"].dump() : r.parameters.dump();
    summary += r.id + " " + params + " (" + std::to_string(r.objects) + " objects)";
  }
}

Outcome worked_examples() {
  Probe p;
  const StatRecord a = stats(PrefFunc::parse("1,5,1,2,1"));
  p.expect(a.area == 5, "area(1,5,1,2,1) != 5");
  p.expect(a.dinv.total() == 2, "dinv(1,5,1,2,1) != 2");
  p.expect(a.word == parse_perm("45321"), "word(1,5,1,2,1) != 45321");
  p.expect(a.ides == subset_from({1, 2, 3}), "ides(1,5,1,2,1) != {1,2,3}");
  p.expect(a.comp == std::vector<int>{4, 1}, "comp(1,5,1,2,1) != (4,1)");
  p.expect(a.diagword == parse_perm("45312"), "diagword(1,5,1,2,1) != 45312");
  p.expect(a.parking && a.deviation == 0, "(1,5,1,2,1) is not parking");

  const StatRecord b = stats(PrefFunc::parse("3,5,3,2,3"));
  p.expect(b.deviation == 1, "deviation(3,5,3,2,3) != 1");
  p.expect(b.area == 4, "area(3,5,3,2,3) != 4");
  p.expect(b.dinv == DinvParts{0, 1, 2}, "dinv parts(3,5,3,2,3) != (0,1,2)");
  p.expect(b.word == parse_perm("52314"), "word(3,5,3,2,3) != 52314");
  p.expect(b.ides == subset_from({1, 4}), "ides(3,5,3,2,3) != {1,4}");
  p.expect(!b.parking && !b.comp.has_value(), "(3,5,3,2,3) reported as parking");
  return p.outcome("(1,5,1,2,1) and (3,5,3,2,3) match");
}

Outcome schedule_tables() {
  Probe p;
  const Perm small = parse_perm("23145");
  p.expect(schedule0(small) == std::vector<int>{1, 2, 3, 1, 2}, "0-schedule of 23145 != (1,2,3,1,2)");
  p.expect(per_car(schedule_l(small, 1)) == std::vector<int>{2, 2, 1, 1, 2}, "1-schedule of 23145 != 2,2,1,1,2 by car");

  const Perm tau = parse_perm("37158264");
  const std::vector<std::vector<std::vector<int>>> table{
      {{2, 2}, {2, 2, 2}, {1, 1}, {1}},
      {{2, 2}, {2, 2, 2}, {2, 1}, {1}},
      {{2, 2}, {3, 2, 1}, {2, 2}, {1}},
      {{2, 1}, {2, 2, 2}, {2, 2}, {1}},
  };
  for (int l = 0; l < 4; ++l) {
    p.expect(by_run(tau, schedule_l(tau, l)) == table[l], "37158264 row l=" + std::to_string(l));
  }
  return p.outcome("23145 rows and the four 37158264 rows match");
}

Outcome insertion_trees() {
  Probe p;
  const Perm tau = parse_perm("23145");
  const QTPoly expected[2] = {t_pow(2) * one_plus_q().pow(2) * q_int(3), t_pow(2) * q_pow(3) * one_plus_q().pow(3)};
  const std::size_t leaves_expected[2] = {12, 8};

  std::map<int, std::vector<PrefFunc>> brute;
  enumerate_all(5, [&](const PrefFunc& f) {
    const StatRecord s = stats(f);
    if (s.diagword == tau) brute[s.deviation].push_back(f);
  });

  for (int l = 0; l <= 1; ++l) {
    const auto leaves = generate(tau, l);
    p.expect(leaves.size() == leaves_expected[l], "generate(23145, " + std::to_string(l) + ") leaf count");
    std::vector<PrefFunc> got;
    QTPoly poly;
    for (const auto& leaf : leaves) {
      got.push_back(leaf.pref);
      const StatRecord s = stats(leaf.pref);
      poly.add_term(1, {s.dinv.total(), s.area});
    }
    std::sort(got.begin(), got.end());
    p.expect(got == brute[l], "leaf set differs from brute force at l=" + std::to_string(l));
    p.expect(poly == expected[l], "leaf polynomial at l=" + std::to_string(l) + " is " + poly.to_string());
  }
  std::string summary;
  run_checks(p, {spec_for("generate-tree", 1, 6)}, summary);
  return p.outcome("12 and 8 leaves with the expected polynomials; " + summary);
}

Outcome closed_forms() {
  Probe p;
  std::string summary;
  run_checks(p,
             {spec_for("thm-schedule-closed-form", 1, 6), spec_for("thm-pref-closed-form", 1, 6),
              spec_for("thm-schedule-closed-form", 7, 7), spec_for("thm-pref-closed-form", 7, 7)},
             summary);
  return p.outcome(summary);
}

Outcome shift_and_partitions() {
  Probe p;
  CheckSpec parlem = spec_for("lemma-parlem");
  parlem.max = 12;
  parlem.samples = 1000;
  std::string summary;
  run_checks(p, {spec_for("thm-schedule-shift", 1, 8), parlem}, summary);
  return p.outcome(summary);
}

Outcome quasisymmetric_refinements() {
  Probe p;
  std::string summary;
  run_checks(p, {spec_for("lemma-factor", 1, 6), spec_for("cor-withides", 1, 6), spec_for("cor-noides", 1, 6)},
             summary);
  return p.outcome(summary);
}

Outcome symbolic_identities() {
  Probe p;
  std::string summary;
  run_checks(p, {spec_for("thm-hmz", 1, 6), spec_for("thm-pn-identity", 1, 6), spec_for("enk-sum", 1, 6)}, summary);
  return p.outcome(summary);
}

Outcome main_identity() {
  Probe p;
  std::string summary;
  run_checks(p, {spec_for("main-square-paths", 1, 6), spec_for("main-square-paths", 7, 7)}, summary);
  return p.outcome(summary);
}

Outcome determinism() {
  Probe p;
  int compared = 0;
  for (const CheckInfo& info : registered_checks()) {
    CheckSpec spec = spec_for(info.id);
    spec.threads = 1;
    const std::string reference = run_check(spec).to_json_line();
    for (int threads : {2, 8}) {
      spec.threads = threads;
      p.expect(run_check(spec).to_json_line() == reference, info.id + " differs at threads=" + std::to_string(threads));
      ++compared;
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const Census serial = census_serial(n);
    for (int threads : {1, 2, 8}) {
      p.expect(census_parallel(n, threads).entries == serial.entries,
               "census n=" + std::to_string(n) + " differs at threads=" + std::to_string(threads));
      ++compared;
    }
  }
  return p.outcome(std::to_string(compared) + " report and census comparisons across 1, 2 and 8 threads");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"worked-example statistics", worked_examples},
      {"schedule tables", schedule_tables},
      {"insertion trees for 23145", insertion_trees},
      {"closed forms vs brute force", closed_forms},
      {"schedule shift and partition lemma", shift_and_partitions},
      {"factorization and ides refinements", quasisymmetric_refinements},
      {"symbolic identities", symbolic_identities},
      {"square paths identity", main_identity},
      {"thread determinism", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failures;
    std::printf("[%s] criterion %zu: %s (%.1fs): %s\n", out.pass ? "PASS" : "FAIL", i + 1, name.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
