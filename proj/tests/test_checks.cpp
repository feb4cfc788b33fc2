#include <doctest.h>

#include "sqpaths/checks.hpp"
#include "sqpaths/paths.hpp"

using namespace sqpaths;

namespace {

template <class Counts>
StatRecord with_secondary(const PrefFunc& p, Counts counts) {
  StatRecord s = stats(p);
  const Placement pl = place(p);
  s.dinv.secondary = 0;
  for (int a = 1; a <= pl.size(); ++a) {
    for (int b = a + 1; b <= pl.size(); ++b) {
      if (counts(pl.at(a), pl.at(b))) ++s.dinv.secondary;
    }
  }
  return s;
}

// Secondary dinv with the smaller car two diagonals lower instead of one.
StatRecord off_by_one_stats(const PrefFunc& p) {
  return with_secondary(p, [](const CarCell& a, const CarCell& b) {
    return a.diagonal + 2 == b.diagonal && a.column > b.column;
  });
}

// Secondary dinv with the column condition weakened to col(a) >= col(b).
StatRecord weak_column_stats(const PrefFunc& p) {
  return with_secondary(p, [](const CarCell& a, const CarCell& b) {
    return a.diagonal + 1 == b.diagonal && a.column >= b.column;
  });
}

CheckSpec spec_for(const std::string& id, int lo, int hi) {
  CheckSpec spec;
  spec.id = id;
  spec.n_min = lo;
  spec.n_max = hi;
  return spec;
}

}  // namespace

TEST_CASE("every registered check passes on small parameters") {
  for (const CheckInfo& info : registered_checks()) {
    CheckSpec spec;
    spec.id = info.id;
    if (info.id == "lemma-parlem") {
      spec.samples = 200;
    } else {
      spec.n_min = 1;
      spec.n_max = std::min(info.default_n_max, 5);
    }
    const CheckReport report = run_check(spec);
    INFO(info.id);
    CHECK(report.pass);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.objects > 0);
  }
}

TEST_CASE("off-by-one secondary dinv breaks the refinement") {
  CheckSpec spec = spec_for("cor-withides", 1, 5);
  spec.stats_fn = off_by_one_stats;
  const CheckReport report = run_check(spec);
  CHECK_FALSE(report.pass);
  REQUIRE(report.counterexample.has_value());
  CHECK(report.counterexample->find("tau=") != std::string::npos);
  CHECK(report.to_json_line().find(R"("pass":false)") != std::string::npos);

  for (const char* id : {"thm-pref-closed-form", "lemma-factor", "main-square-paths"}) {
    CheckSpec other = spec_for(id, 1, 5);
    other.stats_fn = off_by_one_stats;
    INFO(id);
    CHECK_FALSE(run_check(other).pass);
  }
}

TEST_CASE("weak-column secondary dinv") {
  // Each same-column neighbour pair now counts, which multiplies every
  // weight by q^(n - #columns used). The refinement survives this...
  CheckSpec refinement = spec_for("cor-withides", 1, 5);
  refinement.stats_fn = weak_column_stats;
  CHECK(run_check(refinement).pass);
  // ...but the closed forms and the factorization do not.
  for (const char* id : {"thm-schedule-closed-form", "thm-pref-closed-form", "lemma-factor"}) {
    CheckSpec other = spec_for(id, 1, 5);
    other.stats_fn = weak_column_stats;
    INFO(id);
    CHECK_FALSE(run_check(other).pass);
  }
}

TEST_CASE("restricting to one permutation") {
  CheckSpec spec;
  spec.id = "thm-pref-closed-form";
  spec.tau = parse_perm("23145");
  spec.l = 1;
  const CheckReport report = run_check(spec);
  CHECK(report.pass);
  CHECK(report.to_json_line() ==
        R"({"id":"thm-pref-closed-form","parameters":{"n":[5,5],"tau":"23145","l":1},"pass":true,)"
        R"("counterexample":null,"objects":3125})");
  spec.id = "generate-tree";
  CHECK(run_check(spec).pass);
  spec.id = "lemma-factor";
  CHECK(run_check(spec).pass);
}

TEST_CASE("usage errors") {
  CHECK_THROWS_AS(run_check(spec_for("no-such-check", 1, 2)), UsageError);
  CHECK_THROWS_AS(run_check(spec_for("main-square-paths", 1, 8)), UsageError);
  CHECK_THROWS_AS(run_check(spec_for("thm-hmz", 0, 3)), UsageError);
  CHECK_THROWS_AS(run_check(spec_for("thm-hmz", 4, 2)), UsageError);
  CHECK_THROWS_AS(run_check(spec_for("thm-hmz", 1, 9)), UsageError);

  CheckSpec tau_on_symbolic = spec_for("thm-hmz", 1, 2);
  tau_on_symbolic.tau = parse_perm("21");
  CHECK_THROWS_AS(run_check(tau_on_symbolic), UsageError);

  CheckSpec bad_l;
  bad_l.id = "thm-pref-closed-form";
  bad_l.tau = parse_perm("23145");
  bad_l.l = 2;
  CHECK_THROWS_AS(run_check(bad_l), UsageError);

  CheckSpec mismatched = spec_for("thm-pref-closed-form", 4, 4);
  mismatched.tau = parse_perm("23145");
  CHECK_THROWS_AS(run_check(mismatched), UsageError);

  CheckSpec threads = spec_for("enk-sum", 1, 2);
  threads.threads = 0;
  CHECK_THROWS_AS(run_check(threads), UsageError);

  CheckSpec parlem;
  parlem.id = "lemma-parlem";
  parlem.max = 0;
  CHECK_THROWS_AS(run_check(parlem), UsageError);

  CHECK(parse_n_range("6") == std::pair{6, 6});
  CHECK(parse_n_range("1..6") == std::pair{1, 6});
  CHECK_THROWS_AS(parse_n_range("1..x"), UsageError);
  CHECK_THROWS_AS(parse_n_range(""), UsageError);
}

TEST_CASE("reports do not depend on the thread count") {
  for (const CheckInfo& info : registered_checks()) {
    CheckSpec spec;
    spec.id = info.id;
    if (info.id == "lemma-parlem") {
      spec.samples = 100;
    } else {
      spec.n_min = 1;
      spec.n_max = std::min(info.default_n_max, 5);
    }
    spec.threads = 1;
    const std::string reference = run_check(spec).to_json_line();
    for (int threads : {2, 8}) {
      spec.threads = threads;
      INFO(info.id << " threads=" << threads);
      CHECK(run_check(spec).to_json_line() == reference);
    }
  }
  // Violations are reported identically too.
  CheckSpec broken = spec_for("cor-withides", 1, 5);
  broken.stats_fn = off_by_one_stats;
  const std::string reference = run_check(broken).to_json_line();
  broken.threads = 8;
  CHECK(run_check(broken).to_json_line() == reference);
}
