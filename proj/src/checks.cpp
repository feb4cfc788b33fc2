#include "sqpaths/checks.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "sqpaths/quasisym.hpp"
#include "sqpaths/schedules.hpp"
#include "sqpaths/symfunc.hpp"

namespace sqpaths {

namespace {

constexpr int kBruteLimit = 7;

const std::vector<CheckInfo> kChecks = {
    {"thm-schedule-closed-form", "parking functions with diagonal word tau: t^maj prod [w_i]_q equals brute force", 1, 6,
     kBruteLimit, true, true, false},
    {"thm-pref-closed-form", "deviation-l preference functions with diagonal word tau: l-schedule product equals brute force",
     1, 6, kBruteLimit, true, true, true},
    {"thm-schedule-shift", "l-schedule multiset equals the 0-schedule multiset with rho_l in place of rho_0", 1, 8, 8,
     false, true, true},
    {"cor-noides", "all preference functions with diagonal word tau: t^maj [n]_q/[k]_q prod [w_i]_q equals brute force", 1,
     6, kBruteLimit, true, true, false},
    {"lemma-parlem", "(lambda + delta_b) u delta_a and (lambda' + delta_a) u delta_b agree as multisets", 1, 1, 1, false,
     false, false},
    {"lemma-factor", "ides refinement factors through the consecutive-block sum (cross-multiplied)", 1, 6, kBruteLimit,
     true, true, true},
    {"cor-withides", "[k]_q * sum over preference functions == [n]_q * sum over parking functions, per diagonal word", 1,
     6, kBruteLimit, true, true, false},
    {"thm-hmz", "E_{n,k} equals the sum of C_rho 1 over compositions with k parts", 1, 6, kDefaultSymDegree, false, false,
     false},
    {"thm-pn-identity", "(-1)^(n-1) p_n equals sum_k [n]_q/[k]_q E_{n,k}", 1, 6, kDefaultSymDegree, false, false, false},
    {"enk-sum", "sum_k E_{n,k} equals e_n", 1, 6, kDefaultSymDegree, false, false, false},
    {"main-square-paths",
     "sum over preference functions equals sum_k [n]_q/[k]_q times the parking functions touching k times", 1, 6,
     kBruteLimit, true, false, false},
    {"generate-tree", "insertion trees produce exactly the brute-force preference functions with l-schedule fan-out", 1,
     6, kBruteLimit, true, true, true},
};

struct Failure {
  std::string message;
};

std::string subset_string(SubsetMask s) {
  std::string out = "{";
  bool first = true;
  for (int i : subset_elements(s)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

class Runner {
 public:
  Runner(const CheckSpec& spec, const CheckInfo& info) : spec_(spec), info_(info) {}

  CheckReport run();

 private:
  using Body = std::function<std::optional<Failure>(int n)>;

  void resolve_range();
  int enumeration_limit() const { return spec_.allow_eight ? 8 : kBruteLimit; }
  std::vector<Perm> taus(int n) const;
  std::vector<int> ls(const RunDecomposition& rd, int from) const;
  std::optional<Failure> sweep(const Body& body);

  // Brute-force tallies of n-car preference functions keyed by diagonal word, then deviation.
  std::map<PermCode, DiagwordTally> grouped(int n);
  static const StatTally& lookup(const std::map<PermCode, DiagwordTally>& g, const Perm& tau, int l);

  std::optional<Failure> schedule_closed_form(int n);
  std::optional<Failure> pref_closed_form_check(int n);
  std::optional<Failure> schedule_shift(int n);
  std::optional<Failure> noides(int n);
  std::optional<Failure> parlem();
  std::optional<Failure> factor(int n);
  std::optional<Failure> withides(int n);
  std::optional<Failure> symbolic(int n);
  std::optional<Failure> main_square_paths(int n);
  std::optional<Failure> generate_tree(int n);

  const CheckSpec& spec_;
  const CheckInfo& info_;
  int n_min_ = 1;
  int n_max_ = 1;
  std::uint64_t objects_ = 0;
};

void Runner::resolve_range() {
  if (spec_.threads < 1) throw UsageError("--threads must be at least 1");
  if (spec_.tau && !info_.per_tau) throw UsageError(info_.id + " does not take --tau");
  if (spec_.l && !info_.per_l) throw UsageError(info_.id + " does not take --l");
  if (spec_.l && *spec_.l < 0) throw UsageError("--l must be nonnegative");
  const int limit = info_.brute_force ? enumeration_limit() : info_.limit_n_max;
  if (spec_.tau) {
    if (!is_permutation(*spec_.tau) || spec_.tau->empty()) throw UsageError("--tau is not a permutation");
    const int n = static_cast<int>(spec_.tau->size());
    if ((spec_.n_min && *spec_.n_min != n) || (spec_.n_max && *spec_.n_max != n)) {
      throw UsageError("--n disagrees with the length of --tau");
    }
    n_min_ = n_max_ = n;
    if (spec_.l && *spec_.l >= RunDecomposition(*spec_.tau).count()) {
      throw UsageError("--l must be smaller than the number of runs of --tau");
    }
  } else {
    n_min_ = spec_.n_min.value_or(info_.default_n_min);
    n_max_ = spec_.n_max.value_or(info_.default_n_max);
  }
  if (n_min_ < 1 || n_min_ > n_max_) throw UsageError("empty or nonpositive n range");
  if (n_max_ > limit) {
    std::string msg = info_.id + ": n = " + std::to_string(n_max_) + " exceeds the limit " + std::to_string(limit);
    if (info_.brute_force && !spec_.allow_eight) msg += " (pass --allow-8 to enumerate 8 cars)";
    throw UsageError(msg);
  }
}

std::vector<Perm> Runner::taus(int n) const {
  if (spec_.tau) return {*spec_.tau};
  return all_perms(n);
}

std::vector<int> Runner::ls(const RunDecomposition& rd, int from) const {
  std::vector<int> out;
  for (int l = from; l < rd.count(); ++l) {
    if (!spec_.l || *spec_.l == l) out.push_back(l);
  }
  return out;
}

std::optional<Failure> Runner::sweep(const Body& body) {
  for (int n = n_min_; n <= n_max_; ++n) {
    if (auto f = body(n)) return f;
  }
  return std::nullopt;
}

std::map<PermCode, DiagwordTally> Runner::grouped(int n) {
  objects_ += pref_count(n);
  std::map<PermCode, DiagwordTally> out;
  if (spec_.tau) {
    const Perm& tau = *spec_.tau;
    out[encode_perm(tau)] = spec_.threads <= 1
                                ? diagword_tally_serial(tau, spec_.stats_fn, enumeration_limit())
                                : diagword_tally_parallel(tau, spec_.threads, spec_.stats_fn, enumeration_limit());
    return out;
  }
  const KeyFn key = [](const PrefFunc&, const StatRecord& s) {
    return (static_cast<std::int64_t>(encode_perm(s.diagword)) << 8) | s.deviation;
  };
  const KeyedTally kt = spec_.threads <= 1
                            ? keyed_tally_serial(n, key, spec_.stats_fn, enumeration_limit())
                            : keyed_tally_parallel(n, spec_.threads, key, spec_.stats_fn, enumeration_limit());
  for (const auto& [k, tally] : kt) out[static_cast<PermCode>(k >> 8)][static_cast<int>(k & 0xff)] = tally;
  return out;
}

const StatTally& Runner::lookup(const std::map<PermCode, DiagwordTally>& g, const Perm& tau, int l) {
  static const StatTally empty;
  auto it = g.find(encode_perm(tau));
  if (it == g.end()) return empty;
  auto jt = it->second.find(l);
  return jt == it->second.end() ? empty : jt->second;
}

std::optional<Failure> Runner::schedule_closed_form(int n) {
  const auto g = grouped(n);
  for (const Perm& tau : taus(n)) {
    const QTPoly closed = pf_closed_form(tau);
    const QTPoly brute = to_qt(lookup(g, tau, 0));
    if (closed != brute) {
      return Failure{"tau=" + perm_string(tau) + " closed_form=" + closed.to_string() + " brute_force=" +
                     brute.to_string()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::pref_closed_form_check(int n) {
  const auto g = grouped(n);
  for (const Perm& tau : taus(n)) {
    const RunDecomposition rd(tau);
    auto it = g.find(encode_perm(tau));
    if (it != g.end() && !it->second.empty() && it->second.rbegin()->first >= rd.count()) {
      return Failure{"tau=" + perm_string(tau) + " has functions of deviation " +
                     std::to_string(it->second.rbegin()->first) + " but only " + std::to_string(rd.count()) +
                     " runs"};
    }
    for (int l : ls(rd, 0)) {
      const QTPoly closed = pref_closed_form(tau, l);
      const QTPoly brute = to_qt(lookup(g, tau, l));
      if (closed != brute) {
        return Failure{"tau=" + perm_string(tau) + " l=" + std::to_string(l) + " closed_form=" + closed.to_string() +
                       " brute_force=" + brute.to_string()};
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::schedule_shift(int n) {
  for (const Perm& tau : taus(n)) {
    const RunDecomposition rd(tau);
    for (int l : ls(rd, 1)) {
      ++objects_;
      if (!shift_multiset(tau, l)) {
        return Failure{"tau=" + perm_string(tau) + " l=" + std::to_string(l) + " multiset identity fails"};
      }
      // Only cars of the l-th and (l+1)-st runs from the last change.
      const auto before = schedule_l(tau, l - 1);
      const auto after = schedule_l(tau, l);
      for (int c = 1; c <= n; ++c) {
        const int j = rd.run_of(c);
        if (j != l - 1 && j != l && before[c] != after[c]) {
          return Failure{"tau=" + perm_string(tau) + " l=" + std::to_string(l) + " car " + std::to_string(c) +
                         " changes schedule outside runs l-1, l"};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::noides(int n) {
  const auto g = grouped(n);
  for (const Perm& tau : taus(n)) {
    const RunDecomposition rd(tau);
    const QTRatio closed = pref_all_l_closed_form(tau);
    QTPoly brute;
    QTPoly summed;
    for (int l = 0; l < rd.count(); ++l) {
      brute += to_qt(lookup(g, tau, l));
      summed += pref_closed_form(tau, l);
    }
    if (!ratio_eq(closed, QTRatio(brute)) || !ratio_eq(closed, QTRatio(summed))) {
      return Failure{"tau=" + perm_string(tau) + " closed_form=" + closed.to_string() + " brute_force=" +
                     brute.to_string() + " sum_over_l=" + summed.to_string()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::parlem() {
  auto test = [&](const PartitionBox& box) -> std::optional<Failure> {
    ++objects_;
    if (delta_merge_equal(box)) return std::nullopt;
    std::string lam;
    for (int x : box.lambda) lam += (lam.empty() ? "" : ",") + std::to_string(x);
    return Failure{"lambda=(" + lam + ") a=" + std::to_string(box.a) + " b=" + std::to_string(box.lambda.size())};
  };
  const int exhaustive = std::min(6, spec_.max);
  for (int a = 1; a <= exhaustive; ++a) {
    for (int b = 1; b <= exhaustive; ++b) {
      // Weakly decreasing b-tuples in [0, a], visited in lexicographic order.
      std::vector<int> lambda(b, a);
      while (true) {
        if (auto f = test(PartitionBox{lambda, a})) return f;
        int i = b - 1;
        while (i >= 0 && lambda[i] == 0) --i;
        if (i < 0) break;
        // Lower the last nonzero part and raise the tail as far as allowed.
        const int v = lambda[i] - 1;
        for (int j = i; j < b; ++j) lambda[j] = v;
      }
    }
  }
  std::mt19937_64 rng(spec_.seed);
  std::uniform_int_distribution<int> side(1, spec_.max);
  for (int s = 0; s < spec_.samples; ++s) {
    const int a = side(rng);
    const int b = side(rng);
    std::uniform_int_distribution<int> part(0, a);
    std::vector<int> lambda(b);
    for (int& x : lambda) x = part(rng);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    if (auto f = test(PartitionBox{lambda, a})) return f;
  }
  return std::nullopt;
}

std::optional<Failure> Runner::factor(int n) {
  const auto g = grouped(n);
  for (const Perm& tau : taus(n)) {
    const RunDecomposition rd(tau);
    for (int l : ls(rd, 0)) {
      const QSymF lhs = to_qsym(lookup(g, tau, l), n);
      if (!factor_check(tau, l, lhs)) {
        return Failure{"tau=" + perm_string(tau) + " l=" + std::to_string(l) + " lhs=" + lhs.to_json().dump()};
      }
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::withides(int n) {
  const auto g = grouped(n);
  for (const Perm& tau : taus(n)) {
    const RunDecomposition rd(tau);
    QSymF all(n);
    for (int l = 0; l < rd.count(); ++l) all += to_qsym(lookup(g, tau, l), n);
    const QSymF pf = to_qsym(lookup(g, tau, 0), n);
    const QSymF lhs = all.scaled(q_int(rd.rho[0]));
    const QSymF rhs = pf.scaled(q_int(n));
    if (lhs != rhs) {
      return Failure{"tau=" + perm_string(tau) + " [k]*prefs=" + lhs.to_json().dump() +
                     " [n]*parking=" + rhs.to_json().dump()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::symbolic(int n) {
  ++objects_;
  bool ok = false;
  if (info_.id == "thm-hmz") {
    objects_ += (std::uint64_t{1} << (n - 1)) - 1;
    ok = hmz_check(n);
  } else if (info_.id == "thm-pn-identity") {
    ok = pn_identity_check(n);
  } else {
    ok = enk_sum_check(n);
  }
  if (ok) return std::nullopt;
  return Failure{"n=" + std::to_string(n)};
}

std::optional<Failure> Runner::main_square_paths(int n) {
  objects_ += pref_count(n);
  // key = 2 * touch + parking
  const KeyFn key = [](const PrefFunc&, const StatRecord& s) {
    return static_cast<std::int64_t>(2 * s.touch + (s.parking ? 1 : 0));
  };
  const KeyedTally kt = spec_.threads <= 1
                            ? keyed_tally_serial(n, key, spec_.stats_fn, enumeration_limit())
                            : keyed_tally_parallel(n, spec_.threads, key, spec_.stats_fn, enumeration_limit());
  auto qsym_of = [&](std::int64_t k) {
    auto it = kt.find(k);
    return it == kt.end() ? QSymF(n) : to_qsym(it->second, n);
  };
  QSymF all(n);
  std::vector<QSymF> parking;
  for (int k = 1; k <= n; ++k) {
    const QSymF pref_k = qsym_of(2 * k) + qsym_of(2 * k + 1);
    parking.push_back(qsym_of(2 * k + 1));
    all += pref_k;
    if (pref_k.scaled(q_int(k)) != parking.back().scaled(q_int(n))) {
      return Failure{"n=" + std::to_string(n) + " touch=" + std::to_string(k) + " prefs=" + pref_k.to_json().dump() +
                     " parking=" + parking.back().to_json().dump()};
    }
  }
  // Whole identity, subset by subset, with the q-integer ratios kept as quotients.
  std::vector<SubsetMask> subsets;
  for (const auto& [s, c] : all.coeffs()) subsets.push_back(s);
  for (const auto& pk : parking) {
    for (const auto& [s, c] : pk.coeffs()) subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
  for (SubsetMask s : subsets) {
    QTRatio rhs;
    for (int k = 1; k <= n; ++k) rhs += QTRatio(q_int(n), q_int(k)) * QTRatio(parking[k - 1].coefficient(s));
    if (!ratio_eq(QTRatio(all.coefficient(s)), rhs)) {
      return Failure{"n=" + std::to_string(n) + " subset=" + subset_string(s) + " lhs=" +
                     all.coefficient(s).to_string() + " rhs=" + rhs.to_string()};
    }
  }
  return std::nullopt;
}

std::optional<Failure> Runner::generate_tree(int n) {
  objects_ += pref_count(n);
  // Brute-force lists in lexicographic order, keyed by diagonal word and deviation.
  std::map<std::pair<PermCode, int>, std::vector<PrefFunc>> brute;
  enumerate_all(
      n,
      [&](const PrefFunc& p) {
        const StatRecord s = spec_.stats_fn(p);
        brute[{encode_perm(s.diagword), s.deviation}].push_back(p);
      },
      enumeration_limit());

  std::vector<std::pair<Perm, int>> jobs;
  for (const Perm& tau : taus(n)) {
    for (int l : ls(RunDecomposition(tau), 0)) jobs.emplace_back(tau, l);
  }
  std::vector<std::optional<Failure>> verdicts(jobs.size());
  const int count = static_cast<int>(jobs.size());
#pragma omp parallel for num_threads(spec_.threads) schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    const auto& [tau, l] = jobs[i];
    const std::string where = "tau=" + perm_string(tau) + " l=" + std::to_string(l);
    try {
      const auto leaves = generate(tau, l);
      const auto w = schedule_l(tau, l);
      std::uint64_t expected = 1;
      for (int c = 1; c <= n; ++c) expected *= static_cast<std::uint64_t>(w[c]);
      if (leaves.size() != expected) {
        verdicts[i] = Failure{where + " leaves=" + std::to_string(leaves.size()) + " expected=" +
                              std::to_string(expected)};
        continue;
      }
      // In tree order the increments count leaves in mixed radix, which
      // pins every node's children to increments 0, 1, ..., w - 1.
      for (std::size_t idx = 0; idx < leaves.size() && !verdicts[i]; ++idx) {
        std::uint64_t value = 0;
        for (const InsertionStep& step : leaves[idx].trace) {
          if (step.choices != w[step.car]) {
            verdicts[i] = Failure{where + " car " + std::to_string(step.car) + " has " + std::to_string(step.choices) +
                                  " choices, schedule says " + std::to_string(w[step.car])};
            break;
          }
          value = value * static_cast<std::uint64_t>(step.choices) + static_cast<std::uint64_t>(step.dinv_increment);
        }
        if (!verdicts[i] && value != idx) verdicts[i] = Failure{where + " children out of increment order"};
      }
      if (verdicts[i]) continue;
      std::vector<PrefFunc> got;
      for (const auto& leaf : leaves) got.push_back(leaf.pref);
      std::sort(got.begin(), got.end());
      auto it = brute.find({encode_perm(tau), l});
      const std::vector<PrefFunc> want = it == brute.end() ? std::vector<PrefFunc>{} : it->second;
      if (got != want) verdicts[i] = Failure{where + " leaf set differs from brute force"};
    } catch (const std::logic_error& e) {
      verdicts[i] = Failure{where + " " + e.what()};
    }
  }
  for (auto& v : verdicts) {
    if (v) return v;
  }
  return std::nullopt;
}

CheckReport Runner::run() {
  resolve_range();
  CheckReport report;
  report.id = info_.id;
  if (info_.id == "lemma-parlem") {
    if (spec_.max < 1 || spec_.max > 30) throw UsageError("--max must lie in [1, 30]");
    if (spec_.samples < 0) throw UsageError("--samples must be nonnegative");
    report.parameters["max"] = spec_.max;
    report.parameters["samples"] = spec_.samples;
    report.parameters["seed"] = spec_.seed;
  } else {
    report.parameters["n"] = {n_min_, n_max_};
    if (spec_.tau) report.parameters["tau"] = perm_string(*spec_.tau);
    if (spec_.l) report.parameters["l"] = *spec_.l;
  }

  const auto start = std::chrono::steady_clock::now();
  std::optional<Failure> failure;
  const std::string& id = info_.id;
  if (id == "thm-schedule-closed-form") {
    failure = sweep([&](int n) { return schedule_closed_form(n); });
  } else if (id == "thm-pref-closed-form") {
    failure = sweep([&](int n) { return pref_closed_form_check(n); });
  } else if (id == "thm-schedule-shift") {
    failure = sweep([&](int n) { return schedule_shift(n); });
  } else if (id == "cor-noides") {
    failure = sweep([&](int n) { return noides(n); });
  } else if (id == "lemma-parlem") {
    failure = parlem();
  } else if (id == "lemma-factor") {
    failure = sweep([&](int n) { return factor(n); });
  } else if (id == "cor-withides") {
    failure = sweep([&](int n) { return withides(n); });
  } else if (id == "thm-hmz" || id == "thm-pn-identity" || id == "enk-sum") {
    failure = sweep([&](int n) { return symbolic(n); });
  } else if (id == "main-square-paths") {
    failure = sweep([&](int n) { return main_square_paths(n); });
  } else if (id == "generate-tree") {
    failure = sweep([&](int n) { return generate_tree(n); });
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report.objects = objects_;
  report.pass = !failure;
  if (failure) report.counterexample = failure->message;
  return report;
}

}  // namespace

std::string CheckReport::to_json_line(bool timing) const {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["parameters"] = parameters;
  j["pass"] = pass;
  j["counterexample"] = counterexample ? nlohmann::ordered_json(*counterexample) : nlohmann::ordered_json(nullptr);
  j["objects"] = objects;
  if (timing) {
    std::ostringstream ms;
    ms.setf(std::ios::fixed);
    ms.precision(1);
    ms << wall_ms;
    j["wall_ms"] = ms.str();
  }
  return j.dump();
}

const std::vector<CheckInfo>& registered_checks() { return kChecks; }

const CheckInfo& check_info(const std::string& id) {
  for (const CheckInfo& info : kChecks) {
    if (info.id == id) return info;
  }
  throw UsageError("unknown check id '" + id + "'");
}

CheckReport run_check(const CheckSpec& spec) {
  const CheckInfo& info = check_info(spec.id);
  return Runner(spec, info).run();
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw UsageError("malformed --n value '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  const auto dots = sv.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(sv);
    return {v, v};
  }
  return {parse_int(sv.substr(0, dots)), parse_int(sv.substr(dots + 2))};
}

}  // namespace sqpaths
