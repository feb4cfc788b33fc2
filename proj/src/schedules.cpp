#include "sqpaths/schedules.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sqpaths {

RunDecomposition::RunDecomposition(Perm t) : tau(std::move(t)) {
  if (!is_permutation(tau) || tau.empty()) throw std::invalid_argument("RunDecomposition: not a permutation");
  runs = sqpaths::runs(tau);
  const int r = count();
  rho.resize(r);
  run_index_.assign(tau.size() + 1, 0);
  for (int p = 0; p < r; ++p) {
    rho[from_last(p)] = static_cast<int>(runs[p].size());
    for (int c : runs[p]) run_index_[c] = from_last(p);
  }
}

namespace {

int count_if_less(const std::vector<int>& xs, int bound) {
  return static_cast<int>(std::count_if(xs.begin(), xs.end(), [bound](int x) { return x < bound; }));
}

int count_if_greater(const std::vector<int>& xs, int bound) {
  return static_cast<int>(std::count_if(xs.begin(), xs.end(), [bound](int x) { return x > bound; }));
}

void require_admissible(const RunDecomposition& rd, int l, const char* who) {
  if (l < 0 || l >= rd.count()) {
    throw std::invalid_argument(std::string(who) + ": l = " + std::to_string(l) + " needs at least l+1 runs, tau " +
                                perm_string(rd.tau) + " has " + std::to_string(rd.count()));
  }
}

}  // namespace

std::vector<int> schedule0(const Perm& tau) {
  const RunDecomposition rd(tau);
  const int n = static_cast<int>(tau.size());
  const int k = rd.rho[0];
  std::vector<int> w(n);
  for (int i = 1; i <= n; ++i) {
    if (i <= k) {
      w[i - 1] = i;
      continue;
    }
    const int car = tau[n - i];
    const int j = rd.run_of(car);
    w[i - 1] = count_if_greater(rd.run_from_last(j), car) + count_if_less(rd.run_from_last(j - 1), car);
  }
  return w;
}

std::vector<int> schedule_l(const Perm& tau, int l) {
  const RunDecomposition rd(tau);
  require_admissible(rd, l, "schedule_l");
  std::vector<int> w(tau.size() + 1, 0);
  for (int c : tau) {
    const int j = rd.run_of(c);
    const auto& own = rd.run_from_last(j);
    if (j < l) {
      w[c] = count_if_less(own, c) + count_if_greater(rd.run_from_last(j + 1), c);
    } else if (j == l) {
      // Position counted from the right end of the run, inclusive.
      w[c] = static_cast<int>(own.end() - std::find(own.begin(), own.end(), c));
    } else {
      w[c] = count_if_greater(own, c) + count_if_less(rd.run_from_last(j - 1), c);
    }
  }
  return w;
}

QTPoly pf_closed_form(const Perm& tau) {
  QTPoly p = QTPoly::monomial(1, 0, maj(tau));
  for (int w : schedule0(tau)) p *= q_int(w);
  return p;
}

QTPoly pref_closed_form(const Perm& tau, int l) {
  const RunDecomposition rd(tau);
  require_admissible(rd, l, "pref_closed_form");
  int below = 0;
  for (int j = 0; j < l; ++j) below += rd.rho[j];
  const std::vector<int> w = schedule_l(tau, l);
  QTPoly p = QTPoly::monomial(1, below, maj(tau));
  for (std::size_t c = 1; c < w.size(); ++c) p *= q_int(w[c]);
  return p;
}

QTRatio pref_all_l_closed_form(const Perm& tau) {
  const RunDecomposition rd(tau);
  const int n = static_cast<int>(tau.size());
  return QTRatio(q_int(n) * pf_closed_form(tau), q_int(rd.rho[0]));
}

bool shift_multiset(const Perm& tau, int l) {
  const RunDecomposition rd(tau);
  if (l < 1 || l >= rd.count()) {
    throw std::invalid_argument("shift_multiset: l = " + std::to_string(l) + " outside [1, " +
                                std::to_string(rd.count() - 1) + "]");
  }
  std::vector<int> expected = schedule0(tau);
  auto it = std::find(expected.begin(), expected.end(), rd.rho[0]);
  if (it == expected.end()) return false;
  expected.erase(it);
  expected.push_back(rd.rho[l]);
  std::sort(expected.begin(), expected.end());

  std::vector<int> w = schedule_l(tau, l);
  w.erase(w.begin());
  std::sort(w.begin(), w.end());
  return w == expected;
}

std::vector<int> PartitionBox::conjugate() const {
  std::vector<int> conj(a, 0);
  for (int j = 1; j <= a; ++j) conj[j - 1] = count_if_greater(lambda, j - 1);
  return conj;
}

std::pair<std::vector<int>, std::vector<int>> delta_merge(const PartitionBox& box) {
  const int b = box.b();
  if (box.a < 1 || b < 1) throw std::invalid_argument("delta_merge: rectangle sides must be positive");
  for (int k = 0; k < b; ++k) {
    if (box.lambda[k] < 0 || box.lambda[k] > box.a) throw std::invalid_argument("delta_merge: part outside [0, a]");
    if (k > 0 && box.lambda[k] > box.lambda[k - 1]) throw std::invalid_argument("delta_merge: parts must weakly decrease");
  }
  const std::vector<int> conj = box.conjugate();

  std::vector<int> rows;
  std::vector<int> cols;
  for (int k = 0; k < b; ++k) rows.push_back(box.lambda[k] + k);
  for (int k = 0; k < box.a; ++k) rows.push_back(k);
  for (int k = 0; k < box.a; ++k) cols.push_back(conj[k] + k);
  for (int k = 0; k < b; ++k) cols.push_back(k);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  return {rows, cols};
}

// ---------------------------------------------------------------- insertion trees

namespace {

// A preference function as its rows read bottom to top. The square-path
// conditions are: first diagonal <= 0, last diagonal >= 0, each step up in
// diagonal is at most one, and a step of exactly one stays in the same
// column, so the car label must increase.
struct Row {
  int car;
  int diagonal;
};

bool adjacent_ok(const Row& below, const Row& above) {
  if (above.diagonal > below.diagonal + 1) return false;
  return above.diagonal != below.diagonal + 1 || below.car < above.car;
}

bool insertion_ok(const std::vector<Row>& rows, std::size_t pos, const Row& r) {
  if (pos == 0 && r.diagonal > 0) return false;
  if (pos == rows.size() && r.diagonal < 0) return false;
  if (pos > 0 && !adjacent_ok(rows[pos - 1], r)) return false;
  if (pos < rows.size() && !adjacent_ok(r, rows[pos])) return false;
  return true;
}

bool dinv_pair(const Row& lower, const Row& upper) {
  return (lower.diagonal == upper.diagonal && lower.car < upper.car) ||
         (lower.diagonal == upper.diagonal + 1 && lower.car > upper.car);
}

// Primary plus secondary dinv between the car at pos and every other car.
int dinv_with(const std::vector<Row>& rows, std::size_t pos) {
  int d = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < pos) d += dinv_pair(rows[i], rows[pos]) ? 1 : 0;
    if (i > pos) d += dinv_pair(rows[pos], rows[i]) ? 1 : 0;
  }
  return d;
}

struct Insertion {
  int car;
  int diagonal;
  bool right_to_left;  // children ordered by decreasing row position
};

class TreeBuilder {
 public:
  TreeBuilder(const Perm& tau, int l) : tau_(tau), rd_(tau), l_(l) {
    require_admissible(rd_, l, "generate");
    const int r = rd_.count();
    for (int j = l; j < r; ++j) {
      const auto& run = rd_.run_from_last(j);
      for (auto it = run.rbegin(); it != run.rend(); ++it) order_.push_back({*it, j - l, true});
    }
    for (int j = l - 1; j >= 0; --j) {
      for (int c : rd_.run_from_last(j)) order_.push_back({c, j - l, false});
    }
    for (int j = 0; j < l; ++j) baseline_ += rd_.rho[j];
  }

  std::vector<GeneratedPref> run() {
    std::vector<Row> rows;
    std::vector<InsertionStep> trace;
    expand(rows, trace);
    return std::move(leaves_);
  }

 private:
  void expand(std::vector<Row>& rows, std::vector<InsertionStep>& trace) {
    if (trace.size() == order_.size()) {
      leaves_.push_back(materialize(rows, trace));
      return;
    }
    const Insertion& ins = order_[trace.size()];
    const Row r{ins.car, ins.diagonal};
    std::vector<std::size_t> positions;
    for (std::size_t pos = 0; pos <= rows.size(); ++pos) {
      if (insertion_ok(rows, pos, r)) positions.push_back(pos);
    }
    if (ins.right_to_left) std::reverse(positions.begin(), positions.end());
    const int choices = static_cast<int>(positions.size());
    for (std::size_t pos : positions) {
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), r);
      trace.push_back({ins.car, choices, dinv_with(rows, pos)});
      expand(rows, trace);
      trace.pop_back();
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }

  GeneratedPref materialize(const std::vector<Row>& rows, const std::vector<InsertionStep>& trace) const {
    const int n = static_cast<int>(rows.size());
    std::vector<int> f(n);
    for (int j = 0; j < n; ++j) f[rows[j].car - 1] = (j + 1) - rows[j].diagonal;
    PrefFunc pref(std::move(f));

    const Placement pl = place(pref);
    for (int j = 0; j < n; ++j) {
      if (pl.at(rows[j].car).row != j + 1) throw std::logic_error("generate: leaf does not round-trip through place()");
    }
    const StatRecord s = stats(pref);
    int increments = 0;
    for (const auto& step : trace) increments += step.dinv_increment;
    if (s.diagword != tau_ || s.deviation != l_ || s.area != maj(tau_) ||
        s.dinv.primary + s.dinv.secondary != increments || s.dinv.tertiary != baseline_) {
      throw std::logic_error("generate: leaf statistics disagree with the insertion trace");
    }
    return {std::move(pref), trace};
  }

  Perm tau_;
  RunDecomposition rd_;
  int l_;
  int baseline_ = 0;
  std::vector<Insertion> order_;
  std::vector<GeneratedPref> leaves_;
};

}  // namespace

std::vector<GeneratedPref> generate(const Perm& tau, int l) { return TreeBuilder(tau, l).run(); }

}  // namespace sqpaths
