#pragma once

// Diagonal-word machinery: run decompositions, 0- and l-schedules, the
// closed-form (area, dinv) enumerations they produce, the schedule shift
// identity, the staircase partition lemma behind it, and the insertion trees
// that build every preference function with a given diagonal word.

#include <utility>
#include <vector>

#include "sqpaths/paths.hpp"
#include "sqpaths/perm.hpp"
#include "sqpaths/qt_algebra.hpp"

namespace sqpaths {

/// Runs of tau indexed two ways. Positional index p counts from the left
/// (0 = leftmost); from-last index j counts from the right (0 = last run),
/// which is the numbering used for rho.
struct RunDecomposition {
  Perm tau;
  std::vector<std::vector<int>> runs;  // leftmost first
  std::vector<int> rho;                // rho[j] = length of the j-th run from the last

  explicit RunDecomposition(Perm t);
  int count() const { return static_cast<int>(runs.size()); }
  int from_last(int positional) const { return count() - 1 - positional; }
  int positional(int from_last_index) const { return count() - 1 - from_last_index; }
  const std::vector<int>& run_from_last(int j) const { return runs[positional(j)]; }
  /// From-last index of the run containing car.
  int run_of(int car) const { return run_index_[car]; }

 private:
  std::vector<int> run_index_;  // by car
};

/// Schedule (w_1, ..., w_n) in insertion order: w_i belongs to car tau[n+1-i].
std::vector<int> schedule0(const Perm& tau);

/// l-schedule numbers by car: result[c] = w^(l)(c), result[0] unused.
/// Throws std::invalid_argument unless 0 <= l < number of runs.
std::vector<int> schedule_l(const Perm& tau, int l);

/// t^maj(tau) prod_i [w_i]_q.
QTPoly pf_closed_form(const Perm& tau);
/// t^maj(tau) q^(rho_0 + ... + rho_(l-1)) prod_c [w^(l)(c)]_q.
QTPoly pref_closed_form(const Perm& tau, int l);
/// t^maj(tau) [n]_q/[k]_q prod_i [w_i]_q, k the length of the last run.
QTRatio pref_all_l_closed_form(const Perm& tau);

/// Multiset of l-schedule numbers == {w_i} + {rho_l} - {rho_0}, 1 <= l <= runs - 1.
bool shift_multiset(const Perm& tau, int l);

/// A partition in the a x b rectangle, padded with zeros to exactly b parts.
struct PartitionBox {
  std::vector<int> lambda;  // weakly decreasing, size b
  int a = 0;
  int b() const { return static_cast<int>(lambda.size()); }
  /// Conjugate inside the b x a rectangle; exactly a parts.
  std::vector<int> conjugate() const;
};

/// Sorted multisets of (lambda + delta_b) u delta_a and (lambda' + delta_a) u delta_b,
/// where delta_m = (0, 1, ..., m-1) and the k-th entry of lambda + delta_b is lambda_k + k - 1.
/// Throws std::invalid_argument when lambda is not a partition inside a x b.
std::pair<std::vector<int>, std::vector<int>> delta_merge(const PartitionBox& box);
inline bool delta_merge_equal(const PartitionBox& box) {
  auto [lhs, rhs] = delta_merge(box);
  return lhs == rhs;
}

/// One insertion in the tree: car inserted, number of siblings (including
/// itself), and the primary+secondary dinv it added.
struct InsertionStep {
  int car = 0;
  int choices = 0;
  int dinv_increment = 0;
  friend bool operator==(const InsertionStep&, const InsertionStep&) = default;
};

struct GeneratedPref {
  PrefFunc pref;
  std::vector<InsertionStep> trace;  // root to leaf
};

/// Every preference function with diagonal word tau and deviation l, built by
/// insertion: cars of the first runs - l runs right to left into diagonals
/// 0, 1, ...; then the last l runs left to right into diagonals -1, -2, ....
/// Leaves come out in tree order (children ordered by dinv increment 0, 1, ...).
/// Every leaf is validated against place()/stats(); a mismatch throws std::logic_error.
std::vector<GeneratedPref> generate(const Perm& tau, int l);

}  // namespace sqpaths
