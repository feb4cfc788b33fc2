#pragma once

// Degree-n quasisymmetric functions in Gessel's fundamental basis Q_S,
// S a subset of [n-1], with q,t coefficients.

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sqpaths/kernels.hpp"
#include "sqpaths/perm.hpp"
#include "sqpaths/qt_algebra.hpp"

namespace sqpaths {

using Composition = std::vector<int>;

/// Partial sums {a_1, a_1 + a_2, ...} strictly below n.
SubsetMask subset_from_composition(const Composition& alpha);
Composition composition_from_subset(SubsetMask s, int n);

/// sum_S coeff(S) Q_S. Zero coefficients are never stored.
class QSymF {
 public:
  explicit QSymF(int degree);

  int degree() const { return degree_; }
  const std::map<SubsetMask, QTPoly>& coeffs() const { return coeffs_; }
  QTPoly coefficient(SubsetMask s) const;
  bool is_zero() const { return coeffs_.empty(); }

  /// Throws std::invalid_argument when s is not a subset of [degree - 1].
  void add(SubsetMask s, const QTPoly& c);

  QSymF& operator+=(const QSymF& other);
  QSymF& operator-=(const QSymF& other);
  friend QSymF operator+(QSymF a, const QSymF& b) { return a += b; }
  friend QSymF operator-(QSymF a, const QSymF& b) { return a -= b; }
  QSymF scaled(const QTPoly& c) const;
  friend bool operator==(const QSymF&, const QSymF&) = default;

  /// Forgets S: the sum of all coefficients.
  QTPoly specialize() const;

  /// {"[1,2]": "t^5*q^2", ...}; keys are the sorted subsets.
  nlohmann::json to_json() const;

 private:
  void require_same_degree(const QSymF& other) const;

  int degree_;
  std::map<SubsetMask, QTPoly> coeffs_;
};

QSymF to_qsym(const StatTally& tally, int n);

/// Quasisymmetric monomial coordinates: alpha -> coefficient of
/// x_1^alpha_1 ... x_k^alpha_k.
struct MonomialForm {
  int degree = 0;
  std::map<Composition, QTPoly> coeffs;
};

/// Q_S = sum over T containing S of M_T.
MonomialForm q_fundamental(SubsetMask s, int n);
/// Inverse change of basis, M_S = sum over T containing S of (-1)^|T - S| Q_T.
QSymF expand_in_fundamentals(const MonomialForm& m);

/// Explicit polynomial in n variables: exponent vector -> coefficient.
using ExplicitPoly = std::map<std::vector<int>, QTPoly>;
/// Reads the monomial coordinates off an explicit homogeneous polynomial of
/// degree n in n variables, throwing std::invalid_argument when it is not
/// quasisymmetric.
MonomialForm monomial_form(const ExplicitPoly& poly, int n);
/// Materializes Q_S as an explicit polynomial in n variables from its
/// defining sum over weakly increasing index sequences.
ExplicitPoly fundamental_polynomial(SubsetMask s, int n);

/// sum over preference functions on n cars in the family of t^area q^dinv Q_ides.
QSymF weighted_sum(const PrefPredicate& family, int n, int threads = 1, const StatsFn& fn = stats);

/// Partition of [n] into maximal intervals {i, i+1, ...} with each i directly
/// left of i+1 in tau. Blocks ascend.
struct ConsecutiveBlocks {
  Perm tau;
  std::vector<std::vector<int>> blocks;
};
ConsecutiveBlocks consecutive_blocks(const Perm& tau);

/// sum over pi in Yconsec(tau) of q^inv(pi).
QTPoly yconsec_inv_sum(const Perm& tau);
/// sum over pi in Yconsec(tau) of q^inv(pi) Q_{ides(tau) u ides(pi)}.
QSymF yconsec_qsym_sum(const Perm& tau);

/// The ides factorization for preference functions with diagonal word tau and
/// deviation l, in cross-multiplied form:
///   LHS * sum_pi q^inv(pi) == (t,q enumeration) * sum_pi q^inv(pi) Q_{ides(tau) u ides(pi)}
/// with LHS the brute-force quasisymmetric enumeration and the t,q enumeration
/// taken from the closed form. Throws std::invalid_argument for inadmissible l.
bool factor_check(const Perm& tau, int l, int threads = 1, const StatsFn& fn = stats);
/// Same check against precomputed brute-force data.
bool factor_check(const Perm& tau, int l, const QSymF& lhs);

}  // namespace sqpaths
