#pragma once

// Symmetric functions over Q(q,t)[z, 1/z] in the power-sum basis, the two
// plethystic substitutions needed here, the creation operators C_a, and the
// E_{n,k} family.

#include <map>
#include <vector>

#include <json.hpp>

#include "sqpaths/qt_algebra.hpp"
#include "sqpaths/quasisym.hpp"

namespace sqpaths {

/// Weakly decreasing positive parts. The empty partition indexes p_() = 1.
using Partition = std::vector<int>;

inline constexpr int kDefaultSymDegree = 8;

std::vector<Partition> partitions_of(int n);  // reverse lexicographic
/// Compositions of n, all lengths when length == 0.
std::vector<Composition> compositions_of(int n, int length = 0);
/// z_lambda = prod_i i^(m_i) m_i!
Rational z_lambda(const Partition& lambda);
int size_of(const Partition& lambda);

/// sum_lambda coeff(lambda) p_lambda. Zero coefficients are never stored.
class PExpansion {
 public:
  PExpansion() = default;
  static PExpansion one();
  static PExpansion power(Partition lambda, ZPoly coeff = ZPoly(1));

  const std::map<Partition, ZPoly>& coeffs() const { return coeffs_; }
  ZPoly coefficient(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(Partition lambda, const ZPoly& c);
  PExpansion& operator+=(const PExpansion& other);
  PExpansion& operator-=(const PExpansion& other);
  friend PExpansion operator+(PExpansion a, const PExpansion& b) { return a += b; }
  friend PExpansion operator-(PExpansion a, const PExpansion& b) { return a -= b; }
  /// p_lambda * p_mu = p_(lambda u mu).
  friend PExpansion operator*(const PExpansion& a, const PExpansion& b);
  PExpansion scaled(const ZPoly& c) const;

  bool is_z_free() const;
  /// Degree when every term has the same size; -1 otherwise (and for zero).
  int homogeneous_degree() const;
  int max_degree() const;

  /// Coefficientwise equality of rational functions.
  friend bool equivalent(const PExpansion& a, const PExpansion& b);

  /// {"[2,1]": "<coefficient>", ...}; partitions listed as sorted-descending arrays.
  nlohmann::ordered_json to_json() const;

 private:
  std::map<Partition, ZPoly> coeffs_;
};

/// e_n = sum_lambda (-1)^(n - l(lambda)) p_lambda / z_lambda.
PExpansion e_in_p(int n, int bound = kDefaultSymDegree);
/// h_m = sum_lambda p_lambda / z_lambda.
PExpansion h_in_p(int m, int bound = kDefaultSymDegree);
PExpansion p_pure(int n, int bound = kDefaultSymDegree);

/// A plethystic substitution that acts on each power sum separately:
/// scale p_k -> c_k p_k, or shift p_k -> p_k + a_k.
struct AlphabetRule {
  enum class Kind { kScale, kShift };
  Kind kind = Kind::kScale;
  std::vector<ZPoly> data;  // data[k - 1] holds c_k or a_k

  int defined_through() const { return static_cast<int>(data.size()); }
  /// Throws std::out_of_range for k outside [1, defined_through()].
  const ZPoly& at(int k) const;
};

/// X -> X - (1 - 1/q)/z, i.e. a_k = -(1 - q^-k) z^-k.
AlphabetRule creation_shift_rule(int bound);
/// X -> X (1 - z)/(1 - q), i.e. c_k = (1 - z^k)/(1 - q^k).
AlphabetRule z_scale_rule(int bound);

PExpansion pleth_apply(const PExpansion& f, const AlphabetRule& rule);

/// C_a F = (-1/q)^(a-1) F[X - (1 - 1/q)/z] sum_m z^m h_m[X] evaluated at z^a.
/// F must be z-free and homogeneous with degree(F) + a <= bound.
PExpansion c_op(int a, const PExpansion& f, int bound = kDefaultSymDegree);
/// C_rho_1 ... C_rho_k 1, innermost operator C_rho_k applied first.
PExpansion c_composition(const Composition& rho, int bound = kDefaultSymDegree);

/// E_{n,1}, ..., E_{n,n} from e_n[X (1-z)/(1-q)] = sum_k (z;q)_k/(q;q)_k E_{n,k}.
std::vector<PExpansion> e_nk(int n, int bound = kDefaultSymDegree);

/// E_{n,k} == sum over compositions of n with k parts of C_rho 1, for every k.
bool hmz_check(int n, int bound = kDefaultSymDegree);
/// (-1)^(n-1) p_n == sum_k [n]_q/[k]_q E_{n,k}.
bool pn_identity_check(int n, int bound = kDefaultSymDegree);
/// sum_k E_{n,k} == e_n.
bool enk_sum_check(int n, int bound = kDefaultSymDegree);

/// Explicit polynomial in nvars variables with p_k = x_1^k + ... + x_nvars^k.
/// F must be z-free with polynomial coefficients.
ExplicitPoly to_monomials(const PExpansion& f, int nvars);
/// Fundamental-basis expansion of a z-free F homogeneous of degree n.
QSymF sym_to_qsym(const PExpansion& f, int n);

}  // namespace sqpaths
