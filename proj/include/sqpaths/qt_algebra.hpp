#pragma once

// Exact coefficient arithmetic: Laurent polynomials in q and t over the
// rationals, unreduced quotients of them, and Laurent polynomials in a third
// variable z whose coefficients are such quotients.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace sqpaths {

using Rational = mpq_class;

/// Exponent pair of a monomial q^q t^t. Ordered lexicographically (q first).
struct Exponent {
  int q = 0;
  int t = 0;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Sparse Laurent polynomial in q, t with rational coefficients.
///
/// No zero coefficient is ever stored, so the zero polynomial has an empty
/// term map and structural equality is polynomial equality.
class QTPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  QTPoly() = default;
  QTPoly(long constant);  // NOLINT: integers promote to constants
  explicit QTPoly(const Rational& constant);

  static QTPoly monomial(const Rational& coeff, int q_exp, int t_exp);
  static QTPoly q() { return monomial(1, 1, 0); }
  static QTPoly t() { return monomial(1, 0, 1); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(int q_exp, int t_exp) const;

  /// Adds coeff * q^q_exp t^t_exp in place.
  void add_term(const Rational& coeff, Exponent e);

  QTPoly& operator+=(const QTPoly& other);
  QTPoly& operator-=(const QTPoly& other);
  QTPoly& operator*=(const QTPoly& other);
  friend QTPoly operator+(QTPoly a, const QTPoly& b) { return a += b; }
  friend QTPoly operator-(QTPoly a, const QTPoly& b) { return a -= b; }
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  QTPoly operator-() const;
  friend bool operator==(const QTPoly&, const QTPoly&) = default;

  QTPoly scaled(const Rational& c) const;
  /// Multiplies by the monomial q^dq t^dt.
  QTPoly shifted(int dq, int dt) const;
  QTPoly pow(unsigned k) const;

  /// Evaluates at rational q and t; both must be nonzero if negative exponents occur.
  Rational evaluate(const Rational& q, const Rational& t) const;
  Rational coefficient_sum() const;

  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_negative_exponents() const;
  bool has_integer_coefficients() const;
  Exponent min_exponents() const;  // componentwise; zero polynomial gives {0,0}

  /// Canonical form, e.g. "1 + q + 2*q*t^2 - q^-1". Terms ascend in (q, t).
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Exact quotient num/den when den divides num in the Laurent ring.
std::optional<QTPoly> exact_divide(const QTPoly& num, const QTPoly& den);

/// q-integer [n]_q = 1 + q + ... + q^(n-1); throws for n <= 0.
QTPoly q_int(int n);
/// [n]_q! = [1]_q [2]_q ... [n]_q
QTPoly q_factorial(int n);
/// (q;q)_k = (1-q)(1-q^2)...(1-q^k)
QTPoly q_pochhammer(int k);

/// Unreduced quotient num/den of QTPolys. Equality is by cross-multiplication.
///
/// Arithmetic cancels the denominator when it divides the numerator exactly
/// and reuses a common denominator when one divides the other; no gcd is
/// ever taken.
class QTRatio {
 public:
  QTRatio() : num_(0), den_(1) {}
  QTRatio(long c) : num_(c), den_(1) {}  // NOLINT
  QTRatio(QTPoly num) : num_(std::move(num)), den_(1) {}  // NOLINT
  QTRatio(QTPoly num, QTPoly den);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// The polynomial value if the denominator has been cleared.
  std::optional<QTPoly> as_polynomial() const;

  QTRatio& operator+=(const QTRatio& other);
  QTRatio& operator-=(const QTRatio& other);
  QTRatio& operator*=(const QTRatio& other);
  QTRatio& operator/=(const QTRatio& other);
  friend QTRatio operator+(QTRatio a, const QTRatio& b) { return a += b; }
  friend QTRatio operator-(QTRatio a, const QTRatio& b) { return a -= b; }
  friend QTRatio operator*(QTRatio a, const QTRatio& b) { return a *= b; }
  friend QTRatio operator/(QTRatio a, const QTRatio& b) { return a /= b; }
  QTRatio operator-() const { return QTRatio(-num_, den_, Unchecked{}); }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Unchecked {};
  QTRatio(QTPoly num, QTPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  QTPoly num_;
  QTPoly den_;
};

/// a == b as rational functions, i.e. a.num * b.den == b.num * a.den.
bool ratio_eq(const QTRatio& a, const QTRatio& b);

/// Laurent polynomial in z with QTRatio coefficients.
class ZPoly {
 public:
  using CoeffMap = std::map<int, QTRatio>;

  ZPoly() = default;
  ZPoly(QTRatio constant);  // NOLINT
  ZPoly(long constant) : ZPoly(QTRatio(constant)) {}  // NOLINT
  static ZPoly monomial(QTRatio coeff, int z_exp);
  static ZPoly z() { return monomial(1, 1); }

  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// True when only the z^0 coefficient may be nonzero.
  bool is_z_free() const;
  QTRatio coefficient(int z_exp) const;
  int min_degree() const;  // zero polynomial: 0
  int max_degree() const;

  void add_term(const QTRatio& coeff, int z_exp);
  ZPoly& operator+=(const ZPoly& other);
  ZPoly& operator-=(const ZPoly& other);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  ZPoly operator-() const;
  ZPoly scaled(const QTRatio& c) const;

  /// Substitutes a nonzero rational for z.
  QTRatio evaluate(const Rational& z) const;
  /// Coefficientwise ratio_eq.
  friend bool equivalent(const ZPoly& a, const ZPoly& b);

  /// Terms ascending in z, e.g. "1 + (-1 - q)*z + q*z^2"; "0" when zero.
  std::string to_string() const;

 private:
  CoeffMap coeffs_;
};

/// (z;q)_k = (1-z)(1-zq)...(1-zq^(k-1)).
ZPoly poch_zq(int k);

}  // namespace sqpaths
