#include "sqpaths/qt_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sqpaths {

// ---------------------------------------------------------------- QTPoly

QTPoly::QTPoly(long constant) {
  if (constant != 0) terms_.emplace(Exponent{}, Rational(constant));
}

QTPoly::QTPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

QTPoly QTPoly::monomial(const Rational& coeff, int q_exp, int t_exp) {
  QTPoly p;
  p.add_term(coeff, {q_exp, t_exp});
  return p;
}

Rational QTPoly::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void QTPoly::add_term(const Rational& coeff, Exponent e) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

QTPoly& QTPoly::operator+=(const QTPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(c, e);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(-c, e);
  return *this;
}

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ca * cb, {ea.q + eb.q, ea.t + eb.t});
    }
  }
  return out;
}

QTPoly& QTPoly::operator*=(const QTPoly& other) { return *this = *this * other; }

QTPoly QTPoly::operator-() const { return scaled(-1); }

QTPoly QTPoly::scaled(const Rational& c) const {
  QTPoly out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, coeff * c);
  return out;
}

QTPoly QTPoly::shifted(int dq, int dt) const {
  QTPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponent{e.q + dq, e.t + dt}, c);
  return out;
}

QTPoly QTPoly::pow(unsigned k) const {
  QTPoly result(1);
  QTPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

namespace {

Rational rational_pow(const Rational& x, int k) {
  if (k < 0) {
    if (x == 0) throw std::domain_error("negative power of zero");
    return rational_pow(Rational(1) / x, -k);
  }
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Rational QTPoly::evaluate(const Rational& q, const Rational& t) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * rational_pow(q, e.q) * rational_pow(t, e.t);
  return sum;
}

Rational QTPoly::coefficient_sum() const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool QTPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{});
}

bool QTPoly::has_negative_exponents() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.q < 0 || kv.first.t < 0; });
}

bool QTPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

Exponent QTPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Exponent m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    m.q = std::min(m.q, e.q);
    m.t = std::min(m.t, e.t);
  }
  return m;
}

namespace {

std::string monomial_string(Exponent e) {
  std::string s;
  auto var = [&s](char name, int k) {
    if (k == 0) return;
    if (!s.empty()) s += '*';
    s += name;
    if (k != 1) s += '^' + std::to_string(k);
  };
  var('q', e.q);
  var('t', e.t);
  return s;
}

}  // namespace

std::string QTPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = monomial_string(e);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + '*' + mono;
    }
  }
  return out;
}

std::optional<QTPoly> exact_divide(const QTPoly& num, const QTPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
  if (num.is_zero()) return QTPoly{};

  // Monomials are units of the Laurent ring: strip monomial content from both
  // sides, divide as ordinary polynomials, then restore the unit.
  const Exponent num_min = num.min_exponents();
  const Exponent den_min = den.min_exponents();
  QTPoly rem = num.shifted(-num_min.q, -num_min.t);
  const QTPoly divisor = den.shifted(-den_min.q, -den_min.t);

  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  QTPoly quotient;
  while (!rem.is_zero()) {
    const auto& [e, c] = *rem.terms().rbegin();
    if (e.q < lead_e.q || e.t < lead_e.t) return std::nullopt;
    const QTPoly step = QTPoly::monomial(c / lead_c, e.q - lead_e.q, e.t - lead_e.t);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient.shifted(num_min.q - den_min.q, num_min.t - den_min.t);
}

QTPoly q_int(int n) {
  if (n <= 0) throw std::invalid_argument("q_int: n must be positive, got " + std::to_string(n));
  QTPoly p;
  for (int i = 0; i < n; ++i) p.add_term(1, {i, 0});
  return p;
}

QTPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  QTPoly p(1);
  for (int i = 2; i <= n; ++i) p *= q_int(i);
  return p;
}

QTPoly q_pochhammer(int k) {
  if (k < 0) throw std::invalid_argument("q_pochhammer: negative argument");
  QTPoly p(1);
  for (int i = 1; i <= k; ++i) p *= QTPoly(1) - QTPoly::monomial(1, i, 0);
  return p;
}

// ---------------------------------------------------------------- QTRatio

QTRatio::QTRatio(QTPoly num, QTPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("QTRatio: zero denominator");
  normalize();
}

void QTRatio::normalize() {
  if (num_.is_zero()) {
    den_ = QTPoly(1);
    return;
  }
  if (den_ == QTPoly(1)) return;
  if (auto quotient = exact_divide(num_, den_)) {
    num_ = std::move(*quotient);
    den_ = QTPoly(1);
  }
}

std::optional<QTPoly> QTRatio::as_polynomial() const {
  if (den_ == QTPoly(1)) return num_;
  return exact_divide(num_, den_);
}

QTRatio& QTRatio::operator+=(const QTRatio& other) {
  if (other.num_.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else if (auto m = exact_divide(other.den_, den_)) {
    num_ = num_ * *m + other.num_;
    den_ = other.den_;
  } else if (auto m2 = exact_divide(den_, other.den_)) {
    num_ += other.num_ * *m2;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  normalize();
  return *this;
}

QTRatio& QTRatio::operator-=(const QTRatio& other) { return *this += -other; }

QTRatio& QTRatio::operator*=(const QTRatio& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  normalize();
  return *this;
}

QTRatio& QTRatio::operator/=(const QTRatio& other) {
  if (other.is_zero()) throw std::domain_error("QTRatio: division by zero");
  num_ *= other.den_;
  den_ *= other.num_;
  normalize();
  return *this;
}

std::string QTRatio::to_string() const {
  if (den_ == QTPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

bool ratio_eq(const QTRatio& a, const QTRatio& b) { return a.num() * b.den() == b.num() * a.den(); }

// ---------------------------------------------------------------- ZPoly

ZPoly::ZPoly(QTRatio constant) { add_term(constant, 0); }

ZPoly ZPoly::monomial(QTRatio coeff, int z_exp) {
  ZPoly p;
  p.add_term(coeff, z_exp);
  return p;
}

bool ZPoly::is_z_free() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }

QTRatio ZPoly::coefficient(int z_exp) const {
  auto it = coeffs_.find(z_exp);
  return it == coeffs_.end() ? QTRatio() : it->second;
}

int ZPoly::min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
int ZPoly::max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void ZPoly::add_term(const QTRatio& coeff, int z_exp) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(z_exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

ZPoly& ZPoly::operator+=(const ZPoly& other) {
  for (const auto& [j, c] : other.coeffs_) add_term(c, j);
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& other) {
  for (const auto& [j, c] : other.coeffs_) add_term(-c, j);
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  for (const auto& [ja, ca] : a.coeffs_) {
    for (const auto& [jb, cb] : b.coeffs_) out.add_term(ca * cb, ja + jb);
  }
  return out;
}

ZPoly ZPoly::operator-() const {
  ZPoly out;
  for (const auto& [j, c] : coeffs_) out.coeffs_.emplace(j, -c);
  return out;
}

ZPoly ZPoly::scaled(const QTRatio& c) const {
  ZPoly out;
  for (const auto& [j, coeff] : coeffs_) out.add_term(coeff * c, j);
  return out;
}

QTRatio ZPoly::evaluate(const Rational& z) const {
  QTRatio sum;
  for (const auto& [j, c] : coeffs_) {
    if (j < 0 && z == 0) throw std::domain_error("ZPoly::evaluate: negative power of zero");
    Rational power = 1;
    const Rational base = j < 0 ? Rational(1) / z : z;
    for (int i = 0; i < std::abs(j); ++i) power *= base;
    sum += c * QTRatio(QTPoly(power));
  }
  return sum;
}

bool equivalent(const ZPoly& a, const ZPoly& b) {
  ZPoly diff = a - b;
  return std::all_of(diff.coeffs_.begin(), diff.coeffs_.end(),
                     [](const auto& kv) { return ratio_eq(kv.second, QTRatio()); });
}

std::string ZPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [j, c] : coeffs_) {
    std::string cs = c.to_string();
    std::string term;
    if (j == 0) {
      term = cs;
    } else {
      const std::string zs = j == 1 ? std::string("z") : "z^" + std::to_string(j);
      const bool compound = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
      if (cs == "1") {
        term = zs;
      } else if (cs == "-1") {
        term = "-" + zs;
      } else {
        term = (compound ? "(" + cs + ")" : cs) + "*" + zs;
      }
    }
    if (!first) {
      if (term.front() == '-') {
        term = term.substr(1);
        out += " - ";
      } else {
        out += " + ";
      }
    }
    out += term;
    first = false;
  }
  return out;
}

ZPoly poch_zq(int k) {
  if (k < 0) throw std::invalid_argument("poch_zq: negative argument");
  ZPoly p(1);
  for (int i = 0; i < k; ++i) {
    ZPoly factor(1);
    factor.add_term(QTRatio(-QTPoly::monomial(1, i, 0)), 1);
    p = p * factor;
  }
  return p;
}

}  // namespace sqpaths
