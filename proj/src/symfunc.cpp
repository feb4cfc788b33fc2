#include "sqpaths/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqpaths {

namespace {

void require_degree(int n, int bound, const char* who) {
  if (n < 1 || n > bound) {
    throw std::invalid_argument(std::string(who) + ": degree " + std::to_string(n) + " outside [1, " +
                                std::to_string(bound) + "]");
  }
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
  return out;
}

std::string partition_key(const Partition& lambda) {
  std::string key = "[";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i > 0) key += ',';
    key += std::to_string(lambda[i]);
  }
  return key + "]";
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  Partition current;
  auto rec = [&](auto&& self, int remaining, int largest) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, largest); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<Composition> compositions_of(int n, int length) {
  if (n < 1) throw std::invalid_argument("compositions_of: size must be positive");
  std::vector<Composition> out;
  const SubsetMask limit = SubsetMask{1} << (n - 1);
  for (SubsetMask s = 0; s < limit; ++s) {
    Composition c = composition_from_subset(s, n);
    if (length == 0 || static_cast<int>(c.size()) == length) out.push_back(std::move(c));
  }
  return out;
}

Rational z_lambda(const Partition& lambda) {
  Rational z = 1;
  std::map<int, int> mult;
  for (int part : lambda) ++mult[part];
  for (const auto& [part, m] : mult) {
    for (int i = 1; i <= m; ++i) z *= Rational(part * i);
  }
  return z;
}

int size_of(const Partition& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

// ---------------------------------------------------------------- PExpansion

PExpansion PExpansion::one() { return power({}); }

PExpansion PExpansion::power(Partition lambda, ZPoly coeff) {
  PExpansion out;
  out.add(std::move(lambda), coeff);
  return out;
}

ZPoly PExpansion::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? ZPoly{} : it->second;
}

void PExpansion::add(Partition lambda, const ZPoly& c) {
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()) ||
      std::any_of(lambda.begin(), lambda.end(), [](int p) { return p < 1; })) {
    throw std::invalid_argument("PExpansion: not a partition " + partition_key(lambda));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(std::move(lambda), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

PExpansion& PExpansion::operator+=(const PExpansion& other) {
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
  return *this;
}

PExpansion& PExpansion::operator-=(const PExpansion& other) {
  for (const auto& [lambda, c] : other.coeffs_) add(lambda, -c);
  return *this;
}

PExpansion operator*(const PExpansion& a, const PExpansion& b) {
  PExpansion out;
  for (const auto& [la, ca] : a.coeffs_) {
    for (const auto& [lb, cb] : b.coeffs_) out.add(merge_parts(la, lb), ca * cb);
  }
  return out;
}

PExpansion PExpansion::scaled(const ZPoly& c) const {
  PExpansion out;
  for (const auto& [lambda, coeff] : coeffs_) out.add(lambda, coeff * c);
  return out;
}

bool PExpansion::is_z_free() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& kv) { return kv.second.is_z_free(); });
}

int PExpansion::homogeneous_degree() const {
  if (coeffs_.empty()) return -1;
  const int d = size_of(coeffs_.begin()->first);
  for (const auto& [lambda, c] : coeffs_) {
    if (size_of(lambda) != d) return -1;
  }
  return d;
}

int PExpansion::max_degree() const {
  int d = 0;
  for (const auto& [lambda, c] : coeffs_) d = std::max(d, size_of(lambda));
  return d;
}

bool equivalent(const PExpansion& a, const PExpansion& b) {
  std::vector<Partition> keys;
  for (const auto& [lambda, c] : a.coeffs_) keys.push_back(lambda);
  for (const auto& [lambda, c] : b.coeffs_) keys.push_back(lambda);
  return std::all_of(keys.begin(), keys.end(),
                     [&](const Partition& lambda) { return equivalent(a.coefficient(lambda), b.coefficient(lambda)); });
}

nlohmann::ordered_json PExpansion::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [lambda, c] : coeffs_) j[partition_key(lambda)] = c.to_string();
  return j;
}

// ---------------------------------------------------------------- standard bases

PExpansion e_in_p(int n, int bound) {
  require_degree(n, bound, "e_in_p");
  PExpansion out;
  for (const Partition& lambda : partitions_of(n)) {
    const bool odd = ((n - static_cast<int>(lambda.size())) & 1) != 0;
    const Rational c = (odd ? Rational(-1) : Rational(1)) / z_lambda(lambda);
    out.add(lambda, ZPoly(QTRatio(QTPoly(c))));
  }
  return out;
}

PExpansion h_in_p(int m, int bound) {
  if (m == 0) return PExpansion::one();
  require_degree(m, bound, "h_in_p");
  PExpansion out;
  for (const Partition& lambda : partitions_of(m)) out.add(lambda, ZPoly(QTRatio(QTPoly(Rational(1) / z_lambda(lambda)))));
  return out;
}

PExpansion p_pure(int n, int bound) {
  require_degree(n, bound, "p_pure");
  return PExpansion::power({n});
}

// ---------------------------------------------------------------- plethysm

const ZPoly& AlphabetRule::at(int k) const {
  if (k < 1 || k > defined_through()) {
    throw std::out_of_range("AlphabetRule: p_" + std::to_string(k) + " is not covered (defined through " +
                            std::to_string(defined_through()) + ")");
  }
  return data[k - 1];
}

AlphabetRule creation_shift_rule(int bound) {
  AlphabetRule rule{AlphabetRule::Kind::kShift, {}};
  for (int k = 1; k <= bound; ++k) {
    // -(1 - q^-k) z^-k
    const QTPoly c = QTPoly::monomial(1, -k, 0) - QTPoly(1);
    rule.data.push_back(ZPoly::monomial(QTRatio(c), -k));
  }
  return rule;
}

AlphabetRule z_scale_rule(int bound) {
  AlphabetRule rule{AlphabetRule::Kind::kScale, {}};
  for (int k = 1; k <= bound; ++k) {
    const QTPoly den = QTPoly(1) - QTPoly::monomial(1, k, 0);
    ZPoly c;
    c.add_term(QTRatio(QTPoly(1), den), 0);
    c.add_term(QTRatio(QTPoly(-1), den), k);
    rule.data.push_back(std::move(c));
  }
  return rule;
}

PExpansion pleth_apply(const PExpansion& f, const AlphabetRule& rule) {
  PExpansion out;
  for (const auto& [lambda, c] : f.coeffs()) {
    if (rule.kind == AlphabetRule::Kind::kScale) {
      ZPoly coeff = c;
      for (int part : lambda) coeff = coeff * rule.at(part);
      out.add(lambda, coeff);
      continue;
    }
    // prod_i (p_lambda_i + a_lambda_i): keep p for the parts in `kept`.
    const std::size_t len = lambda.size();
    for (std::uint32_t kept = 0; kept < (1U << len); ++kept) {
      Partition mu;
      ZPoly coeff = c;
      for (std::size_t i = 0; i < len; ++i) {
        if ((kept >> i) & 1U) {
          mu.push_back(lambda[i]);
        } else {
          coeff = coeff * rule.at(lambda[i]);
        }
      }
      out.add(std::move(mu), coeff);
    }
  }
  return out;
}

// ---------------------------------------------------------------- creation operators

PExpansion c_op(int a, const PExpansion& f, int bound) {
  if (a < 1) throw std::invalid_argument("c_op: a must be positive");
  if (f.is_zero()) return {};
  if (!f.is_z_free()) throw std::invalid_argument("c_op: operand depends on z");
  const int degree = f.homogeneous_degree();
  if (degree < 0) throw std::invalid_argument("c_op: operand is not homogeneous");
  if (degree + a > bound) {
    throw std::invalid_argument("c_op: result degree " + std::to_string(degree + a) + " exceeds bound " +
                                std::to_string(bound));
  }

  const PExpansion shifted = degree == 0 ? f : pleth_apply(f, creation_shift_rule(degree));
  int lowest_z = 0;
  for (const auto& [lambda, c] : shifted.coeffs()) lowest_z = std::min(lowest_z, c.min_degree());
  // h_m can reach z^a only through z^(a-m) in the shifted operand.
  const int truncation = a - lowest_z;

  std::vector<PExpansion> h(truncation + 1);
  for (int m = 0; m <= truncation; ++m) h[m] = h_in_p(m, std::max(bound, truncation));

  PExpansion out;
  for (const auto& [lambda, zc] : shifted.coeffs()) {
    for (const auto& [j, r] : zc.coeffs()) {
      const int m = a - j;
      if (m < 0) continue;
      if (m > truncation) throw std::logic_error("c_op: h_m needed beyond the truncation bound");
      for (const auto& [mu, hc] : h[m].coeffs()) out.add(merge_parts(lambda, mu), ZPoly(r * hc.coefficient(0)));
    }
  }
  const QTPoly sign_power = QTPoly::monomial((a - 1) % 2 == 0 ? 1 : -1, -(a - 1), 0);
  out = out.scaled(ZPoly(QTRatio(sign_power)));
  if (!out.is_z_free()) throw std::logic_error("c_op: z^a coefficient retained z-dependence");
  if (!out.is_zero() && out.homogeneous_degree() != degree + a) throw std::logic_error("c_op: result not homogeneous");
  return out;
}

PExpansion c_composition(const Composition& rho, int bound) {
  if (rho.empty()) throw std::invalid_argument("c_composition: empty composition");
  PExpansion f = PExpansion::one();
  for (auto it = rho.rbegin(); it != rho.rend(); ++it) f = c_op(*it, f, bound);
  return f;
}

std::vector<PExpansion> e_nk(int n, int bound) {
  require_degree(n, bound, "e_nk");
  const PExpansion lhs = pleth_apply(e_in_p(n, bound), z_scale_rule(n));

  std::vector<ZPoly> poch(n + 1);
  std::vector<QTRatio> qq(n + 1);
  for (int k = 0; k <= n; ++k) {
    poch[k] = poch_zq(k);
    qq[k] = QTRatio(q_pochhammer(k));
  }

  std::vector<PExpansion> e(n);
  for (const auto& [lambda, zc] : lhs.coeffs()) {
    if (zc.min_degree() < 0 || zc.max_degree() > n) throw std::logic_error("e_nk: unexpected z-degree");
    // Only (z;q)_k with k >= j reaches z^j: solve from z^n downwards.
    std::vector<QTRatio> sol(n + 1);
    for (int j = n; j >= 1; --j) {
      QTRatio acc = zc.coefficient(j);
      for (int k = j + 1; k <= n; ++k) acc -= poch[k].coefficient(j) * sol[k] / qq[k];
      sol[j] = acc * qq[j] / poch[j].coefficient(j);
    }
    // The z^0 coefficient is not used by the solve; it must agree.
    QTRatio constant;
    for (int k = 1; k <= n; ++k) constant += sol[k] / qq[k];
    if (!ratio_eq(constant, zc.coefficient(0))) throw std::logic_error("e_nk: inconsistent z^0 coefficient");
    for (int k = 1; k <= n; ++k) e[k - 1].add(lambda, ZPoly(sol[k]));
  }
  for (const PExpansion& ek : e) {
    if (!ek.is_z_free()) throw std::logic_error("e_nk: solution depends on z");
  }
  return e;
}

bool hmz_check(int n, int bound) {
  const std::vector<PExpansion> e = e_nk(n, bound);
  std::map<Composition, PExpansion> memo;
  std::function<const PExpansion&(const Composition&)> apply = [&](const Composition& rho) -> const PExpansion& {
    auto it = memo.find(rho);
    if (it != memo.end()) return it->second;
    const PExpansion inner = rho.size() == 1 ? PExpansion::one() : apply(Composition(rho.begin() + 1, rho.end()));
    return memo.emplace(rho, c_op(rho.front(), inner, bound)).first->second;
  };
  for (int k = 1; k <= n; ++k) {
    PExpansion sum;
    for (const Composition& rho : compositions_of(n, k)) sum += apply(rho);
    if (!equivalent(sum, e[k - 1])) return false;
  }
  return true;
}

bool pn_identity_check(int n, int bound) {
  const std::vector<PExpansion> e = e_nk(n, bound);
  PExpansion rhs;
  for (int k = 1; k <= n; ++k) rhs += e[k - 1].scaled(ZPoly(QTRatio(q_int(n), q_int(k))));
  const PExpansion lhs = PExpansion::power({n}, ZPoly(n % 2 == 1 ? 1 : -1));
  return equivalent(lhs, rhs);
}

bool enk_sum_check(int n, int bound) {
  const std::vector<PExpansion> e = e_nk(n, bound);
  PExpansion sum;
  for (const auto& ek : e) sum += ek;
  return equivalent(sum, e_in_p(n, bound));
}

// ---------------------------------------------------------------- monomial views

namespace {

ExplicitPoly multiply(const ExplicitPoly& a, const ExplicitPoly& b) {
  ExplicitPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      QTPoly& slot = out[e];
      slot += ca * cb;
      if (slot.is_zero()) out.erase(e);
    }
  }
  return out;
}

}  // namespace

ExplicitPoly to_monomials(const PExpansion& f, int nvars) {
  if (nvars < 1) throw std::invalid_argument("to_monomials: need at least one variable");
  if (!f.is_z_free()) throw std::invalid_argument("to_monomials: operand depends on z");
  std::map<int, ExplicitPoly> power_sums;
  auto power_sum = [&](int k) -> const ExplicitPoly& {
    auto it = power_sums.find(k);
    if (it != power_sums.end()) return it->second;
    ExplicitPoly p;
    for (int i = 0; i < nvars; ++i) {
      std::vector<int> e(nvars, 0);
      e[i] = k;
      p.emplace(std::move(e), QTPoly(1));
    }
    return power_sums.emplace(k, std::move(p)).first->second;
  };

  ExplicitPoly out;
  for (const auto& [lambda, zc] : f.coeffs()) {
    const auto poly = zc.coefficient(0).as_polynomial();
    if (!poly) throw std::invalid_argument("to_monomials: coefficient is not a polynomial in q, t");
    ExplicitPoly term{{std::vector<int>(nvars, 0), *poly}};
    for (int part : lambda) term = multiply(term, power_sum(part));
    for (const auto& [e, c] : term) {
      QTPoly& slot = out[e];
      slot += c;
      if (slot.is_zero()) out.erase(e);
    }
  }
  return out;
}

QSymF sym_to_qsym(const PExpansion& f, int n) {
  if (f.is_zero()) return QSymF(n);
  if (f.homogeneous_degree() != n) throw std::invalid_argument("sym_to_qsym: operand is not homogeneous of degree n");
  if (!f.is_z_free()) throw std::invalid_argument("sym_to_qsym: operand depends on z");
  return expand_in_fundamentals(monomial_form(to_monomials(f, n), n));
}

}  // namespace sqpaths
