#include "sqpaths/quasisym.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "sqpaths/schedules.hpp"

namespace sqpaths {

namespace {

SubsetMask full_subset(int n) { return n <= 1 ? 0 : (SubsetMask{1} << (n - 1)) - 1; }

void require_subset(SubsetMask s, int n) {
  if ((s & ~full_subset(n)) != 0) throw std::invalid_argument("subset is not contained in [n-1]");
}

std::string subset_key(SubsetMask s) {
  std::string key = "[";
  bool first = true;
  for (int i : subset_elements(s)) {
    if (!first) key += ',';
    key += std::to_string(i);
    first = false;
  }
  return key + "]";
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

SubsetMask subset_from_composition(const Composition& alpha) {
  SubsetMask s = 0;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha[i] < 1) throw std::invalid_argument("composition parts must be positive");
    sum += alpha[i];
    s = subset_with(s, sum);
  }
  if (!alpha.empty() && alpha.back() < 1) throw std::invalid_argument("composition parts must be positive");
  return s;
}

Composition composition_from_subset(SubsetMask s, int n) {
  require_subset(s, n);
  Composition alpha;
  int last = 0;
  for (int i : subset_elements(s)) {
    alpha.push_back(i - last);
    last = i;
  }
  alpha.push_back(n - last);
  return alpha;
}

// ---------------------------------------------------------------- QSymF

QSymF::QSymF(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("QSymF degree must be positive");
}

QTPoly QSymF::coefficient(SubsetMask s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? QTPoly{} : it->second;
}

void QSymF::add(SubsetMask s, const QTPoly& c) {
  require_subset(s, degree_);
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void QSymF::require_same_degree(const QSymF& other) const {
  if (degree_ != other.degree_) throw std::invalid_argument("QSymF degrees differ");
}

QSymF& QSymF::operator+=(const QSymF& other) {
  require_same_degree(other);
  for (const auto& [s, c] : other.coeffs_) add(s, c);
  return *this;
}

QSymF& QSymF::operator-=(const QSymF& other) {
  require_same_degree(other);
  for (const auto& [s, c] : other.coeffs_) add(s, -c);
  return *this;
}

QSymF QSymF::scaled(const QTPoly& c) const {
  QSymF out(degree_);
  for (const auto& [s, coeff] : coeffs_) out.add(s, coeff * c);
  return out;
}

QTPoly QSymF::specialize() const {
  QTPoly sum;
  for (const auto& [s, c] : coeffs_) sum += c;
  return sum;
}

nlohmann::json QSymF::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [s, c] : coeffs_) j[subset_key(s)] = c.to_string();
  return j;
}

QSymF to_qsym(const StatTally& tally, int n) {
  QSymF out(n);
  for (const auto& [k, v] : tally) out.add(k.ides, QTPoly::monomial(Rational(static_cast<long>(v)), k.dinv, k.area));
  return out;
}

// ---------------------------------------------------------------- change of basis

MonomialForm q_fundamental(SubsetMask s, int n) {
  if (n < 1) throw std::invalid_argument("q_fundamental: degree must be positive");
  require_subset(s, n);
  MonomialForm m{n, {}};
  const SubsetMask full = full_subset(n);
  const SubsetMask free = full & ~s;
  // Enumerate the supersets of s by walking the subsets of the free bits.
  SubsetMask extra = free;
  while (true) {
    m.coeffs.emplace(composition_from_subset(s | extra, n), QTPoly(1));
    if (extra == 0) break;
    extra = (extra - 1) & free;
  }
  return m;
}

QSymF expand_in_fundamentals(const MonomialForm& m) {
  QSymF out(m.degree);
  const SubsetMask full = full_subset(m.degree);
  for (const auto& [alpha, c] : m.coeffs) {
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != m.degree) {
      throw std::invalid_argument("expand_in_fundamentals: composition of the wrong size");
    }
    const SubsetMask t = subset_from_composition(alpha);
    const SubsetMask free = full & ~t;
    SubsetMask extra = free;
    while (true) {
      const bool odd = (std::popcount(extra) & 1) != 0;
      out.add(t | extra, odd ? -c : c);
      if (extra == 0) break;
      extra = (extra - 1) & free;
    }
  }
  return out;
}

MonomialForm monomial_form(const ExplicitPoly& poly, int n) {
  std::map<Composition, std::pair<QTPoly, std::int64_t>> seen;
  for (const auto& [exps, c] : poly) {
    if (static_cast<int>(exps.size()) != n) throw std::invalid_argument("monomial_form: wrong number of variables");
    Composition alpha;
    for (int e : exps) {
      if (e < 0) throw std::invalid_argument("monomial_form: negative exponent");
      if (e > 0) alpha.push_back(e);
    }
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != n) {
      throw std::invalid_argument("monomial_form: polynomial is not homogeneous of degree n");
    }
    auto [it, inserted] = seen.try_emplace(alpha, c, 0);
    if (!inserted && it->second.first != c) throw std::invalid_argument("monomial_form: not quasisymmetric");
    ++it->second.second;
  }
  MonomialForm m{n, {}};
  for (const auto& [alpha, entry] : seen) {
    if (entry.second != binomial(n, static_cast<int>(alpha.size()))) {
      throw std::invalid_argument("monomial_form: not quasisymmetric");
    }
    m.coeffs.emplace(alpha, entry.first);
  }
  return m;
}

ExplicitPoly fundamental_polynomial(SubsetMask s, int n) {
  require_subset(s, n);
  ExplicitPoly out;
  std::vector<int> exps(n, 0);
  // a_1 <= ... <= a_n in [1, n], strict at positions in s.
  auto rec = [&](auto&& self, int i, int lowest) -> void {
    if (i > n) {
      out[exps] += QTPoly(1);
      return;
    }
    for (int a = lowest; a <= n; ++a) {
      ++exps[a - 1];
      const int next = subset_contains(s, i) ? a + 1 : a;
      self(self, i + 1, next);
      --exps[a - 1];
    }
  };
  rec(rec, 1, 1);
  return out;
}

QSymF weighted_sum(const PrefPredicate& family, int n, int threads, const StatsFn& fn) {
  const StatTally tally =
      threads <= 1 ? weighted_tally_serial(n, family, fn) : weighted_tally_parallel(n, threads, family, fn);
  return to_qsym(tally, n);
}

// ---------------------------------------------------------------- consecutive blocks

ConsecutiveBlocks consecutive_blocks(const Perm& tau) {
  if (!is_permutation(tau) || tau.empty()) throw std::invalid_argument("consecutive_blocks: not a permutation");
  const int n = static_cast<int>(tau.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[tau[i]] = i;
  ConsecutiveBlocks out{tau, {}};
  for (int v = 1; v <= n; ++v) {
    if (v == 1 || pos[v] != pos[v - 1] + 1) out.blocks.emplace_back();
    out.blocks.back().push_back(v);
  }
  return out;
}

namespace {

// Calls visit(pi) for every pi in the Young subgroup permuting values within
// each consecutive block of tau.
template <class Visit>
void for_each_yconsec(const Perm& tau, Visit&& visit) {
  const ConsecutiveBlocks cb = consecutive_blocks(tau);
  Perm pi = identity_perm(static_cast<int>(tau.size()));
  auto rec = [&](auto&& self, std::size_t b) -> void {
    if (b == cb.blocks.size()) {
      visit(pi);
      return;
    }
    const auto& block = cb.blocks[b];
    const auto first = pi.begin() + (block.front() - 1);
    const auto last = pi.begin() + block.back();
    std::sort(first, last);
    do {
      self(self, b + 1);
    } while (std::next_permutation(first, last));
  };
  rec(rec, 0);
}

}  // namespace

QTPoly yconsec_inv_sum(const Perm& tau) {
  QTPoly sum;
  for_each_yconsec(tau, [&](const Perm& pi) { sum.add_term(1, {inv(pi), 0}); });
  return sum;
}

QSymF yconsec_qsym_sum(const Perm& tau) {
  const int n = static_cast<int>(tau.size());
  const SubsetMask base = ides(tau);
  QSymF sum(n);
  for_each_yconsec(tau, [&](const Perm& pi) { sum.add(base | ides(pi), QTPoly::monomial(1, inv(pi), 0)); });
  return sum;
}

bool factor_check(const Perm& tau, int l, const QSymF& lhs) {
  const QTPoly enumeration = pref_closed_form(tau, l);
  return lhs.scaled(yconsec_inv_sum(tau)) == yconsec_qsym_sum(tau).scaled(enumeration);
}

bool factor_check(const Perm& tau, int l, int threads, const StatsFn& fn) {
  const RunDecomposition rd(tau);
  if (l < 0 || l >= rd.count()) throw std::invalid_argument("factor_check: inadmissible l");
  const DiagwordTally brute =
      threads <= 1 ? diagword_tally_serial(tau, fn) : diagword_tally_parallel(tau, threads, fn);
  const int n = static_cast<int>(tau.size());
  auto it = brute.find(l);
  const QSymF lhs = it == brute.end() ? QSymF(n) : to_qsym(it->second, n);
  return factor_check(tau, l, lhs);
}

}  // namespace sqpaths
