#include "sqpaths/kernels.hpp"

#include <stdexcept>

#include <omp.h>

namespace sqpaths {

std::uint64_t pref_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

PrefFunc pref_from_rank(std::uint64_t rank, int n) {
  std::vector<int> f(n);
  for (int i = n - 1; i >= 0; --i) {
    f[i] = static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
    rank /= static_cast<std::uint64_t>(n);
  }
  if (rank != 0) throw std::out_of_range("pref_from_rank: rank exceeds n^n");
  return PrefFunc(std::move(f));
}

CensusEntry make_entry(const StatRecord& s) {
  CensusEntry e;
  e.diagword = encode_perm(s.diagword);
  e.ides = s.ides;
  e.deviation = static_cast<std::uint8_t>(s.deviation);
  e.touch = static_cast<std::uint8_t>(s.touch);
  e.area = static_cast<std::uint8_t>(s.area);
  e.dinv = static_cast<std::uint8_t>(s.dinv.total());
  e.parking = s.parking;
  return e;
}

namespace {

// Visits the block of functions with f(1) == first, in lexicographic order,
// passing each function's global rank.
template <class Visit>
void visit_block(int n, int first, Visit&& visit) {
  const std::uint64_t block = pref_count(n) / static_cast<std::uint64_t>(n);
  std::uint64_t rank = static_cast<std::uint64_t>(first - 1) * block;
  std::vector<int> f(n, 1);
  f[0] = first;
  std::vector<int> tail(f.begin() + 1, f.end());
  while (true) {
    std::copy(tail.begin(), tail.end(), f.begin() + 1);
    visit(rank++, PrefFunc(f));
    if (tail.empty() || !next_pref(tail, n)) break;
  }
}

// Diagonal word == tau iff every car sits (run index from last) above the
// lowest diagonal.
bool matches_diagword(const Placement& pl, const std::vector<int>& run_from_last) {
  const int offset = pl.at(1).diagonal - run_from_last[1];
  for (int c = 2; c <= pl.size(); ++c) {
    if (pl.at(c).diagonal - run_from_last[c] != offset) return false;
  }
  return true;
}

std::vector<int> run_index_by_car(const Perm& tau) {
  const auto rs = runs(tau);
  std::vector<int> idx(tau.size() + 1, 0);
  const int r = static_cast<int>(rs.size());
  for (int p = 0; p < r; ++p) {
    for (int c : rs[p]) idx[c] = r - 1 - p;
  }
  return idx;
}

template <class Visit>
void diagword_block(const Perm& tau, const std::vector<int>& run_idx, int first, const StatsFn& fn, Visit&& visit) {
  const int n = static_cast<int>(tau.size());
  visit_block(n, first, [&](std::uint64_t, const PrefFunc& p) {
    if (!matches_diagword(place(p), run_idx)) return;
    const StatRecord s = fn(p);
    if (s.diagword != tau) return;
    visit(s);
  });
}

void add_to(DiagwordTally& into, const StatRecord& s) {
  ++into[s.deviation][TallyKey{s.ides, s.area, s.dinv.total()}];
}

}  // namespace

Census census_serial(int n, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  Census c{n, std::vector<CensusEntry>(pref_count(n))};
  for (int first = 1; first <= n; ++first) {
    visit_block(n, first, [&](std::uint64_t rank, const PrefFunc& p) { c.entries[rank] = make_entry(fn(p)); });
  }
  return c;
}

Census census_parallel(int n, int threads, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  if (threads < 1) throw std::invalid_argument("census_parallel: threads must be positive");
  Census c{n, std::vector<CensusEntry>(pref_count(n))};
  // Every rank is written by exactly one partition, so no merge is needed.
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    visit_block(n, first, [&](std::uint64_t rank, const PrefFunc& p) { c.entries[rank] = make_entry(fn(p)); });
  }
  return c;
}

void merge_into(StatTally& into, const StatTally& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

QTPoly to_qt(const StatTally& tally) {
  QTPoly p;
  for (const auto& [k, v] : tally) p.add_term(Rational(static_cast<long>(v)), {k.dinv, k.area});
  return p;
}

StatTally weighted_tally_serial(int n, const PrefPredicate& keep, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  StatTally out;
  for (int first = 1; first <= n; ++first) {
    visit_block(n, first, [&](std::uint64_t, const PrefFunc& p) {
      const StatRecord s = fn(p);
      if (keep(p, s)) ++out[TallyKey{s.ides, s.area, s.dinv.total()}];
    });
  }
  return out;
}

StatTally weighted_tally_parallel(int n, int threads, const PrefPredicate& keep, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  if (threads < 1) throw std::invalid_argument("weighted_tally_parallel: threads must be positive");
  std::vector<StatTally> parts(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    StatTally& part = parts[first - 1];
    visit_block(n, first, [&](std::uint64_t, const PrefFunc& p) {
      const StatRecord s = fn(p);
      if (keep(p, s)) ++part[TallyKey{s.ides, s.area, s.dinv.total()}];
    });
  }
  StatTally out;
  for (const auto& part : parts) merge_into(out, part);
  return out;
}

DiagwordTally diagword_tally_serial(const Perm& tau, const StatsFn& fn, int max_n) {
  const int n = static_cast<int>(tau.size());
  check_enumeration_bound(n, max_n);
  if (!is_permutation(tau)) throw std::invalid_argument("diagword_tally: not a permutation");
  const auto run_idx = run_index_by_car(tau);
  DiagwordTally out;
  for (int first = 1; first <= n; ++first) {
    diagword_block(tau, run_idx, first, fn, [&](const StatRecord& s) { add_to(out, s); });
  }
  return out;
}

DiagwordTally diagword_tally_parallel(const Perm& tau, int threads, const StatsFn& fn, int max_n) {
  const int n = static_cast<int>(tau.size());
  check_enumeration_bound(n, max_n);
  if (!is_permutation(tau)) throw std::invalid_argument("diagword_tally: not a permutation");
  if (threads < 1) throw std::invalid_argument("diagword_tally_parallel: threads must be positive");
  const auto run_idx = run_index_by_car(tau);
  std::vector<DiagwordTally> parts(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    diagword_block(tau, run_idx, first, fn, [&](const StatRecord& s) { add_to(parts[first - 1], s); });
  }
  DiagwordTally out;
  for (const auto& part : parts) {
    for (const auto& [dev, tally] : part) merge_into(out[dev], tally);
  }
  return out;
}

KeyedTally keyed_tally_serial(int n, const KeyFn& key, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  KeyedTally out;
  for (int first = 1; first <= n; ++first) {
    visit_block(n, first, [&](std::uint64_t, const PrefFunc& p) {
      const StatRecord s = fn(p);
      const std::int64_t k = key(p, s);
      if (k >= 0) ++out[k][TallyKey{s.ides, s.area, s.dinv.total()}];
    });
  }
  return out;
}

KeyedTally keyed_tally_parallel(int n, int threads, const KeyFn& key, const StatsFn& fn, int max_n) {
  check_enumeration_bound(n, max_n);
  if (threads < 1) throw std::invalid_argument("keyed_tally_parallel: threads must be positive");
  std::vector<KeyedTally> parts(n);
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    KeyedTally& part = parts[first - 1];
    visit_block(n, first, [&](std::uint64_t, const PrefFunc& p) {
      const StatRecord s = fn(p);
      const std::int64_t k = key(p, s);
      if (k >= 0) ++part[k][TallyKey{s.ides, s.area, s.dinv.total()}];
    });
  }
  KeyedTally out;
  for (const auto& part : parts) {
    for (const auto& [k, tally] : part) merge_into(out[k], tally);
  }
  return out;
}

}  // namespace sqpaths
