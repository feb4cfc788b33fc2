#pragma once

// Brute-force enumeration kernels over all n^n preference functions.
//
// Each kernel has a serial reference implementation and an OpenMP version
// that partitions the lexicographic enumeration by the value of f(1). The
// partitions are merged in partition order, so both versions return
// identical results for any thread count.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "sqpaths/paths.hpp"
#include "sqpaths/perm.hpp"
#include "sqpaths/qt_algebra.hpp"

namespace sqpaths {

/// Statistic evaluator used by the kernels. Swappable so that checks can be
/// exercised against deliberately broken statistics.
using StatsFn = std::function<StatRecord(const PrefFunc&)>;

/// Compact statistics of one preference function.
struct CensusEntry {
  PermCode diagword = 0;
  SubsetMask ides = 0;
  std::uint8_t deviation = 0;
  std::uint8_t touch = 0;
  std::uint8_t area = 0;
  std::uint8_t dinv = 0;
  bool parking = false;
  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Statistics of every preference function on n cars; entries[r] belongs to
/// the function of lexicographic rank r.
struct Census {
  int n = 0;
  std::vector<CensusEntry> entries;
};

std::uint64_t pref_count(int n);  // n^n
PrefFunc pref_from_rank(std::uint64_t rank, int n);
CensusEntry make_entry(const StatRecord& s);

Census census_serial(int n, const StatsFn& fn = stats, int max_n = kDefaultMaxCars);
Census census_parallel(int n, int threads, const StatsFn& fn = stats, int max_n = kDefaultMaxCars);

/// Multiplicities of (ides, area, dinv), i.e. the coefficients of
/// sum t^area q^dinv Q_ides over some family.
struct TallyKey {
  SubsetMask ides = 0;
  int area = 0;
  int dinv = 0;
  friend auto operator<=>(const TallyKey&, const TallyKey&) = default;
};
using StatTally = std::map<TallyKey, std::int64_t>;

void merge_into(StatTally& into, const StatTally& from);
/// sum count * t^area q^dinv, forgetting ides.
QTPoly to_qt(const StatTally& tally);

template <class Pred>
StatTally tally_census(const Census& census, Pred&& keep) {
  StatTally out;
  for (const CensusEntry& e : census.entries) {
    if (keep(e)) ++out[TallyKey{e.ides, e.area, e.dinv}];
  }
  return out;
}

/// Family filter for the streaming kernels.
using PrefPredicate = std::function<bool(const PrefFunc&, const StatRecord&)>;

StatTally weighted_tally_serial(int n, const PrefPredicate& keep, const StatsFn& fn = stats,
                                int max_n = kDefaultMaxCars);
StatTally weighted_tally_parallel(int n, int threads, const PrefPredicate& keep, const StatsFn& fn = stats,
                                  int max_n = kDefaultMaxCars);

/// Tallies per deviation of the preference functions whose diagonal word is
/// tau. Diagonal membership is screened from the placement alone, so only
/// matching functions pay for full statistics; this keeps n = 8 tractable.
using DiagwordTally = std::map<int, StatTally>;
DiagwordTally diagword_tally_serial(const Perm& tau, const StatsFn& fn = stats, int max_n = kDefaultMaxCars);
DiagwordTally diagword_tally_parallel(const Perm& tau, int threads, const StatsFn& fn = stats,
                                      int max_n = kDefaultMaxCars);

/// Tallies grouped by an integer key computed from each record; records
/// whose key is negative are skipped.
using KeyFn = std::function<std::int64_t(const PrefFunc&, const StatRecord&)>;
using KeyedTally = std::map<std::int64_t, StatTally>;
KeyedTally keyed_tally_serial(int n, const KeyFn& key, const StatsFn& fn = stats, int max_n = kDefaultMaxCars);
KeyedTally keyed_tally_parallel(int n, int threads, const KeyFn& key, const StatsFn& fn = stats,
                                int max_n = kDefaultMaxCars);

}  // namespace sqpaths
