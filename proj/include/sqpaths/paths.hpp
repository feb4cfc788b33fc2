#pragma once

// Preference functions, their square-path placements, and the statistics
// read off the placement: area, dinv, word, ides, diagonal word, deviation,
// touch and comp.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sqpaths/perm.hpp"

namespace sqpaths {

/// Largest n accepted by the enumeration routines unless raised explicitly.
inline constexpr int kDefaultMaxCars = 8;

/// A map f : [n] -> [n]; f(i) is the preferred spot of car i.
class PrefFunc {
 public:
  /// Throws std::invalid_argument unless 1 <= f(i) <= n for all i and n >= 1.
  explicit PrefFunc(std::vector<int> f);
  /// Parses "1,5,1,2,1".
  static PrefFunc parse(std::string_view text);

  int size() const { return static_cast<int>(f_.size()); }
  /// Preferred spot of car (1-based).
  int operator()(int car) const { return f_[car - 1]; }
  std::span<const int> values() const { return f_; }

  friend bool operator==(const PrefFunc&, const PrefFunc&) = default;
  friend auto operator<=>(const PrefFunc&, const PrefFunc&) = default;

 private:
  std::vector<int> f_;
};

/// Grid cell of one car. Columns and rows are 1-based; diagonal = row - column.
struct CarCell {
  int column = 0;
  int row = 0;
  int diagonal = 0;
  friend bool operator==(const CarCell&, const CarCell&) = default;
};

struct Placement {
  std::vector<CarCell> cells;  // cells[car - 1]

  int size() const { return static_cast<int>(cells.size()); }
  const CarCell& at(int car) const { return cells[car - 1]; }
  /// -min diagonal; 0 exactly for parking functions.
  int deviation() const;
};

struct DinvParts {
  int primary = 0;
  int secondary = 0;
  int tertiary = 0;
  int total() const { return primary + secondary + tertiary; }
  friend bool operator==(const DinvParts&, const DinvParts&) = default;
};

struct StatRecord {
  int n = 0;
  int area = 0;
  DinvParts dinv;
  Perm word;
  SubsetMask ides = 0;
  Perm diagword;
  int deviation = 0;
  int touch = 0;
  std::optional<std::vector<int>> comp;  // present iff deviation == 0
  bool parking = false;
};

/// Column c receives the cars of f^-1(c) in increasing order, bottom to top,
/// starting at the lowest row not yet used.
Placement place(const PrefFunc& p);
/// |f^-1([k])| >= k for every k.
bool is_parking(const PrefFunc& p);
StatRecord stats(const PrefFunc& p);

/// One JSON object per line, keys in a fixed order:
/// {"n":..,"f":[..],"area":..,"dinv":..,"dinv_parts":[p,s,t],"word":[..],
///  "ides":[..],"diagword":[..],"deviation":..,"touch":..,"comp":[..]|null,"parking":..}
std::string to_json_line(const PrefFunc& p, const StatRecord& s);

/// Lexicographic successor of f within [n]^n; false after (n, ..., n).
bool next_pref(std::vector<int>& f, int n);

/// Throws std::invalid_argument unless 1 <= n <= max_n.
void check_enumeration_bound(int n, int max_n = kDefaultMaxCars);

/// Visits every preference function on n cars once, in lexicographic order.
template <class Visit>
void enumerate_all(int n, Visit&& visit, int max_n = kDefaultMaxCars) {
  check_enumeration_bound(n, max_n);
  std::vector<int> f(n, 1);
  do {
    visit(PrefFunc(f));
  } while (next_pref(f, n));
}

}  // namespace sqpaths
