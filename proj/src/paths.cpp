#include "sqpaths/paths.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

namespace sqpaths {

PrefFunc::PrefFunc(std::vector<int> f) : f_(std::move(f)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("preference function needs at least one car");
  for (int v : f_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("preference " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
    }
  }
}

PrefFunc PrefFunc::parse(std::string_view text) {
  std::vector<int> f;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item(text.substr(start, end - start));
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad preference entry '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad preference entry '" + item + "'");
    f.push_back(v);
    start = end + 1;
  }
  return PrefFunc(std::move(f));
}

int Placement::deviation() const {
  int lowest = 0;
  for (const auto& c : cells) lowest = std::min(lowest, c.diagonal);
  return -lowest;
}

Placement place(const PrefFunc& p) {
  const int n = p.size();
  Placement out;
  out.cells.resize(n);
  int next_row = 1;
  for (int column = 1; column <= n; ++column) {
    for (int car = 1; car <= n; ++car) {
      if (p(car) != column) continue;
      out.cells[car - 1] = {column, next_row, next_row - column};
      ++next_row;
    }
  }
  return out;
}

bool is_parking(const PrefFunc& p) {
  const int n = p.size();
  std::vector<int> at_most(n + 1, 0);
  for (int v : p.values()) ++at_most[v];
  int prefix = 0;
  for (int k = 1; k <= n; ++k) {
    prefix += at_most[k];
    if (prefix < k) return false;
  }
  return true;
}

StatRecord stats(const PrefFunc& p) {
  const int n = p.size();
  const Placement pl = place(p);
  StatRecord s;
  s.n = n;
  s.deviation = pl.deviation();
  s.parking = s.deviation == 0;

  for (int a = 1; a <= n; ++a) {
    const CarCell& ca = pl.at(a);
    s.area += ca.diagonal + s.deviation;
    if (ca.diagonal < 0) ++s.dinv.tertiary;
    if (ca.diagonal == -s.deviation) ++s.touch;
    for (int b = a + 1; b <= n; ++b) {
      const CarCell& cb = pl.at(b);
      if (ca.diagonal == cb.diagonal && ca.column < cb.column) ++s.dinv.primary;
      if (ca.diagonal + 1 == cb.diagonal && ca.column > cb.column) ++s.dinv.secondary;
    }
  }

  s.word = identity_perm(n);
  std::sort(s.word.begin(), s.word.end(), [&pl](int a, int b) {
    const CarCell& ca = pl.at(a);
    const CarCell& cb = pl.at(b);
    if (ca.diagonal != cb.diagonal) return ca.diagonal > cb.diagonal;
    return ca.column > cb.column;
  });
  s.ides = ides(s.word);

  s.diagword = identity_perm(n);
  std::stable_sort(s.diagword.begin(), s.diagword.end(),
                   [&pl](int a, int b) { return pl.at(a).diagonal > pl.at(b).diagonal; });

  if (s.parking) {
    // Touch points (i, i) of the path are the i with |f^-1([i])| == i.
    std::vector<int> count(n + 1, 0);
    for (int v : p.values()) ++count[v];
    std::vector<int> comp;
    int prefix = 0;
    int last_touch = 0;
    for (int i = 1; i <= n; ++i) {
      prefix += count[i];
      if (prefix == i) {
        comp.push_back(i - last_touch);
        last_touch = i;
      }
    }
    s.comp = std::move(comp);
  }
  return s;
}

std::string to_json_line(const PrefFunc& p, const StatRecord& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["f"] = std::vector<int>(p.values().begin(), p.values().end());
  j["area"] = s.area;
  j["dinv"] = s.dinv.total();
  j["dinv_parts"] = {s.dinv.primary, s.dinv.secondary, s.dinv.tertiary};
  j["word"] = s.word;
  j["ides"] = subset_elements(s.ides);
  j["diagword"] = s.diagword;
  j["deviation"] = s.deviation;
  j["touch"] = s.touch;
  j["comp"] = s.comp ? nlohmann::ordered_json(*s.comp) : nlohmann::ordered_json(nullptr);
  j["parking"] = s.parking;
  return j.dump();
}

bool next_pref(std::vector<int>& f, int n) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
    if (f[i] < n) {
      ++f[i];
      return true;
    }
    f[i] = 1;
  }
  return false;
}

void check_enumeration_bound(int n, int max_n) {
  if (n < 1 || n > max_n) {
    throw std::invalid_argument("n = " + std::to_string(n) + " outside the enumeration bound [1, " +
                                std::to_string(max_n) + "]");
  }
}

}  // namespace sqpaths
