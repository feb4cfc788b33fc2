#include "sqpaths/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sqpaths {

SubsetMask subset_from(const std::vector<int>& elements) {
  SubsetMask s = 0;
  for (int i : elements) {
    if (i < 1 || i > 31) throw std::invalid_argument("subset element out of range: " + std::to_string(i));
    s = subset_with(s, i);
  }
  return s;
}

std::vector<int> subset_elements(SubsetMask s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1U) {
    if (s & 1U) out.push_back(i);
  }
  return out;
}

PermCode encode_perm(const Perm& p) {
  if (p.size() > 8) throw std::invalid_argument("encode_perm: at most 8 values");
  PermCode code = 0;
  for (std::size_t i = 0; i < p.size(); ++i) code |= static_cast<PermCode>(p[i] - 1) << (4 * i);
  return code;
}

Perm decode_perm(PermCode code, int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<int>((code >> (4 * i)) & 0xFU) + 1;
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<bool> seen(p.size() + 1, false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm parse_perm(std::string_view text) {
  Perm p;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string item(text.substr(start, end - start));
      if (item.empty()) throw std::invalid_argument("empty entry in permutation");
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation entry '" + item + "'");
      }
      if (used != item.size()) throw std::invalid_argument("bad permutation entry '" + item + "'");
      p.push_back(v);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') throw std::invalid_argument(std::string("bad permutation digit '") + c + "'");
      p.push_back(c - '0');
    }
  }
  if (p.empty() || !is_permutation(p)) throw std::invalid_argument("not a permutation: " + std::string(text));
  return p;
}

std::string perm_string(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.size() > 9 && i > 0) s += ',';
    s += std::to_string(p[i]);
  }
  return s;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> runs(const Perm& p) {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i] < p[i - 1]) out.emplace_back();
    out.back().push_back(p[i]);
  }
  return out;
}

int maj(const Perm& p) {
  int m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) m += static_cast<int>(i) + 1;
  }
  return m;
}

int inv(const Perm& p) {
  int count = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) ++count;
    }
  }
  return count;
}

SubsetMask ides(const Perm& p) {
  std::vector<int> pos(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) pos[p[i]] = static_cast<int>(i);
  SubsetMask s = 0;
  for (int v = 1; v < static_cast<int>(p.size()); ++v) {
    if (pos[v + 1] < pos[v]) s = subset_with(s, v);
  }
  return s;
}

}  // namespace sqpaths
