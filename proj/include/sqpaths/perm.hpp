#pragma once

// Permutation and subset plumbing shared by the combinatorial modules.
// Permutations are one-line notation over the values 1..n.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sqpaths {

using Perm = std::vector<int>;

/// Subset of {1, ..., 31}; element i is bit (i - 1).
using SubsetMask = std::uint32_t;

inline constexpr bool subset_contains(SubsetMask s, int i) { return ((s >> (i - 1)) & 1U) != 0; }
inline constexpr SubsetMask subset_with(SubsetMask s, int i) { return s | (SubsetMask{1} << (i - 1)); }
SubsetMask subset_from(const std::vector<int>& elements);
std::vector<int> subset_elements(SubsetMask s);

/// Permutations of up to 8 values packed one per nibble, first value in the
/// lowest nibble. Used as a compact map key during enumeration.
using PermCode = std::uint32_t;
PermCode encode_perm(const Perm& p);
Perm decode_perm(PermCode code, int n);

bool is_permutation(const Perm& p);
/// Parses "23145" (single digits) or "2,3,1,4,5"; throws std::invalid_argument.
Perm parse_perm(std::string_view text);
std::string perm_string(const Perm& p);  // "23145", comma separated when n > 9
Perm identity_perm(int n);
/// All permutations of 1..n in lexicographic order.
std::vector<Perm> all_perms(int n);

/// Maximal increasing consecutive blocks, leftmost first.
std::vector<std::vector<int>> runs(const Perm& p);
/// Sum of descent positions i (p[i] > p[i+1], 1-based).
int maj(const Perm& p);
int inv(const Perm& p);
/// {i : i+1 appears before i}.
SubsetMask ides(const Perm& p);

}  // namespace sqpaths
