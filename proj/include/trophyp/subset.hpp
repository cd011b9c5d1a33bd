#pragma once

// Subsets of [n] as bitmasks: element i (1-based) lives at bit i-1.

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace trophyp {

using Subset = std::uint32_t;

constexpr int kMaxGround = 12;

inline int popcount(Subset s) { return std::popcount(s); }
inline bool contains(Subset s, int i) { return (s >> (i - 1)) & 1U; }
inline Subset element(int i) { return Subset{1} << (i - 1); }
inline Subset full_set(int n) { return n == 32 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// Sorted 1-based members.
std::vector<int> members(Subset s);
Subset subset_of(const std::vector<int>& elems);

/// "{1,3}" style.
std::string format_subset(Subset s);

/// All k-subsets of [n] in lexicographic order of their sorted member lists.
std::vector<Subset> k_subsets(int n, int k);

/// Lexicographic comparison of sorted member lists.
bool lex_less(Subset a, Subset b);

}  // namespace trophyp
