#include "trophyp/subset.hpp"

#include <algorithm>

namespace trophyp {

std::vector<int> members(Subset s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1) {
    if (s & 1U) out.push_back(i);
  }
  return out;
}

Subset subset_of(const std::vector<int>& elems) {
  Subset s = 0;
  for (int e : elems) s |= element(e);
  return s;
}

std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : members(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

bool lex_less(Subset a, Subset b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  for (;;) {
    out.push_back(subset_of(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace trophyp
