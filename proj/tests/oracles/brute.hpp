#pragma once

// Slow, definition-literal reference implementations.

#include <algorithm>
#include <vector>

#include "trophyp/exactlin.hpp"
#include "trophyp/matroid.hpp"
#include "trophyp/signvar.hpp"

namespace oracle {

using namespace trophyp;

/// varbar by trying every +/- completion of the zero positions.
inline int varbar_exhaustive(const std::vector<Sign>& s) {
  std::vector<std::size_t> zeros;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) zeros.push_back(i);
  }
  int best = 0;
  for (unsigned mask = 0; mask < (1U << zeros.size()); ++mask) {
    std::vector<Sign> t = s;
    for (std::size_t k = 0; k < zeros.size(); ++k) t[zeros[k]] = (mask >> k) & 1U ? 1 : -1;
    best = std::max(best, var(std::span<const Sign>(t)));
  }
  return best;
}

/// Cofactor expansion along the first row.
inline Rational det_cofactor(const ExactMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) cols.push_back(k);
    }
    const Rational minor = det_cofactor(m.select_rows(rows).select_columns(cols));
    total += (j % 2 == 0 ? 1 : -1) * m(0, j) * minor;
  }
  return total;
}

/// Shifted order <_i on [n]: i < i+1 < ... < n < 1 < ... < i-1. Returns rank of e.
inline int shifted_pos(int e, int i, int n) { return (e - i + n) % n; }

inline std::vector<int> shifted_sorted(Subset s, int i, int n) {
  auto m = members(s);
  std::sort(m.begin(), m.end(), [&](int a, int b) { return shifted_pos(a, i, n) < shifted_pos(b, i, n); });
  return m;
}

/// Gale order b >=_i a in the shifted order.
inline bool gale_geq(Subset b, Subset a, int i, int n) {
  const auto sb = shifted_sorted(b, i, n);
  const auto sa = shifted_sorted(a, i, n);
  for (std::size_t k = 0; k < sa.size(); ++k) {
    if (shifted_pos(sb[k], i, n) < shifted_pos(sa[k], i, n)) return false;
  }
  return true;
}

/// Positroid test through the Grassmann necklace: M is a positroid iff its
/// bases are exactly the sets Gale-above every necklace element I_i in order <_i.
inline bool is_positroid_necklace(const Matroid& m) {
  const int n = m.n();
  if (n == 0) return true;
  std::vector<Subset> necklace(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    Subset best = 0;
    bool have = false;
    for (Subset b : m.bases()) {
      if (!have || gale_geq(best, b, i, n)) {
        best = b;
        have = true;
      }
    }
    necklace[i] = best;
  }
  std::size_t envelope = 0;
  for (Subset s : k_subsets(n, m.rank())) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) ok = gale_geq(s, necklace[i], i, n);
    envelope += ok;
  }
  return envelope == m.bases().size();
}

}  // namespace oracle
