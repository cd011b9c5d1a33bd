#include "trophyp/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace trophyp {

namespace {

std::vector<bool> independence_table(const Matroid& m) {
  const Subset top = full_set(m.n());
  std::vector<bool> indep(static_cast<std::size_t>(top) + 1, false);
  for (Subset b : m.bases()) indep[b] = true;
  for (Subset s = top + 1; s-- > 0;) {
    if (!indep[s]) continue;
    for (Subset rest = s; rest != 0; rest &= rest - 1) indep[s & ~(rest & -rest)] = true;
  }
  return indep;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

Subset relabel_into(Subset b, const std::vector<int>& new_index) {
  Subset out = 0;
  for (int e : members(b)) {
    if (new_index[e] > 0) out |= element(new_index[e]);
  }
  return out;
}

std::vector<int> compress_map(int n, Subset keep) {
  std::vector<int> idx(static_cast<std::size_t>(n) + 1, 0);
  int next = 1;
  for (int e = 1; e <= n; ++e) {
    if (contains(keep, e)) idx[e] = next++;
  }
  return idx;
}

}  // namespace

std::optional<ExchangeWitness> Matroid::find_exchange_violation(int n, const std::vector<Subset>& bases) {
  std::vector<bool> in(static_cast<std::size_t>(full_set(n)) + 1, false);
  for (Subset b : bases) in[b] = true;
  for (Subset b1 : bases) {
    for (Subset b2 : bases) {
      if (b1 == b2) continue;
      const Subset only1 = b1 & ~b2;
      const Subset only2 = b2 & ~b1;
      for (int x : members(only1)) {
        bool ok = false;
        for (int y : members(only2)) {
          if (in[(b1 & ~element(x)) | element(y)]) {
            ok = true;
            break;
          }
        }
        if (!ok) return ExchangeWitness{b1, b2, x};
      }
    }
  }
  return std::nullopt;
}

Matroid Matroid::from_bases_unchecked(int n, int d, std::vector<Subset> bases) {
  Matroid m;
  m.n_ = n;
  m.d_ = d;
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  m.bases_ = std::move(bases);
  m.is_basis_.assign(static_cast<std::size_t>(full_set(n)) + 1, false);
  for (Subset b : m.bases_) m.is_basis_[b] = true;
  return m;
}

Matroid Matroid::from_bases(int n, int d, std::vector<Subset> bases) {
  if (n < 0 || n > kMaxGround) throw MatroidError("ground set size must lie in [0, 12]");
  if (d < 0 || d > n) throw MatroidError("rank must lie in [0, n]");
  if (bases.empty()) throw MatroidError("a matroid needs at least one basis");
  for (Subset b : bases) {
    if ((b & ~full_set(n)) != 0) throw MatroidError("basis " + format_subset(b) + " leaves the ground set");
    if (popcount(b) != d) throw MatroidError("basis " + format_subset(b) + " does not have size " + std::to_string(d));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (auto w = find_exchange_violation(n, bases)) {
    throw MatroidError("basis exchange fails: " + format_subset(w->b1) + " minus " + std::to_string(w->x) +
                           " has no replacement from " + format_subset(w->b2),
                       w);
  }
  return from_bases_unchecked(n, d, std::move(bases));
}

Matroid Matroid::uniform(int d, int n) { return from_bases_unchecked(n, d, k_subsets(n, d)); }

bool Matroid::is_independent(Subset s) const {
  return std::any_of(bases_.begin(), bases_.end(), [s](Subset b) { return (b & s) == s; });
}

int Matroid::rank_of(Subset s) const {
  int r = 0;
  for (Subset b : bases_) r = std::max(r, popcount(b & s));
  return r;
}

std::vector<Subset> circuits(const Matroid& m) {
  const auto indep = independence_table(m);
  std::vector<Subset> out;
  for (Subset s = 1; s <= full_set(m.n()); ++s) {
    if (indep[s]) continue;
    bool minimal = true;
    for (Subset rest = s; rest != 0 && minimal; rest &= rest - 1) minimal = indep[s & ~(rest & -rest)];
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

CyclicPartition connected_components(const Matroid& m) {
  UnionFind uf(m.n());
  for (Subset c : circuits(m)) {
    const auto elems = members(c);
    for (std::size_t i = 1; i < elems.size(); ++i) uf.unite(elems[0] - 1, elems[i] - 1);
  }
  std::map<int, Subset> by_root;
  for (int e = 1; e <= m.n(); ++e) by_root[uf.find(e - 1)] |= element(e);
  CyclicPartition p{m.n(), {}};
  for (const auto& [root, block] : by_root) p.blocks.push_back(block);
  std::sort(p.blocks.begin(), p.blocks.end(), [](Subset a, Subset b) { return (a & -a) < (b & -b); });
  return p;
}

int num_components(const Matroid& m) { return static_cast<int>(connected_components(m).blocks.size()); }

Matroid dual(const Matroid& m) {
  std::vector<Subset> out;
  out.reserve(m.bases().size());
  for (Subset b : m.bases()) out.push_back(m.ground() & ~b);
  return Matroid::from_bases_unchecked(m.n(), m.n() - m.rank(), std::move(out));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n() + b.n() > kMaxGround) throw std::invalid_argument("direct sum exceeds the ground-set cap");
  std::vector<Subset> out;
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) out.push_back(x | (y << a.n()));
  }
  return Matroid::from_bases_unchecked(a.n() + b.n(), a.rank() + b.rank(), std::move(out));
}

Matroid restrict(const Matroid& m, Subset s) {
  if ((s & ~m.ground()) != 0) throw std::invalid_argument("restriction set leaves the ground set");
  const int r = m.rank_of(s);
  const auto idx = compress_map(m.n(), s);
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    if (popcount(b & s) == r) out.push_back(relabel_into(b & s, idx));
  }
  return Matroid::from_bases_unchecked(popcount(s), r, std::move(out));
}

Matroid contract(const Matroid& m, Subset s) {
  if ((s & ~m.ground()) != 0) throw std::invalid_argument("contraction set leaves the ground set");
  const int r = m.rank_of(s);
  const Subset keep = m.ground() & ~s;
  const auto idx = compress_map(m.n(), keep);
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    if (popcount(b & s) == r) out.push_back(relabel_into(b & keep, idx));
  }
  return Matroid::from_bases_unchecked(popcount(keep), m.rank() - r, std::move(out));
}

Subset loops(const Matroid& m) {
  Subset used = 0;
  for (Subset b : m.bases()) used |= b;
  return m.ground() & ~used;
}

bool is_loopless(const Matroid& m) { return loops(m) == 0; }

Subset parallelism_class(const Matroid& m, int e) {
  if (e < 1 || e > m.n()) throw std::invalid_argument("element out of range");
  Subset out = element(e);
  if (contains(loops(m), e)) return out;
  for (int f = 1; f <= m.n(); ++f) {
    if (f == e || contains(loops(m), f)) continue;
    if (!m.is_independent(element(e) | element(f))) out |= element(f);
  }
  return out;
}

namespace {

/// Bases meeting every prefix set in its full rank.
std::vector<Subset> bases_respecting_chain(const Matroid& m, const std::vector<Subset>& prefixes) {
  std::vector<int> ranks;
  ranks.reserve(prefixes.size());
  for (Subset p : prefixes) ranks.push_back(m.rank_of(p));
  std::vector<Subset> out;
  for (Subset b : m.bases()) {
    bool ok = true;
    for (std::size_t k = 0; k < prefixes.size() && ok; ++k) ok = popcount(b & prefixes[k]) == ranks[k];
    if (ok) out.push_back(b);
  }
  return out;
}

}  // namespace

FaceMatroid face_matroid(const Matroid& m, const RationalVector& w) {
  if (static_cast<int>(w.size()) != m.n()) throw std::invalid_argument("weight length must equal n");
  std::vector<Subset> best;
  Rational best_value;
  for (Subset b : m.bases()) {
    Rational value = 0;
    for (int e : members(b)) value += w[e - 1];
    if (best.empty() || value > best_value) {
      best.assign(1, b);
      best_value = value;
    } else if (value == best_value) {
      best.push_back(b);
    }
  }
  FaceMatroid f;
  f.matroid = Matroid::from_bases_unchecked(m.n(), m.rank(), std::move(best));
  f.weight = w;
  f.dimension = m.n() - num_components(f.matroid);
  return f;
}

Matroid face_matroid_greedy(const Matroid& m, const RationalVector& w) {
  if (static_cast<int>(w.size()) != m.n()) throw std::invalid_argument("weight length must equal n");
  RationalVector levels(w.begin(), w.end());
  std::sort(levels.begin(), levels.end(), std::greater<>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  std::vector<Subset> prefixes;
  Subset acc = 0;
  for (const auto& level : levels) {
    for (int e = 1; e <= m.n(); ++e) {
      if (w[e - 1] == level) acc |= element(e);
    }
    prefixes.push_back(acc);
  }
  return Matroid::from_bases_unchecked(m.n(), m.rank(), bases_respecting_chain(m, prefixes));
}

bool is_noncrossing_partition(const CyclicPartition& p) {
  std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (int e : members(p.blocks[b])) {
      if (e > p.n) throw std::invalid_argument("partition block leaves [n]");
      if (block_of[e] != -1) throw std::invalid_argument("partition blocks overlap");
      block_of[e] = static_cast<int>(b);
    }
  }
  std::vector<int> last(p.blocks.size(), 0);
  for (int e = 1; e <= p.n; ++e) {
    if (block_of[e] >= 0) last[block_of[e]] = e;
  }
  std::vector<int> open;
  std::vector<bool> seen(p.blocks.size(), false);
  for (int e = 1; e <= p.n; ++e) {
    const int b = block_of[e];
    if (b < 0) continue;
    if (seen[b]) {
      if (open.empty() || open.back() != b) return false;
    } else {
      seen[b] = true;
      open.push_back(b);
    }
    if (last[b] == e) open.pop_back();
  }
  return true;
}

bool is_noncrossing_partition_quadruple(const CyclicPartition& p) {
  std::vector<int> block_of(static_cast<std::size_t>(p.n) + 1, -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    for (int e : members(p.blocks[b])) block_of[e] = static_cast<int>(b);
  }
  for (int a = 1; a <= p.n; ++a) {
    for (int b = a + 1; b <= p.n; ++b) {
      for (int c = b + 1; c <= p.n; ++c) {
        for (int d = c + 1; d <= p.n; ++d) {
          const int i = block_of[a];
          const int j = block_of[b];
          if (i < 0 || j < 0 || i == j) continue;
          if (block_of[c] == i && block_of[d] == j) return false;
        }
      }
    }
  }
  return true;
}

bool is_noncrossing_matroid(const Matroid& m) { return is_noncrossing_partition(connected_components(m)); }

std::vector<FaceMatroid> all_faces(const Matroid& m) {
  std::set<std::vector<Subset>> seen;
  std::vector<FaceMatroid> out;
  std::vector<int> ranks(static_cast<std::size_t>(full_set(m.n())) + 1, 0);
  for (Subset s = 0; s <= full_set(m.n()); ++s) ranks[s] = m.rank_of(s);
  std::vector<Subset> prefixes;
  std::vector<Subset> face;
  for_each_ordered_set_partition(m.n(), [&](const std::vector<int>& labels) {
    const int k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
    prefixes.assign(static_cast<std::size_t>(k), 0);
    for (int e = 1; e <= m.n(); ++e) {
      for (int level = labels[e - 1]; level < k; ++level) prefixes[level] |= element(e);
    }
    face.clear();
    for (Subset b : m.bases()) {
      bool ok = true;
      for (int level = 0; level + 1 < k && ok; ++level) ok = popcount(b & prefixes[level]) == ranks[prefixes[level]];
      if (ok) face.push_back(b);
    }
    if (!seen.insert(face).second) return;
    FaceMatroid f;
    f.matroid = Matroid::from_bases_unchecked(m.n(), m.rank(), face);
    f.weight.resize(static_cast<std::size_t>(m.n()));
    for (int e = 1; e <= m.n(); ++e) f.weight[e - 1] = k - labels[e - 1];
    f.dimension = m.n() - num_components(f.matroid);
    out.push_back(std::move(f));
  });
  return out;
}

std::vector<FaceMatroid> loopless_faces_of_dim(const Matroid& m, int k) {
  const int comps = num_components(m);
  if (k < m.n() - m.rank() || k > m.n() - comps) {
    throw std::invalid_argument("face dimension " + std::to_string(k) + " outside [n-d, n-m] = [" +
                                std::to_string(m.n() - m.rank()) + ", " + std::to_string(m.n() - comps) + "]");
  }
  std::vector<FaceMatroid> out;
  for (auto& f : all_faces(m)) {
    if (f.dimension == k && is_loopless(f.matroid)) out.push_back(std::move(f));
  }
  return out;
}

PositroidVerdict is_positroid(const Matroid& m) {
  PositroidVerdict v;
  v.stripped_loops = loops(m);
  const Subset keep = m.ground() & ~v.stripped_loops;
  v.relabel = members(keep);
  const Matroid core = restrict(m, keep);
  if (core.rank() == 0) {
    v.positroid = true;
    v.reason = "rank zero";
    return v;
  }
  const auto comps = connected_components(core);
  const int d = core.rank();
  const int mcount = static_cast<int>(comps.blocks.size());
  if (mcount == d) {
    for (Subset block : comps.blocks) {
      if (core.rank_of(block) != 1) {
        v.reason = "component " + format_subset(block) + " is not rank one";
        return v;
      }
    }
    v.positroid = is_noncrossing_partition(comps);
    if (!v.positroid) {
      v.crossing_face = FaceMatroid{core, RationalVector(static_cast<std::size_t>(core.n())), core.n() - mcount};
      v.reason = "rank-one components cross";
    } else {
      v.reason = "non-crossing rank-one components";
    }
    return v;
  }
  for (auto& f : loopless_faces_of_dim(core, core.n() - d)) {
    if (!is_noncrossing_matroid(f.matroid)) {
      v.crossing_face = std::move(f);
      v.reason = "a loopless face of dimension n-d has crossing components";
      return v;
    }
  }
  v.positroid = true;
  v.reason = "every loopless face of dimension n-d is non-crossing";
  return v;
}

}  // namespace trophyp
