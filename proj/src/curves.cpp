#include "trophyp/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "trophyp/rng.hpp"
#include "trophyp/signvar.hpp"

namespace trophyp {

std::vector<long> normalize_ray(std::vector<long> v) {
  if (v.empty()) throw std::invalid_argument("empty ray");
  const long lo = *std::min_element(v.begin(), v.end());
  long g = 0;
  for (auto& x : v) {
    x -= lo;
    g = std::gcd(g, x);
  }
  if (g == 0) throw std::invalid_argument("ray lies on the all-ones line");
  for (auto& x : v) x /= g;
  return v;
}

TropicalCurveFan TropicalCurveFan::make(int n, std::vector<CurveRay> rays) {
  if (n < 2) throw std::invalid_argument("curve fans need n >= 2");
  for (auto& r : rays) {
    if (static_cast<int>(r.vec.size()) != n) throw std::invalid_argument("ray length must equal n");
    if (r.mult < 1) throw std::invalid_argument("multiplicities must be positive");
    r.vec = normalize_ray(std::move(r.vec));
  }
  return TropicalCurveFan{n, std::move(rays)};
}

std::vector<std::vector<long>> TropicalCurveFan::expanded() const {
  std::vector<std::vector<long>> out;
  for (const auto& r : rays) {
    for (int k = 0; k < r.mult; ++k) out.push_back(r.vec);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_balanced(const TropicalCurveFan& f) {
  std::vector<long> sum(static_cast<std::size_t>(f.n), 0);
  for (const auto& r : f.rays) {
    for (int i = 0; i < f.n; ++i) sum[i] += r.mult * r.vec[i];
  }
  return std::adjacent_find(sum.begin(), sum.end(), std::not_equal_to<>()) == sum.end();
}

bool RayShape::all_ok() const { return std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }); }

namespace {

std::optional<Block> try_block(const std::vector<long>& v) {
  const int n = static_cast<int>(v.size());
  int ones = 0;
  for (long x : v) {
    if (x != 0 && x != 1) return std::nullopt;
    ones += static_cast<int>(x);
  }
  if (ones == 0 || ones == n) return std::nullopt;
  // the block starts right after a zero
  for (int s = 0; s < n; ++s) {
    if (v[s] == 1 && v[(s + n - 1) % n] == 0) {
      for (int k = 0; k < ones; ++k) {
        if (v[(s + k) % n] != 1) return std::nullopt;
      }
      return Block{s + 1, ones};
    }
  }
  return std::nullopt;
}

int mod1(int x, int n) { return ((x - 1) % n + n) % n + 1; }

}  // namespace

RayShape rays_realizable_shape(const TropicalCurveFan& f) {
  RayShape s;
  for (const auto& r : f.rays) s.ok.push_back(try_block(r.vec).has_value());
  return s;
}

Block block_of_ray(const std::vector<long>& v) {
  auto b = try_block(v);
  if (!b) throw std::invalid_argument("ray is not a 0/1 vector with cyclically consecutive support");
  return *b;
}

std::vector<long> ray_of_block(const Block& b, int n) {
  std::vector<long> v(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < b.length; ++k) v[(b.start - 1 + k) % n] = 1;
  return v;
}

std::vector<CurvePiece> decompose_irreducible(const TropicalCurveFan& f) {
  if (!rays_realizable_shape(f).all_ok()) throw std::invalid_argument("rays must be cyclic 0/1 blocks");
  if (!is_balanced(f)) throw std::invalid_argument("fan is not balanced");
  const int n = f.n;
  std::vector<Block> blocks;
  for (const auto& v : f.expanded()) blocks.push_back(block_of_ray(v));
  std::vector<bool> used(blocks.size(), false);

  auto take_from = [&](int vertex) -> std::optional<std::size_t> {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!used[b] && blocks[b].start == vertex) return b;
    }
    return std::nullopt;
  };

  std::vector<CurvePiece> pieces;
  for (std::size_t first = 0; first < blocks.size(); ++first) {
    if (used[first]) continue;
    std::vector<int> path{blocks[first].start};
    std::vector<std::size_t> path_blocks;
    while (true) {
      const auto b = take_from(path.back());
      if (!b) throw std::invalid_argument("block chaining failed");
      used[*b] = true;
      path_blocks.push_back(*b);
      const int w = blocks[*b].next(n);
      const auto p = static_cast<std::size_t>(std::find(path.begin(), path.end(), w) - path.begin());
      path.push_back(w);
      if (p + 1 == path.size()) continue;
      std::vector<int> cyc(path.begin() + static_cast<long>(p), path.end() - 1);
      std::vector<std::size_t> cyc_blocks(path_blocks.begin() + static_cast<long>(p), path_blocks.end());
      path.resize(p + 1);
      path_blocks.resize(p);
      const auto lo = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
      std::rotate(cyc.begin(), cyc.begin() + lo, cyc.end());
      std::rotate(cyc_blocks.begin(), cyc_blocks.begin() + lo, cyc_blocks.end());
      CurvePiece piece;
      piece.cycle = std::move(cyc);
      piece.fan.n = n;
      for (std::size_t cb : cyc_blocks) piece.fan.rays.push_back(CurveRay{ray_of_block(blocks[cb], n), 1});
      pieces.push_back(std::move(piece));
      if (path_blocks.empty()) break;
    }
  }
  return pieces;
}

std::string SpeyerParam::str() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coordinates.size(); ++j) {
    if (j > 0) out += ", ";
    const auto& c = coordinates[j];
    if (c.sign < 0) out += "-";
    if (c.roots.empty()) out += "1";
    for (std::size_t k = 0; k < c.roots.size(); ++k) {
      if (k > 0) out += "*";
      out += "s" + std::to_string(c.roots[k]);
    }
  }
  return out + ")";
}

namespace {

SpeyerParam build_param(const CurvePiece& piece, const std::optional<RationalVector>& roots, bool alternate) {
  const int n = piece.fan.n;
  const auto& cyc = piece.cycle;
  if (cyc.empty()) throw std::invalid_argument("empty cycle");
  auto sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("cycle repeats a vertex");
  if (piece.fan.expanded().size() != cyc.size()) throw std::invalid_argument("piece is not a single cycle");

  SpeyerParam p;
  p.n = n;
  p.shift = cyc.front() - 1;
  p.root_count = static_cast<int>(cyc.size());
  if (roots) {
    if (static_cast<int>(roots->size()) != p.root_count) throw std::invalid_argument("one root constant per block");
    for (std::size_t k = 1; k < roots->size(); ++k) {
      if (!((*roots)[k - 1] < (*roots)[k])) throw std::invalid_argument("root constants must increase");
    }
    p.root_constants = *roots;
  } else {
    for (int k = 1; k <= p.root_count; ++k) p.root_constants.emplace_back(k);
  }
  std::vector<int> shifted;
  for (int k : cyc) shifted.push_back(mod1(k - p.shift, n));
  p.coordinates.resize(static_cast<std::size_t>(n));
  for (std::size_t t = 0; t < shifted.size(); ++t) {
    const int from = shifted[t];
    const int to = shifted[(t + 1) % shifted.size()];
    const int len = ((to - from) % n + n) % n;
    for (int k = 0; k < len; ++k) p.coordinates[mod1(from + k, n) - 1].roots.push_back(static_cast<int>(t) + 1);
  }
  for (int j = 0; j < n; ++j) {
    auto& c = p.coordinates[j];
    std::sort(c.roots.begin(), c.roots.end());
    c.sign = (alternate && j % 2 == 1) ? -1 : 1;
  }
  // the piece's own rays must be the blocks just used
  auto expect = piece.fan.expanded();
  auto got = tropicalize_param(p).expanded();
  if (expect != got) throw std::invalid_argument("cycle does not match the piece's rays");
  return p;
}

}  // namespace

SpeyerParam speyer_parametrization(const CurvePiece& piece, const std::optional<RationalVector>& root_constants) {
  return build_param(piece, root_constants, true);
}

SpeyerParam unsigned_parametrization(const CurvePiece& piece) { return build_param(piece, std::nullopt, false); }

bool verify_sequence_properties(const SpeyerParam& p) {
  std::vector<int> seen(static_cast<std::size_t>(p.root_count) + 1, 0);
  for (std::size_t j = 0; j + 1 < p.coordinates.size(); ++j) {
    const auto& a = p.coordinates[j].roots;
    const auto& b = p.coordinates[j + 1].roots;
    if (a == b) continue;
    std::vector<int> gone, added;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(gone));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(added));
    if (gone.size() != 1 || added.size() != 1 || added[0] != gone[0] + 1) return false;
    if (gone[0] < 1 || gone[0] >= p.root_count) return false;
    ++seen[gone[0]];
  }
  for (int i = 1; i < p.root_count; ++i) {
    if (seen[i] != 1) return false;
  }
  return true;
}

std::vector<Complex> evaluate(const SpeyerParam& p, const Complex& u, const Complex& v) {
  std::vector<Complex> s;
  for (const auto& r : p.root_constants) s.push_back(u - Complex(r) * v);
  std::vector<Complex> x;
  for (const auto& c : p.coordinates) {
    Complex acc(c.sign);
    for (int k : c.roots) acc = acc * s[k - 1];
    x.push_back(acc);
  }
  return x;
}

SampleReport sample_varbar_check(const SpeyerParam& p, int trials, std::uint64_t seed, std::optional<int> bound) {
  Rng rng(seed);
  SampleReport rep;
  rep.bound = bound.value_or(p.n - 2);
  rep.min_varbar = p.n;
  for (int t = 0; t < trials; ++t) {
    const Complex u(rng.rational(-10, 10, 5), rng.rational(-10, 10, 5));
    const Complex v(rng.rational(-10, 10, 5), rng.rational(-10, 10, 5));
    RationalVector im;
    for (const auto& z : evaluate(p, u, v)) im.push_back(z.im);
    const int vb = varbar(std::span<const Rational>(im));
    rep.min_varbar = std::min(rep.min_varbar, vb);
    rep.max_var = std::max(rep.max_var, var(std::span<const Rational>(im)));
    ++rep.trials;
    if (vb < rep.bound) {
      if (!rep.first_violation) rep.first_violation = std::make_pair(u, v);
      ++rep.violations;
    }
  }
  if (trials == 0) rep.min_varbar = 0;
  rep.note = "sampled check, not a proof";
  return rep;
}

SpeyerParam project_consecutive(const SpeyerParam& p, int a, int b) {
  if (a < 1 || b > p.n || a > b) throw std::invalid_argument("projection interval out of range");
  SpeyerParam q = p;
  q.n = b - a + 1;
  q.shift = 0;
  q.coordinates.assign(p.coordinates.begin() + (a - 1), p.coordinates.begin() + b);
  return q;
}

int projection_bound(const SpeyerParam& p) {
  const bool point = std::all_of(p.coordinates.begin(), p.coordinates.end(),
                                 [&](const SpeyerCoordinate& c) { return c.roots == p.coordinates.front().roots; });
  return p.n - (point ? 1 : 2);
}

TropicalCurveFan tropicalize_param(const SpeyerParam& p) {
  TropicalCurveFan f;
  f.n = p.n;
  for (int k = 1; k <= p.root_count; ++k) {
    std::vector<long> v(static_cast<std::size_t>(p.n), 0);
    for (int j = 1; j <= p.n; ++j) {
      const auto& r = p.coordinates[j - 1].roots;
      v[mod1(j + p.shift, p.n) - 1] = std::count(r.begin(), r.end(), k);
    }
    f.rays.push_back(CurveRay{normalize_ray(std::move(v)), 1});
  }
  return f;
}

RoundTrip round_trip(const TropicalCurveFan& f) {
  RoundTrip rt;
  rt.pieces = decompose_irreducible(f);
  rt.reconstructed.n = f.n;
  for (const auto& piece : rt.pieces) {
    rt.params.push_back(speyer_parametrization(piece));
    for (auto& r : tropicalize_param(rt.params.back()).rays) rt.reconstructed.rays.push_back(std::move(r));
  }
  rt.ok = rt.reconstructed.expanded() == f.expanded();
  return rt;
}

}  // namespace trophyp
