#include "trophyp/stability.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "trophyp/lp.hpp"
#include "trophyp/rng.hpp"

namespace trophyp {

void LatticePolynomial::add(const Exponent& e, const Complex& c) {
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent length must equal n");
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("exponents must be nonnegative");
  }
  auto it = terms.find(e);
  if (it == terms.end()) {
    if (!c.is_zero()) terms.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

bool LatticePolynomial::is_real() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second.is_real(); });
}

std::string LatticePolynomial::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms) {
    std::string coeff = format_complex(c);
    std::string mono;
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (!out.empty()) out += " + ";
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else if (coeff == "-1") {
      out += "-" + mono;
    } else {
      out += (c.is_real() ? coeff : "(" + coeff + ")") + "*" + mono;
    }
  }
  return out;
}

ValuedPolynomial ValuedPolynomial::constant_coefficients(const LatticePolynomial& f) {
  ValuedPolynomial g;
  g.n = f.n;
  for (const auto& [e, c] : f.terms) g.terms.emplace(e, ValuedTerm{0, c});
  return g;
}

LatticePointSet LatticePointSet::of(int n, std::vector<Exponent> pts) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("point dimension must equal n");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return LatticePointSet{n, std::move(pts)};
}

bool LatticePointSet::contains(const Exponent& e) const { return std::binary_search(points.begin(), points.end(), e); }

LatticePointSet support(const LatticePolynomial& f) {
  std::vector<Exponent> pts;
  for (const auto& t : f.terms) pts.push_back(t.first);
  return LatticePointSet::of(f.n, std::move(pts));
}

LatticePointSet support(const ValuedPolynomial& f) {
  std::vector<Exponent> pts;
  for (const auto& t : f.terms) pts.push_back(t.first);
  return LatticePointSet::of(f.n, std::move(pts));
}

bool is_homogeneous(const LatticePointSet& s) {
  if (s.points.empty()) return true;
  const long total = std::accumulate(s.points[0].begin(), s.points[0].end(), 0L);
  return std::all_of(s.points.begin(), s.points.end(),
                     [&](const Exponent& p) { return std::accumulate(p.begin(), p.end(), 0L) == total; });
}

namespace {

bool in_hull_of(const std::vector<Exponent>& pts, const Exponent& p, int n) {
  if (pts.empty()) return false;
  // lambda >= 0, sum lambda = 1, sum lambda_q q = p
  const std::size_t k = pts.size();
  std::vector<LinearConstraint> cons;
  for (std::size_t q = 0; q < k; ++q) {
    LinearConstraint c;
    c.coeffs.assign(k, 0);
    c.coeffs[q] = 1;
    c.rel = Relation::GreaterEq;
    c.rhs = 0;
    cons.push_back(std::move(c));
  }
  LinearConstraint sum;
  sum.coeffs.assign(k, 1);
  sum.rel = Relation::Equal;
  sum.rhs = 1;
  cons.push_back(std::move(sum));
  for (int i = 0; i < n; ++i) {
    LinearConstraint c;
    c.coeffs.resize(k);
    for (std::size_t q = 0; q < k; ++q) c.coeffs[q] = pts[q][i];
    c.rel = Relation::Equal;
    c.rhs = p[i];
    cons.push_back(std::move(c));
  }
  return lp_feasible(k, cons);
}

long gcd_abs(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

}  // namespace

bool in_convex_hull(const LatticePointSet& s, const Exponent& p) { return in_hull_of(s.points, p, s.n); }

LatticePointSet newton_polytope_vertices(const LatticePointSet& s) {
  std::vector<Exponent> verts;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    std::vector<Exponent> others;
    for (std::size_t j = 0; j < s.points.size(); ++j) {
      if (j != i) others.push_back(s.points[j]);
    }
    if (!in_hull_of(others, s.points[i], s.n)) verts.push_back(s.points[i]);
  }
  return LatticePointSet::of(s.n, std::move(verts));
}

LatticePointSet newton_polytope_vertices(const LatticePolynomial& f) { return newton_polytope_vertices(support(f)); }
LatticePointSet newton_polytope_vertices(const ValuedPolynomial& f) { return newton_polytope_vertices(support(f)); }

std::vector<PolytopeEdge> polytope_edges(const LatticePointSet& s) {
  const auto verts = newton_polytope_vertices(s).points;
  const int n = s.n;
  std::vector<PolytopeEdge> out;
  for (std::size_t a = 0; a < verts.size(); ++a) {
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      // c . u = c . v and c . u >= c . x + 1 for every other vertex x
      std::vector<LinearConstraint> cons;
      LinearConstraint eq;
      eq.coeffs.resize(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) eq.coeffs[i] = verts[a][i] - verts[b][i];
      eq.rel = Relation::Equal;
      eq.rhs = 0;
      cons.push_back(std::move(eq));
      for (std::size_t x = 0; x < verts.size(); ++x) {
        if (x == a || x == b) continue;
        LinearConstraint c;
        c.coeffs.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) c.coeffs[i] = verts[a][i] - verts[x][i];
        c.rel = Relation::GreaterEq;
        c.rhs = 1;
        cons.push_back(std::move(c));
      }
      if (!lp_feasible(static_cast<std::size_t>(n), cons)) continue;
      PolytopeEdge e{verts[a], verts[b], {}};
      long g = 0;
      for (int i = 0; i < n; ++i) g = gcd_abs(g, verts[b][i] - verts[a][i]);
      for (int i = 0; i < n; ++i) e.direction.push_back((verts[b][i] - verts[a][i]) / g);
      out.push_back(std::move(e));
    }
  }
  return out;
}

bool is_generalized_permutohedron(const LatticePointSet& s) {
  for (const auto& e : polytope_edges(s)) {
    int pos = 0, neg = 0;
    bool ok = true;
    for (long d : e.direction) {
      if (d == 1) ++pos;
      else if (d == -1) ++neg;
      else if (d != 0) ok = false;
    }
    if (!ok || pos != 1 || neg != 1) return false;
  }
  return true;
}

std::optional<ExchangeFailure> m_convex_exchange_failure(const LatticePointSet& s) {
  if (!is_homogeneous(s)) throw std::invalid_argument("M-convex sets have constant coordinate sum");
  const int n = s.n;
  for (const auto& x : s.points) {
    for (const auto& y : s.points) {
      for (int i = 0; i < n; ++i) {
        if (x[i] <= y[i]) continue;
        bool found = false;
        for (int j = 0; j < n && !found; ++j) {
          if (x[j] >= y[j]) continue;
          Exponent z = x;
          --z[i];
          ++z[j];
          found = s.contains(z);
        }
        if (!found) return ExchangeFailure{x, y, i + 1};
      }
    }
  }
  return std::nullopt;
}

bool is_M_convex_set(const LatticePointSet& s) { return !m_convex_exchange_failure(s).has_value(); }

namespace {

Rational tropical_value(const Exponent& e, const Rational& val, const RationalVector& w) {
  Rational v = val;
  for (std::size_t i = 0; i < e.size(); ++i) v += w[i] * e[i];
  return v;
}

void check_weight(const ValuedPolynomial& f, const RationalVector& w) {
  if (static_cast<int>(w.size()) != f.n) throw std::invalid_argument("weight length must equal n");
}

}  // namespace

LatticePolynomial tinit(const ValuedPolynomial& f, const RationalVector& w) {
  check_weight(f, w);
  LatticePolynomial out;
  out.n = f.n;
  std::optional<Rational> best;
  for (const auto& [e, t] : f.terms) {
    const Rational v = tropical_value(e, t.val, w);
    if (!best || v < *best) {
      best = v;
      out.terms.clear();
    }
    if (v == *best) out.terms.emplace(e, t.lead);
  }
  return out;
}

bool in_tropical_hypersurface(const ValuedPolynomial& f, const RationalVector& w) {
  return tinit(f, w).terms.size() >= 2;
}

namespace {

class LowerHull {
 public:
  explicit LowerHull(const ValuedPolynomial& f) : n_(f.n) {
    for (const auto& [e, t] : f.terms) {
      pts_.push_back(e);
      vals_.push_back(t.val);
    }
  }

  std::size_t size() const { return pts_.size(); }
  const Exponent& point(std::size_t i) const { return pts_[i]; }

  /// Smallest cell containing the indexed points, or nullopt if none does.
  std::optional<std::vector<std::size_t>> closure(const std::vector<std::size_t>& t) const {
    std::vector<bool> in_t(pts_.size(), false);
    for (std::size_t i : t) in_t[i] = true;
    std::vector<LinearConstraint> base;
    for (std::size_t p = 0; p < pts_.size(); ++p) base.push_back(gap_row(p, in_t[p] ? Relation::Equal : Relation::GreaterEq));
    if (!lp_feasible(static_cast<std::size_t>(n_) + 1, base)) return std::nullopt;
    std::vector<std::size_t> cell;
    for (std::size_t q = 0; q < pts_.size(); ++q) {
      if (in_t[q]) {
        cell.push_back(q);
        continue;
      }
      // max gap(q) over the feasible set; 0 means q lies on every such functional's minimum
      RationalVector obj(static_cast<std::size_t>(n_) + 1);
      for (int i = 0; i < n_; ++i) obj[i] = pts_[q][i];
      obj[n_] = -1;
      const auto r = solve_lp(static_cast<std::size_t>(n_) + 1, base, obj);
      if (r.status == LpStatus::Optimal && sgn(r.value + vals_[q]) == 0) cell.push_back(q);
    }
    return cell;
  }

  /// w whose argmin set is exactly the indexed points, if they form a cell.
  std::optional<RationalVector> weight_of(const std::vector<std::size_t>& cell) const {
    std::vector<bool> in(pts_.size(), false);
    for (std::size_t i : cell) in[i] = true;
    const std::size_t nv = static_cast<std::size_t>(n_) + 2;  // (w, h, eps)
    std::vector<LinearConstraint> cons;
    for (std::size_t p = 0; p < pts_.size(); ++p) {
      auto c = gap_row(p, in[p] ? Relation::Equal : Relation::GreaterEq);
      c.coeffs.push_back(in[p] ? 0 : -1);
      cons.push_back(std::move(c));
    }
    LinearConstraint cap;
    cap.coeffs.assign(nv, 0);
    cap.coeffs[nv - 1] = 1;
    cap.rel = Relation::LessEq;
    cap.rhs = 1;
    cons.push_back(std::move(cap));
    RationalVector obj(nv);
    obj[nv - 1] = 1;
    const auto r = solve_lp(nv, cons, obj);
    if (r.status != LpStatus::Optimal || sgn(r.value) <= 0) return std::nullopt;
    return RationalVector(r.point.begin(), r.point.begin() + n_);
  }

  std::optional<std::size_t> index_of(const Exponent& e) const {
    for (std::size_t i = 0; i < pts_.size(); ++i) {
      if (pts_[i] == e) return i;
    }
    return std::nullopt;
  }

 private:
  // val(p) + w . p - h (rel) 0, variables (w, h)
  LinearConstraint gap_row(std::size_t p, Relation rel) const {
    LinearConstraint c;
    c.coeffs.resize(static_cast<std::size_t>(n_) + 1);
    for (int i = 0; i < n_; ++i) c.coeffs[i] = pts_[p][i];
    c.coeffs[n_] = -1;
    c.rel = rel;
    c.rhs = -vals_[p];
    return c;
  }

  int n_;
  std::vector<Exponent> pts_;
  RationalVector vals_;
};

}  // namespace

std::vector<LatticePointSet> regular_subdivision_cells(const ValuedPolynomial& f) {
  const LowerHull hull(f);
  std::set<std::vector<std::size_t>> cells;
  std::vector<std::vector<std::size_t>> work;
  for (std::size_t p = 0; p < hull.size(); ++p) {
    auto c = hull.closure({p});
    if (c && cells.insert(*c).second) work.push_back(*c);
  }
  while (!work.empty()) {
    const auto cell = std::move(work.back());
    work.pop_back();
    for (std::size_t q = 0; q < hull.size(); ++q) {
      if (std::binary_search(cell.begin(), cell.end(), q)) continue;
      auto grown = cell;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), q), q);
      auto c = hull.closure(grown);
      if (c && cells.insert(*c).second) work.push_back(*c);
    }
  }
  std::vector<LatticePointSet> out;
  for (const auto& c : cells) {
    std::vector<Exponent> pts;
    for (std::size_t i : c) pts.push_back(hull.point(i));
    out.push_back(LatticePointSet::of(f.n, std::move(pts)));
  }
  return out;
}

std::optional<RationalVector> cell_weight(const ValuedPolynomial& f, const LatticePointSet& cell) {
  const LowerHull hull(f);
  std::vector<std::size_t> idx;
  for (const auto& e : cell.points) {
    const auto i = hull.index_of(e);
    if (!i) return std::nullopt;
    idx.push_back(*i);
  }
  std::sort(idx.begin(), idx.end());
  if (idx.empty()) return std::nullopt;
  return hull.weight_of(idx);
}

MConvexFunctionVerdict is_M_convex_function(const ValuedPolynomial& f) {
  if (!is_homogeneous(support(f))) throw std::invalid_argument("M-convex functions need a homogeneous support");
  MConvexFunctionVerdict v;
  for (auto& cell : regular_subdivision_cells(f)) {
    ++v.cells_checked;
    if (!is_M_convex_set(cell)) {
      v.m_convex = false;
      v.failing_weight = cell_weight(f, cell);
      v.failing_cell = std::move(cell);
      return v;
    }
  }
  return v;
}

BinomialVerdict classify_binomial(const Complex& a, const Exponent& alpha, const Complex& b, const Exponent& beta) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("binomial coefficients must be nonzero");
  if (alpha.size() != beta.size()) throw std::invalid_argument("exponent lengths differ");
  if (alpha == beta) throw std::invalid_argument("a binomial needs two distinct exponents");
  BinomialVerdict v;
  v.reduced_alpha = alpha;
  v.reduced_beta = beta;
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < 0 || beta[i] < 0) throw std::invalid_argument("exponents must be nonnegative");
    const int g = std::min(alpha[i], beta[i]);
    v.reduced_alpha[i] -= g;
    v.reduced_beta[i] -= g;
    sa += v.reduced_alpha[i];
    sb += v.reduced_beta[i];
  }
  const Complex ratio = a / b;
  if (sa + sb == 1) {
    // a + b x_i (or a x_i + b): the single root must avoid the open upper half-plane
    const Complex root = sa == 0 ? Complex{} - ratio : Complex{} - b / a;
    v.case_tag = "{0,e_i}";
    v.condition = "Im(root) <= 0";
    v.stable = sgn(root.im) <= 0;
  } else if (sa + sb == 2 && sa == 1) {
    v.case_tag = "{e_i,e_j}";
    v.condition = "a/b real and positive";
    v.stable = ratio.is_real() && sgn(ratio.re) > 0;
  } else if (sa + sb == 2) {
    v.case_tag = "{0,e_i+e_j}";
    v.condition = "a/b real and negative";
    v.stable = ratio.is_real() && sgn(ratio.re) < 0;
  } else {
    v.case_tag = "|difference|>=3";
    v.condition = "never stable";
    v.stable = false;
  }
  return v;
}

UPoly restrict_to_line(const LatticePolynomial& f, const RationalVector& v, const RationalVector& w) {
  if (!f.is_real()) throw std::invalid_argument("line restriction needs real coefficients");
  if (static_cast<int>(v.size()) != f.n || static_cast<int>(w.size()) != f.n) {
    throw std::invalid_argument("direction and base point must have length n");
  }
  std::vector<UPoly> lines;
  for (int i = 0; i < f.n; ++i) lines.push_back(UPoly::linear(v[i], w[i]));
  UPoly g;
  for (const auto& [e, c] : f.terms) {
    UPoly term = UPoly::constant(c.re);
    for (int i = 0; i < f.n; ++i) term = term * pow(lines[i], e[i]);
    g = g + term;
  }
  return g;
}

bool real_rooted_on_line(const LatticePolynomial& f, const RationalVector& v, const RationalVector& w) {
  for (const auto& x : v) {
    if (sgn(x) <= 0) throw std::invalid_argument("direction must be strictly positive");
  }
  return is_real_rooted(restrict_to_line(f, v, w));
}

FalsifyReport falsify_stability(const LatticePolynomial& f, int trials, std::uint64_t seed) {
  if (!f.is_real()) throw std::invalid_argument("falsification needs real coefficients");
  Rng rng(seed);
  FalsifyReport rep;
  for (int t = 0; t < trials; ++t) {
    RationalVector v(static_cast<std::size_t>(f.n)), w(static_cast<std::size_t>(f.n));
    for (auto& x : v) x = rng.rational(1, 10, 10);
    for (auto& x : w) x = Rational(rng.uniform(-10, 10));
    ++rep.trials_run;
    UPoly g = restrict_to_line(f, v, w);
    const bool zero = g.is_zero();
    if (zero || !is_real_rooted(g)) {
      rep.falsified = true;
      rep.v = std::move(v);
      rep.w = std::move(w);
      rep.restriction = std::move(g);
      rep.note = zero ? "f vanishes identically on the line, hence at t = i" : "restriction has a non-real root";
      return rep;
    }
  }
  rep.note = "no counterexample found; this is not a proof of stability";
  return rep;
}

}  // namespace trophyp
