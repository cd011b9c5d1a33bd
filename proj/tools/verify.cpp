#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "cli.hpp"
#include "trophyp/lp.hpp"
#include "trophyp/signvar.hpp"
#include "trophyp/upoly.hpp"

namespace trophyp::cli {

namespace {

struct Check {
  bool ok = false;
  std::string detail;
};

Check confirmed(std::string d) { return {true, std::move(d)}; }
Check rejected(std::string d) { return {false, std::move(d)}; }

const Json& need(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("certificate lacks \"") + key + "\"");
  return j[key];
}

bool blocks_cross(Subset a, Subset b) {
  const auto ea = members(a), eb = members(b);
  for (int p : ea) {
    for (int q : eb) {
      for (int r : ea) {
        for (int s : eb) {
          if (p < q && q < r && r < s) return true;
        }
      }
    }
  }
  for (int p : eb) {
    for (int q : ea) {
      for (int r : eb) {
        for (int s : ea) {
          if (p < q && q < r && r < s) return true;
        }
      }
    }
  }
  return false;
}

std::optional<std::pair<Subset, Subset>> crossing_pair(const std::vector<Subset>& blocks) {
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      if (blocks_cross(blocks[i], blocks[j])) return std::make_pair(blocks[i], blocks[j]);
    }
  }
  return std::nullopt;
}

std::vector<Subset> blocks_from_json(const Json& j, int n) {
  std::vector<Subset> out;
  for (const auto& b : j) out.push_back(subset_from_json(b, n));
  std::sort(out.begin(), out.end());
  return out;
}

Check crossing_face(const Json& cert, const Json& claimed) {
  const Matroid m = matroid_from_json(need(cert, "input"));
  const RationalVector w = vector_from_json(need(cert, "weight"));
  if (static_cast<int>(w.size()) != m.n()) return rejected("weight length differs from n");
  auto comps = connected_components(face_matroid(m, w).matroid).blocks;
  std::sort(comps.begin(), comps.end());
  // loops of M are singleton components of every face and never cross
  std::vector<Subset> claim = blocks_from_json(claimed, m.n());
  std::vector<Subset> nonloop;
  for (Subset b : comps) {
    if (!(popcount(b) == 1 && (loops(m) & b))) nonloop.push_back(b);
  }
  std::vector<Subset> claim_nonloop;
  for (Subset b : claim) {
    if (!(popcount(b) == 1 && (loops(m) & b))) claim_nonloop.push_back(b);
  }
  if (claim_nonloop != nonloop) return rejected("components of the face at the given weight differ from the claim");
  const auto x = crossing_pair(comps);
  if (!x) return rejected("face components do not cross");
  return confirmed("face components " + format_subset(x->first) + " and " + format_subset(x->second) + " cross");
}

std::optional<std::string> exchange_holds(const std::set<Exponent>& s, const Exponent& x, const Exponent& y, int i) {
  const std::size_t n = x.size();
  if (i < 1 || i > static_cast<int>(n)) return "coordinate out of range";
  if (!s.count(x) || !s.count(y)) return "x or y not in the set";
  if (x[i - 1] <= y[i - 1]) return "x_i does not exceed y_i";
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] >= y[j]) continue;
    Exponent a = x, b = y;
    --a[i - 1], ++a[j];
    ++b[i - 1], --b[j];
    if (s.count(a) && s.count(b)) return "coordinate " + std::to_string(j + 1) + " completes the exchange";
  }
  return std::nullopt;
}

bool exchange_fails_somewhere(const std::set<Exponent>& s) {
  for (const auto& x : s) {
    for (const auto& y : s) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] > y[i] && !exchange_holds(s, x, y, static_cast<int>(i) + 1)) return true;
      }
    }
  }
  return false;
}

bool varbar_threshold_preserved(const SignedPermutation& g, int c) {
  for (const auto& p : all_nonzero_sign_patterns(g.n)) {
    if (varbar(p) < c && varbar(g.apply(p)) >= c) return false;
  }
  return true;
}

bool is_cyclic_interval_01(const std::vector<long>& v) {
  const std::size_t n = v.size();
  int ones = 0, rises = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] != 0 && v[i] != 1) return false;
    ones += v[i] == 1;
    rises += v[i] == 1 && v[(i + n - 1) % n] == 0;
  }
  return ones > 0 && ones < static_cast<int>(n) && rises == 1;
}

Rational column_minor(const ExactMatrix& m, Subset cols) {
  std::vector<std::size_t> idx;
  for (int e : members(cols)) idx.push_back(static_cast<std::size_t>(e - 1));
  return determinant(m.select_columns(idx));
}

Rational sub_minor(const ExactMatrix& m, Subset rows, Subset cols) {
  std::vector<std::size_t> r, c;
  for (int e : members(rows)) r.push_back(static_cast<std::size_t>(e - 1));
  for (int e : members(cols)) c.push_back(static_cast<std::size_t>(e - 1));
  return determinant(m.select_rows(r).select_columns(c));
}

Check line_kills(const LatticePolynomial& f, const RationalVector& v, const RationalVector& w) {
  if (static_cast<int>(v.size()) != f.n || static_cast<int>(w.size()) != f.n) return rejected("line has the wrong length");
  if (std::any_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) <= 0; })) return rejected("direction v is not positive");
  const UPoly g = restrict_to_line(f, v, w);
  if (g.is_zero()) return confirmed("f vanishes on the line, so it vanishes at a point of the open upper half-plane");
  if (!is_real_rooted(g)) return confirmed("restriction " + g.str() + " has a non-real root");
  return rejected("restriction " + g.str() + " is real-rooted");
}

Check check_grassmannian(const Json& c) {
  const ExactMatrix m = matrix_from_json(need(c, "input"));
  const Rational p = column_minor(m, subset_from_json(need(need(c, "positive_minor"), "cols"), static_cast<int>(m.cols())));
  const Rational q = column_minor(m, subset_from_json(need(need(c, "negative_minor"), "cols"), static_cast<int>(m.cols())));
  if (sgn(p) > 0 && sgn(q) < 0) return confirmed("maximal minors " + format_rational(p) + " and " + format_rational(q) + " have opposite signs");
  return rejected("the cited minors do not have opposite signs");
}

Check check_linear_hyp(const Json& c) {
  const auto v = is_positively_hyperbolic_linear(complex_matrix_from_json(need(c, "input")));
  if (!v.hyperbolic && v.failed_condition == need(c, "failed_condition").get<std::string>()) {
    return confirmed("recomputed: " + v.failed_condition);
  }
  return rejected("recomputation disagrees");
}

Check check_matroid_validate(const Json& c) {
  const Json& in = need(c, "input");
  const int n = need(in, "n").get<int>();
  std::set<Subset> bases;
  for (const auto& b : need(in, "bases")) bases.insert(subset_from_json(b, n));
  const Subset b1 = subset_from_json(need(c, "b1"), n), b2 = subset_from_json(need(c, "b2"), n);
  const int x = need(c, "x").get<int>();
  if (!bases.count(b1) || !bases.count(b2)) return rejected("b1 or b2 is not listed as a basis");
  if (x < 1 || x > n || !contains(b1, x) || contains(b2, x)) return rejected("x is not in b1 - b2");
  for (int y : members(b2 & ~b1)) {
    if (bases.count((b1 & ~element(x)) | element(y))) return rejected("y = " + std::to_string(y) + " completes the exchange");
  }
  return confirmed("no y in b2 - b1 makes b1 - x + y a basis");
}

Check check_bergman_member(const Json& c) {
  const Matroid m = matroid_from_json(need(c, "input"));
  const RationalVector w = vector_from_json(need(c, "weight"));
  const Subset circ = subset_from_json(need(c, "circuit"), m.n());
  auto independent = [&](Subset s) {
    return std::any_of(m.bases().begin(), m.bases().end(), [&](Subset b) { return (s & b) == s; });
  };
  if (independent(circ)) return rejected("cited set is independent");
  for (int e : members(circ)) {
    if (!independent(circ & ~element(e))) return rejected("cited set is not a minimal dependent set");
  }
  const auto el = members(circ);
  Rational lo = w[el[0] - 1];
  for (int e : el) lo = std::min(lo, w[e - 1]);
  const auto hits = std::count_if(el.begin(), el.end(), [&](int e) { return w[e - 1] == lo; });
  if (hits == 1) return confirmed("minimum over circuit " + format_subset(circ) + " is attained once");
  return rejected("minimum over the circuit is attained more than once");
}

Check check_gp(const Json& c) {
  const LatticePointSet s = point_set_from_json(need(c, "input"));
  const Exponent u = need(c, "u").get<Exponent>(), v = need(c, "v").get<Exponent>();
  if (!s.contains(u) || !s.contains(v) || u == v) return rejected("endpoints are not distinct points of the support");
  const std::size_t n = u.size();
  std::vector<long> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - u[i];
  const bool gp_like = std::count(d.begin(), d.end(), 0L) + 2 == static_cast<long>(n) &&
                       std::count_if(d.begin(), d.end(), [](long x) { return x > 0; }) == 1 &&
                       std::accumulate(d.begin(), d.end(), 0L) == 0;
  if (gp_like) return rejected("direction is a multiple of some e_i - e_j");
  // w with w.u = w.v and w.(p - u) >= 1 for every support point off the line uv
  std::vector<LinearConstraint> cons;
  LinearConstraint eq{RationalVector(n), Relation::Equal, 0};
  for (std::size_t i = 0; i < n; ++i) eq.coeffs[i] = d[i];
  cons.push_back(eq);
  for (const auto& p : s.points) {
    bool on_line = true;
    // p - u parallel to d
    for (std::size_t i = 0; i < n && on_line; ++i) {
      for (std::size_t j = 0; j < n && on_line; ++j) {
        on_line = (p[i] - u[i]) * d[j] == (p[j] - u[j]) * d[i];
      }
    }
    if (on_line) continue;
    LinearConstraint g{RationalVector(n), Relation::GreaterEq, 1};
    for (std::size_t i = 0; i < n; ++i) g.coeffs[i] = p[i] - u[i];
    cons.push_back(std::move(g));
  }
  if (!lp_feasible(n, cons)) return rejected("segment uv is not an edge of the Newton polytope");
  return confirmed("edge direction is not of the form e_i - e_j");
}

Check check_mset(const Json& c) {
  const LatticePointSet s = point_set_from_json(need(c, "input"));
  const std::set<Exponent> pts(s.points.begin(), s.points.end());
  if (auto why = exchange_holds(pts, need(c, "x").get<Exponent>(), need(c, "y").get<Exponent>(), need(c, "i").get<int>())) {
    return rejected(*why);
  }
  return confirmed("exchange fails for the cited x, y, i");
}

Check check_mfun(const Json& c) {
  const ValuedPolynomial f = valued_polynomial_from_json(need(c, "input"));
  const RationalVector w = vector_from_json(need(c, "weight"));
  if (static_cast<int>(w.size()) != f.n) return rejected("weight length differs from n");
  const LatticePointSet cell = point_set_from_json(need(c, "cell"));
  // argmin of val + w.e, computed directly
  std::optional<Rational> best;
  std::vector<Exponent> arg;
  for (const auto& [e, t] : f.terms) {
    Rational x = t.val;
    for (int i = 0; i < f.n; ++i) x += w[i] * e[i];
    if (!best || x < *best) {
      best = x;
      arg.clear();
    }
    if (x == *best) arg.push_back(e);
  }
  if (LatticePointSet::of(f.n, arg) != cell) return rejected("the weight does not select the cited cell");
  if (!exchange_fails_somewhere(std::set<Exponent>(arg.begin(), arg.end()))) return rejected("the cell is M-convex");
  return confirmed("the cell selected by the weight is not M-convex");
}

Check check_line(const Json& c, const Json& line) {
  return line_kills(lattice_polynomial_from_json(need(c, "input")), vector_from_json(need(line, "v")), vector_from_json(need(line, "w")));
}

Check check_binomial(const Json& c) {
  if (c.contains("line")) return check_line(c, c["line"]);
  const LatticePolynomial f = lattice_polynomial_from_json(need(c, "input"));
  const auto& [alpha, a] = *f.terms.begin();
  const auto& [beta, b] = *std::next(f.terms.begin());
  if (!classify_binomial(a, alpha, b, beta).stable) return confirmed("recomputed classification: not stable");
  return rejected("recomputed classification says stable");
}

Check check_balance(const Json& c) {
  const TropicalCurveFan f = curve_fan_from_json(need(c, "input"));
  std::vector<long> sum(static_cast<std::size_t>(f.n));
  for (const auto& r : f.rays) {
    for (int i = 0; i < f.n; ++i) sum[i] += r.mult * r.vec[i];
  }
  if (std::adjacent_find(sum.begin(), sum.end(), std::not_equal_to<>()) == sum.end()) return rejected("weighted ray sum is a multiple of (1,...,1)");
  return confirmed("weighted ray sum is not a multiple of (1,...,1)");
}

Check check_shape(const Json& c) {
  const TropicalCurveFan f = curve_fan_from_json(need(c, "input"));
  if (!c.contains("bad_rays")) {
    const bool bad = std::any_of(f.rays.begin(), f.rays.end(), [](const CurveRay& r) { return !is_cyclic_interval_01(r.vec); });
    if (bad) return confirmed("some ray is not a cyclic 0/1 interval");
    return check_balance(c);
  }
  for (const auto& k : need(c, "bad_rays")) {
    const auto i = k.get<std::size_t>();
    if (i < 1 || i > f.rays.size()) return rejected("ray index out of range");
    if (is_cyclic_interval_01(f.rays[i - 1].vec)) return rejected("ray " + std::to_string(i) + " is a cyclic 0/1 interval");
  }
  return confirmed("cited rays are not cyclic 0/1 intervals");
}

Check check_sample(const Json& c) {
  const SpeyerParam p = speyer_from_json(need(c, "param"));
  const Json& fv = need(c, "first_violation");
  const auto x = evaluate(p, complex_from_json(need(fv, "u")), complex_from_json(need(fv, "v")));
  RationalVector im;
  for (const auto& z : x) im.push_back(z.im);
  const int vb = varbar(im);
  const int bound = need(c, "bound").get<int>();
  if (vb < bound) return confirmed("varbar(Im x) = " + std::to_string(vb) + " < " + std::to_string(bound));
  return rejected("varbar(Im x) meets the bound");
}

Check check_roundtrip(const Json& c) {
  const TropicalCurveFan f = curve_fan_from_json(need(c, "input"));
  std::vector<std::vector<long>> rebuilt;
  for (const auto& pj : need(c, "params")) {
    for (auto& r : tropicalize_param(speyer_from_json(pj)).expanded()) rebuilt.push_back(std::move(r));
  }
  std::sort(rebuilt.begin(), rebuilt.end());
  if (rebuilt != f.expanded()) return confirmed("tropicalized parametrizations differ from the input fan");
  return rejected("tropicalized parametrizations reproduce the input fan");
}

Check check_preservers(const Json& c) {
  const int cc = need(c, "c").get<int>();
  const SignedPermutation g = signed_permutation_from_json(need(c, "witness"));
  std::vector<SignedPermutation> gens;
  for (const auto& j : need(c, "generators")) gens.push_back(signed_permutation_from_json(j));
  const auto grp = generated_group(gens);
  const bool in_gen = std::find(grp.begin(), grp.end(), g) != grp.end();
  const bool pres = varbar_threshold_preserved(g, cc);
  if (in_gen != pres) return confirmed(pres ? "witness preserves the threshold outside the generated group" : "a generated element breaks the threshold");
  return rejected("witness does not separate the groups");
}

Check check_linear_preserver(const Json& c) {
  const ExactMatrix m = matrix_from_json(need(c, "input"));
  auto minor = [&](const Json& j) {
    return sub_minor(m, subset_from_json(need(j, "rows"), static_cast<int>(m.rows())), subset_from_json(need(j, "cols"), static_cast<int>(m.cols())));
  };
  if (sgn(minor(need(c, "positive_minor"))) > 0 && sgn(minor(need(c, "negative_minor"))) < 0) {
    return confirmed("two c x c minors have opposite signs");
  }
  return rejected("cited minors do not have opposite signs");
}

Check check_toric(const Json& c) {
  const ExactMatrix a = matrix_from_json(need(c, "input"));
  const ExactMatrix r = matrix_from_json(need(c, "reduced"));
  if (r.rows() != a.rows() || r.cols() != a.cols()) return rejected("reduced matrix has the wrong shape");
  if (rank(a) != a.rows() || rank(vstack(a, r)) != a.rows() || rank(r) != a.rows()) return rejected("reduced matrix is not row-equivalent to A");
  if (rref(r) != r) return rejected("reduced matrix is not in reduced row echelon form");
  const std::size_t d = r.rows(), n = r.cols();
  for (std::size_t j = 0; j < n; ++j) {
    int nz = 0;
    bool unit = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(r(i, j)) != 0) ++nz, unit = unit && (r(i, j) == 1 || r(i, j) == -1);
    }
    if (nz > 1 || !unit) return confirmed("column " + std::to_string(j + 1) + " is not 0 or +-e_i");
  }
  std::vector<Subset> supports;
  for (std::size_t i = 0; i < d; ++i) {
    Subset s = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(r(i, j)) != 0) s |= element(static_cast<int>(j) + 1);
    }
    supports.push_back(s);
  }
  if (const auto x = crossing_pair(supports)) {
    return confirmed("row supports " + format_subset(x->first) + " and " + format_subset(x->second) + " cross");
  }
  return rejected("reduced form has unit columns and non-crossing supports");
}

}  // namespace

Outcome verify_certificate(const Context& ctx, const Json& doc) {
  const std::string check = need(doc, "check").get<std::string>();
  if (need(doc, "result") != "fail") throw InputError("only failing verdicts carry certificates to verify");
  const Json& c = need(doc, "certificate");
  Check r;
  if (check == "grassmannian") r = check_grassmannian(c);
  else if (check == "linear-hyp") r = check_linear_hyp(c);
  else if (check == "matroid-validate") r = check_matroid_validate(c);
  else if (check == "positroid") r = crossing_face(c, need(c, "components"));
  else if (check == "bergman-noncrossing") r = crossing_face(c, need(need(c, "cone"), "components"));
  else if (check == "bergman-member") r = check_bergman_member(c);
  else if (check == "gp-check") r = check_gp(c);
  else if (check == "mset") r = check_mset(c);
  else if (check == "mfun") r = check_mfun(c);
  else if (check == "binomial") r = check_binomial(c);
  else if (check == "falsify") r = check_line(c, c);
  else if (check == "curve-balance") r = check_balance(c);
  else if (check == "curve-shape" || check == "curve-decompose" || check == "curve-speyer") r = check_shape(c);
  else if (check == "curve-sample") r = check_sample(c);
  else if (check == "curve-roundtrip") r = c.contains("params") ? check_roundtrip(c) : check_shape(c);
  else if (check == "preservers") r = check_preservers(c);
  else if (check == "linear-preserver") r = check_linear_preserver(c);
  else if (check == "toric-check") r = check_toric(c);
  else throw InputError("no verifier for check \"" + check + "\"");
  return verdict(ctx, "verify", r.ok ? "pass" : "fail", Json{{"verified_check", check}, {"detail", r.detail}});
}

}  // namespace trophyp::cli
