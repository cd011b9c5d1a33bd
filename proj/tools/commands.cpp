#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "trophyp/catalog.hpp"
#include "trophyp/plot.hpp"
#include "trophyp/signvar.hpp"

namespace trophyp::cli {

namespace {

Json minor_json(const PlueckerVector& p, std::size_t k) {
  return Json{{"cols", subset_json(p.subsets[k])}, {"value", rational_json(p.coords[k])}};
}

Json sample_json(const SampleReport& r) {
  Json j{{"trials", r.trials}, {"bound", r.bound}, {"min_varbar", r.min_varbar}, {"max_var", r.max_var},
         {"violations", r.violations}, {"note", r.note}};
  if (r.first_violation) {
    j["first_violation"] = Json{{"u", complex_json(r.first_violation->first)}, {"v", complex_json(r.first_violation->second)}};
  }
  return j;
}

Json pieces_json(const std::vector<CurvePiece>& pieces) {
  Json a = Json::array();
  for (const auto& p : pieces) a.push_back(Json{{"cycle", p.cycle}, {"fan", curve_fan_json(p.fan)}});
  return a;
}

LatticePointSet point_set_input(const Json& j) {
  if (j.contains("points")) return point_set_from_json(j);
  return support(valued_polynomial_from_json(j));
}

std::optional<Subset> failing_circuit(const Matroid& m, const RationalVector& w) {
  for (Subset c : circuits(m)) {
    std::vector<int> el = members(c);
    Rational lo = w[el[0] - 1];
    for (int e : el) lo = std::min(lo, w[e - 1]);
    int hits = 0;
    for (int e : el) hits += w[e - 1] == lo;
    if (hits == 1) return c;
  }
  return std::nullopt;
}

RationalVector checked_weight(const std::string& text, int n) {
  RationalVector w = parse_vector_arg(text);
  if (static_cast<int>(w.size()) != n) throw InputError("weight length must equal n = " + std::to_string(n));
  return w;
}

}  // namespace

Outcome cmd_var(const Context& ctx, const std::string& vec, bool closure) {
  const RationalVector v = parse_vector_arg(vec);
  return value(ctx, closure ? "varbar" : "var", closure ? varbar(v) : var(v));
}

Outcome cmd_grassmannian(const Context& ctx, const Json& in) {
  const ExactMatrix m = matrix_from_json(in);
  if (m.rows() == 0 || rank(m) != m.rows()) throw InputError("grassmannian needs a full row rank matrix");
  const GrassClass g = grassmannian_class(m);
  const PlueckerVector p = maximal_minors(m);
  Json cert{{"class", to_string(g)}, {"c", p.c}, {"n", p.n}};
  if (m.cols() <= 12) {
    const auto ext = variation_extremes(m);
    cert["max_var"] = ext.max_var;
    cert["max_varbar"] = ext.max_varbar;
  }
  if (g != GrassClass::Mixed) return verdict(ctx, "grassmannian", "pass", cert);
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (sgn(p.coords[k]) > 0 && !cert.contains("positive_minor")) cert["positive_minor"] = minor_json(p, k);
    if (sgn(p.coords[k]) < 0 && !cert.contains("negative_minor")) cert["negative_minor"] = minor_json(p, k);
  }
  cert["input"] = matrix_json(m);
  return verdict(ctx, "grassmannian", "fail", cert);
}

Outcome cmd_linear_hyp(const Context& ctx, const Json& in) {
  const ComplexMatrix m = complex_matrix_from_json(in);
  const auto v = is_positively_hyperbolic_linear(m);
  Json cert{{"defined_over_reals", v.defined_over_reals}, {"complex_rank", v.complex_rank}, {"real_rank", v.real_rank}};
  if (v.complement_class) cert["complement_class"] = to_string(*v.complement_class);
  if (v.defined_over_reals) cert["complement"] = matrix_json(v.complement);
  if (v.hyperbolic) return verdict(ctx, "linear-hyp", "pass", cert);
  cert["failed_condition"] = v.failed_condition;
  cert["input"] = Json{{"re", matrix_json(m.real_part)}, {"im", matrix_json(m.imag_part)}};
  return verdict(ctx, "linear-hyp", "fail", cert);
}

Outcome cmd_matroid(const Context& ctx, const std::string& action, const Json& in) {
  if (action == "validate") {
    try {
      const Matroid m = matroid_from_json(in);
      return verdict(ctx, "matroid-validate", "pass", Json{{"n", m.n()}, {"rank", m.rank()}, {"bases", m.bases().size()}});
    } catch (const MatroidError& e) {
      if (!e.witness) throw InputError(e.what());
      const auto& w = *e.witness;
      return verdict(ctx, "matroid-validate", "fail",
                     Json{{"reason", e.what()}, {"b1", subset_json(w.b1)}, {"b2", subset_json(w.b2)}, {"x", w.x}, {"input", in}});
    }
  }
  const Matroid m = matroid_from_json(in);
  if (action == "dual") return value(ctx, "matroid-dual", matroid_json(dual(m)));
  if (action == "components") return value(ctx, "matroid-components", partition_json(connected_components(m)));
  throw InputError("unknown matroid action " + action);
}

Outcome cmd_positroid(const Context& ctx, const Json& in) {
  const Matroid m = matroid_from_json(in);
  const auto v = is_positroid(m);
  Json cert{{"reason", v.reason}, {"loops", subset_json(v.stripped_loops)}};
  if (v.positroid) return verdict(ctx, "positroid", "pass", cert);
  const auto& f = *v.crossing_face;
  RationalVector w(static_cast<std::size_t>(m.n()));
  for (std::size_t i = 0; i < v.relabel.size(); ++i) w[v.relabel[i] - 1] = f.weight[i];
  Json comps = Json::array();
  for (Subset b : connected_components(f.matroid).blocks) {
    Subset orig = 0;
    for (int e : members(b)) orig |= element(v.relabel[e - 1]);
    comps.push_back(subset_json(orig));
  }
  cert["weight"] = vector_json(w);
  cert["components"] = comps;
  cert["input"] = matroid_json(m);
  return verdict(ctx, "positroid", "fail", cert);
}

Outcome cmd_bergman(const Context& ctx, const std::string& action, const Json& in, std::optional<int> dim,
                    const std::string& weight) {
  const Matroid m = matroid_from_json(in);
  if (action == "cones") {
    const int k = dim.value_or(m.rank());
    if (k < 0 || k > m.n()) throw InputError("cone dimension out of range");
    Json cones = Json::array();
    for (const auto& c : bergman_cones(m, k)) cones.push_back(cone_json(c));
    return value(ctx, "bergman-cones", Json{{"cones", cones}});
  }
  if (action == "noncrossing") {
    if (dim && (*dim < 0 || *dim > m.n())) throw InputError("cone dimension out of range");
    const auto v = noncrossing_span_condition(m, dim);
    Json cert{{"dim", v.dimension}, {"cones_checked", v.cones_checked}};
    if (v.noncrossing) return verdict(ctx, "bergman-noncrossing", "pass", cert);
    cert["cone"] = cone_json(*v.crossing_cone);
    cert["weight"] = vector_json(v.crossing_cone->face.weight);
    cert["input"] = matroid_json(m);
    return verdict(ctx, "bergman-noncrossing", "fail", cert);
  }
  if (action == "member") {
    const RationalVector w = checked_weight(weight, m.n());
    if (in_bergman_fan(m, w)) return verdict(ctx, "bergman-member", "pass", Json{{"weight", vector_json(w)}});
    Json cert{{"weight", vector_json(w)}, {"input", matroid_json(m)}};
    if (const auto c = failing_circuit(m, w)) cert["circuit"] = subset_json(*c);
    return verdict(ctx, "bergman-member", "fail", cert);
  }
  throw InputError("unknown bergman action " + action);
}

Outcome cmd_poly(const Context& ctx, const std::string& action, const Json& in, const std::string& weight, int trials) {
  if (action == "newton") return value(ctx, "poly-newton", point_set_json(newton_polytope_vertices(point_set_input(in))));
  if (action == "gp-check") {
    const LatticePointSet s = point_set_input(in);
    for (const auto& e : polytope_edges(s)) {
      const auto ones = std::count(e.direction.begin(), e.direction.end(), 1L);
      const auto minus = std::count(e.direction.begin(), e.direction.end(), -1L);
      const auto zeros = std::count(e.direction.begin(), e.direction.end(), 0L);
      if (ones != 1 || minus != 1 || zeros + 2 != static_cast<long>(e.direction.size())) {
        return verdict(ctx, "gp-check", "fail",
                       Json{{"u", e.u}, {"v", e.v}, {"direction", e.direction}, {"input", point_set_json(s)}});
      }
    }
    return verdict(ctx, "gp-check", "pass", Json{{"edges", polytope_edges(s).size()}});
  }
  if (action == "mset") {
    const LatticePointSet s = point_set_input(in);
    const auto f = m_convex_exchange_failure(s);
    if (!f) return verdict(ctx, "mset", "pass", Json{{"points", s.points.size()}});
    return verdict(ctx, "mset", "fail", Json{{"x", f->x}, {"y", f->y}, {"i", f->i}, {"input", point_set_json(s)}});
  }
  const ValuedPolynomial vf = valued_polynomial_from_json(in);
  if (action == "mfun") {
    const auto v = is_M_convex_function(vf);
    Json cert{{"cells_checked", v.cells_checked}};
    if (v.m_convex) return verdict(ctx, "mfun", "pass", cert);
    cert["cell"] = point_set_json(*v.failing_cell);
    if (v.failing_weight) cert["weight"] = vector_json(*v.failing_weight);
    cert["input"] = valued_polynomial_json(vf);
    return verdict(ctx, "mfun", "fail", cert);
  }
  if (action == "tinit") {
    const RationalVector w = checked_weight(weight, vf.n);
    Json out = lattice_polynomial_json(tinit(vf, w));
    out["in_tropical_hypersurface"] = in_tropical_hypersurface(vf, w);
    return value(ctx, "tinit", out);
  }
  if (action == "binomial") {
    if (vf.terms.size() != 2) throw InputError("binomial needs exactly two terms");
    for (const auto& [e, t] : vf.terms) {
      if (sgn(t.val) != 0) throw InputError("binomial needs constant coefficients");
    }
    const auto& [alpha, ta] = *vf.terms.begin();
    const auto& [beta, tb] = *std::next(vf.terms.begin());
    const auto v = classify_binomial(ta.lead, alpha, tb.lead, beta);
    Json cert{{"case", v.case_tag}, {"condition", v.condition}, {"reduced_alpha", v.reduced_alpha}, {"reduced_beta", v.reduced_beta}};
    if (v.stable) return verdict(ctx, "binomial", "pass", cert);
    const LatticePolynomial f = lattice_polynomial_from_json(in);
    if (f.is_real()) {
      const auto r = falsify_stability(f, trials, ctx.seed);
      if (r.falsified) {
        cert["line"] = Json{{"v", vector_json(r.v)}, {"w", vector_json(r.w)}};
        cert["restriction"] = r.restriction.str();
      }
    }
    cert["input"] = lattice_polynomial_json(f);
    return verdict(ctx, "binomial", "fail", cert);
  }
  if (action == "falsify") {
    const LatticePolynomial f = lattice_polynomial_from_json(in);
    if (!f.is_real()) throw InputError("falsify needs real coefficients");
    const auto r = falsify_stability(f, trials, ctx.seed);
    Json cert{{"trials_run", r.trials_run}, {"note", r.note}};
    if (!r.falsified) return verdict(ctx, "falsify", "not-falsified", cert);
    cert["v"] = vector_json(r.v);
    cert["w"] = vector_json(r.w);
    cert["restriction"] = r.restriction.str();
    cert["input"] = lattice_polynomial_json(f);
    return verdict(ctx, "falsify", "fail", cert);
  }
  throw InputError("unknown poly action " + action);
}

Outcome cmd_curve(const Context& ctx, const std::string& action, const Json& in, const std::string& roots, int trials,
                  std::optional<int> bound) {
  if (action == "sample" && in.contains("coordinates")) {
    const SpeyerParam p = speyer_from_json(in);
    const auto r = sample_varbar_check(p, trials, ctx.seed, bound);
    Json cert = sample_json(r);
    if (r.violations == 0) return verdict(ctx, "curve-sample", "pass", cert);
    cert["param"] = speyer_json(p);
    return verdict(ctx, "curve-sample", "fail", cert);
  }
  const TropicalCurveFan f = curve_fan_from_json(in);
  if (action == "balance") {
    std::vector<long> sum(static_cast<std::size_t>(f.n));
    for (const auto& r : f.rays) {
      for (int i = 0; i < f.n; ++i) sum[i] += r.mult * r.vec[i];
    }
    Json cert{{"sum", sum}};
    if (is_balanced(f)) return verdict(ctx, "curve-balance", "pass", cert);
    cert["input"] = curve_fan_json(f);
    return verdict(ctx, "curve-balance", "fail", cert);
  }
  const auto shape = rays_realizable_shape(f);
  if (action == "shape") {
    if (shape.all_ok()) return verdict(ctx, "curve-shape", "pass");
    Json bad = Json::array();
    for (std::size_t i = 0; i < shape.ok.size(); ++i) {
      if (!shape.ok[i]) bad.push_back(i + 1);
    }
    return verdict(ctx, "curve-shape", "fail", Json{{"bad_rays", bad}, {"input", curve_fan_json(f)}});
  }
  if (!is_balanced(f) || !shape.all_ok()) {
    Json cert{{"balanced", is_balanced(f)}, {"shape_ok", shape.all_ok()}, {"input", curve_fan_json(f)}};
    return verdict(ctx, "curve-" + action, "fail", cert);
  }
  const auto pieces = decompose_irreducible(f);
  if (action == "decompose") return value(ctx, "curve-decompose", Json{{"pieces", pieces_json(pieces)}});
  if (action == "speyer") {
    std::optional<RationalVector> consts;
    if (!roots.empty()) consts = parse_vector_arg(roots);
    Json params = Json::array();
    for (const auto& p : pieces) {
      try {
        params.push_back(speyer_json(speyer_parametrization(p, consts)));
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
    }
    return value(ctx, "curve-speyer", Json{{"params", params}});
  }
  if (action == "sample") {
    Json reports = Json::array();
    for (const auto& piece : pieces) {
      const SpeyerParam p = speyer_parametrization(piece);
      const auto r = sample_varbar_check(p, trials, ctx.seed, bound);
      Json rep = sample_json(r);
      rep["cycle"] = piece.cycle;
      if (r.violations > 0) {
        rep["param"] = speyer_json(p);
        return verdict(ctx, "curve-sample", "fail", rep);
      }
      reports.push_back(rep);
    }
    return verdict(ctx, "curve-sample", "pass", Json{{"pieces", reports}});
  }
  if (action == "roundtrip") {
    const auto rt = round_trip(f);
    Json params = Json::array();
    for (const auto& p : rt.params) params.push_back(speyer_json(p));
    Json cert{{"pieces", pieces_json(rt.pieces)}, {"params", params}, {"reconstructed", curve_fan_json(rt.reconstructed)}};
    if (rt.ok) return verdict(ctx, "curve-roundtrip", "pass", cert);
    cert["input"] = curve_fan_json(f);
    return verdict(ctx, "curve-roundtrip", "fail", cert);
  }
  throw InputError("unknown curve action " + action);
}

Outcome cmd_preservers(const Context& ctx, int n, int c) {
  if (n < 2 || n > 7) throw InputError("preservers supports 2 <= n <= 7");
  if (c < 1 || c > n - 1) throw InputError("need 1 <= c <= n - 1");
  const auto rep = preserver_subgroup(n, c, ctx.jobs);
  Json gens = Json::array();
  for (const auto& g : rep.generators) gens.push_back(signed_permutation_json(g));
  Json orders = Json::object();
  for (const auto& [o, k] : rep.element_orders) orders[std::to_string(o)] = k;
  Json cert{{"n", n}, {"c", c}, {"order", rep.order}, {"generated_order", rep.generated_order},
            {"generator_match", rep.generator_match}, {"generators", gens}, {"element_orders", orders}};
  if (rep.generator_match) return verdict(ctx, "preservers", "pass", cert);
  // a witness in the symmetric difference of the two groups
  const auto gen = generated_group(rep.generators);
  for (const auto& g : gen) {
    if (!preserves_threshold(g, c)) {
      cert["witness"] = signed_permutation_json(g);
      cert["witness_preserves"] = false;
      return verdict(ctx, "preservers", "fail", cert);
    }
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  do {
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<int> signs(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) signs[i] = (mask >> i & 1U) ? -1 : 1;
      const auto g = SignedPermutation::make(perm, signs);
      if (preserves_threshold(g, c) && !std::binary_search(gen.begin(), gen.end(), g)) {
        cert["witness"] = signed_permutation_json(g);
        cert["witness_preserves"] = true;
        return verdict(ctx, "preservers", "fail", cert);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return verdict(ctx, "preservers", "fail", cert);
}

Outcome cmd_linear_preserver(const Context& ctx, const Json& in, int c) {
  const ExactMatrix m = matrix_from_json(in);
  if (m.rows() == 0 || rank(m) != m.rows()) throw InputError("linear map must have full row rank");
  if (c < 1 || c > static_cast<int>(m.rows())) throw InputError("need 1 <= c <= rows");
  const auto r = linear_map_preserves(m, c);
  auto minor = [](const std::pair<Subset, Subset>& rc) {
    return Json{{"rows", subset_json(rc.first)}, {"cols", subset_json(rc.second)}};
  };
  Json cert{{"c", c}};
  if (r.positive) cert["positive_minor"] = minor(*r.positive);
  if (r.negative) cert["negative_minor"] = minor(*r.negative);
  if (r.preserves) return verdict(ctx, "linear-preserver", "pass", cert);
  cert["input"] = matrix_json(m);
  return verdict(ctx, "linear-preserver", "fail", cert);
}

Outcome cmd_toric(const Context& ctx, const Json& in, int trials) {
  const ExactMatrix a = matrix_from_json(in);
  if (a.rows() == 0 || rank(a) != a.rows()) throw InputError("toric exponent matrix must have full row rank");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).get_den() != 1) throw InputError("toric exponent matrix must be integral");
    }
  }
  const auto v = toric_positively_hyperbolic(a);
  Json supports = Json::array();
  for (Subset s : v.row_supports) supports.push_back(subset_json(s));
  Json cert{{"reason", v.reason}, {"reduced", matrix_json(v.reduced)}, {"row_supports", supports}};
  if (v.positively_hyperbolic) {
    const auto tm = toric_algebraic_matroid(a);
    const auto s = toric_sample_check(a, v.lambda, trials, ctx.seed);
    cert["lambda"] = v.lambda;
    cert["lambda_from_rule"] = v.lambda_from_rule;
    cert["sample"] = Json{{"trials", s.trials}, {"bound", s.bound}, {"min_varbar", s.min_varbar}, {"violations", s.violations}};
    cert["matroid"] = matroid_json(tm.matroid);
    if (tm.positroid) cert["matroid_is_positroid"] = *tm.positroid;
    return verdict(ctx, "toric-check", s.violations == 0 ? "pass" : "fail", cert);
  }
  cert["input"] = matrix_json(a);
  return verdict(ctx, "toric-check", "fail", cert);
}

Outcome cmd_catalog(const Context& ctx, int n, std::optional<int> d) {
  if (n < 0 || n > 6) throw InputError("catalog generate supports 0 <= n <= 6");
  if (d && (*d < 0 || *d > n)) throw InputError("rank out of range");
  const auto ms = d ? all_matroids_of_rank(n, *d) : all_matroids(n);
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(matroid_json(m));
  return value(ctx, "catalog", Json{{"count", ms.size()}, {"matroids", list}});
}

Outcome cmd_plot(const Context& ctx, const Json& in, const std::string& out_path) {
  const PlotInput p = plot_input_from_json(in);
  const std::string svg = render_svg(p);
  if (out_path.empty() || out_path == "-") {
    Outcome o;
    o.doc = svg;  // emitted raw
    return o;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw InputError("cannot write " + out_path);
  f << svg;
  return value(ctx, "plot", Json{{"file", out_path}, {"cells", p.cells.size()}});
}

}  // namespace trophyp::cli
