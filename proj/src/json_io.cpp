#include "trophyp/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace trophyp {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

long integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long>();
}

int small_int(const Json& j, const char* what, long lo, long hi) {
  const long v = integer(j, what);
  if (v < lo || v > hi) {
    throw InputError(std::string(what) + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

std::vector<long> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<long> out;
  for (const auto& x : j) out.push_back(integer(x, what));
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::ostringstream msg;
    msg << origin << ": malformed JSON at byte " << e.byte << ": " << e.what();
    throw InputError(msg.str());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

Json rational_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("rationals must be \"p/q\" strings or integers");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json vector_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

RationalVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

RationalVector parse_vector_arg(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return vector_from_json(parse_json_text(text, "vector"));
  RationalVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (v.empty()) throw InputError("empty vector");
  return v;
}

Json subset_json(Subset s) {
  Json a = Json::array();
  for (int i : members(s)) a.push_back(i);
  return a;
}

Subset subset_from_json(const Json& j, int n) {
  Subset s = 0;
  for (long i : int_list(j, "subset element")) {
    if (i < 1 || i > n) throw InputError("subset element " + std::to_string(i) + " outside [1, " + std::to_string(n) + "]");
    if (contains(s, static_cast<int>(i))) throw InputError("repeated subset element " + std::to_string(i));
    s |= element(static_cast<int>(i));
  }
  return s;
}

Json matrix_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
  const Json& e = array_field(j, "entries");
  const int cols = j.contains("cols") ? small_int(j["cols"], "cols", 0, 1 << 16)
                                      : (e.empty() ? 0 : static_cast<int>(e.front().size()));
  if (j.contains("rows") && small_int(j["rows"], "rows", 0, 1 << 16) != static_cast<int>(e.size())) {
    throw InputError("\"rows\" disagrees with the number of entry rows");
  }
  std::vector<RationalVector> rows;
  for (const auto& r : e) {
    rows.push_back(vector_from_json(r));
    if (static_cast<int>(rows.back().size()) != cols) throw InputError("ragged matrix: every row needs " + std::to_string(cols) + " entries");
  }
  return ExactMatrix::from_rows(rows, static_cast<std::size_t>(cols));
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
  if (j.is_object() && j.contains("re")) {
    ComplexMatrix m{matrix_from_json(j["re"]), {}};
    m.imag_part = j.contains("im") ? matrix_from_json(j["im"]) : ExactMatrix(m.real_part.rows(), m.real_part.cols());
    if (m.imag_part.rows() != m.real_part.rows() || m.imag_part.cols() != m.real_part.cols()) {
      throw InputError("real and imaginary parts differ in shape");
    }
    return m;
  }
  ComplexMatrix m{matrix_from_json(j), {}};
  m.imag_part = ExactMatrix(m.real_part.rows(), m.real_part.cols());
  return m;
}

Json matroid_json(const Matroid& m) {
  std::vector<Subset> bases = m.bases();
  std::sort(bases.begin(), bases.end(), lex_less);
  Json b = Json::array();
  for (Subset s : bases) b.push_back(subset_json(s));
  return Json{{"n", m.n()}, {"rank", m.rank()}, {"bases", b}};
}

Matroid matroid_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n", 0, kMaxGround);
  const int d = small_int(field(j, "rank"), "rank", 0, n);
  std::vector<Subset> bases;
  for (const auto& b : array_field(j, "bases")) {
    const Subset s = subset_from_json(b, n);
    if (popcount(s) != d) throw InputError("basis " + format_subset(s) + " does not have size " + std::to_string(d));
    bases.push_back(s);
  }
  return Matroid::from_bases(n, d, std::move(bases));
}

Json partition_json(const CyclicPartition& p) {
  Json a = Json::array();
  for (Subset b : p.blocks) a.push_back(subset_json(b));
  return a;
}

Json face_json(const FaceMatroid& f) {
  return Json{{"weight", vector_json(f.weight)},
              {"dim", f.dimension},
              {"components", partition_json(connected_components(f.matroid))},
              {"matroid", matroid_json(f.matroid)}};
}

Json cone_json(const BergmanCone& c) {
  Json comps = Json::array();
  for (Subset s : c.components) comps.push_back(subset_json(s));
  return Json{{"dim", c.dimension}, {"span", c.span_generators}, {"components", comps}};
}

Json exponent_json(const Exponent& e) { return Json(e); }

Json complex_json(const Complex& z) { return Json{{"re", rational_json(z.re)}, {"im", rational_json(z.im)}}; }

Json lattice_polynomial_json(const LatticePolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms) {
    terms.push_back(Json{{"exp", e}, {"val", "0"}, {"re", rational_json(c.re)}, {"im", rational_json(c.im)}});
  }
  return Json{{"n", f.n}, {"terms", terms}, {"str", f.str()}};
}

Json valued_polynomial_json(const ValuedPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [e, t] : f.terms) {
    terms.push_back(Json{{"exp", e}, {"val", rational_json(t.val)}, {"re", rational_json(t.lead.re)}, {"im", rational_json(t.lead.im)}});
  }
  return Json{{"n", f.n}, {"terms", terms}};
}

ValuedPolynomial valued_polynomial_from_json(const Json& j) {
  ValuedPolynomial f;
  f.n = small_int(field(j, "n"), "n", 1, 64);
  for (const auto& t : array_field(j, "terms")) {
    const auto ev = int_list(field(t, "exp"), "exponent entry");
    if (static_cast<int>(ev.size()) != f.n) throw InputError("exponent length must equal n");
    Exponent e;
    for (long x : ev) {
      if (x < 0 || x > 1000) throw InputError("exponents must lie in [0, 1000]");
      e.push_back(static_cast<int>(x));
    }
    ValuedTerm vt;
    if (t.contains("t_coeffs")) {
      const RationalVector c = vector_from_json(t["t_coeffs"]);
      const auto nz = std::find_if(c.begin(), c.end(), [](const Rational& q) { return sgn(q) != 0; });
      if (nz == c.end()) throw InputError("t_coeffs of a term are all zero");
      vt.val = Rational(static_cast<long>(nz - c.begin()));
      vt.lead = Complex(*nz);
    } else if (t.contains("coeff")) {
      vt.val = 0;
      vt.lead = Complex(rational_from_json(t["coeff"]));
    } else {
      vt.val = t.contains("val") ? rational_from_json(t["val"]) : Rational(0);
      vt.lead = Complex(t.contains("re") ? rational_from_json(t["re"]) : Rational(0),
                        t.contains("im") ? rational_from_json(t["im"]) : Rational(0));
    }
    if (vt.lead.is_zero()) continue;
    if (f.terms.count(e)) throw InputError("repeated exponent in polynomial terms");
    f.terms.emplace(std::move(e), std::move(vt));
  }
  if (f.terms.empty()) throw InputError("polynomial has no nonzero terms");
  return f;
}

LatticePolynomial lattice_polynomial_from_json(const Json& j) {
  const ValuedPolynomial v = valued_polynomial_from_json(j);
  LatticePolynomial f;
  f.n = v.n;
  for (const auto& [e, t] : v.terms) {
    if (sgn(t.val) != 0) throw InputError("this command needs constant coefficients (every val = 0)");
    f.add(e, t.lead);
  }
  return f;
}

Json point_set_json(const LatticePointSet& s) { return Json{{"n", s.n}, {"points", s.points}}; }

LatticePointSet point_set_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n", 1, 64);
  std::vector<Exponent> pts;
  for (const auto& p : array_field(j, "points")) {
    const auto v = int_list(p, "point entry");
    if (static_cast<int>(v.size()) != n) throw InputError("point length must equal n");
    pts.emplace_back(v.begin(), v.end());
  }
  return LatticePointSet::of(n, std::move(pts));
}

Json curve_fan_json(const TropicalCurveFan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back(Json{{"vec", r.vec}, {"mult", r.mult}});
  return Json{{"n", f.n}, {"rays", rays}};
}

TropicalCurveFan curve_fan_from_json(const Json& j) {
  const int n = small_int(field(j, "n"), "n", 2, kMaxGround);
  std::vector<CurveRay> rays;
  for (const auto& r : array_field(j, "rays")) {
    CurveRay cr;
    cr.vec = int_list(field(r, "vec"), "ray entry");
    cr.mult = r.contains("mult") ? small_int(r["mult"], "mult", 1, 1000) : 1;
    rays.push_back(std::move(cr));
  }
  try {
    return TropicalCurveFan::make(n, std::move(rays));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Json speyer_json(const SpeyerParam& p) {
  Json coords = Json::array();
  for (const auto& c : p.coordinates) coords.push_back(Json{{"sign", c.sign}, {"roots", c.roots}});
  return Json{{"n", p.n},
              {"shift", p.shift},
              {"root_count", p.root_count},
              {"root_constants", vector_json(p.root_constants)},
              {"coordinates", coords},
              {"str", p.str()}};
}

SpeyerParam speyer_from_json(const Json& j) {
  SpeyerParam p;
  p.n = small_int(field(j, "n"), "n", 1, kMaxGround);
  p.shift = small_int(field(j, "shift"), "shift", 0, p.n - 1);
  p.root_count = small_int(field(j, "root_count"), "root_count", 0, 1000);
  p.root_constants = vector_from_json(field(j, "root_constants"));
  if (static_cast<int>(p.root_constants.size()) != p.root_count) throw InputError("root_constants must have root_count entries");
  for (const auto& c : array_field(j, "coordinates")) {
    SpeyerCoordinate sc;
    sc.sign = small_int(field(c, "sign"), "sign", -1, 1);
    if (sc.sign == 0) throw InputError("coordinate signs must be +-1");
    for (long r : int_list(field(c, "roots"), "root index")) {
      if (r < 1 || r > p.root_count) throw InputError("root index outside [1, root_count]");
      sc.roots.push_back(static_cast<int>(r));
    }
    std::sort(sc.roots.begin(), sc.roots.end());
    p.coordinates.push_back(std::move(sc));
  }
  if (static_cast<int>(p.coordinates.size()) != p.n) throw InputError("parametrization needs n coordinates");
  return p;
}

Json signed_permutation_json(const SignedPermutation& p) {
  return Json{{"n", p.n}, {"perm", p.perm}, {"signs", p.signs}, {"str", p.str()}};
}

SignedPermutation signed_permutation_from_json(const Json& j) {
  std::vector<int> perm, signs;
  for (long x : int_list(field(j, "perm"), "perm entry")) perm.push_back(static_cast<int>(x));
  for (long x : int_list(field(j, "signs"), "sign entry")) signs.push_back(static_cast<int>(x));
  try {
    return SignedPermutation::make(std::move(perm), std::move(signs));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

}  // namespace trophyp
