#include "trophyp/plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace trophyp {

namespace {

struct P2 {
  double x = 0;
  double y = 0;
};

RationalVector quotient(const RationalVector& v) {
  RationalVector q(3);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) q[i] = v[i] - v.back();
  return q;
}

P2 project(const std::array<double, 3>& q) {
  // isometric view, SVG y axis pointing down
  return {(q[0] - q[1]) * 0.8660254037844386, (q[0] + q[1]) * 0.5 - q[2]};
}

std::array<double, 3> to_double(const RationalVector& q) { return {q[0].get_d(), q[1].get_d(), q[2].get_d()}; }

double cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

std::vector<P2> hull(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end(), [](const P2& a, const P2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const P2& a, const P2& b) {
              return std::abs(a.x - b.x) < 1e-9 && std::abs(a.y - b.y) < 1e-9;
            }), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<P2> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 1e-12) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

int cell_dim(int n, const PlotCell& c) {
  std::vector<RationalVector> dirs;
  for (std::size_t k = 1; k < c.vertices.size(); ++k) {
    RationalVector d(n);
    for (int i = 0; i < n; ++i) d[i] = c.vertices[k][i] - c.vertices[0][i];
    dirs.push_back(d);
  }
  for (const auto& r : c.rays) dirs.push_back(r);
  RationalVector ones(n, Rational(1));
  dirs.push_back(ones);
  return static_cast<int>(rank(ExactMatrix::from_rows(dirs, n)));
}

RationalVector checked_point(const Json& j, int n) {
  RationalVector v = vector_from_json(j);
  if (static_cast<int>(v.size()) != n) throw InputError("cell point length must equal n");
  return v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::abs(x) < 5e-4 ? 0.0 : x);
  return buf;
}

}  // namespace

PlotInput plot_input_from_json(const Json& j) {
  PlotInput in;
  if (!j.is_object()) throw InputError("plot input must be a JSON object");
  if (j.contains("bases")) {
    const Matroid m = matroid_from_json(j);
    in.n = m.n();
    if (!is_loopless(m)) throw InputError("matroid has loops; its Bergman fan is empty");
    const auto fan = fine_bergman_fan(m);
    for (const auto& cone : fan.cones) {
      PlotCell c;
      c.vertices.push_back(RationalVector(m.n()));
      for (std::size_t f : cone) {
        RationalVector r(m.n());
        for (int e : members(fan.flats[f])) r[e - 1] = 1;
        c.rays.push_back(r);
      }
      in.cells.push_back(std::move(c));
    }
  } else if (j.contains("rays")) {
    const auto fan = curve_fan_from_json(j);
    in.n = fan.n;
    for (const auto& ray : fan.rays) {
      PlotCell c;
      c.vertices.push_back(RationalVector(fan.n));
      c.rays.push_back(RationalVector(ray.vec.begin(), ray.vec.end()));
      in.cells.push_back(std::move(c));
    }
  } else if (j.contains("cells")) {
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("cells input needs an integer \"n\"");
    in.n = j["n"].get<int>();
    if (in.n < 1 || in.n > kMaxGround) throw InputError("n out of range");
    for (const auto& cj : j["cells"]) {
      PlotCell c;
      if (!cj.contains("vertices") || cj["vertices"].empty()) throw InputError("every cell needs a vertex");
      for (const auto& v : cj["vertices"]) c.vertices.push_back(checked_point(v, in.n));
      if (cj.contains("rays")) {
        for (const auto& r : cj["rays"]) c.rays.push_back(checked_point(r, in.n));
      }
      in.cells.push_back(std::move(c));
    }
  } else {
    throw InputError("plot input needs \"bases\", \"rays\" or \"cells\"");
  }
  for (auto& c : in.cells) c.dim = cell_dim(in.n, c);
  return in;
}

std::string render_svg(const PlotInput& in) {
  if (in.n < 2 || in.n > 4) {
    throw InputError("cannot render n = " + std::to_string(in.n) + ": the quotient by (1,...,1) must have dimension 1 to 3");
  }
  double extent = 1;
  for (const auto& c : in.cells) {
    for (const auto& v : c.vertices) {
      for (double x : to_double(quotient(v))) extent = std::max(extent, std::abs(x));
    }
  }
  const double ray_len = 2 * extent;
  std::vector<std::vector<P2>> polys;
  for (const auto& c : in.cells) {
    std::vector<P2> pts;
    for (const auto& v : c.vertices) {
      const auto q = to_double(quotient(v));
      pts.push_back(project(q));
      for (const auto& r : c.rays) {
        auto d = to_double(quotient(r));
        const double len = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
        if (len == 0) continue;
        for (int i = 0; i < 3; ++i) d[i] = q[i] + ray_len * d[i] / len;
        pts.push_back(project(d));
      }
    }
    polys.push_back(hull(std::move(pts)));
  }
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  for (const auto& p : polys) {
    for (const auto& q : p) {
      lo_x = std::min(lo_x, q.x), hi_x = std::max(hi_x, q.x);
      lo_y = std::min(lo_y, q.y), hi_y = std::max(hi_y, q.y);
    }
  }
  const double size = 400, margin = 20;
  const double scale = (size - 2 * margin) / std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  out << "<g fill=\"#7fa6d9\" fill-opacity=\"0.5\" stroke=\"#1f3b63\" stroke-width=\"1.5\">\n";
  for (std::size_t k = 0; k < polys.size(); ++k) {
    out << "<polygon class=\"cell\" data-dim=\"" << in.cells[k].dim << "\" points=\"";
    for (std::size_t i = 0; i < polys[k].size(); ++i) {
      if (i) out << ' ';
      out << fmt(margin + (polys[k][i].x - lo_x) * scale) << ',' << fmt(margin + (polys[k][i].y - lo_y) * scale);
    }
    out << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace trophyp
