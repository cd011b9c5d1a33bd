#pragma once

// Planar convex hulls by cross products, for lattice sets lying in a plane
// x_1 + x_2 + x_3 = const. Independent of the LP code.

#include <algorithm>
#include <vector>

namespace oracle {

struct P2 {
  long x, y;
  friend bool operator<(const P2& a, const P2& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
  friend bool operator==(const P2& a, const P2& b) { return a.x == b.x && a.y == b.y; }
};

inline long cross(const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

/// Strict hull vertices in counterclockwise order (monotone chain).
inline std::vector<P2> hull2(std::vector<P2> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;
  std::vector<P2> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

inline bool in_hull2(const std::vector<P2>& h, const P2& q) {
  if (h.size() == 1) return h[0] == q;
  if (h.size() == 2) {
    if (cross(h[0], h[1], q) != 0) return false;
    return std::min(h[0].x, h[1].x) <= q.x && q.x <= std::max(h[0].x, h[1].x) && std::min(h[0].y, h[1].y) <= q.y &&
           q.y <= std::max(h[0].y, h[1].y);
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
  }
  return true;
}

/// Definition-literal M-convexity for S in {x in Z^3 : sum x = s}, given as (x1, x2):
/// every hull edge has direction e_i - e_j and S is all lattice points of its hull.
/// `candidates` lists every lattice point of the ambient simplex.
inline bool m_convex_hull_literal(const std::vector<P2>& s, const std::vector<P2>& candidates) {
  const auto h = hull2(s);
  for (std::size_t i = 0; i < h.size() && h.size() >= 2; ++i) {
    const P2& a = h[i];
    const P2& b = h[(i + 1) % h.size()];
    const long dx = b.x - a.x, dy = b.y - a.y, dz = -(dx + dy);
    // parallel to some e_i - e_j: exactly one coordinate difference vanishes
    const int zeros = (dx == 0) + (dy == 0) + (dz == 0);
    if (zeros != 1) return false;
    if (h.size() == 2) break;
  }
  for (const auto& c : candidates) {
    const bool in_s = std::find(s.begin(), s.end(), c) != s.end();
    if (in_hull2(h, c) != in_s) return false;
  }
  return true;
}

}  // namespace oracle
