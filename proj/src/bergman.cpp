#include "trophyp/bergman.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace trophyp {

bool in_bergman_fan(const Matroid& m, const RationalVector& w) {
  if (static_cast<int>(w.size()) != m.n()) throw std::invalid_argument("weight length must equal n");
  if (!is_loopless(m)) return false;
  for (Subset c : circuits(m)) {
    const auto elems = members(c);
    Rational lo = w[elems[0] - 1];
    for (int e : elems) lo = std::min(lo, w[e - 1]);
    int hits = 0;
    for (int e : elems) hits += w[e - 1] == lo;
    if (hits < 2) return false;
  }
  return true;
}

bool face_is_loopless(const Matroid& m, const RationalVector& w) { return is_loopless(face_matroid(m, w).matroid); }

MembershipCheck membership_consistency(const Matroid& m, const RationalVector& w) {
  return {in_bergman_fan(m, w), face_is_loopless(m, w)};
}

BergmanCone cone_of_face(const FaceMatroid& f) {
  BergmanCone c;
  c.face = f;
  c.components = connected_components(f.matroid).blocks;
  for (Subset b : c.components) {
    std::vector<int> g(static_cast<std::size_t>(f.matroid.n()), 0);
    for (int e : members(b)) g[e - 1] = 1;
    c.span_generators.push_back(std::move(g));
  }
  c.dimension = static_cast<int>(c.components.size());
  return c;
}

std::vector<BergmanCone> bergman_cones(const Matroid& m, int k) {
  if (!is_loopless(m)) throw std::invalid_argument("Bergman cones need a loopless matroid");
  std::vector<BergmanCone> out;
  for (const auto& f : loopless_faces_of_dim(m, m.n() - k)) out.push_back(cone_of_face(f));
  return out;
}

std::vector<BergmanCone> maximal_cones(const Matroid& m) { return bergman_cones(m, m.rank()); }

SpanVerdict noncrossing_span_condition(const Matroid& m, std::optional<int> k) {
  SpanVerdict v;
  v.dimension = k.value_or(m.rank());
  for (auto& cone : bergman_cones(m, v.dimension)) {
    ++v.cones_checked;
    if (!is_noncrossing_partition(CyclicPartition{m.n(), cone.components})) {
      v.noncrossing = false;
      v.crossing_cone = std::move(cone);
      return v;
    }
  }
  return v;
}

FineBergmanFan fine_bergman_fan(const Matroid& m) {
  if (!is_loopless(m)) throw std::invalid_argument("Bergman fan of a matroid with loops is empty");
  FineBergmanFan fan;
  // closure(S) = S plus every e with rank(S + e) = rank(S)
  for (Subset s = 1; s < m.ground(); ++s) {
    const int r = m.rank_of(s);
    bool closed = true;
    for (int e = 1; e <= m.n() && closed; ++e) {
      if (!contains(s, e) && m.rank_of(s | element(e)) == r) closed = false;
    }
    if (closed) fan.flats.push_back(s);
  }
  std::sort(fan.flats.begin(), fan.flats.end(), [&](Subset a, Subset b) {
    const int ra = m.rank_of(a), rb = m.rank_of(b);
    return ra != rb ? ra < rb : lex_less(a, b);
  });
  std::vector<std::size_t> chain;
  std::function<void(Subset, int)> extend = [&](Subset top, int r) {
    if (r == m.rank() - 1) {
      fan.cones.push_back(chain);
      return;
    }
    for (std::size_t i = 0; i < fan.flats.size(); ++i) {
      const Subset f = fan.flats[i];
      if ((f & top) == top && f != top && m.rank_of(f) == r + 1) {
        chain.push_back(i);
        extend(f, r + 1);
        chain.pop_back();
      }
    }
  };
  if (m.rank() >= 2) extend(0, 0);
  return fan;
}

}  // namespace trophyp
