#pragma once

// Bergman fans: circuit membership, cones dual to loopless faces and the
// non-crossing span condition.

#include <optional>
#include <vector>

#include "trophyp/matroid.hpp"

namespace trophyp {

struct BergmanCone {
  FaceMatroid face;
  std::vector<std::vector<int>> span_generators;  // 0/1 indicators, one per component
  std::vector<Subset> components;
  int dimension = 0;
};

/// Min of w over every circuit attained at least twice. False if M has a loop.
bool in_bergman_fan(const Matroid& m, const RationalVector& w);

/// The w-maximal face is loopless. Same convention as in_bergman_fan, no sign flip.
bool face_is_loopless(const Matroid& m, const RationalVector& w);

struct MembershipCheck {
  bool circuit_side = false;
  bool face_side = false;
  bool agree() const { return circuit_side == face_side; }
};
MembershipCheck membership_consistency(const Matroid& m, const RationalVector& w);

BergmanCone cone_of_face(const FaceMatroid& f);

/// Cones dual to loopless faces of dimension n - k, i.e. k-dimensional cones.
std::vector<BergmanCone> bergman_cones(const Matroid& m, int k);
/// k = rank.
std::vector<BergmanCone> maximal_cones(const Matroid& m);

struct SpanVerdict {
  bool noncrossing = true;
  int dimension = 0;
  std::size_t cones_checked = 0;
  std::optional<BergmanCone> crossing_cone;
};

/// Every cone of dimension k (default: the rank) has non-crossing component supports.
SpanVerdict noncrossing_span_condition(const Matroid& m, std::optional<int> k = std::nullopt);

/// Fine subdivision: rays e_F over proper nonempty flats F; maximal cones are
/// complete flag chains, listed as flat sequences. Loopless input required.
struct FineBergmanFan {
  std::vector<Subset> flats;
  std::vector<std::vector<std::size_t>> cones;  // indices into flats
};
FineBergmanFan fine_bergman_fan(const Matroid& m);

}  // namespace trophyp
