#pragma once

// Matroids on [n] stored by their basis family, plus matroid-polytope faces,
// non-crossing partitions and positroid recognition.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trophyp/rational.hpp"
#include "trophyp/subset.hpp"

namespace trophyp {

/// Basis-exchange failure: x in b1 \ b2 has no partner y in b2 \ b1.
struct ExchangeWitness {
  Subset b1 = 0;
  Subset b2 = 0;
  int x = 0;
};

class MatroidError : public std::invalid_argument {
 public:
  MatroidError(const std::string& what, std::optional<ExchangeWitness> w = std::nullopt)
      : std::invalid_argument(what), witness(w) {}
  std::optional<ExchangeWitness> witness;
};

class Matroid {
 public:
  Matroid() = default;

  /// Validates sizes and the exchange axiom. Throws MatroidError.
  static Matroid from_bases(int n, int d, std::vector<Subset> bases);
  /// Trusted construction, no exchange check.
  static Matroid from_bases_unchecked(int n, int d, std::vector<Subset> bases);
  static Matroid uniform(int d, int n);

  /// First exchange-axiom violation, if any.
  static std::optional<ExchangeWitness> find_exchange_violation(int n, const std::vector<Subset>& bases);

  int n() const { return n_; }
  int rank() const { return d_; }
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset s) const { return s < is_basis_.size() && is_basis_[s]; }
  bool is_independent(Subset s) const;
  int rank_of(Subset s) const;
  Subset ground() const { return full_set(n_); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.bases_ == b.bases_;
  }

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Subset> bases_;  // sorted ascending by mask
  std::vector<bool> is_basis_;
};

/// Blocks of a partition of a subset of [n], sorted by least element.
struct CyclicPartition {
  int n = 0;
  std::vector<Subset> blocks;

  friend bool operator==(const CyclicPartition&, const CyclicPartition&) = default;
};

std::vector<Subset> circuits(const Matroid& m);
CyclicPartition connected_components(const Matroid& m);
int num_components(const Matroid& m);

Matroid dual(const Matroid& m);
Matroid direct_sum(const Matroid& a, const Matroid& b);
/// Restriction and contraction, relabelled to [|S|] and [n - |S|] in increasing order.
Matroid restrict(const Matroid& m, Subset s);
Matroid contract(const Matroid& m, Subset s);
bool is_loopless(const Matroid& m);
Subset loops(const Matroid& m);
/// e together with every f such that {e, f} is a circuit.
Subset parallelism_class(const Matroid& m, int e);

struct FaceMatroid {
  Matroid matroid;  // on the same ground set [n]
  RationalVector weight;
  int dimension = 0;  // n - number of components
};

/// Face of the matroid polytope maximizing w . x.
FaceMatroid face_matroid(const Matroid& m, const RationalVector& w);
/// Same face computed by the greedy level-set rule.
Matroid face_matroid_greedy(const Matroid& m, const RationalVector& w);

bool is_noncrossing_partition(const CyclicPartition& p);
/// Literal quadruple check, O(n^4).
bool is_noncrossing_partition_quadruple(const CyclicPartition& p);
bool is_noncrossing_matroid(const Matroid& m);

/// Every face of the matroid polytope, once each, indexed by ordered set partitions.
std::vector<FaceMatroid> all_faces(const Matroid& m);
/// Throws std::invalid_argument unless n - d <= k <= n - m.
std::vector<FaceMatroid> loopless_faces_of_dim(const Matroid& m, int k);

struct PositroidVerdict {
  bool positroid = false;
  Subset stripped_loops = 0;
  std::optional<FaceMatroid> crossing_face;  // failure certificate, on the loopless ground set
  std::vector<int> relabel;                  // loopless index -> original element
  std::string reason;
};

PositroidVerdict is_positroid(const Matroid& m);

/// Calls f(labels) for every ordered set partition of [n]: labels[i] is the
/// block (0 = first) holding element i+1.
template <class F>
void for_each_ordered_set_partition(int n, F&& f);

}  // namespace trophyp

#include "trophyp/detail/ordered_partitions.hpp"
