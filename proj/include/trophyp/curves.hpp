#pragma once

// One-dimensional tropical fans in R^n / R(1,...,1): balancing, the cyclic
// 0/1 ray shape, decomposition into cycles, signed Speyer parametrizations
// and sampled sign-variation checks on them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trophyp/rational.hpp"
#include "trophyp/subset.hpp"

namespace trophyp {

struct CurveRay {
  std::vector<long> vec;  // normalized: minimum 0, content 1
  int mult = 1;

  friend bool operator==(const CurveRay&, const CurveRay&) = default;
  friend auto operator<=>(const CurveRay&, const CurveRay&) = default;
};

struct TropicalCurveFan {
  int n = 0;
  std::vector<CurveRay> rays;

  /// Normalizes every ray. Throws std::invalid_argument for a ray on the
  /// all-ones line, a length mismatch or a multiplicity below 1.
  static TropicalCurveFan make(int n, std::vector<CurveRay> rays);

  /// Unit rays, one per multiplicity, sorted. Used for multiset comparison.
  std::vector<std::vector<long>> expanded() const;
};

/// Subtract the minimum, divide by the gcd. Throws on multiples of (1,...,1).
std::vector<long> normalize_ray(std::vector<long> v);

bool is_balanced(const TropicalCurveFan& f);

struct RayShape {
  std::vector<bool> ok;  // per ray
  bool all_ok() const;
};

/// Every ray a 0/1 vector whose support is a cyclic interval of [n].
RayShape rays_realizable_shape(const TropicalCurveFan& f);

/// A cyclic block {start, ..., end} of [n], as a directed edge start -> end + 1.
struct Block {
  int start = 1;
  int length = 1;
  int end(int n) const { return (start + length - 2) % n + 1; }
  int next(int n) const { return (start + length - 1) % n + 1; }
};

/// Throws unless v is 0/1 with cyclically consecutive support.
Block block_of_ray(const std::vector<long>& v);
std::vector<long> ray_of_block(const Block& b, int n);

struct CurvePiece {
  TropicalCurveFan fan;
  std::vector<int> cycle;  // (k_1 ... k_m), k_1 the smallest
};

/// Greedy chaining of blocks into simple cycles, lowest block index first.
/// Throws std::invalid_argument unless the fan is balanced and shape-valid.
/// The decomposition is not unique in general.
std::vector<CurvePiece> decompose_irreducible(const TropicalCurveFan& f);

struct SpeyerCoordinate {
  int sign = 1;
  std::vector<int> roots;  // multiset of root indices, sorted

  friend bool operator==(const SpeyerCoordinate&, const SpeyerCoordinate&) = default;
};

/// x_j = sign_j * prod_{k in roots_j} (u - r_k v), in coordinates rotated by `shift`:
/// original coordinate i sits at position ((i - 1 - shift) mod n) + 1.
struct SpeyerParam {
  int n = 0;
  int shift = 0;
  int root_count = 0;
  RationalVector root_constants;  // r_1, ..., r_l
  std::vector<SpeyerCoordinate> coordinates;

  std::string str() const;
};

/// Piece must be a single simple cycle. `root_constants` defaults to r_k = k and
/// must otherwise be strictly increasing. Signs alternate (+, -, +, ...).
SpeyerParam speyer_parametrization(const CurvePiece& piece, const std::optional<RationalVector>& root_constants = {});
/// Same, with all signs +1.
SpeyerParam unsigned_parametrization(const CurvePiece& piece);

/// Each step keeps the multiset or replaces exactly one s_i by s_{i+1};
/// each replacement s_i -> s_{i+1} (1 <= i < l) occurs exactly once.
bool verify_sequence_properties(const SpeyerParam& p);

/// Coordinates at (u, v).
std::vector<Complex> evaluate(const SpeyerParam& p, const Complex& u, const Complex& v);

struct SampleReport {
  int trials = 0;
  int bound = 0;  // required lower bound on varbar
  int min_varbar = 0;
  int max_var = 0;  // of the imaginary parts, as evaluated
  int violations = 0;
  std::optional<std::pair<Complex, Complex>> first_violation;
  std::string note;
};

/// u, v with real and imaginary parts p/q, p in [-10, 10], q in [1, 5].
/// Counts samples with varbar(Im x) < bound; bound defaults to n - 2.
SampleReport sample_varbar_check(const SpeyerParam& p, int trials, std::uint64_t seed, std::optional<int> bound = {});

/// Keeps coordinates a..b (1-based, inclusive). The bound for the
/// projection is |S| - 1 when all kept multisets coincide, else |S| - 2.
SpeyerParam project_consecutive(const SpeyerParam& p, int a, int b);
int projection_bound(const SpeyerParam& p);

/// Fan of the parametrization, one unit ray per root index, in the original
/// (unrotated) coordinates.
TropicalCurveFan tropicalize_param(const SpeyerParam& p);

struct RoundTrip {
  bool ok = false;
  std::vector<CurvePiece> pieces;
  std::vector<SpeyerParam> params;
  TropicalCurveFan reconstructed;
};

RoundTrip round_trip(const TropicalCurveFan& f);

}  // namespace trophyp
