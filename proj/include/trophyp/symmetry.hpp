#pragma once

// Signed coordinate permutations, the groups of them preserving a sign
// variation threshold, linear preservers via c x c minors, and toric
// varieties X_{lambda,A}.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trophyp/exactlin.hpp"
#include "trophyp/matroid.hpp"
#include "trophyp/signvar.hpp"

namespace trophyp {

/// phi(x)_i = signs_i * x_{perm_i}, perm 1-based.
struct SignedPermutation {
  int n = 0;
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int n);
  /// Throws std::invalid_argument unless perm is a bijection and signs are +-1.
  static SignedPermutation make(std::vector<int> perm, std::vector<int> signs);

  SignPattern apply(const SignPattern& s) const;
  RationalVector apply(const RationalVector& x) const;
  SignedPermutation inverse() const;
  int order() const;
  std::string str() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// (a * b)(x) = a(b(x)).
SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b);

SignedPermutation cyc(int c, int n);
SignedPermutation rev(int n);
SignedPermutation neg(int n);

/// varbar(x) < c implies varbar(phi(x)) < c, over all 3^n - 1 sign patterns.
bool preserves_threshold(const SignedPermutation& phi, int c);

/// Closure of the generators under composition.
std::vector<SignedPermutation> generated_group(const std::vector<SignedPermutation>& gens);

struct GroupReport {
  int n = 0;
  int c = 0;
  std::size_t order = 0;
  std::vector<SignedPermutation> generators;  // the reference generators compared against
  std::size_t generated_order = 0;
  bool generator_match = false;
  std::map<int, std::size_t> element_orders;  // order -> count
};

/// Brute force over all 2^n n! signed permutations (1 <= c <= n - 1, n <= 7).
/// Reference: <cyc_c, rev, -id> for 2 <= c <= n - 2, otherwise <S_n, -id>
/// (c = 1) or its sign-twisted copy (c = n - 1).
GroupReport preserver_subgroup(int n, int c, int jobs = 1);

struct MinorSignReport {
  bool preserves = false;
  std::optional<std::pair<Subset, Subset>> positive;  // rows, columns of a positive minor
  std::optional<std::pair<Subset, Subset>> negative;
};

/// All nonzero c x c minors share a sign. Throws unless m has full row rank and c <= rows.
MinorSignReport linear_map_preserves(const ExactMatrix& m, int c);

struct ToricVerdict {
  bool positively_hyperbolic = false;
  ExactMatrix reduced;               // RREF of A
  std::vector<Subset> row_supports;  // of the reduced matrix
  std::vector<int> lambda;           // +-1 witness when positive
  bool lambda_from_rule = false;     // false when the brute-force search produced lambda
  std::string reason;
};

/// Decides existence of lambda with X_{lambda,A} positively hyperbolic.
/// Throws std::invalid_argument when rank(A) < rows(A).
ToricVerdict toric_positively_hyperbolic(const ExactMatrix& a);

/// For every sign pattern of Im(t) in {-,0,+}^d, varbar(Im x) >= n - d, where
/// x = lambda * t^A for a reduced A with columns in {0, +-e_i}.
bool toric_sign_check(const ExactMatrix& reduced, const std::vector<int>& lambda);

struct ToricSampleReport {
  int trials = 0;
  int bound = 0;
  int min_varbar = 0;
  int violations = 0;
};

/// Samples t with complex rational entries (parts p/q, p in [-10, 10], q in [1, 5], t_i != 0).
ToricSampleReport toric_sample_check(const ExactMatrix& a, const std::vector<int>& lambda, int trials, std::uint64_t seed);

struct ToricMatroid {
  Matroid matroid;
  std::optional<bool> positroid;  // filled when A passes the toric test
};

ToricMatroid toric_algebraic_matroid(const ExactMatrix& a);

}  // namespace trophyp
