#pragma once

// JSON encodings of the library types. Rationals are canonical "p/q"
// strings; subsets are sorted 1-based index lists.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trophyp/bergman.hpp"
#include "trophyp/curves.hpp"
#include "trophyp/exactlin.hpp"
#include "trophyp/matroid.hpp"
#include "trophyp/stability.hpp"
#include "trophyp/symmetry.hpp"

namespace trophyp {

using Json = nlohmann::ordered_json;

/// Malformed or ill-typed input. Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses text, reporting the byte offset of a syntax error.
Json parse_json_text(const std::string& text, const std::string& origin = "input");
Json read_json_file(const std::string& path);

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json vector_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);
/// Accepts "1,-2,1/3" or a JSON array.
RationalVector parse_vector_arg(const std::string& text);

Json subset_json(Subset s);
Subset subset_from_json(const Json& j, int n);

Json matrix_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);
ComplexMatrix complex_matrix_from_json(const Json& j);  // {"re": matrix, "im": matrix} or a plain matrix

Json matroid_json(const Matroid& m);
/// Validates the exchange axiom; a violation surfaces as MatroidError.
Matroid matroid_from_json(const Json& j);
Json partition_json(const CyclicPartition& p);
Json face_json(const FaceMatroid& f);
Json cone_json(const BergmanCone& c);

Json exponent_json(const Exponent& e);
Json complex_json(const Complex& z);  // {"re", "im"}
Json lattice_polynomial_json(const LatticePolynomial& f);
Json valued_polynomial_json(const ValuedPolynomial& f);
/// Each term: "exp" plus either "val"/"re"/"im", "coeff", or "t_coeffs"
/// (coefficients of 1, t, t^2, ... of a polynomial in t).
ValuedPolynomial valued_polynomial_from_json(const Json& j);
/// Requires every valuation to be 0.
LatticePolynomial lattice_polynomial_from_json(const Json& j);
Json point_set_json(const LatticePointSet& s);
LatticePointSet point_set_from_json(const Json& j);

Json curve_fan_json(const TropicalCurveFan& f);
TropicalCurveFan curve_fan_from_json(const Json& j);
Json speyer_json(const SpeyerParam& p);
SpeyerParam speyer_from_json(const Json& j);

Json signed_permutation_json(const SignedPermutation& p);
SignedPermutation signed_permutation_from_json(const Json& j);

}  // namespace trophyp
