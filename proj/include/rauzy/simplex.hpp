#pragma once

#include <Eigen/Core>
#include <array>

#include "rauzy/eigen_bignum.hpp"
#include "rauzy/rational.hpp"
#include "rauzy/rounding.hpp"
#include "rauzy/word.hpp"

namespace rauzy {

// Linear lifts of the projectivised maps and the exact geometry of their
// image triangles. All vertex arithmetic is exact rational on top of
// arbitrary-precision integer matrices; only metrically irrational outputs
// (diameters) pass through directed floating point.

using IntegerMatrix3 = Eigen::Matrix<BigInt, 3, 3>;
using BarycentricPoint = Eigen::Matrix<Rational, 3, 1>;

struct Triangle {
  Word word;
  std::array<BarycentricPoint, 3> vertices;
};

// Linear representative of the map with index j: normalising M_j x to
// coordinate sum 1 reproduces the projective map on the simplex.
IntegerMatrix3 generator_matrix(int j);

// Product of generator matrices in composition order; identity for the
// empty word.
IntegerMatrix3 word_matrix(const Word& w);

BigInt determinant(const IntegerMatrix3& m);
std::array<BigInt, 3> column_sums(const IntegerMatrix3& m);

// Normalised columns; column sums are strictly positive for every word.
std::array<BarycentricPoint, 3> vertices_of(const IntegerMatrix3& m);

Triangle triangle_of(const Word& w);

// area(image)/area(simplex) = |det M| / (c1 c2 c3), exact.
Rational area_ratio(const IntegerMatrix3& m);
Rational area_ratio(const Word& w);

// Independent algebraic route for the same ratio, from the embedded
// vertices via the cross product; used as an oracle against the
// determinant/column-sum formula.
Rational shoelace_area_ratio(const std::array<BarycentricPoint, 3>& vertices);

// Exact squared Euclidean distances (ambient metric of R^3) between the
// three vertex pairs, and the directed-rounded diameter (longest side).
Rational max_squared_side(const std::array<BarycentricPoint, 3>& vertices);
double diameter(const std::array<BarycentricPoint, 3>& vertices, Rounding dir);
double diameter(const Triangle& t, Rounding dir);

// Max of coordinate j over the triangle; a linear functional attains its
// maximum over a triangle at a vertex, so this is exact.
Rational max_coordinate(const std::array<BarycentricPoint, 3>& vertices, int j);
Rational max_coordinate(const Triangle& t, int j);
Rational max_coordinate_of(const IntegerMatrix3& m, int j);

// Exact containment of a point in the image triangle of `outer`.
bool triangle_contains(const IntegerMatrix3& outer, const BarycentricPoint& p);

// area(simplex) = sqrt(3)/2 under the declared normalisation.
double simplex_area(Rounding dir);

}  // namespace rauzy
