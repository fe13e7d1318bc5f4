#include "rauzy/simplex.hpp"

#include <stdexcept>

namespace rauzy {

IntegerMatrix3 generator_matrix(int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("generator index must be 1, 2 or 3");
  IntegerMatrix3 m = IntegerMatrix3::Identity();
  for (int c = 0; c < 3; ++c) m(j - 1, c) = 1;
  return m;
}

IntegerMatrix3 word_matrix(const Word& w) {
  IntegerMatrix3 m = IntegerMatrix3::Identity();
  for (int i = 0; i < w.size(); ++i) m = (m * generator_matrix(w[i])).eval();
  return m;
}

BigInt determinant(const IntegerMatrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::array<BigInt, 3> column_sums(const IntegerMatrix3& m) {
  std::array<BigInt, 3> s;
  for (int c = 0; c < 3; ++c) s[static_cast<std::size_t>(c)] = m(0, c) + m(1, c) + m(2, c);
  return s;
}

std::array<BarycentricPoint, 3> vertices_of(const IntegerMatrix3& m) {
  const auto cs = column_sums(m);
  std::array<BarycentricPoint, 3> out;
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      out[static_cast<std::size_t>(c)](r) = Rational(m(r, c), cs[static_cast<std::size_t>(c)]);
    }
  }
  return out;
}

Triangle triangle_of(const Word& w) { return Triangle{w, vertices_of(word_matrix(w))}; }

Rational area_ratio(const IntegerMatrix3& m) {
  BigInt det = determinant(m);
  if (det < 0) det = -det;
  const auto cs = column_sums(m);
  return Rational(det, cs[0] * cs[1] * cs[2]);
}

Rational area_ratio(const Word& w) { return area_ratio(word_matrix(w)); }

Rational shoelace_area_ratio(const std::array<BarycentricPoint, 3>& v) {
  // Edge vectors lie in the plane of coordinate sum zero, so their cross
  // product is a multiple of (1,1,1); that multiple is the area ratio.
  const BarycentricPoint u = v[1] - v[0];
  const BarycentricPoint w = v[2] - v[0];
  Rational mu = u(1) * w(2) - u(2) * w(1);
  if (mu < 0) mu = -mu;
  return mu;
}

Rational max_squared_side(const std::array<BarycentricPoint, 3>& v) {
  Rational best = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      Rational d2 = 0;
      for (int i = 0; i < 3; ++i) {
        const Rational diff = v[static_cast<std::size_t>(a)](i) - v[static_cast<std::size_t>(b)](i);
        d2 += diff * diff;
      }
      if (d2 > best) best = d2;
    }
  }
  return best;
}

double diameter(const std::array<BarycentricPoint, 3>& v, Rounding dir) {
  // The diameter of a triangle is its longest side; the max is taken on the
  // exact squared lengths, so only the final sqrt is rounded.
  return sqrt_dir(to_double(max_squared_side(v), dir), dir);
}

double diameter(const Triangle& t, Rounding dir) { return diameter(t.vertices, dir); }

Rational max_coordinate(const std::array<BarycentricPoint, 3>& v, int j) {
  if (j < 1 || j > 3) throw std::invalid_argument("coordinate index must be 1, 2 or 3");
  Rational best = v[0](j - 1);
  for (int c = 1; c < 3; ++c) {
    if (v[static_cast<std::size_t>(c)](j - 1) > best) best = v[static_cast<std::size_t>(c)](j - 1);
  }
  return best;
}

Rational max_coordinate(const Triangle& t, int j) { return max_coordinate(t.vertices, j); }

Rational max_coordinate_of(const IntegerMatrix3& m, int j) {
  return max_coordinate(vertices_of(m), j);
}

bool triangle_contains(const IntegerMatrix3& outer, const BarycentricPoint& p) {
  // Solve outer * alpha = p via the adjugate; containment only needs the
  // signs of alpha, so no normalisation is required.
  IntegerMatrix3 adj;
  adj(0, 0) = outer(1, 1) * outer(2, 2) - outer(1, 2) * outer(2, 1);
  adj(0, 1) = outer(0, 2) * outer(2, 1) - outer(0, 1) * outer(2, 2);
  adj(0, 2) = outer(0, 1) * outer(1, 2) - outer(0, 2) * outer(1, 1);
  adj(1, 0) = outer(1, 2) * outer(2, 0) - outer(1, 0) * outer(2, 2);
  adj(1, 1) = outer(0, 0) * outer(2, 2) - outer(0, 2) * outer(2, 0);
  adj(1, 2) = outer(0, 2) * outer(1, 0) - outer(0, 0) * outer(1, 2);
  adj(2, 0) = outer(1, 0) * outer(2, 1) - outer(1, 1) * outer(2, 0);
  adj(2, 1) = outer(0, 1) * outer(2, 0) - outer(0, 0) * outer(2, 1);
  adj(2, 2) = outer(0, 0) * outer(1, 1) - outer(0, 1) * outer(1, 0);
  const BigInt det = determinant(outer);
  if (det == 0) throw std::invalid_argument("degenerate outer triangle");
  for (int r = 0; r < 3; ++r) {
    Rational alpha = 0;
    for (int c = 0; c < 3; ++c) alpha += Rational(adj(r, c)) * p(c);
    if (det < 0) alpha = -alpha;
    if (alpha < 0) return false;
  }
  return true;
}

double simplex_area(Rounding dir) {
  return div_dir(sqrt_dir(3.0, dir), 2.0, dir);
}

}  // namespace rauzy
