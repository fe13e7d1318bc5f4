#include <doctest.h>

#include <array>

#include "rauzy/enumerate.hpp"
#include "rauzy/simplex.hpp"
#include "rauzy/words.hpp"

using namespace rauzy;

namespace {

// Independent oracle: the projective maps straight from their coordinate
// formulas, in exact rational arithmetic. T_j sends coordinate j to
// 1/(2 - x_j) and divides the others by 2 - x_j.
BarycentricPoint map_formula(int j, const BarycentricPoint& x) {
  const Rational den = Rational(2) - x(j - 1);
  BarycentricPoint out;
  for (int i = 0; i < 3; ++i) out(i) = (i == j - 1 ? Rational(1) : x(i)) / den;
  return out;
}

BarycentricPoint normalize(const IntegerMatrix3& m, const BarycentricPoint& x) {
  BarycentricPoint y;
  Rational sum = 0;
  for (int r = 0; r < 3; ++r) {
    y(r) = 0;
    for (int c = 0; c < 3; ++c) y(r) += Rational(m(r, c)) * x(c);
    sum += y(r);
  }
  for (int r = 0; r < 3; ++r) y(r) /= sum;
  return y;
}

BarycentricPoint rational_point(unsigned a, unsigned b, unsigned c) {
  BarycentricPoint p;
  const Rational sum = Rational(a) + b + c;
  p(0) = Rational(a) / sum;
  p(1) = Rational(b) / sum;
  p(2) = Rational(c) / sum;
  return p;
}

}  // namespace

TEST_CASE("generator matrices realise the projective maps") {
  CHECK_THROWS_AS(generator_matrix(0), std::invalid_argument);
  CHECK_THROWS_AS(generator_matrix(4), std::invalid_argument);

  // Fixed rows per the linear lift: numerator 1 is replaced by the
  // coordinate sum.
  const IntegerMatrix3 m1 = generator_matrix(1);
  CHECK(m1(0, 0) == 1);
  CHECK(m1(0, 1) == 1);
  CHECK(m1(0, 2) == 1);
  CHECK(m1(1, 1) == 1);
  CHECK(m1(2, 2) == 1);
  CHECK(m1(1, 0) == 0);

  // 20 pseudo-random rational points plus the three corners.
  std::array<BarycentricPoint, 23> points;
  unsigned s = 7;
  for (int i = 0; i < 20; ++i) {
    const unsigned a = (s = s * 48271 % 2147483647) % 40;
    const unsigned b = (s = s * 48271 % 2147483647) % 40;
    const unsigned c = (s = s * 48271 % 2147483647) % 40 + 1;
    points[static_cast<std::size_t>(i)] = rational_point(a, b, c);
  }
  points[20] = rational_point(1, 0, 0);
  points[21] = rational_point(0, 1, 0);
  points[22] = rational_point(0, 0, 1);

  for (int j = 1; j <= 3; ++j) {
    const IntegerMatrix3 mj = generator_matrix(j);
    for (const auto& p : points) {
      const BarycentricPoint via_matrix = normalize(mj, p);
      const BarycentricPoint via_formula = map_formula(j, p);
      for (int i = 0; i < 3; ++i) CHECK(via_matrix(i) == via_formula(i));
    }
  }

  // (1,0,0) is the fixed point of the first map.
  const BarycentricPoint corner = rational_point(1, 0, 0);
  const BarycentricPoint image = normalize(m1, corner);
  CHECK(image(0) == 1);
  CHECK(image(1) == 0);
}

TEST_CASE("word matrices compose and do not commute") {
  CHECK(word_matrix(Word::of({1})) == generator_matrix(1));
  CHECK(word_matrix(Word{}) == IntegerMatrix3::Identity());

  // The square of the first map confines the first coordinate to [2/3, 1].
  const Triangle t11 = triangle_of(Word::of({1, 1}));
  for (const auto& v : t11.vertices) CHECK(v(0) >= Rational(2, 3));

  const Triangle t21 = triangle_of(Word::of({2, 1}));
  const Triangle t12 = triangle_of(Word::of({1, 2}));
  bool different = false;
  for (int i = 0; i < 3 && !different; ++i) {
    if (t21.vertices[static_cast<std::size_t>(i)] != t12.vertices[static_cast<std::size_t>(i)])
      different = true;
  }
  CHECK(different);
}

TEST_CASE("image triangle vertices") {
  const Triangle t = triangle_of(Word::of({1}));
  CHECK(t.vertices[0](0) == 1);
  CHECK(t.vertices[1](0) == Rational(1, 2));
  CHECK(t.vertices[1](1) == Rational(1, 2));
  CHECK(t.vertices[2](0) == Rational(1, 2));
  CHECK(t.vertices[2](2) == Rational(1, 2));

  // Empty word: the simplex itself.
  const Triangle id = triangle_of(Word{});
  CHECK(id.vertices[0](0) == 1);
  CHECK(id.vertices[1](1) == 1);
  CHECK(id.vertices[2](2) == 1);

  // Leading runs keep the first coordinate above k/(k+1); the corner stays.
  for (int k = 1; k <= 5; ++k) {
    const Triangle tk = triangle_of(Word::constant(1, k));
    CHECK(max_coordinate(tk, 1) == 1);
    Rational lo = 1;
    for (const auto& v : tk.vertices) lo = std::min(lo, Rational(v(0)));
    CHECK(lo == Rational(k, k + 1));
  }
}

TEST_CASE("area ratio: determinant route equals shoelace route") {
  CHECK(area_ratio(Word::of({1})) == Rational(1, 4));
  CHECK(area_ratio(Word{}) == 1);
  CHECK(area_ratio(Word::of({1, 1})) == Rational(1, 9));

  enumerate_words(5, [](const Word& w, const IntegerMatrix3& m) {
    const Rational det_route = area_ratio(m);
    const Rational shoelace = shoelace_area_ratio(vertices_of(m));
    CHECK(det_route == shoelace);
    CHECK(determinant(m) == 1);
    (void)w;
  });
}

TEST_CASE("diameter is the longest side with directed rounding") {
  const Triangle id = triangle_of(Word{});
  CHECK(max_squared_side(id.vertices) == 2);
  CHECK(diameter(id, Rounding::Down) <= std::sqrt(2.0));
  CHECK(diameter(id, Rounding::Up) >= std::sqrt(2.0));
  CHECK(diameter(id, Rounding::Up) - diameter(id, Rounding::Down) < 1e-14);

  const Triangle t1 = triangle_of(Word::of({1}));
  CHECK(max_squared_side(t1.vertices) == Rational(1, 2));
  CHECK(diameter(t1, Rounding::Nearest) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));

  // Invariance under the six coordinate permutations of the vertices.
  const std::array<std::array<int, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  const Triangle t = triangle_of(Word::of({1, 2, 3, 1}));
  const Rational base = max_squared_side(t.vertices);
  for (const auto& perm : perms) {
    std::array<BarycentricPoint, 3> shuffled;
    for (int i = 0; i < 3; ++i) {
      for (int c = 0; c < 3; ++c) {
        shuffled[static_cast<std::size_t>(i)](c) =
            t.vertices[static_cast<std::size_t>(i)](perm[static_cast<std::size_t>(c)]);
      }
    }
    CHECK(max_squared_side(shuffled) == base);
  }
}

TEST_CASE("run-class coordinate maxima") {
  // Words with leading run k of symbol 1 keep max x_1 <= (k+1)/(k+2).
  enumerate_words(5, [](const Word& w, const IntegerMatrix3& m) {
    const int k = leading_run(w);
    if (w[0] != 1 || k == w.size()) return;
    CHECK(max_coordinate_of(m, 1) <= Rational(k + 1, k + 2));
  });
}

TEST_CASE("images nest inside their first-symbol triangle") {
  enumerate_words(5, [](const Word& w, const IntegerMatrix3& m) {
    if (w.size() < 2) return;
    const IntegerMatrix3 outer = generator_matrix(w[0]);
    for (const auto& v : vertices_of(m)) CHECK(triangle_contains(outer, v));
    (void)m;
  });
}

TEST_CASE("column sums grow except at the repeated fixed column") {
  enumerate_words(4, [](const Word& w, const IntegerMatrix3& m) {
    const auto base = column_sums(m);
    for (int j = 1; j <= 3; ++j) {
      const auto grown = column_sums((m * generator_matrix(j)).eval());
      for (int c = 0; c < 3; ++c) {
        if (c == j - 1) {
          CHECK(grown[static_cast<std::size_t>(c)] == base[static_cast<std::size_t>(c)]);
        } else {
          CHECK(grown[static_cast<std::size_t>(c)] > base[static_cast<std::size_t>(c)]);
        }
      }
    }
    (void)w;
  });
}
