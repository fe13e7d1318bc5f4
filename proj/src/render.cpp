#include "rauzy/render.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rauzy/enumerate.hpp"
#include "rauzy/simplex.hpp"

namespace rauzy {

namespace {

constexpr double kSide = 920.0;
constexpr double kMarginX = 40.0;
constexpr double kBottom = 840.0;

// Barycentric (x1,x2,x3) -> pixel: corner 1 at the lower left, corner 2 at
// the lower right, corner 3 on top.
void emit_point(std::ostream& os, const BarycentricPoint& p, bool first) {
  const double x2 = to_double(p(1), Rounding::Nearest);
  const double x3 = to_double(p(2), Rounding::Nearest);
  const double u = x2 + 0.5 * x3;
  const double v = x3 * (std::sqrt(3.0) / 2.0);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%.3f,%.3f", first ? "" : " ", kMarginX + kSide * u,
                kBottom - kSide * v);
  os << buf;
}

void emit_triangle(std::ostream& os, const std::array<BarycentricPoint, 3>& verts,
                   const char* style) {
  os << "<polygon points=\"";
  for (int i = 0; i < 3; ++i) emit_point(os, verts[static_cast<std::size_t>(i)], i == 0);
  os << "\" " << style << "/>\n";
}

}  // namespace

void render_gasket_svg(int n, std::ostream& os, int enumeration_cap) {
  if (n < 0 || n > enumeration_cap) {
    throw std::invalid_argument("render depth outside the enumeration cap");
  }
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"880\" "
        "viewBox=\"0 0 1000 880\">\n";
  os << "<rect width=\"1000\" height=\"880\" fill=\"white\"/>\n";

  const IntegerMatrix3 id = IntegerMatrix3::Identity();
  emit_triangle(os, vertices_of(id), "fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"");
  if (n == 0) {
    emit_triangle(os, vertices_of(id),
                  "fill=\"#2b6cb0\" fill-opacity=\"0.85\" stroke=\"none\"");
  } else {
    enumerate_words(n, [&](const Word& w, const IntegerMatrix3& m) {
      if (w.size() != n) return;
      emit_triangle(os, vertices_of(m),
                    "fill=\"#2b6cb0\" fill-opacity=\"0.85\" stroke=\"none\"");
    });
  }
  os << "</svg>\n";
}

}  // namespace rauzy
