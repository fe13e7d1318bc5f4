#include "rauzy/rounding.hpp"

#include <cmath>

namespace rauzy {

double pow_dir(double base, double exponent, Rounding dir, double slack) {
  if (exponent == 0.0 || base == 1.0) return 1.0;
  if (exponent == 1.0) return base;
  const double v = std::pow(base, exponent);
  switch (dir) {
    case Rounding::Up:
      return next_up(next_up(v * (1.0 + slack)));
    case Rounding::Down: {
      double w = next_down(next_down(v * (1.0 - slack)));
      if (w < 0.0 && base >= 0.0) w = 0.0;
      return w;
    }
    default:
      return v;
  }
}

double lambda_exponent(Rounding dir) {
  // lambda = 3/2 - 3^{-1/2}. An upper bound needs a lower bound on 1/sqrt(3)
  // and vice versa; sqrt is correctly rounded so single ulp steps suffice.
  switch (dir) {
    case Rounding::Up: {
      const double inv_down = div_dir(1.0, sqrt_dir(3.0, Rounding::Up), Rounding::Down);
      return sub_dir(1.5, inv_down, Rounding::Up);
    }
    case Rounding::Down: {
      const double inv_up = div_dir(1.0, sqrt_dir(3.0, Rounding::Down), Rounding::Up);
      return sub_dir(1.5, inv_up, Rounding::Down);
    }
    default:
      return 1.5 - 1.0 / std::sqrt(3.0);
  }
}

double delta_threshold(Rounding dir) {
  switch (dir) {
    case Rounding::Up: {
      const double num = sub_dir(1.0, lambda_exponent(Rounding::Down), Rounding::Up);
      const double den = sub_dir(3.0, lambda_exponent(Rounding::Up), Rounding::Down);
      return div_dir(num, den, Rounding::Up);
    }
    case Rounding::Down: {
      const double num = sub_dir(1.0, lambda_exponent(Rounding::Up), Rounding::Down);
      const double den = sub_dir(3.0, lambda_exponent(Rounding::Down), Rounding::Up);
      return div_dir(num, den, Rounding::Down);
    }
    default: {
      const double l = lambda_exponent(Rounding::Nearest);
      return (1.0 - l) / (3.0 - l);
    }
  }
}

double round_up_decimals(double x, int places) {
  const double scale = std::pow(10.0, places);
  // The absolute fudge absorbs binary representation noise of x*scale; all
  // reported roots sit far further than 1e-9 from a decimal grid point.
  const double c = std::ceil(x * scale - 1e-9);
  return c / scale;
}

std::string_view to_string(Rounding dir) {
  switch (dir) {
    case Rounding::Up: return "up";
    case Rounding::Down: return "down";
    default: return "nearest";
  }
}

}  // namespace rauzy
