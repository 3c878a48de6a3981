#pragma once

// Kellerhals' closed form for the volume of a complete (truncated)
// orthoscheme, curvature -1.

#include <array>
#include <cmath>
#include <numbers>

#include "hyperball/error.hpp"
#include "hyperball/lobachevsky.hpp"
#include "hyperball/schlafli.hpp"

namespace hyperball {

struct VolumeBreakdown {
  double theta = 0.0;
  std::array<double, 7> terms{};  // signed, the last already doubled
  double volume = 0.0;
};

/// tan(theta) = sqrt(cos^2 b12 - sin^2 b01 sin^2 b23) / (cos b01 cos b23).
inline double theta(const SchlafliSymbol& sym) {
  const double radicand = -gram_determinant_closed_form(sym);
  if (!(radicand > kDeterminantTol)) {
    throw Error(ErrorKind::NotRealizable, "{" + sym.str() + "} is not a hyperbolic orthoscheme (-B <= 0)");
  }
  const double denom = sym.u.cos_angle() * sym.w.cos_angle();
  if (denom == 0.0) {
    throw Error(ErrorKind::DivisionByZero, "{" + sym.str() + "} has a right essential angle at an end edge");
  }
  return std::atan2(std::sqrt(radicand), denom);
}

inline VolumeBreakdown orthoscheme_volume(const SchlafliSymbol& sym) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  VolumeBreakdown out;
  const double t = theta(sym);
  const double b01 = sym.u.angle(), b12 = sym.v.angle(), b23 = sym.w.angle();
  out.theta = t;
  out.terms = {
      lob(b01 + t),
      -lob(b01 - t),
      lob(half_pi + b12 - t),
      lob(half_pi - b12 - t),
      lob(b23 + t),
      -lob(b23 - t),
      2.0 * lob(half_pi - t),
  };
  double sum = 0.0;
  for (double term : out.terms) sum += term;
  out.volume = 0.25 * sum;
  return out;
}

}  // namespace hyperball
