#pragma once

// Lobachevsky function L(x) = -int_0^x log|2 sin t| dt.
//
// L is odd, pi-periodic and satisfies L(pi - x) = -L(x), so every argument
// folds into [0, pi/2]. There the expansion
//   log(2 sin t) = log(2t) - sum_k zeta(2k)/k (t/pi)^(2k)
// integrates to a power series whose ratio is at most 1/4.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperball/error.hpp"

namespace hyperball {

/// A finite angle in radians; NaN and infinities are rejected.
class Angle {
 public:
  explicit Angle(double radians) : value_(radians) {
    if (!std::isfinite(radians)) {
      throw Error(ErrorKind::NonFiniteInput, "angle must be finite");
    }
  }
  double value() const { return value_; }

 private:
  double value_;
};

namespace detail {

// zeta(2k) / (k (2k + 1)) for k = 1..30
inline constexpr std::array<double, 30> kLobCoeff = {
    0.548311355616075478824,
    0.108232323371113819152,
    0.0484449077135451971293,
    0.0278910376721651205383,
    0.0181999013659603288243,
    0.0128236677763244621577,
    0.00952439283938151147456,
    0.0073530535460250636167,
    0.0058479755397266959055,
    0.00476190930458111367998,
    0.00395257011245257995151,
    0.00333333353202729683753,
    0.00284900289145742116343,
    0.00246305419636781779505,
    0.00215053763641145684391,
    0.00189393939438036208971,
    0.00168067226900539112753,
    0.00150150150152335123407,
    0.00134952766532204855539,
    0.00121951219512306035949,
    0.00110741971207112665967,
    0.00101010101010106751861,
    0.000925069380203528409671,
    0.000850340136054424789723,
    0.000784313725490196775042,
    0.000725689404934688114691,
    0.000673400673400673438055,
    0.000626566416040100259322,
    0.000584453535943892462577,
    0.000546448087431693989545,
};

// L on [0, pi/2].
inline double lob_reduced(double x) {
  if (x == 0.0) return 0.0;
  const double r2 = (x / std::numbers::pi) * (x / std::numbers::pi);
  // Kahan summation of the series tail, smallest terms first
  std::array<double, kLobCoeff.size()> terms{};
  double p = x;
  for (std::size_t k = 0; k < kLobCoeff.size(); ++k) {
    p *= r2;
    terms[k] = kLobCoeff[k] * p;
  }
  double sum = 0.0, comp = 0.0;
  for (std::size_t k = terms.size(); k-- > 0;) {
    const double y = terms[k] - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return x - x * std::log(2.0 * x) + sum;
}

}  // namespace detail

inline double lob(Angle a) {
  constexpr double pi = std::numbers::pi;
  double x = std::fmod(a.value(), pi);
  if (x < 0.0) x += pi;
  // x in [0, pi)
  if (x > 0.5 * pi) return -detail::lob_reduced(pi - x);
  return detail::lob_reduced(x);
}

inline double lob(double x) { return lob(Angle(x)); }

}  // namespace hyperball
