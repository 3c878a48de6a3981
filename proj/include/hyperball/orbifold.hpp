#pragma once

// 2-orbifolds in Conway notation and their orbifold Euler characteristic,
// kept exact over the rationals. Orders may be single digits or single-letter
// parameters (e.g. "*23u", "2u×", "uu××").

#include <boost/rational.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperball/error.hpp"

namespace hyperball {

using Rational = boost::rational<std::int64_t>;
using ParamValues = std::map<std::string, std::int64_t>;

/// A rotation or corner order: a constant, or a named parameter.
struct OrbifoldOrder {
  std::int64_t constant = 0;
  std::string param;

  std::int64_t evaluate(const ParamValues& values) const {
    if (param.empty()) return constant;
    auto it = values.find(param);
    if (it == values.end()) throw Error(ErrorKind::MissingParameter, "no value for parameter '" + param + "'");
    return it->second;
  }
  std::string str() const { return param.empty() ? std::to_string(constant) : param; }
};

struct OrbifoldSymbol {
  int handles = 0;
  int cross_caps = 0;
  std::vector<OrbifoldOrder> cone_orders;
  std::vector<std::vector<OrbifoldOrder>> boundary_components;
  std::string text;
};

enum class Geometry { Spherical, Euclidean, Hyperbolic };

constexpr std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::Spherical: return "Spherical";
    case Geometry::Euclidean: return "Euclidean";
    case Geometry::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

inline OrbifoldSymbol parse_orbifold(std::string_view text) {
  OrbifoldSymbol sym;
  sym.text = std::string(text);
  bool in_boundary = false;
  bool after_cross = false;
  auto push = [&](OrbifoldOrder o) {
    if (after_cross) throw Error(ErrorKind::ParseError, "order after cross cap in '" + sym.text + "'");
    if (in_boundary) sym.boundary_components.back().push_back(std::move(o));
    else sym.cone_orders.push_back(std::move(o));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == ' ') continue;
    if (ch == '*') {
      sym.boundary_components.emplace_back();
      in_boundary = true;
    } else if (ch == 'x' || ch == 'X') {
      ++sym.cross_caps;
      after_cross = true;
    } else if (text.substr(i, 2) == "\xC3\x97") {  // U+00D7
      ++sym.cross_caps;
      after_cross = true;
      ++i;
    } else if (ch == 'o') {
      if (in_boundary || !sym.cone_orders.empty()) {
        throw Error(ErrorKind::ParseError, "handle must lead in '" + sym.text + "'");
      }
      ++sym.handles;
    } else if (ch >= '1' && ch <= '9') {
      push({ch - '0', {}});
    } else if (ch >= 'a' && ch <= 'z') {
      push({0, std::string(1, ch)});
    } else {
      throw Error(ErrorKind::ParseError, "unexpected character in orbifold symbol '" + sym.text + "'");
    }
  }
  return sym;
}

/// chi = 2 - 2 handles - cross caps - sum(1 - 1/n) - sum_boundary(1 + sum(1 - 1/m) / 2).
inline Rational orbifold_chi(const OrbifoldSymbol& sym, const ParamValues& values = {}) {
  Rational chi(2 - 2 * sym.handles - sym.cross_caps);
  for (const auto& n : sym.cone_orders) chi -= Rational(1) - Rational(1, n.evaluate(values));
  for (const auto& b : sym.boundary_components) {
    Rational corners(0);
    for (const auto& m : b) corners += Rational(1) - Rational(1, m.evaluate(values));
    chi -= Rational(1) + corners / 2;
  }
  return chi;
}

inline Geometry classify(const Rational& chi) {
  if (chi > Rational(0)) return Geometry::Spherical;
  if (chi == Rational(0)) return Geometry::Euclidean;
  return Geometry::Hyperbolic;
}

/// Area as a rational multiple of pi: -2 chi.
inline Rational orbifold_area_pi(const Rational& chi) { return Rational(-2) * chi; }

}  // namespace hyperball
