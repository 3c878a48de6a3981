#pragma once

// Coxeter-Schlafli matrix of a complete orthoscheme {u,v,w}, its inverse (the
// co-metric carrying all projective distances) and the sign analysis of the
// vertices that decides which of them get truncated by their polar planes.

#include <Eigen/Dense>

#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "hyperball/error.hpp"

namespace hyperball {

/// One Schlafli parameter: an integer order >= 2, or infinity (dihedral angle 0).
class SchlafliParam {
 public:
  static SchlafliParam infinite() { return SchlafliParam(); }

  explicit SchlafliParam(int order) : order_(order) {
    if (order < 2) {
      throw Error(ErrorKind::InvalidSymbol, "Schlafli parameter must be >= 2, got " + std::to_string(order));
    }
  }

  bool is_infinite() const { return !order_.has_value(); }
  int order() const { return *order_; }

  /// Dihedral angle pi/n, exactly 0 for infinity.
  double angle() const { return is_infinite() ? 0.0 : std::numbers::pi / *order_; }

  /// cos(pi/n) with the exact values at n = 2 and n = infinity.
  double cos_angle() const {
    if (is_infinite()) return 1.0;
    if (*order_ == 2) return 0.0;
    return std::cos(angle());
  }
  double sin_angle() const {
    if (is_infinite()) return 0.0;
    if (*order_ == 2) return 1.0;
    return std::sin(angle());
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(*order_); }

  friend bool operator==(const SchlafliParam&, const SchlafliParam&) = default;
  friend auto operator<=>(const SchlafliParam& a, const SchlafliParam& b) {
    // infinity sorts after every finite order
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
    return a.order() <=> b.order();
  }

 private:
  SchlafliParam() = default;
  std::optional<int> order_;
};

struct SchlafliSymbol {
  SchlafliParam u;
  SchlafliParam v;
  SchlafliParam w;

  SchlafliSymbol(SchlafliParam u_, SchlafliParam v_, SchlafliParam w_) : u(u_), v(v_), w(w_) {}
  SchlafliSymbol(int u_, int v_, int w_) : u(u_), v(v_), w(w_) {}

  SchlafliSymbol reversed() const { return {w, v, u}; }

  std::string str() const { return u.str() + "," + v.str() + "," + w.str(); }

  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;
  friend auto operator<=>(const SchlafliSymbol& a, const SchlafliSymbol& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return a.w <=> b.w;
  }
};

inline std::ostream& operator<<(std::ostream& os, const SchlafliSymbol& s) { return os << "{" << s.str() << "}"; }

/// Parses "u,v,w"; each entry is an integer >= 2 or "inf".
inline SchlafliSymbol parse_schlafli(std::string_view text) {
  std::array<std::optional<SchlafliParam>, 3> out;
  std::size_t idx = 0;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto tok = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (idx >= 3) throw Error(ErrorKind::InvalidSymbol, "expected three parameters in '" + std::string(text) + "'");
    if (tok == "inf" || tok == "infinity" || tok == "oo") {
      out[idx] = SchlafliParam::infinite();
    } else {
      int n = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw Error(ErrorKind::InvalidSymbol, "bad Schlafli parameter '" + std::string(tok) + "'");
      }
      out[idx] = SchlafliParam(n);
    }
    ++idx;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (idx != 3) throw Error(ErrorKind::InvalidSymbol, "expected three parameters in '" + std::string(text) + "'");
  return {*out[0], *out[1], *out[2]};
}

using Matrix4 = Eigen::Matrix4d;

struct GramMatrix {
  Matrix4 entries;
  double determinant = 0.0;
};

struct CoMetric {
  Matrix4 entries;
  SchlafliSymbol source;

  double operator()(int i, int j) const { return entries(i, j); }
};

enum class VertexClass { Proper, Ideal, Outer };

constexpr std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::Proper: return "Proper";
    case VertexClass::Ideal: return "Ideal";
    case VertexClass::Outer: return "Outer";
  }
  return "?";
}

using VertexClasses = std::array<VertexClass, 4>;

enum class Realizability {
  CompactTruncHyperbolic,  // B < 0 and at least one outer vertex to cut off
  ProperHyperbolic,        // B < 0, every vertex proper: nothing to truncate
  DegenerateEuclidean,     // B = 0, or a Euclidean vertex figure with nothing outer
  NotHyperbolic,           // B > 0, spherical
};

constexpr std::string_view to_string(Realizability r) {
  switch (r) {
    case Realizability::CompactTruncHyperbolic: return "CompactTruncHyperbolic";
    case Realizability::ProperHyperbolic: return "ProperHyperbolic";
    case Realizability::DegenerateEuclidean: return "DegenerateEuclidean";
    case Realizability::NotHyperbolic: return "NotHyperbolic";
  }
  return "?";
}

inline constexpr double kSingularTol = 1e-14;
inline constexpr double kIdealTol = 1e-10;
inline constexpr double kDeterminantTol = 1e-12;

/// b^ii = 1, b^{i,i+1} = -cos of the essential angle, all else 0.
inline GramMatrix build_gram(const SchlafliSymbol& sym) {
  GramMatrix g;
  g.entries.setIdentity();
  const double c01 = -sym.u.cos_angle();
  const double c12 = -sym.v.cos_angle();
  const double c23 = -sym.w.cos_angle();
  g.entries(0, 1) = g.entries(1, 0) = c01;
  g.entries(1, 2) = g.entries(2, 1) = c12;
  g.entries(2, 3) = g.entries(3, 2) = c23;
  g.determinant = g.entries.determinant();
  return g;
}

inline double gram_determinant(const GramMatrix& g) { return g.entries.determinant(); }

/// Closed form sin^2(pi/u) sin^2(pi/w) - cos^2(pi/v).
inline double gram_determinant_closed_form(const SchlafliSymbol& s) {
  const double su = s.u.sin_angle(), sw = s.w.sin_angle(), cv = s.v.cos_angle();
  return su * su * sw * sw - cv * cv;
}

inline CoMetric invert_gram(const GramMatrix& g, const SchlafliSymbol& source) {
  const double det = g.entries.determinant();
  if (std::abs(det) < kSingularTol) {
    throw Error(ErrorKind::SingularMatrix, "Gram matrix of {" + source.str() + "} has vanishing determinant");
  }
  Matrix4 inv = g.entries.fullPivLu().inverse();
  inv = 0.5 * (inv + inv.transpose()).eval();
  return CoMetric{inv, source};
}

inline CoMetric cometric(const SchlafliSymbol& sym) { return invert_gram(build_gram(sym), sym); }

/// Sign of a_ii decides the vertex type; the ideal band is relative to max |a_jj|.
inline VertexClasses classify_vertices(const CoMetric& c) {
  double scale = 0.0;
  for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(c(j, j)));
  VertexClasses out{};
  for (int i = 0; i < 4; ++i) {
    const double a = scale > 0.0 ? c(i, i) / scale : c(i, i);
    if (std::abs(a) < kIdealTol) {
      out[i] = VertexClass::Ideal;
    } else {
      out[i] = a < 0.0 ? VertexClass::Proper : VertexClass::Outer;
    }
  }
  return out;
}

/// Counts of positive and negative eigenvalues of the Gram form.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

inline Signature signature(const GramMatrix& g) {
  Eigen::SelfAdjointEigenSolver<Matrix4> es(g.entries, Eigen::EigenvaluesOnly);
  Signature s;
  for (int i = 0; i < 4; ++i) {
    const double ev = es.eigenvalues()(i);
    if (std::abs(ev) < kDeterminantTol) ++s.zero;
    else if (ev > 0) ++s.positive;
    else ++s.negative;
  }
  return s;
}

inline Realizability realizability(const SchlafliSymbol& sym) {
  const double det = gram_determinant_closed_form(sym);
  if (det > kDeterminantTol) return Realizability::NotHyperbolic;
  if (det >= -kDeterminantTol) return Realizability::DegenerateEuclidean;
  const auto classes = classify_vertices(cometric(sym));
  bool outer = false, ideal = false;
  for (auto c : classes) {
    outer = outer || c == VertexClass::Outer;
    ideal = ideal || c == VertexClass::Ideal;
  }
  if (outer) return Realizability::CompactTruncHyperbolic;
  if (ideal) return Realizability::DegenerateEuclidean;
  return Realizability::ProperHyperbolic;
}

}  // namespace hyperball
