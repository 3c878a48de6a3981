#pragma once

// Projective-metric distances over the co-metric (a_ij), the named points of a
// trunc-orthoscheme, and the optimal hyperball heights of families F1..F4.
//
// Coordinates are taken in the basis of the vertex vectors a_0..a_3, so the
// bilinear form is (a_ij) itself. The pole of the polar plane of an outer
// vertex A_i is the vertex vector a_i.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperball/error.hpp"
#include "hyperball/schlafli.hpp"

namespace hyperball {

using Vector4 = Eigen::Vector4d;

enum class PointKind { Point, PlanePole };

struct MetricVector {
  Vector4 coords;
  PointKind kind = PointKind::Point;

  static MetricVector point(const Vector4& c) { return {c, PointKind::Point}; }
  static MetricVector pole(const Vector4& c) { return {c, PointKind::PlanePole}; }
  static MetricVector basis(int i, PointKind k = PointKind::Point) { return {Vector4::Unit(i), k}; }
};

inline double inner(const CoMetric& c, const Vector4& x, const Vector4& y) { return x.dot(c.entries * y); }

inline constexpr double kClampTol = 1e-12;

namespace detail {

inline double self_scale(const CoMetric& c) { return c.entries.cwiseAbs().maxCoeff(); }

inline void require_point(const CoMetric& c, const MetricVector& x) {
  const double xx = inner(c, x.coords, x.coords);
  if (x.kind != PointKind::Point || !(xx < -kClampTol * self_scale(c) * x.coords.squaredNorm())) {
    throw Error(ErrorKind::NotProperPoint, "vector is not a proper point (<x,x> must be negative)");
  }
}

inline void require_pole(const CoMetric& c, const MetricVector& p) {
  const double pp = inner(c, p.coords, p.coords);
  if (p.kind != PointKind::PlanePole || !(pp > kClampTol * self_scale(c) * p.coords.squaredNorm())) {
    throw Error(ErrorKind::NotPlanePole, "vector is not a plane pole (<p,p> must be positive)");
  }
}

}  // namespace detail

/// arccosh(-<x,y> / sqrt(<x,x><y,y>)).
inline double dist_point_point(const CoMetric& c, const MetricVector& x, const MetricVector& y) {
  detail::require_point(c, x);
  detail::require_point(c, y);
  const double arg = -inner(c, x.coords, y.coords) /
                     std::sqrt(inner(c, x.coords, x.coords) * inner(c, y.coords, y.coords));
  if (arg < 1.0 - kClampTol) {
    throw Error(ErrorKind::ArgumentBelowOne, "arccosh argument " + std::to_string(arg) + " below 1");
  }
  return std::acosh(std::max(arg, 1.0));
}

/// arcsinh(|<x,p>| / sqrt(-<x,x><p,p>)).
inline double dist_point_plane(const CoMetric& c, const MetricVector& x, const MetricVector& p) {
  detail::require_point(c, x);
  detail::require_pole(c, p);
  const double arg = std::abs(inner(c, x.coords, p.coords)) /
                     std::sqrt(-inner(c, x.coords, x.coords) * inner(c, p.coords, p.coords));
  return std::asinh(arg);
}

/// Distance of ultraparallel planes: arccosh(|<p,q>| / sqrt(<p,p><q,q>)).
inline double dist_plane_plane(const CoMetric& c, const MetricVector& p, const MetricVector& q) {
  detail::require_pole(c, p);
  detail::require_pole(c, q);
  const double arg = std::abs(inner(c, p.coords, q.coords)) /
                     std::sqrt(inner(c, p.coords, p.coords) * inner(c, q.coords, q.coords));
  if (arg < 1.0 - kClampTol) {
    throw Error(ErrorKind::PlanesIntersect, "planes intersect (quotient " + std::to_string(arg) + " < 1)");
  }
  return std::acosh(std::max(arg, 1.0));
}

/// Orthogonal projection of x onto the plane with pole p.
inline Vector4 foot(const CoMetric& c, const Vector4& x, const Vector4& p) {
  return x - (inner(c, x, p) / inner(c, p, p)) * p;
}

enum class Family { F1, F2, F3, F4 };

constexpr std::string_view to_string(Family f) {
  switch (f) {
    case Family::F1: return "F1";
    case Family::F2: return "F2";
    case Family::F3: return "F3";
    case Family::F4: return "F4";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "F1") return Family::F1;
  if (s == "F2") return Family::F2;
  if (s == "F3") return Family::F3;
  if (s == "F4") return Family::F4;
  throw Error(ErrorKind::UnknownSeries, "unknown family '" + std::string(s) + "'");
}

struct TruncOrthoscheme {
  SchlafliSymbol sym;
  CoMetric cometric;
  VertexClasses classes;
  std::array<MetricVector, 4> vertices;
  std::optional<MetricVector> pole0;  // polar plane a_0 of an outer A_0
  std::optional<MetricVector> pole3;  // polar plane a_3 of an outer A_3
  MetricVector f03;                   // a_0 + a_3
  MetricVector f12;                   // a_1 + a_2
  std::optional<MetricVector> c;      // foot of A_1 on a_0
  std::optional<MetricVector> h;      // line A_0A_3 meets a_0
  std::optional<MetricVector> j;      // line A_0A_3 meets a_3
  std::optional<MetricVector> q;      // foot of A_2 on a_3

  const MetricVector& require_pole0() const {
    if (!pole0) throw Error(ErrorKind::VertexNotTruncated, "A_0 of {" + sym.str() + "} is not an outer vertex");
    return *pole0;
  }
  const MetricVector& require_pole3() const {
    if (!pole3) throw Error(ErrorKind::VertexNotTruncated, "A_3 of {" + sym.str() + "} is not an outer vertex");
    return *pole3;
  }
};

inline TruncOrthoscheme make_trunc_orthoscheme(const SchlafliSymbol& sym) {
  if (!(gram_determinant_closed_form(sym) < -kDeterminantTol)) {
    throw Error(ErrorKind::NotRealizable, "{" + sym.str() + "} is not hyperbolic");
  }
  CoMetric cm = cometric(sym);
  const VertexClasses cls = classify_vertices(cm);
  auto e = [](int i) { return Vector4(Vector4::Unit(i)); };
  TruncOrthoscheme t{sym,
                     cm,
                     cls,
                     {MetricVector::basis(0), MetricVector::basis(1), MetricVector::basis(2), MetricVector::basis(3)},
                     std::nullopt,
                     std::nullopt,
                     MetricVector::point(e(0) + e(3)),
                     MetricVector::point(e(1) + e(2)),
                     std::nullopt,
                     std::nullopt,
                     std::nullopt,
                     std::nullopt};
  if (cls[0] == VertexClass::Outer) {
    t.pole0 = MetricVector::pole(e(0));
    t.c = MetricVector::point(foot(cm, e(1), e(0)));
    t.h = MetricVector::point(foot(cm, e(3), e(0)));
  }
  if (cls[3] == VertexClass::Outer) {
    t.pole3 = MetricVector::pole(e(3));
    t.j = MetricVector::point(foot(cm, e(0), e(3)));
    t.q = MetricVector::point(foot(cm, e(2), e(3)));
  }
  return t;
}

inline void check_family(Family fam, const SchlafliSymbol& s) {
  const auto three = SchlafliParam(3);
  bool ok = true;
  switch (fam) {
    case Family::F1: ok = s.u == three && s.v == three; break;
    case Family::F2: ok = s.u == s.w; break;
    case Family::F3: ok = s.w == three || s.u == three; break;
    case Family::F4: ok = s.u != s.w; break;
  }
  if (!ok) {
    throw Error(ErrorKind::FamilyMismatch, "{" + s.str() + "} does not belong to family " + std::string(to_string(fam)));
  }
}

/// One optimal height with the distances that competed for it.
struct HeightDetail {
  double height = 0.0;
  std::vector<std::pair<std::string, double>> candidates;
};

inline HeightDetail packing_height_detail(Family fam, const SchlafliSymbol& sym) {
  check_family(fam, sym);
  const TruncOrthoscheme t = make_trunc_orthoscheme(sym);
  const CoMetric& cm = t.cometric;
  HeightDetail out;
  switch (fam) {
    case Family::F1: {
      const auto& p0 = t.require_pole0();
      // For u -> inf, A_1 becomes ideal and sits on the boundary of a_0; the
      // closed form sinh d(C,A_1) tends to 0 there.
      const double d = t.classes[1] == VertexClass::Proper ? dist_point_plane(cm, t.vertices[1], p0) : 0.0;
      out.candidates = {{"d(C,A1)", d}};
      break;
    }
    case Family::F2: {
      const auto& p3 = t.require_pole3();
      t.require_pole0();
      out.candidates = {{"d(A2,a3)", dist_point_plane(cm, t.vertices[2], p3)},
                        {"d(F03,a3)", dist_point_plane(cm, t.f03, p3)}};
      break;
    }
    case Family::F3:
    case Family::F4: {
      const auto& p0 = t.require_pole0();
      const auto& p3 = t.require_pole3();
      out.candidates = {{"d(H,J)/2", 0.5 * dist_plane_plane(cm, p0, p3)},
                        {"d(Q,A2)", dist_point_plane(cm, t.vertices[2], p3)},
                        {"d(C,A1)", dist_point_plane(cm, t.vertices[1], p0)}};
      break;
    }
  }
  out.height = out.candidates.front().second;
  for (const auto& [name, d] : out.candidates) out.height = std::min(out.height, d);
  return out;
}

inline double packing_height(Family fam, const SchlafliSymbol& sym) { return packing_height_detail(fam, sym).height; }

inline HeightDetail covering_height_detail(Family fam, const SchlafliSymbol& sym) {
  if (fam == Family::F3 || fam == Family::F4) {
    throw Error(ErrorKind::UnsupportedFamily, "covering heights are defined for F1 and F2 only");
  }
  check_family(fam, sym);
  const TruncOrthoscheme t = make_trunc_orthoscheme(sym);
  const CoMetric& cm = t.cometric;
  HeightDetail out;
  if (fam == Family::F1) {
    const auto& p0 = t.require_pole0();
    out.candidates = {{"d(H,A3)", dist_point_plane(cm, t.vertices[3], p0)}};
  } else {
    t.require_pole0();
    t.require_pole3();
    // foot of F_12 on a_3 is a_1 + a_2 + c a_3 with a_13 + a_23 + c a_33 = 0
    const double coef = -(cm(1, 3) + cm(2, 3)) / cm(3, 3);
    const Vector4 footp = t.f12.coords + coef * Vector4(Vector4::Unit(3));
    out.candidates = {{"d(F12,a3)", dist_point_point(cm, t.f12, MetricVector::point(footp))}};
  }
  out.height = out.candidates.front().second;
  return out;
}

inline double covering_height(Family fam, const SchlafliSymbol& sym) { return covering_height_detail(fam, sym).height; }

}  // namespace hyperball
