#pragma once

// Reflections in the faces b^i and in the truncating polar planes a_0, a_3,
// written as 4x4 matrices on coordinates whose bilinear form is (b^ij), and
// numeric checks of relators built from them.

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperball/catalog.hpp"
#include "hyperball/error.hpp"
#include "hyperball/schlafli.hpp"

namespace hyperball {

struct Isometry {
  Matrix4 matrix;
  Matrix4 form;

  /// max |M^T G M - G|
  double form_defect() const { return (matrix.transpose() * form * matrix - form).cwiseAbs().maxCoeff(); }
};

/// A face plane b^i, or the polar plane a_i of an outer vertex.
struct PlaneRef {
  bool polar = false;
  int index = 0;

  std::string str() const { return (polar ? "a" : "b") + std::to_string(index); }
};

inline PlaneRef parse_plane(std::string_view s) {
  if (s.size() == 2 && (s[0] == 'a' || s[0] == 'b') && s[1] >= '0' && s[1] <= '3') {
    return {s[0] == 'a', s[1] - '0'};
  }
  throw Error(ErrorKind::InvalidSymbol, "plane must be b0..b3 or a0..a3, got '" + std::string(s) + "'");
}

inline constexpr double kRelatorTol = 1e-9;

/// x -> x - 2 (<x,n>/<n,n>) n with n the form vector of the plane.
inline Isometry reflection(PlaneRef plane, const GramMatrix& g, const CoMetric& c) {
  Eigen::Vector4d n;
  if (plane.polar) {
    const auto cls = classify_vertices(c);
    if (cls[plane.index] != VertexClass::Outer) {
      throw Error(ErrorKind::VertexNotTruncated, "A_" + std::to_string(plane.index) + " is not an outer vertex");
    }
    n = c.entries.col(plane.index);
  } else {
    n = Eigen::Vector4d::Unit(plane.index);
  }
  const double nn = n.dot(g.entries * n);
  Matrix4 m = Matrix4::Identity() - (2.0 / nn) * n * (n.transpose() * g.entries);
  return {m, g.entries};
}

using GeneratorMap = std::map<std::string, Isometry>;

/// Max-norm distance of (product of the word)^exponent from +I or -I.
inline double verify_relator(const std::vector<Letter>& word, std::int64_t exponent, const GeneratorMap& gens) {
  Matrix4 p = Matrix4::Identity();
  for (const auto& l : word) {
    auto it = gens.find(l.generator);
    if (it == gens.end()) throw Error(ErrorKind::UnboundGenerator, "generator '" + l.generator + "' has no matrix");
    const Matrix4 m = l.power < 0 ? Matrix4(it->second.matrix.inverse()) : it->second.matrix;
    for (int k = 0; k < std::abs(l.power); ++k) p = p * m;
  }
  Matrix4 q = Matrix4::Identity();
  const Matrix4 base = exponent < 0 ? Matrix4(p.inverse()) : p;
  for (std::int64_t k = 0; k < std::abs(exponent); ++k) q = q * base;
  const double plus = (q - Matrix4::Identity()).cwiseAbs().maxCoeff();
  const double minus = (q + Matrix4::Identity()).cwiseAbs().maxCoeff();
  return std::min(plus, minus);
}

struct RelatorResult {
  std::string where;  // "base" or "ext (k) class"
  std::string text;
  std::optional<double> residual;  // empty when a generator is not realized
  std::string skipped_reason;

  bool pass(double tol = kRelatorTol) const { return !residual || *residual < tol; }
};

/// Coxeter relators of {u,v,w} on generators b0..b3, optionally with the
/// polar reflections a0 / a3 of the outer vertices.
inline std::vector<RelatorResult> check_coxeter_relators(const SchlafliSymbol& sym, bool with_polar) {
  const GramMatrix g = build_gram(sym);
  const CoMetric c = invert_gram(g, sym);
  const auto cls = classify_vertices(c);
  GeneratorMap gens;
  for (int i = 0; i < 4; ++i) gens.emplace("b" + std::to_string(i), reflection({false, i}, g, c));
  std::vector<int> polars;
  if (with_polar) {
    for (int k : {0, 3}) {
      if (cls[k] == VertexClass::Outer) {
        gens.emplace("a" + std::to_string(k), reflection({true, k}, g, c));
        polars.push_back(k);
      }
    }
  }
  std::vector<RelatorResult> out;
  auto add = [&](const std::string& where, std::vector<Letter> w, std::int64_t e, const std::string& text) {
    out.push_back({where, text, verify_relator(w, e, gens), {}});
  };
  const std::array<SchlafliParam, 3> orders = {sym.u, sym.v, sym.w};
  for (int i = 0; i < 4; ++i) {
    const std::string bi = "b" + std::to_string(i);
    add("coxeter", {{bi, 1}}, 2, bi + "^2");
    for (int j = i + 1; j < 4; ++j) {
      const std::string bj = "b" + std::to_string(j);
      std::int64_t m = 2;
      if (j == i + 1) {
        if (orders[i].is_infinite()) continue;
        m = orders[i].order();
      }
      add("coxeter", {{bi, 1}, {bj, 1}}, m, "(" + bi + " " + bj + ")^" + std::to_string(m));
    }
  }
  for (int k : polars) {
    const std::string ak = "a" + std::to_string(k);
    add("polar", {{ak, 1}}, 2, ak + "^2");
    for (int j = 0; j < 4; ++j) {
      if (j == k) continue;
      const std::string bj = "b" + std::to_string(j);
      add("polar", {{ak, 1}, {bj, 1}}, 2, "(" + ak + " " + bj + ")^2");
    }
  }
  return out;
}

/// Realizes the series' reflection generators on its underlying symbol and
/// checks every relation whose letters are all realized.
inline std::vector<RelatorResult> check_series_relators(const GroupSeries& s, const ParamValues& values) {
  const SchlafliSymbol sym = underlying_schlafli(s, values);
  const GramMatrix g = build_gram(sym);
  const CoMetric c = invert_gram(g, sym);
  GeneratorMap gens;
  for (const auto& [name, plane] : s.realize) gens.emplace(name, reflection(parse_plane(plane), g, c));

  std::vector<RelatorResult> out;
  auto run = [&](const std::string& where, const std::vector<Relation>& rels) {
    for (const auto& r : rels) {
      RelatorResult res{where, r.text, std::nullopt, {}};
      for (const auto& l : r.word) {
        if (!gens.count(l.generator)) {
          res.skipped_reason = "generator '" + l.generator + "' is not a reflection";
          break;
        }
      }
      if (res.skipped_reason.empty()) res.residual = verify_relator(r.word, r.exponent.evaluate(values), gens);
      out.push_back(std::move(res));
    }
  };
  run("base", s.relations);
  for (const auto& e : s.extensions) {
    run("ext (" + std::to_string(e.index) + ") " + e.vertex_class, e.new_relations);
  }
  return out;
}

}  // namespace hyperball
