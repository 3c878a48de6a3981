#pragma once

// Truncation areas, Bolyai hyperball-piece volumes and the packing/covering
// densities of families F1..F4, plus the table rows they are reported in.

#include <boost/rational.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperball/error.hpp"
#include "hyperball/metric.hpp"
#include "hyperball/schlafli.hpp"
#include "hyperball/volume.hpp"

namespace hyperball {

using Rational = boost::rational<std::int64_t>;

inline Rational reciprocal(const SchlafliParam& p) { return p.is_infinite() ? Rational(0) : Rational(1, p.order()); }

struct TruncationArea {
  int vertex_index = 0;
  Rational pi_coefficient;  // area = pi_coefficient * pi
  double area = 0.0;
};

/// Angle defect of the right triangle cut from the outer vertex by its polar plane.
inline TruncationArea truncation_area(const SchlafliSymbol& sym, int vertex) {
  if (vertex != 0 && vertex != 3) {
    throw Error(ErrorKind::VertexNotTruncated, "only A_0 and A_3 can be truncated");
  }
  const auto cls = classify_vertices(cometric(sym));
  if (cls[vertex] != VertexClass::Outer) {
    throw Error(ErrorKind::VertexNotTruncated,
                "A_" + std::to_string(vertex) + " of {" + sym.str() + "} is not an outer vertex");
  }
  const Rational coeff = vertex == 0 ? Rational(1, 2) - reciprocal(sym.v) - reciprocal(sym.w)
                                     : Rational(1, 2) - reciprocal(sym.u) - reciprocal(sym.v);
  return {vertex, coeff, boost::rational_cast<double>(coeff) * std::numbers::pi};
}

/// Bolyai: volume of the hyperball piece of height h over a base of given area.
inline double half_hyperball_volume(double area, double h) {
  if (h < 0.0) throw Error(ErrorKind::NegativeHeight, "height must be non-negative");
  return 0.25 * area * (std::sinh(2.0 * h) + 2.0 * h);
}

enum class Mode { Packing, Covering };

constexpr std::string_view to_string(Mode m) { return m == Mode::Packing ? "Packing" : "Covering"; }

struct PieceVolume {
  int vertex_index = 0;
  double area = 0.0;
  double volume = 0.0;
};

struct DensityReport {
  Family family = Family::F1;
  SchlafliSymbol sym{3, 3, 7};
  Mode mode = Mode::Packing;
  HeightDetail height;
  std::vector<TruncationArea> areas;
  std::vector<PieceVolume> pieces;
  double orthoscheme_volume = 0.0;
  double density = 0.0;

  double pieces_volume() const {
    double s = 0.0;
    for (const auto& p : pieces) s += p.volume;
    return s;
  }
};

namespace detail {

inline DensityReport assemble(Family fam, const SchlafliSymbol& sym, Mode mode, HeightDetail h) {
  DensityReport r;
  r.family = fam;
  r.sym = sym;
  r.mode = mode;
  r.height = std::move(h);
  if (fam == Family::F1) {
    r.areas = {truncation_area(sym, 0)};
  } else {
    r.areas = {truncation_area(sym, 0), truncation_area(sym, 3)};
  }
  for (const auto& a : r.areas) {
    r.pieces.push_back({a.vertex_index, a.area, half_hyperball_volume(a.area, r.height.height)});
  }
  r.orthoscheme_volume = orthoscheme_volume(sym).volume;
  r.density = r.pieces_volume() / r.orthoscheme_volume;
  return r;
}

}  // namespace detail

inline DensityReport packing_density(Family fam, const SchlafliSymbol& sym) {
  return detail::assemble(fam, sym, Mode::Packing, packing_height_detail(fam, sym));
}

inline DensityReport covering_density(Family fam, const SchlafliSymbol& sym) {
  return detail::assemble(fam, sym, Mode::Covering, covering_height_detail(fam, sym));
}

inline DensityReport density(Family fam, const SchlafliSymbol& sym, Mode mode) {
  return mode == Mode::Packing ? packing_density(fam, sym) : covering_density(fam, sym);
}

// ---- tables ----

enum class TableId { T1p, T1c, T2p, T2c, T3p, T4p };

inline constexpr std::array<TableId, 6> kAllTables = {TableId::T1p, TableId::T1c, TableId::T2p,
                                                      TableId::T2c, TableId::T3p, TableId::T4p};

constexpr std::string_view to_string(TableId t) {
  switch (t) {
    case TableId::T1p: return "1p";
    case TableId::T1c: return "1c";
    case TableId::T2p: return "2p";
    case TableId::T2c: return "2c";
    case TableId::T3p: return "3p";
    case TableId::T4p: return "4p";
  }
  return "?";
}

inline TableId parse_table_id(std::string_view s) {
  for (auto t : kAllTables) {
    if (to_string(t) == s) return t;
  }
  throw Error(ErrorKind::InvalidSymbol, "unknown table '" + std::string(s) + "'");
}

inline Family table_family(TableId t) {
  switch (t) {
    case TableId::T1p:
    case TableId::T1c: return Family::F1;
    case TableId::T2p:
    case TableId::T2c: return Family::F2;
    case TableId::T3p: return Family::F3;
    case TableId::T4p: return Family::F4;
  }
  return Family::F1;
}

inline Mode table_mode(TableId t) {
  return t == TableId::T1c || t == TableId::T2c ? Mode::Covering : Mode::Packing;
}

/// Parameter sets in printed row order.
inline std::vector<SchlafliSymbol> table_symbols(TableId t) {
  const auto inf = SchlafliParam::infinite();
  const SchlafliParam three(3);
  switch (t) {
    case TableId::T1p:
    case TableId::T1c:
      return {{3, 3, 7}, {3, 3, 8}, {3, 3, 9}, {3, 3, 20}, {3, 3, 50}, {3, 3, 100}, {three, three, inf}};
    case TableId::T2p:
      return {{7, 3, 7}, {6, 4, 6}, {8, 3, 8}, {8, 4, 8}, {5, 4, 5}, {4, 5, 4}, {4, 6, 4}, {3, 7, 3}};
    case TableId::T2c:
      return {{7, 3, 7}, {6, 4, 6}, {8, 3, 8}, {5, 4, 5}, {8, 4, 8}, {4, 5, 4}, {4, 6, 4}, {3, 7, 3}};
    case TableId::T3p:
      return {{4, 7, 3}, {5, 7, 3}, {50, 7, 3}, {4, 8, 3}, {5, 8, 3},
              {50, 8, 3}, {4, 9, 3}, {5, 9, 3}, {50, 9, 3}};
    case TableId::T4p:
      return {{7, 3, 8}, {7, 3, 9}, {7, 3, 50}, {8, 3, 9}, {8, 3, 10}, {8, 3, 50}, {5, 4, 6}, {5, 4, 7},
              {5, 4, 50}, {4, 5, 5}, {4, 5, 6}, {4, 5, 50}, {4, 6, 5}, {4, 6, 6}, {4, 6, 50}};
  }
  return {};
}

struct TableRow {
  SchlafliSymbol sym;
  double h = 0.0;
  double vol_orthoscheme = 0.0;
  double vol_pieces = 0.0;
  double density = 0.0;
};

inline TableRow to_row(const DensityReport& r) {
  return {r.sym, r.height.height, r.orthoscheme_volume, r.pieces_volume(), r.density};
}

inline std::vector<TableRow> generate_table(TableId t) {
  std::vector<TableRow> rows;
  for (const auto& s : table_symbols(t)) rows.push_back(to_row(density(table_family(t), s, table_mode(t))));
  return rows;
}

inline constexpr double kTieTol = 1e-12;

/// Best density over the given candidates: max for packing, min for covering.
/// Ties go to the lexicographically smallest symbol.
inline DensityReport optimize(Family fam, Mode mode, const std::vector<SchlafliSymbol>& lattice) {
  std::optional<DensityReport> best;
  for (const auto& s : lattice) {
    DensityReport r = density(fam, s, mode);
    if (!best) {
      best = std::move(r);
      continue;
    }
    // densities equal up to rounding (e.g. a symbol and its reversal) count as ties
    const double gain = mode == Mode::Packing ? r.density - best->density : best->density - r.density;
    const double tol = kTieTol * std::max(1.0, std::abs(best->density));
    const bool better = gain > tol;
    const bool tie = std::abs(gain) <= tol && r.sym < best->sym;
    if (better || tie) best = std::move(r);
  }
  if (!best) throw Error(ErrorKind::EmptyAdmissibleSet, "no admissible symbol for " + std::string(to_string(fam)));
  return *best;
}

}  // namespace hyperball
