#pragma once

// Command-line front end. `run` takes explicit output streams so tests can
// drive it in-process.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperball/catalog.hpp"
#include "hyperball/density.hpp"
#include "hyperball/error.hpp"
#include "hyperball/isometry.hpp"
#include "hyperball/lobachevsky.hpp"
#include "hyperball/metric.hpp"
#include "hyperball/reference_tables.hpp"
#include "hyperball/schlafli.hpp"
#include "hyperball/volume.hpp"

namespace hyperball::cli {

inline constexpr std::string_view kVersion = "hyperball 1.0.0";

namespace detail {

/// Malformed argument values are usage errors, not computation errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
auto parse_arg(const std::string& flag, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

class Fmt {
 public:
  explicit Fmt(int precision) : precision_(precision) {}
  std::string operator()(double x) const {
    if (std::abs(x) < 0.5 * std::pow(10.0, -precision_)) x = 0.0;  // no "-0.000"
    std::ostringstream os;
    os << std::fixed << std::setprecision(precision_) << x;
    return os.str();
  }
  std::string sci(double x) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
  }

 private:
  int precision_;
};

/// RFC 4180: quote fields containing separators, quotes or line breaks.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
  out << "\r\n";
}

inline void md_line(std::ostream& out, const std::vector<std::string>& fields) {
  out << "|";
  for (const auto& f : fields) out << " " << f << " |";
  out << "\n";
}

inline void md_rule(std::ostream& out, std::size_t n) {
  out << "|";
  for (std::size_t i = 0; i < n; ++i) out << "---|";
  out << "\n";
}

inline std::string paren(const SchlafliSymbol& s) { return "(" + s.str() + ")"; }

inline std::string matrix_rows(const Matrix4& m, const Fmt& f, const std::string& indent) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    out += indent;
    for (int j = 0; j < 4; ++j) {
      const std::string cell = f(m(i, j));
      out += (j ? "  " : "") + std::string(cell[0] == '-' ? "" : " ") + cell;
    }
    out += "\n";
  }
  return out;
}

/// The running text prints 1.26869 for the {7,3,7} covering optimum while the
/// table prints 1.26829; the computed value decides.
inline std::string cover_adjudication(double computed) {
  const double dt = std::abs(computed - kTableCoverOptimum);
  const double dx = std::abs(computed - kTextCoverOptimum);
  std::ostringstream os;
  os << std::fixed << std::setprecision(5) << "note: {7,3,7} covering density computed " << computed << " matches "
     << (dt <= dx ? "1.26829 (table and headline result)" : "1.26869 (running text)") << ", not "
     << (dt <= dx ? "1.26869 (running text)" : "1.26829 (table)");
  return os.str();
}

inline void print_density(std::ostream& out, const DensityReport& r, const Fmt& f) {
  out << "family: " << to_string(r.family) << "\n";
  out << "schlafli: " << paren(r.sym) << "\n";
  out << "mode: " << (r.mode == Mode::Packing ? "packing" : "covering") << "\n";
  out << "h: " << f(r.height.height) << "\n";
  for (const auto& [name, d] : r.height.candidates) out << "  candidate " << name << " = " << f(d) << "\n";
  for (const auto& a : r.areas) {
    out << "area A" << a.vertex_index << ": " << f(a.area) << " (" << a.pi_coefficient.numerator() << "/"
        << a.pi_coefficient.denominator() << " pi)\n";
  }
  for (const auto& p : r.pieces) out << "piece A" << p.vertex_index << ": " << f(p.volume) << "\n";
  out << "vol_orthoscheme: " << f(r.orthoscheme_volume) << "\n";
  out << "vol_pieces: " << f(r.pieces_volume()) << "\n";
  out << "density: " << f(r.density) << "\n";
}

inline const std::vector<std::string> kTableColumns = {"params", "h", "vol_orthoscheme", "vol_pieces", "density"};

inline void print_table(std::ostream& out, TableId t, const std::string& format, const Fmt& f) {
  const auto rows = generate_table(t);
  if (format == "md") {
    out << "Table " << to_string(t) << " (" << to_string(table_family(t)) << ", "
        << (table_mode(t) == Mode::Packing ? "packing" : "covering") << ")\n\n";
    md_line(out, kTableColumns);
    md_rule(out, kTableColumns.size());
  } else {
    csv_line(out, kTableColumns);
  }
  for (const auto& r : rows) {
    const std::vector<std::string> cells = {r.sym.str(), f(r.h), f(r.vol_orthoscheme), f(r.vol_pieces), f(r.density)};
    if (format == "md") md_line(out, cells);
    else csv_line(out, cells);
  }
  if (format == "md") out << "\n";
}

/// Per-cell comparison with the printed values. Returns false when a
/// non-suspect cell deviates by more than the tolerance.
inline bool compare_printed(std::ostream& out, TableId t, const std::string& format) {
  const Fmt f5(5);
  const std::vector<std::string> header = {"table", "params", "column", "printed", "computed", "deviation", "status"};
  if (format == "md") {
    md_line(out, header);
    md_rule(out, header.size());
  } else {
    csv_line(out, header);
  }
  bool ok = true;
  std::vector<std::string> notes;
  for (const auto& row : compare_table(t)) {
    for (const auto& c : row.cells) {
      const bool within = c.deviation() <= kPrintedCellTol;
      std::string status = within ? "OK" : "FAIL";
      if (row.printed.suspect) status = within ? "SUSPECT-OK" : "SUSPECT";
      if (!within && !row.printed.suspect) ok = false;
      const std::vector<std::string> cells = {std::string(to_string(t)), row.printed.sym.str(), c.column, f5(c.printed),
                                              f5(c.computed), f5.sci(c.deviation()), status};
      if (format == "md") md_line(out, cells);
      else csv_line(out, cells);
    }
    if (row.printed.suspect) {
      const auto cc = consistency_checks(table_family(t), row.printed.sym, table_mode(t));
      std::ostringstream os;
      os << "note: row {" << row.printed.sym.str() << "} is flagged as a suspected copy error and excluded; "
         << "consistency checks " << (cc.pass() ? "pass" : "FAIL") << " (bolyai " << f5.sci(cc.bolyai_residual)
         << ", density " << f5.sci(cc.density_residual) << ", reversal " << f5.sci(cc.reversal_residual) << ")";
      notes.push_back(os.str());
    }
    if (t == TableId::T2c && row.printed.sym == SchlafliSymbol(7, 3, 7)) notes.push_back(cover_adjudication(row.computed.density));
  }
  const std::string prefix = format == "csv" ? "# " : "";
  for (const auto& n : notes) out << prefix << n << "\n";
  out << prefix << "compare " << to_string(t) << ": " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

inline std::vector<std::string> grid_mismatches(const Catalog& c, std::int64_t bound) {
  std::vector<std::string> out;
  for (const auto& s : c.series) {
    for (const auto& v : parameter_grid(s, bound)) {
      if (order_constraints_satisfied(s, v) != stabilizers_hyperbolic(s, v)) {
        std::string where = s.id + ":";
        for (const auto& [k, x] : v) where += " " + k + "=" + std::to_string(x);
        out.push_back(where + ": stabilizer curvature disagrees with the printed inequalities");
      }
    }
  }
  return out;
}

inline std::string relation_line(const Relation& r) {
  return (r.label ? std::to_string(*r.label) + ": " : std::string()) + r.text;
}

inline void print_series(std::ostream& out, const GroupSeries& s) {
  out << "series: " << s.id << "\n";
  out << "family: " << to_string(s.family) << "\n";
  out << "orbifold: " << s.orbifold_name << "\n";
  out << "crystallographic: " << s.crystallographic_name << "\n";
  if (s.repetition) out << "repetition: yes (not counted)\n";
  out << "source: " << s.source << "\n";
  out << "params:";
  for (const auto& p : s.parameters) out << " " << p;
  out << "\n";
  for (const auto& c : s.constraints) out << "require: " << c.text << "\n";
  if (s.schlafli_rule) {
    const auto& r = *s.schlafli_rule;
    out << "schlafli: {" << r[0].str() << "," << r[1].str() << "," << r[2].str() << "}\n";
  }
  for (const auto& [g, plane] : s.realize) out << "realize: " << g << " = " << plane << "\n";
  out << "generators:";
  for (const auto& g : s.generators) out << " " << g.name << (g.involutive ? "*" : "");
  out << "\n";
  for (const auto& r : s.relations) out << "  rel " << relation_line(r) << "\n";
  for (const auto& st : s.stabilizers) out << "stabilizer " << st.vertex_class << ": " << st.orbifold.text << "\n";
  for (const auto& e : s.extensions) {
    out << "extension (" << e.index << ") " << to_string(e.kind) << " at " << e.vertex_class
        << (e.simpler ? " [simpler]" : "") << "\n";
    if (!e.new_generators.empty()) {
      out << "  generators:";
      for (const auto& g : e.new_generators) out << " " << g.name << (g.involutive ? "*" : "");
      out << "\n";
    }
    for (const auto& r : e.new_relations) out << "  rel " << relation_line(r) << "\n";
  }
  out << "extensions counted: " << s.extension_count() << "\n";
}

inline ParamValues parse_params(const std::vector<std::string>& items) {
  ParamValues v;
  for (const auto& it : items) {
    const auto eq = it.find('=');
    std::int64_t x = 0;
    if (eq == std::string::npos || eq == 0 || !hyperball::detail::parse_int(it.substr(eq + 1), x)) {
      throw UsageError("--param: expected name=value, got '" + it + "'");
    }
    v[it.substr(0, eq)] = x;
  }
  return v;
}

inline bool print_relators(std::ostream& out, const std::vector<RelatorResult>& rs, double tol, const Fmt& f) {
  bool ok = true;
  int checked = 0, skipped = 0;
  for (const auto& r : rs) {
    out << r.where << "  " << r.text << "  ";
    if (!r.residual) {
      out << "SKIP (" << r.skipped_reason << ")\n";
      ++skipped;
      continue;
    }
    ++checked;
    const bool pass = *r.residual < tol;
    ok = ok && pass;
    out << f.sci(*r.residual) << "  " << (pass ? "PASS" : "FAIL") << "\n";
  }
  out << checked << " checked, " << skipped << " skipped: " << (ok ? "PASS" : "FAIL") << "\n";
  return ok;
}

}  // namespace detail

/// Runs the command line; returns the process exit code (0 ok, 1 computation
/// error or failed check, 2 usage error).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Hyperball packings and coverings in truncated orthoscheme tilings", "hyperball"};
  app.require_subcommand(1);
  int precision = 5;
  bool no_banner = false;
  std::string catalog_dir = default_catalog_dir().string();
  app.add_option("--precision", precision, "Decimals for printed reals")->check(CLI::Range(0, 17));
  app.add_flag("--no-banner", no_banner, "Do not print the version banner");
  app.add_option("--catalog-dir", catalog_dir, "Directory with F1.cat .. F4.cat");

  std::string schlafli_text, family_text;
  auto add_schlafli = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--schlafli", schlafli_text, "Schlafli symbol u,v,w (inf allowed)");
    if (required) o->required();
  };

  auto* orth = app.add_subcommand("orthoscheme", "Gram matrix, co-metric, vertices and volume");
  orth->require_subcommand(1);
  auto* orth_info = orth->add_subcommand("info", "Describe the orthoscheme of a symbol");
  add_schlafli(orth_info, true);

  double lob_x = 0.0;
  auto* lob_cmd = app.add_subcommand("lob", "Lobachevsky function");
  lob_cmd->add_option("--x", lob_x, "Argument")->required();

  auto* heights = app.add_subcommand("heights", "Packing and covering heights");
  heights->add_option("--family", family_text, "F1..F4")->required();
  add_schlafli(heights, true);

  auto* dens = app.add_subcommand("density", "Packing or covering density");
  dens->require_subcommand(1);
  auto* dens_pack = dens->add_subcommand("pack", "Packing density");
  auto* dens_cover = dens->add_subcommand("cover", "Covering density");
  for (auto* s : {dens_pack, dens_cover}) {
    s->add_option("--family", family_text, "F1..F4")->required();
    add_schlafli(s, true);
  }

  std::string which = "all", format = "csv";
  bool compare = false;
  auto* tables = app.add_subcommand("tables", "Density tables");
  tables->add_option("--which", which, "1p, 1c, 2p, 2c, 3p, 4p or all");
  tables->add_option("--format", format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
  tables->add_flag("--compare-paper", compare, "Diff every cell against the printed values");

  std::int64_t max_param = 20;
  auto* opt = app.add_subcommand("optimize", "Best density over a family's admissible symbols");
  opt->require_subcommand(1);
  auto* opt_pack = opt->add_subcommand("pack", "Maximal packing density");
  auto* opt_cover = opt->add_subcommand("cover", "Minimal covering density");
  for (auto* s : {opt_pack, opt_cover}) {
    s->add_option("--family", family_text, "F1..F4")->required();
    s->add_option("--max-param", max_param, "Upper bound for parameters and symbol entries")->check(CLI::Range(2, 100000));
  }

  std::string series_id;
  auto* cat = app.add_subcommand("catalog", "Group-series catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List series");
  cat_list->add_option("--family", family_text, "F1..F4");
  auto* cat_show = cat->add_subcommand("show", "Show one series");
  cat_show->add_option("--series", series_id, "Series id, e.g. 2*2G")->required();
  std::int64_t grid_bound = 20;
  auto* cat_validate = cat->add_subcommand("validate", "Structural and curvature checks");
  cat_validate->add_option("--grid", grid_bound, "Parameter bound for the curvature check")->check(CLI::Range(2, 1000));

  bool with_polar = false;
  double tol = kRelatorTol;
  std::vector<std::string> params;
  auto* rel = app.add_subcommand("relators", "Numeric relator checks with reflection matrices");
  rel->require_subcommand(1);
  auto* rel_check = rel->add_subcommand("check", "Check Coxeter (and polar) relators, or a series' relations");
  add_schlafli(rel_check, false);
  rel_check->add_flag("--with-polar", with_polar, "Include reflections in the polar planes of outer vertices");
  rel_check->add_option("--tol", tol, "Residual threshold")->check(CLI::PositiveNumber);
  auto* series_opt = rel_check->add_option("--series", series_id, "Series id; checks its realized relations");
  rel_check->add_option("--param", params, "Series parameter name=value (repeatable)")->needs(series_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  if (!no_banner) out << kVersion << "\n";
  const Fmt f(precision);

  try {
    auto sym = [&] { return parse_arg("--schlafli", [&] { return parse_schlafli(schlafli_text); }); };
    auto fam = [&] { return parse_arg("--family", [&] { return parse_family(family_text); }); };
    auto catalog = [&] { return load_catalog(catalog_dir); };

    if (orth_info->parsed()) {
      const SchlafliSymbol s = sym();
      const GramMatrix g = build_gram(s);
      out << "schlafli: " << paren(s) << "\n";
      out << "gram:\n" << matrix_rows(g.entries, f, "  ");
      out << "determinant: " << f(g.determinant) << " (closed form " << f(gram_determinant_closed_form(s)) << ")\n";
      const Signature sg = signature(g);
      out << "signature: (" << sg.positive << "," << sg.negative << "," << sg.zero << ")\n";
      out << "realizability: " << to_string(realizability(s)) << "\n";
      const CoMetric c = invert_gram(g, s);
      out << "cometric:\n" << matrix_rows(c.entries, f, "  ");
      const auto cls = classify_vertices(c);
      for (int i = 0; i < 4; ++i) out << "A" << i << ": " << to_string(cls[i]) << " (a" << i << i << " = " << f(c(i, i)) << ")\n";
      if (gram_determinant_closed_form(s) < -kDeterminantTol) {
        const VolumeBreakdown v = orthoscheme_volume(s);
        out << "theta: " << f(v.theta) << "\n";
        out << "volume: " << f(v.volume) << "\n";
      } else {
        out << "volume: n/a (not a hyperbolic orthoscheme)\n";
      }
      return 0;
    }
    if (lob_cmd->parsed()) {
      const double x = lob_x;
      out << "L(" << f(x) << ") = " << f(lob(x)) << "\n";
      return 0;
    }
    if (heights->parsed()) {
      const Family fm = fam();
      const SchlafliSymbol s = sym();
      const HeightDetail p = packing_height_detail(fm, s);
      out << "family: " << to_string(fm) << "\nschlafli: " << paren(s) << "\n";
      out << "packing h: " << f(p.height) << "\n";
      for (const auto& [name, d] : p.candidates) out << "  candidate " << name << " = " << f(d) << "\n";
      if (fm == Family::F1 || fm == Family::F2) {
        const HeightDetail c = covering_height_detail(fm, s);
        out << "covering h: " << f(c.height) << "\n";
        for (const auto& [name, d] : c.candidates) out << "  candidate " << name << " = " << f(d) << "\n";
      } else {
        out << "covering h: n/a (no covering construction for " << to_string(fm) << ")\n";
      }
      return 0;
    }
    if (dens_pack->parsed() || dens_cover->parsed()) {
      const Mode m = dens_pack->parsed() ? Mode::Packing : Mode::Covering;
      const DensityReport r = density(fam(), sym(), m);
      print_density(out, r, f);
      if (r.family == Family::F2 && m == Mode::Covering && r.sym == SchlafliSymbol(7, 3, 7)) {
        out << cover_adjudication(r.density) << "\n";
      }
      return 0;
    }
    if (tables->parsed()) {
      std::vector<TableId> ids;
      if (which == "all") ids.assign(kAllTables.begin(), kAllTables.end());
      else ids.push_back(parse_arg("--which", [&] { return parse_table_id(which); }));
      bool ok = true;
      for (const TableId t : ids) {
        if (compare) ok = compare_printed(out, t, format) && ok;
        else print_table(out, t, format, f);
      }
      return ok ? 0 : 1;
    }
    if (opt_pack->parsed() || opt_cover->parsed()) {
      const Mode m = opt_pack->parsed() ? Mode::Packing : Mode::Covering;
      const Family fm = fam();
      const Catalog c = catalog();
      const GroupSeries& s = c.maximal(fm);
      const auto lattice = admissible_symbols(s, max_param);
      const DensityReport r = optimize(c, fm, m, max_param);
      out << "family: " << to_string(fm) << " (series " << s.id << ", " << lattice.size() << " admissible symbols)\n";
      out << "mode: " << (m == Mode::Packing ? "packing" : "covering") << "\n";
      out << "optimum: " << paren(r.sym) << ", " << f(r.density) << "\n";
      out << "h: " << f(r.height.height) << "\n";
      out << "vol_orthoscheme: " << f(r.orthoscheme_volume) << "\n";
      out << "vol_pieces: " << f(r.pieces_volume()) << "\n";
      if (fm == Family::F2 && m == Mode::Covering && r.sym == SchlafliSymbol(7, 3, 7)) {
        out << cover_adjudication(r.density) << "\n";
      }
      return 0;
    }
    if (cat_list->parsed()) {
      const Catalog c = catalog();
      std::optional<Family> only;
      if (!family_text.empty()) only = fam();
      for (const auto& s : c.series) {
        if (only && s.family != *only) continue;
        out << to_string(s.family) << "  " << s.id << "  " << s.orbifold_name << "  params:";
        for (const auto& p : s.parameters) out << " " << p;
        out << "  extensions: " << s.extension_count() << (s.repetition ? " (repetition)" : "") << "\n";
      }
      return 0;
    }
    if (cat_show->parsed()) {
      print_series(out, catalog().find(series_id));
      return 0;
    }
    if (cat_validate->parsed()) {
      const Catalog c = catalog();
      auto diags = validate_catalog(c);
      for (auto& d : grid_mismatches(c, grid_bound)) diags.push_back(std::move(d));
      int total = 0;
      for (const Family fm : {Family::F1, Family::F2, Family::F3, Family::F4}) {
        out << to_string(fm) << ": " << c.extension_count(fm) << " extensions\n";
        total += c.extension_count(fm);
      }
      for (const auto& d : diags) err << d << "\n";
      if (!diags.empty()) {
        out << diags.size() << " diagnostic(s)\n";
        return 1;
      }
      out << total << " series OK\n";
      return 0;
    }
    if (rel_check->parsed()) {
      if (series_id.empty() == schlafli_text.empty()) throw UsageError("relators check: give exactly one of --schlafli or --series");
      if (!series_id.empty()) {
        const Catalog c = catalog();
        const GroupSeries& s = c.find(series_id);
        const ParamValues v = parse_params(params);
        require_all(s, v);
        if (!constraint_satisfied(s, v)) throw Error(ErrorKind::NotRealizable, "parameters violate the series constraints");
        out << "series: " << s.id << " on " << paren(underlying_schlafli(s, v)) << "\n";
        return print_relators(out, check_series_relators(s, v), tol, f) ? 0 : 1;
      }
      const SchlafliSymbol s = sym();
      out << "schlafli: " << paren(s) << (with_polar ? " with polar reflections" : "") << "\n";
      return print_relators(out, check_coxeter_relators(s, with_polar), tol, f) ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace hyperball::cli
