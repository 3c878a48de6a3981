#pragma once

// Group-series catalog of families F1..F4: parser for the line-oriented data
// files (see data/catalog/FORMAT.md), structural validation, exact parameter
// constraints and the series -> Schlafli mapping.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hyperball/density.hpp"
#include "hyperball/error.hpp"
#include "hyperball/orbifold.hpp"
#include "hyperball/schlafli.hpp"

namespace hyperball {

/// k * param, or a plain integer when param is empty.
struct ParamExpr {
  std::int64_t coeff = 1;
  std::string param;

  std::int64_t evaluate(const ParamValues& values) const {
    if (param.empty()) return coeff;
    auto it = values.find(param);
    if (it == values.end()) throw Error(ErrorKind::MissingParameter, "no value for parameter '" + param + "'");
    return coeff * it->second;
  }
  std::string str() const {
    if (param.empty()) return std::to_string(coeff);
    return coeff == 1 ? param : std::to_string(coeff) + param;
  }
};

/// One summand of a linear inequality side: c, c * p, or c / p.
struct LinearTerm {
  Rational coeff{0};
  std::string param;
  bool reciprocal = false;
};

struct LinearExpr {
  std::vector<LinearTerm> terms;

  Rational evaluate(const ParamValues& values) const {
    Rational sum(0);
    for (const auto& t : terms) {
      if (t.param.empty()) {
        sum += t.coeff;
        continue;
      }
      auto it = values.find(t.param);
      if (it == values.end()) throw Error(ErrorKind::MissingParameter, "no value for parameter '" + t.param + "'");
      sum += t.reciprocal ? t.coeff / Rational(it->second) : t.coeff * it->second;
    }
    return sum;
  }
};

enum class CompareOp { Less, LessEqual, Greater, GreaterEqual, NotEqual };

struct Constraint {
  LinearExpr lhs;
  CompareOp op = CompareOp::Less;
  LinearExpr rhs;
  std::string text;

  /// Order clauses bound the parameters; != clauses only separate families.
  bool is_order() const { return op != CompareOp::NotEqual; }

  bool holds(const ParamValues& values) const {
    const Rational a = lhs.evaluate(values), b = rhs.evaluate(values);
    switch (op) {
      case CompareOp::Less: return a < b;
      case CompareOp::LessEqual: return a <= b;
      case CompareOp::Greater: return a > b;
      case CompareOp::GreaterEqual: return a >= b;
      case CompareOp::NotEqual: return a != b;
    }
    return false;
  }
};

struct Letter {
  std::string generator;
  int power = 1;
};

struct Relation {
  std::optional<int> label;
  std::vector<Letter> word;
  ParamExpr exponent;
  std::string text;
};

struct Generator {
  std::string name;
  bool involutive = false;
};

enum class ExtensionKind { Reflection, HalfTurn, HalfScrew, PointReflection, RotatoryReflection, GlideReflection, ScrewMotion };

inline constexpr std::array<std::pair<ExtensionKind, std::string_view>, 7> kExtensionKindNames = {{
    {ExtensionKind::Reflection, "Reflection"},
    {ExtensionKind::HalfTurn, "HalfTurn"},
    {ExtensionKind::HalfScrew, "HalfScrew"},
    {ExtensionKind::PointReflection, "PointReflection"},
    {ExtensionKind::RotatoryReflection, "RotatoryReflection"},
    {ExtensionKind::GlideReflection, "GlideReflection"},
    {ExtensionKind::ScrewMotion, "ScrewMotion"},
}};

constexpr std::string_view to_string(ExtensionKind k) {
  for (const auto& [kind, name] : kExtensionKindNames) {
    if (kind == k) return name;
  }
  return "?";
}

struct Extension {
  int index = 0;
  ExtensionKind kind = ExtensionKind::Reflection;
  std::string vertex_class;
  bool simpler = false;  // additional simpler presentation of an earlier block
  std::vector<Generator> new_generators;
  std::vector<Relation> new_relations;
};

struct Stabilizer {
  std::string vertex_class;
  OrbifoldSymbol orbifold;
};

struct GroupSeries {
  Family family = Family::F1;
  std::string id;
  std::string orbifold_name;
  std::string crystallographic_name;
  bool repetition = false;  // re-presentation of a case already counted
  std::vector<std::string> parameters;
  std::vector<Constraint> constraints;
  std::optional<std::array<ParamExpr, 3>> schlafli_rule;
  std::map<std::string, std::string> realize;  // generator -> b0..b3 / a0 / a3
  std::vector<Generator> generators;
  std::vector<Relation> relations;
  std::vector<Stabilizer> stabilizers;
  std::vector<Extension> extensions;
  std::string source;  // file:line of the series header

  /// Extensions at each truncated vertex class combine independently.
  int extension_count() const {
    if (repetition) return 0;
    std::map<std::string, int> per_class;
    for (const auto& e : extensions) ++per_class[e.vertex_class];
    int n = 1;
    for (const auto& [cls, k] : per_class) n *= k;
    return per_class.empty() ? 0 : n;
  }
};

inline constexpr std::array<int, 4> kExtensionCounts = {14, 21, 17, 21};

struct Catalog {
  std::vector<GroupSeries> series;

  const GroupSeries& find(std::string_view id) const {
    for (const auto& s : series) {
      if (s.id == id) return s;
    }
    throw Error(ErrorKind::UnknownSeries, "no series '" + std::string(id) + "'");
  }

  std::vector<const GroupSeries*> family(Family f) const {
    std::vector<const GroupSeries*> out;
    for (const auto& s : series) {
      if (s.family == f) out.push_back(&s);
    }
    return out;
  }

  /// The first series listed for a family is its maximal (reflection) series.
  const GroupSeries& maximal(Family f) const {
    for (const auto& s : series) {
      if (s.family == f) return s;
    }
    throw Error(ErrorKind::UnknownSeries, "no series for family " + std::string(to_string(f)));
  }

  int extension_count(Family f) const {
    int n = 0;
    for (const auto* s : family(f)) n += s->extension_count();
    return n;
  }
};

// ---- parsing ----

namespace detail {

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

inline bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  explicit Parser(std::string file) : file_(std::move(file)) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError, file_ + ":" + std::to_string(line_) + ": " + msg);
  }

  void set_line(int n) { line_ = n; }
  const std::string& file() const { return file_; }
  int line() const { return line_; }

  ParamExpr param_expr(std::string_view s) const {
    ParamExpr e;
    std::size_t i = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::int64_t k = 1;
    if (i > 0 && !parse_int(s.substr(0, i), k)) fail("bad number in '" + std::string(s) + "'");
    const auto rest = s.substr(i);
    if (rest.empty()) {
      if (i == 0) fail("empty expression");
      e.coeff = k;
      return e;
    }
    if (!is_identifier(rest)) fail("bad parameter expression '" + std::string(s) + "'");
    e.coeff = k;
    e.param = std::string(rest);
    return e;
  }

  LinearTerm linear_term(std::string_view s) const {
    LinearTerm t;
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
      const ParamExpr p = param_expr(s);
      t.coeff = Rational(p.coeff);
      t.param = p.param;
      return t;
    }
    std::int64_t num = 0;
    if (!parse_int(s.substr(0, slash), num)) fail("bad numerator in '" + std::string(s) + "'");
    const auto den = s.substr(slash + 1);
    std::int64_t d = 0;
    if (parse_int(den, d)) {
      if (d == 0) fail("zero denominator");
      t.coeff = Rational(num, d);
    } else if (is_identifier(den)) {
      t.coeff = Rational(num);
      t.param = std::string(den);
      t.reciprocal = true;
    } else {
      fail("bad denominator in '" + std::string(s) + "'");
    }
    return t;
  }

  LinearExpr linear_expr(const std::vector<std::string>& toks) const {
    LinearExpr e;
    bool want_term = true;
    for (const auto& t : toks) {
      if (want_term) {
        e.terms.push_back(linear_term(t));
      } else if (t != "+") {
        fail("expected '+' between terms, got '" + t + "'");
      }
      want_term = !want_term;
    }
    if (e.terms.empty() || want_term) fail("incomplete linear expression");
    return e;
  }

  Constraint constraint(std::string_view text) const {
    static const std::array<std::pair<std::string_view, CompareOp>, 5> ops = {{
        {"<=", CompareOp::LessEqual},
        {">=", CompareOp::GreaterEqual},
        {"!=", CompareOp::NotEqual},
        {"<", CompareOp::Less},
        {">", CompareOp::Greater},
    }};
    const auto toks = split_ws(text);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      for (const auto& [sym, op] : ops) {
        if (toks[i] == sym) {
          Constraint c;
          c.op = op;
          c.lhs = linear_expr({toks.begin(), toks.begin() + static_cast<std::ptrdiff_t>(i)});
          c.rhs = linear_expr({toks.begin() + static_cast<std::ptrdiff_t>(i) + 1, toks.end()});
          c.text = trim(text);
          return c;
        }
      }
    }
    fail("constraint without comparison: '" + std::string(text) + "'");
  }

  Letter letter(std::string_view tok) const {
    Letter l;
    const auto caret = tok.find('^');
    l.generator = std::string(tok.substr(0, caret));
    if (!is_identifier(l.generator)) fail("bad generator '" + std::string(tok) + "'");
    if (caret != std::string_view::npos) {
      std::int64_t p = 0;
      if (!parse_int(tok.substr(caret + 1), p) || p == 0) fail("bad letter power in '" + std::string(tok) + "'");
      l.power = static_cast<int>(p);
    }
    return l;
  }

  Relation relation(std::string_view text) const {
    Relation r;
    auto toks = split_ws(text);
    if (toks.empty()) fail("empty relation");
    std::int64_t label = 0;
    if (parse_int(toks.front(), label)) {
      r.label = static_cast<int>(label);
      toks.erase(toks.begin());
    }
    std::string body;
    for (const auto& t : toks) body += (body.empty() ? "" : " ") + t;
    r.text = body;
    if (body.empty()) fail("relation without word");
    if (body.front() == '(') {
      const auto close = body.rfind(')');
      if (close == std::string::npos) fail("unbalanced parenthesis in '" + body + "'");
      const auto tail = std::string_view(body).substr(close + 1);
      if (tail.empty()) {
        r.exponent = {1, {}};
      } else if (tail.front() == '^') {
        r.exponent = param_expr(tail.substr(1));
      } else {
        fail("expected exponent after ')' in '" + body + "'");
      }
      for (const auto& t : split_ws(std::string_view(body).substr(1, close - 1))) {
        if (t.find_first_of("()") != std::string::npos) fail("nested groups are not supported: '" + body + "'");
        r.word.push_back(letter(t));
      }
      return r;
    }
    const auto words = split_ws(body);
    if (words.size() == 1) {
      // g^e, where e may name a parameter
      const auto caret = words[0].find('^');
      if (caret != std::string::npos) {
        const std::string_view e = std::string_view(words[0]).substr(caret + 1);
        if (!e.empty() && e.front() != '-') {
          r.word.push_back(letter(std::string_view(words[0]).substr(0, caret)));
          r.exponent = param_expr(e);
          return r;
        }
      }
    }
    for (const auto& t : words) {
      if (t.find_first_of("()") != std::string::npos) fail("stray parenthesis in '" + body + "'");
      r.word.push_back(letter(t));
    }
    return r;
  }

 private:
  std::string file_;
  int line_ = 0;
};

inline ExtensionKind parse_kind(const Parser& p, std::string_view s) {
  for (const auto& [kind, name] : kExtensionKindNames) {
    if (name == s) return kind;
  }
  p.fail("unknown extension kind '" + std::string(s) + "'");
}

}  // namespace detail

inline std::vector<GroupSeries> parse_catalog(std::string_view text, const std::string& file = "<catalog>") {
  detail::Parser p(file);
  std::vector<GroupSeries> out;
  std::optional<Family> family;
  GroupSeries* cur = nullptr;
  Extension* ext = nullptr;
  bool seen_header = false;

  std::istringstream is{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    p.set_line(++lineno);
    const std::string line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto sp = line.find(' ');
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? std::string() : detail::trim(line.substr(sp + 1));
    const auto toks = detail::split_ws(rest);

    if (!seen_header) {
      if (key != "hyperball-catalog" || rest != "1") p.fail("expected version line 'hyperball-catalog 1'");
      seen_header = true;
      continue;
    }
    if (key == "family") {
      try {
        family = parse_family(rest);
      } catch (const Error&) {
        p.fail("unknown family '" + rest + "'");
      }
      continue;
    }
    if (key == "series") {
      if (ext) p.fail("series inside an unterminated extension block");
      if (!family) p.fail("series before family line");
      if (toks.size() != 1) p.fail("series needs exactly one id");
      out.emplace_back();
      cur = &out.back();
      cur->family = *family;
      cur->id = toks[0];
      cur->source = file + ":" + std::to_string(lineno);
      continue;
    }
    if (!cur) p.fail("'" + key + "' outside a series");

    if (key == "extension") {
      if (ext) p.fail("nested extension block");
      if (toks.size() < 3 || toks.size() > 4) p.fail("extension needs: index kind vertex-class [simpler]");
      std::int64_t idx = 0;
      if (!detail::parse_int(toks[0], idx) || idx < 1 || idx > 8) p.fail("extension index must be 1..8");
      Extension e;
      e.index = static_cast<int>(idx);
      e.kind = detail::parse_kind(p, toks[1]);
      e.vertex_class = toks[2];
      if (toks.size() == 4) {
        if (toks[3] != "simpler") p.fail("unknown extension flag '" + toks[3] + "'");
        e.simpler = true;
      }
      cur->extensions.push_back(std::move(e));
      ext = &cur->extensions.back();
      continue;
    }
    if (key == "end") {
      if (!ext) p.fail("'end' without extension");
      ext = nullptr;
      continue;
    }

    auto& gens = ext ? ext->new_generators : cur->generators;
    auto& rels = ext ? ext->new_relations : cur->relations;
    if (key == "gens") {
      if (toks.empty()) p.fail("empty generator list");
      for (const auto& g : toks) {
        if (!detail::is_identifier(g)) p.fail("bad generator name '" + g + "'");
        gens.push_back({g, false});
      }
    } else if (key == "involutive") {
      for (const auto& g : toks) {
        auto it = std::find_if(gens.begin(), gens.end(), [&](const Generator& x) { return x.name == g; });
        if (it == gens.end()) p.fail("involutive flag on undeclared generator '" + g + "'");
        it->involutive = true;
      }
    } else if (key == "rel") {
      rels.push_back(p.relation(rest));
    } else if (ext) {
      p.fail("'" + key + "' not allowed inside an extension block");
    } else if (key == "name") {
      cur->orbifold_name = rest;
    } else if (key == "crystallographic") {
      cur->crystallographic_name = rest;
    } else if (key == "repetition") {
      cur->repetition = true;
    } else if (key == "params") {
      for (const auto& t : toks) {
        if (!detail::is_identifier(t)) p.fail("bad parameter name '" + t + "'");
      }
      cur->parameters = toks;
    } else if (key == "require") {
      cur->constraints.push_back(p.constraint(rest));
    } else if (key == "schlafli") {
      if (toks.size() != 3) p.fail("schlafli rule needs three expressions");
      cur->schlafli_rule = std::array<ParamExpr, 3>{p.param_expr(toks[0]), p.param_expr(toks[1]), p.param_expr(toks[2])};
    } else if (key == "realize") {
      for (const auto& t : toks) {
        const auto eq = t.find('=');
        if (eq == std::string::npos) p.fail("realize entries look like gen=b0");
        cur->realize[t.substr(0, eq)] = t.substr(eq + 1);
      }
    } else if (key == "stabilizer") {
      if (toks.size() != 2) p.fail("stabilizer needs: vertex-class orbifold");
      try {
        cur->stabilizers.push_back({toks[0], parse_orbifold(toks[1])});
      } catch (const Error& e) {
        p.fail(e.what());
      }
    } else {
      p.fail("unknown keyword '" + key + "'");
    }
  }
  if (!seen_header) throw Error(ErrorKind::ParseError, file + ": missing version line");
  if (ext) throw Error(ErrorKind::ParseError, file + ": unterminated extension block");
  return out;
}

inline std::filesystem::path default_catalog_dir() {
#ifdef HYPERBALL_CATALOG_DIR
  return HYPERBALL_CATALOG_DIR;
#else
  return "data/catalog";
#endif
}

/// Reads F1.cat..F4.cat and checks the per-family extension counts.
inline Catalog load_catalog(const std::filesystem::path& dir = default_catalog_dir()) {
  Catalog cat;
  for (const char* fam : {"F1", "F2", "F3", "F4"}) {
    const auto path = dir / (std::string(fam) + ".cat");
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path.string() + ": cannot open");
    std::stringstream buf;
    buf << in.rdbuf();
    auto part = parse_catalog(buf.str(), path.string());
    for (auto& s : part) {
      if (std::string(to_string(s.family)) != fam) {
        throw Error(ErrorKind::ParseError, s.source + ": family does not match file name");
      }
      cat.series.push_back(std::move(s));
    }
  }
  for (int f = 0; f < 4; ++f) {
    const auto fam = static_cast<Family>(f);
    const int n = cat.extension_count(fam);
    if (n != kExtensionCounts[f]) {
      throw Error(ErrorKind::CountMismatch, std::string(to_string(fam)) + " has " + std::to_string(n) +
                                                " extensions, expected " + std::to_string(kExtensionCounts[f]));
    }
  }
  return cat;
}

// ---- queries ----

inline std::vector<std::string> validate_series(const GroupSeries& s) {
  std::vector<std::string> diag;
  const std::set<std::string> params(s.parameters.begin(), s.parameters.end());
  auto check_param = [&](const std::string& p, const std::string& where) {
    if (!p.empty() && !params.count(p)) diag.push_back(s.id + ": " + where + " uses undeclared parameter '" + p + "'");
  };
  for (const auto& c : s.constraints) {
    for (const auto* side : {&c.lhs, &c.rhs}) {
      for (const auto& t : side->terms) check_param(t.param, "constraint '" + c.text + "'");
    }
  }
  if (s.schlafli_rule) {
    for (const auto& e : *s.schlafli_rule) check_param(e.param, "schlafli rule");
  }
  std::set<std::string> classes;
  for (const auto& st : s.stabilizers) {
    classes.insert(st.vertex_class);
    for (const auto& n : st.orbifold.cone_orders) check_param(n.param, "stabilizer " + st.orbifold.text);
    for (const auto& b : st.orbifold.boundary_components) {
      for (const auto& m : b) check_param(m.param, "stabilizer " + st.orbifold.text);
    }
  }
  if (s.stabilizers.empty()) diag.push_back(s.id + ": no stabilizer orbifold");

  auto has_square = [](const std::vector<Relation>& rels, const std::string& g) {
    return std::any_of(rels.begin(), rels.end(), [&](const Relation& r) {
      if (r.word.size() != 1 || r.word[0].generator != g) return false;
      const int p = r.word[0].power;
      return (p == 2 && r.exponent.param.empty() && r.exponent.coeff == 1) ||
             (p == 1 && r.exponent.param.empty() && r.exponent.coeff == 2);
    });
  };
  auto check_block = [&](const std::vector<Generator>& declared, const std::vector<Relation>& rels,
                         const std::string& where) {
    std::set<std::string> names;
    for (const auto& g : declared) names.insert(g.name);
    for (const auto& r : rels) {
      for (const auto& l : r.word) {
        if (!names.count(l.generator)) {
          diag.push_back(s.id + where + ": relation '" + r.text + "' uses undeclared generator '" + l.generator + "'");
        }
      }
      check_param(r.exponent.param, "relation '" + r.text + "'");
    }
    return names;
  };

  const auto base_names = check_block(s.generators, s.relations, "");
  for (const auto& g : s.generators) {
    if (g.involutive && !has_square(s.relations, g.name)) {
      diag.push_back(s.id + ": involutive generator '" + g.name + "' lacks its square relation");
    }
  }
  std::set<std::string> all_names = base_names;
  for (std::size_t i = 0; i < s.extensions.size(); ++i) {
    const auto& e = s.extensions[i];
    const std::string where = " ext (" + std::to_string(e.index) + ") " + e.vertex_class;
    if (!classes.count(e.vertex_class)) diag.push_back(s.id + where + ": vertex class has no stabilizer");
    std::vector<Generator> visible = s.generators;
    for (const auto& g : e.new_generators) {
      if (base_names.count(g.name)) diag.push_back(s.id + where + ": generator '" + g.name + "' shadows a base generator");
      visible.push_back(g);
      all_names.insert(g.name);
    }
    check_block(visible, e.new_relations, where);
    for (const auto& g : e.new_generators) {
      if (g.involutive && !has_square(e.new_relations, g.name)) {
        diag.push_back(s.id + where + ": involutive generator '" + g.name + "' lacks its square relation");
      }
    }
    std::set<int> labels;
    for (const auto& r : e.new_relations) {
      if (!r.label) continue;
      if (!labels.insert(*r.label).second) {
        diag.push_back(s.id + where + ": relation label " + std::to_string(*r.label) + " used twice");
      }
    }
  }
  static const std::set<std::string> targets = {"b0", "b1", "b2", "b3", "a0", "a3"};
  for (const auto& [g, t] : s.realize) {
    if (!all_names.count(g)) diag.push_back(s.id + ": realize names undeclared generator '" + g + "'");
    if (!targets.count(t)) diag.push_back(s.id + ": realize target '" + t + "' is not a plane");
  }
  return diag;
}

inline std::vector<std::string> validate_catalog(const Catalog& c) {
  std::vector<std::string> diag;
  std::set<std::string> ids;
  for (const auto& s : c.series) {
    if (!ids.insert(s.id).second) diag.push_back(s.id + ": duplicate series id");
    auto d = validate_series(s);
    diag.insert(diag.end(), d.begin(), d.end());
  }
  return diag;
}

inline void require_all(const GroupSeries& s, const ParamValues& values) {
  for (const auto& p : s.parameters) {
    if (!values.count(p)) throw Error(ErrorKind::MissingParameter, s.id + ": no value for '" + p + "'");
  }
}

/// Every printed inequality holds, evaluated exactly.
inline bool constraint_satisfied(const GroupSeries& s, const ParamValues& values) {
  require_all(s, values);
  return std::all_of(s.constraints.begin(), s.constraints.end(), [&](const Constraint& c) { return c.holds(values); });
}

/// Only the order clauses (no != clauses).
inline bool order_constraints_satisfied(const GroupSeries& s, const ParamValues& values) {
  require_all(s, values);
  return std::all_of(s.constraints.begin(), s.constraints.end(),
                     [&](const Constraint& c) { return !c.is_order() || c.holds(values); });
}

/// All stabilizer orbifolds are hyperbolic at these parameter values.
inline bool stabilizers_hyperbolic(const GroupSeries& s, const ParamValues& values) {
  return std::all_of(s.stabilizers.begin(), s.stabilizers.end(), [&](const Stabilizer& st) {
    return classify(orbifold_chi(st.orbifold, values)) == Geometry::Hyperbolic;
  });
}

inline SchlafliSymbol underlying_schlafli(const GroupSeries& s, const ParamValues& values) {
  if (!s.schlafli_rule) throw Error(ErrorKind::RuleMissing, s.id + " has no Schlafli rule");
  require_all(s, values);
  const auto& r = *s.schlafli_rule;
  return {static_cast<int>(r[0].evaluate(values)), static_cast<int>(r[1].evaluate(values)),
          static_cast<int>(r[2].evaluate(values))};
}

/// All assignments 1..bound of the series parameters, in lexicographic order.
inline std::vector<ParamValues> parameter_grid(const GroupSeries& s, std::int64_t bound) {
  std::vector<ParamValues> out;
  ParamValues cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == s.parameters.size()) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = 1; k <= bound; ++k) {
      cur[s.parameters[i]] = k;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// Distinct symbols of admissible assignments whose entries all stay within bound.
inline std::vector<SchlafliSymbol> admissible_symbols(const GroupSeries& s, std::int64_t bound) {
  std::set<SchlafliSymbol> seen;
  std::vector<SchlafliSymbol> out;
  for (const auto& v : parameter_grid(s, bound)) {
    if (!constraint_satisfied(s, v)) continue;
    const auto sym = underlying_schlafli(s, v);
    if (sym.u.order() > bound || sym.v.order() > bound || sym.w.order() > bound) continue;
    if (seen.insert(sym).second) out.push_back(sym);
  }
  return out;
}

/// Optimum over the admissible lattice of the family's maximal series.
inline DensityReport optimize(const Catalog& c, Family fam, Mode mode, std::int64_t bound) {
  if (mode == Mode::Covering && (fam == Family::F3 || fam == Family::F4)) {
    throw Error(ErrorKind::UnsupportedFamily, "coverings are defined for F1 and F2 only");
  }
  return optimize(fam, mode, admissible_symbols(c.maximal(fam), bound));
}

inline DensityReport series_optimal_density(const GroupSeries& s, Mode mode, std::int64_t bound) {
  if (mode == Mode::Covering && (s.family == Family::F3 || s.family == Family::F4)) {
    throw Error(ErrorKind::UnsupportedFamily, "coverings are defined for F1 and F2 only");
  }
  std::vector<SchlafliSymbol> lattice;
  std::set<SchlafliSymbol> seen;
  for (const auto& v : parameter_grid(s, bound)) {
    if (!constraint_satisfied(s, v)) continue;
    const auto sym = underlying_schlafli(s, v);
    if (seen.insert(sym).second) lattice.push_back(sym);
  }
  return optimize(s.family, mode, lattice);
}

}  // namespace hyperball
