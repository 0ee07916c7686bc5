#include "sextic/lp_format.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>
#include <vector>

namespace sextic::lp {

using sextic::to_string;

FormatError::FormatError(const std::string& what, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// ---------------------------------------------------------------------------
// LP tokenizer

enum class Tok { name, number, colon, relation, plus, minus, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  int line = 0;
  int column = 0;
  bool line_start = false;
};

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || std::string_view("_.[]#$~@!'{}|").find(c) != std::string_view::npos;
}

std::vector<Token> tokenize_lp(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t line_begin = 0;
  bool at_line_start = true;
  std::size_t i = 0;
  auto col = [&](std::size_t pos) { return static_cast<int>(pos - line_begin) + 1; };
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      line_begin = ++i;
      at_line_start = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '\\') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col(i);
    tok.line_start = at_line_start;
    at_line_start = false;
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '.')) ++j;
      if (j < text.size() && (text[j] == 'e' || text[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < text.size() && (text[k] == '+' || text[k] == '-')) ++k;
        if (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) {
          j = k;
          while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        }
      }
      if (j + 1 < text.size() && text[j] == '/' && std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
        ++j;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      }
      tok.kind = Tok::number;
      tok.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (name_start(c)) {
      std::size_t j = i;
      while (j < text.size() && name_char(text[j])) ++j;
      tok.kind = Tok::name;
      tok.text = std::string(text.substr(i, j - i));
      i = j;
    } else if (c == ':') {
      tok.kind = Tok::colon;
      tok.text = ":";
      ++i;
    } else if (c == '+') {
      tok.kind = Tok::plus;
      tok.text = "+";
      ++i;
    } else if (c == '-') {
      tok.kind = Tok::minus;
      tok.text = "-";
      ++i;
    } else if (c == '<' || c == '>' || c == '=') {
      std::size_t j = i + 1;
      if (j < text.size() && (text[j] == '=' || text[j] == '<' || text[j] == '>')) ++j;
      std::string op(text.substr(i, j - i));
      tok.kind = Tok::relation;
      if (op == "<" || op == "<=" || op == "=<") tok.text = "<=";
      else if (op == ">" || op == ">=" || op == "=>") tok.text = ">=";
      else if (op == "=") tok.text = "=";
      else throw SyntaxError("unrecognized operator '" + op + "'", tok.line, tok.column);
      i = j;
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", tok.line, tok.column);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::end;
  end.line = line;
  end.column = col(i);
  end.line_start = true;
  out.push_back(end);
  return out;
}

enum class Section { none, minimize, maximize, constraints, bounds, end };

const std::set<std::string>& unsupported_keywords() {
  static const std::set<std::string> words = {"general", "generals", "gen",  "integer", "integers",
                                              "binary",  "binaries", "bin",  "semi-continuous",
                                              "semis",   "semi",     "sos",  "pwl", "lazy"};
  return words;
}

Relation relation_of(const std::string& op) {
  if (op == "<=") return Relation::less_equal;
  if (op == ">=") return Relation::greater_equal;
  return Relation::equal;
}

bool is_infinity(const std::string& name) {
  std::string l = lower(name);
  return l == "inf" || l == "infinity";
}

class LpParser {
 public:
  explicit LpParser(std::string_view text) : toks_(tokenize_lp(text)) {}

  LpInstance parse() {
    bool seen_objective = false;
    for (;;) {
      auto section = header();
      if (!section) {
        const Token& t = peek();
        throw SyntaxError("expected a section keyword, found '" + t.text + "'", t.line, t.column);
      }
      switch (*section) {
        case Section::minimize:
        case Section::maximize:
          if (seen_objective) throw SyntaxError("second objective section", last_.line, last_.column);
          seen_objective = true;
          parse_objective(*section == Section::maximize);
          break;
        case Section::constraints:
          parse_constraints();
          break;
        case Section::bounds:
          parse_bounds();
          break;
        case Section::end:
          if (peek().kind != Tok::end) throw SyntaxError("text after End", peek().line, peek().column);
          if (!seen_objective) throw SyntaxError("missing objective section", last_.line, last_.column);
          return std::move(inst_);
        case Section::none:
          break;
      }
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    last_ = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return last_;
  }

  // Recognizes a section keyword at the start of a line and consumes it.
  std::optional<Section> header() {
    const Token& t = peek();
    if (t.kind == Tok::end) throw SyntaxError("missing End", t.line, t.column);
    if (!t.line_start || t.kind != Tok::name || peek(1).kind == Tok::colon) return std::nullopt;
    std::string w = lower(t.text);
    if (w == "minimize" || w == "minimise" || w == "minimum" || w == "min") {
      next();
      return Section::minimize;
    }
    if (w == "maximize" || w == "maximise" || w == "maximum" || w == "max") {
      next();
      return Section::maximize;
    }
    if ((w == "subject" || w == "such") && peek(1).kind == Tok::name &&
        lower(peek(1).text) == (w == "subject" ? "to" : "that")) {
      next();
      next();
      return Section::constraints;
    }
    if (w == "st" || w == "s.t." || w == "st.") {
      next();
      return Section::constraints;
    }
    if (w == "bounds" || w == "bound") {
      next();
      return Section::bounds;
    }
    if (w == "end") {
      next();
      return Section::end;
    }
    if (unsupported_keywords().contains(w))
      throw UnsupportedSection("section '" + t.text + "' is not supported (integrality and SOS data are rejected)", t.line, t.column);
    return std::nullopt;
  }

  bool at_header() {
    const Token& t = peek();
    if (t.kind == Tok::end) return true;
    if (!t.line_start || t.kind != Tok::name || peek(1).kind == Tok::colon) return false;
    std::string w = lower(t.text);
    static const std::set<std::string> keys = {"minimize", "minimise", "minimum", "min",  "maximize", "maximise",
                                               "maximum",  "max",      "st",      "s.t.", "st.",      "bounds",
                                               "bound",    "end"};
    if (keys.contains(w) || unsupported_keywords().contains(w)) return true;
    if ((w == "subject" || w == "such") && peek(1).kind == Tok::name) {
      std::string n = lower(peek(1).text);
      return n == (w == "subject" ? "to" : "that");
    }
    return false;
  }

  Rational number(const Token& t) {
    auto v = parse_rational(t.text);
    if (!v) throw SyntaxError("malformed number '" + t.text + "'", t.line, t.column);
    return *v;
  }

  // Linear expression up to a relation, a header, or end of input.
  // Constant terms accumulate into `constant`.
  LinearExpr expression(Rational& constant) {
    LinearExpr expr;
    bool first = true;
    for (;;) {
      const Token& t = peek();
      if (t.kind == Tok::relation || at_header()) break;
      if (!first && t.kind == Tok::name && peek(1).kind == Tok::colon) break;  // next label
      Rational sign = 1;
      bool had_sign = false;
      while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
        if (next().kind == Tok::minus) sign = -sign;
        had_sign = true;
      }
      if (!first && !had_sign) {
        const Token& u = peek();
        throw SyntaxError("expected '+' or '-' before '" + u.text + "'", u.line, u.column);
      }
      std::optional<Rational> coeff;
      if (peek().kind == Tok::number) coeff = number(next());
      if (peek().kind == Tok::name && !at_header() && !(peek(1).kind == Tok::colon)) {
        const Token& v = next();
        if (is_infinity(v.text)) throw SyntaxError("infinity is only allowed in Bounds", v.line, v.column);
        inst_.declare(v.text);
        expr[v.text] += sign * coeff.value_or(Rational(1));
      } else if (coeff) {
        constant += sign * *coeff;
      } else {
        const Token& u = peek();
        throw SyntaxError("expected a term, found '" + (u.kind == Tok::end ? std::string("end of input") : u.text) + "'",
                          u.line, u.column);
      }
      first = false;
    }
    std::erase_if(expr, [](const auto& kv) { return kv.second == 0; });
    return expr;
  }

  void parse_objective(bool maximize) {
    if (peek().kind == Tok::name && peek(1).kind == Tok::colon) {
      next();
      next();
    }
    Rational constant;
    LinearExpr expr = at_header() ? LinearExpr{} : expression(constant);
    if (peek().kind == Tok::relation) throw SyntaxError("relation in objective", peek().line, peek().column);
    if (maximize) {
      for (auto& [name, c] : expr) c = -c;
      constant = -constant;
    }
    inst_.objective = std::move(expr);
    inst_.objective_constant = constant;
  }

  void parse_constraints() {
    while (!at_header()) {
      Constraint con;
      const Token& start = peek();
      if (peek().kind == Tok::name && peek(1).kind == Tok::colon) {
        con.name = next().text;
        next();
      } else {
        con.name = "R" + std::to_string(inst_.constraints.size() + 1);
      }
      if (!names_.insert(con.name).second)
        throw SyntaxError("duplicate constraint name '" + con.name + "'", start.line, start.column);
      Rational lhs_constant;
      con.coefficients = expression(lhs_constant);
      if (peek().kind != Tok::relation) throw SyntaxError("expected a relation", peek().line, peek().column);
      con.relation = relation_of(next().text);
      Rational sign = 1;
      while (peek().kind == Tok::plus || peek().kind == Tok::minus)
        if (next().kind == Tok::minus) sign = -sign;
      if (peek().kind != Tok::number) throw SyntaxError("expected a numeric right-hand side", peek().line, peek().column);
      con.rhs = sign * number(next()) - lhs_constant;
      inst_.constraints.push_back(std::move(con));
    }
  }

  // Signed number or +/-infinity; nullopt encodes infinity with `inf_sign`.
  std::optional<Rational> bound_value(int& inf_sign) {
    int sign = 1;
    while (peek().kind == Tok::plus || peek().kind == Tok::minus)
      if (next().kind == Tok::minus) sign = -sign;
    const Token& t = peek();
    if (t.kind == Tok::number) return sign * number(next());
    if (t.kind == Tok::name && is_infinity(t.text)) {
      next();
      inf_sign = sign;
      return std::nullopt;
    }
    throw SyntaxError("expected a bound value", t.line, t.column);
  }

  void apply(const std::string& var, Relation rel, const std::optional<Rational>& value, int inf_sign,
             bool var_on_left, const Token& where) {
    Bound& b = inst_.bounds[var];
    // normalize to "var rel value"
    if (!var_on_left && rel != Relation::equal)
      rel = rel == Relation::less_equal ? Relation::greater_equal : Relation::less_equal;
    switch (rel) {
      case Relation::greater_equal:
        if (!value && inf_sign > 0) throw SyntaxError("lower bound of +infinity", where.line, where.column);
        b.lower = value;
        break;
      case Relation::less_equal:
        if (!value && inf_sign < 0) throw SyntaxError("upper bound of -infinity", where.line, where.column);
        b.upper = value;
        break;
      case Relation::equal:
        if (!value) throw SyntaxError("variable fixed at infinity", where.line, where.column);
        b.lower = value;
        b.upper = value;
        break;
    }
  }

  void parse_bounds() {
    while (!at_header()) {
      const Token& start = peek();
      if (start.kind == Tok::name && !is_infinity(start.text)) {
        std::string var = next().text;
        inst_.declare(var);
        if (peek().kind == Tok::name && lower(peek().text) == "free") {
          next();
          inst_.bounds[var] = Bound{};
          continue;
        }
        if (peek().kind != Tok::relation) throw SyntaxError("expected a relation or 'free'", peek().line, peek().column);
        Relation rel = relation_of(next().text);
        int inf_sign = 0;
        auto value = bound_value(inf_sign);
        apply(var, rel, value, inf_sign, true, start);
        continue;
      }
      int inf_sign = 0;
      auto value = bound_value(inf_sign);
      if (peek().kind != Tok::relation) throw SyntaxError("expected a relation", peek().line, peek().column);
      Relation rel = relation_of(next().text);
      if (peek().kind != Tok::name || is_infinity(peek().text))
        throw SyntaxError("expected a variable name", peek().line, peek().column);
      std::string var = next().text;
      inst_.declare(var);
      apply(var, rel, value, inf_sign, false, start);
      if (peek().kind == Tok::relation) {
        Relation rel2 = relation_of(next().text);
        int inf2 = 0;
        auto value2 = bound_value(inf2);
        apply(var, rel2, value2, inf2, true, start);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Token last_;
  LpInstance inst_;
  std::set<std::string> names_;
};

// ---------------------------------------------------------------------------
// MPS

struct MpsRow {
  char type;
  Constraint constraint;
  std::optional<Rational> range;
};

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

class MpsParser {
 public:
  explicit MpsParser(std::string_view text) : text_(text) {}

  LpInstance parse() {
    enum class Part { start, name, objsense, rows, columns, rhs, ranges, bounds, done } part = Part::start;
    std::size_t begin = 0;
    int line_no = 0;
    while (begin <= text_.size() && part != Part::done) {
      std::size_t end = text_.find('\n', begin);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view line = text_.substr(begin, end - begin);
      begin = end + 1;
      ++line_no;
      line_ = line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() == '*') continue;
      auto fields = split_fields(line);
      if (fields.empty()) continue;
      if (!std::isspace(static_cast<unsigned char>(line.front()))) {
        std::string key = fields[0];
        if (key == "NAME") part = Part::name;
        else if (key == "OBJSENSE") {
          part = Part::objsense;
          if (fields.size() > 1) set_sense(fields[1]);
        } else if (key == "ROWS") part = Part::rows;
        else if (key == "COLUMNS") part = Part::columns;
        else if (key == "RHS") part = Part::rhs;
        else if (key == "RANGES") part = Part::ranges;
        else if (key == "BOUNDS") part = Part::bounds;
        else if (key == "ENDATA") part = Part::done;
        else if (key == "MAX" || key == "MIN" || key == "MAXIMIZE" || key == "MINIMIZE") {
          if (part != Part::objsense) throw SyntaxError("unexpected '" + key + "'", line_, 1);
          set_sense(key);
        } else if (key == "SOS" || key == "QUADOBJ" || key == "QMATRIX" || key == "QSECTION" || key == "QCMATRIX" ||
                   key == "INDICATORS" || key == "CSECTION" || key == "GENERAL" || key == "INTEGER")
          throw UnsupportedSection("section '" + key + "' is not supported", line_, 1);
        else
          throw SyntaxError("unknown section '" + key + "'", line_, 1);
        continue;
      }
      switch (part) {
        case Part::objsense: set_sense(fields[0]); break;
        case Part::rows: row_line(fields); break;
        case Part::columns: column_line(fields); break;
        case Part::rhs: rhs_line(fields); break;
        case Part::ranges: range_line(fields); break;
        case Part::bounds: bound_line(fields); break;
        default: throw SyntaxError("data line outside a section", line_, 1);
      }
    }
    if (part != Part::done) throw SyntaxError("missing ENDATA", line_, 1);
    if (!objective_) throw SyntaxError("no objective (N) row", line_, 1);
    return finish();
  }

 private:
  void set_sense(const std::string& s) {
    if (s == "MAX" || s == "MAXIMIZE") maximize_ = true;
    else if (s == "MIN" || s == "MINIMIZE") maximize_ = false;
    else throw SyntaxError("unknown objective sense '" + s + "'", line_, 1);
  }

  Rational value(const std::string& s) {
    auto v = parse_rational(s);
    if (!v) throw SyntaxError("malformed number '" + s + "'", line_, 1);
    return *v;
  }

  void row_line(const std::vector<std::string>& f) {
    if (f.size() != 2 || f[0].size() != 1) throw SyntaxError("ROWS entries are '<type> <name>'", line_, 1);
    char type = f[0][0];
    if (std::string_view("NLGE").find(type) == std::string_view::npos)
      throw SyntaxError(std::string("unknown row type '") + type + "'", line_, 1);
    if (row_index_.contains(f[1]) || f[1] == objective_.value_or(""))
      throw SyntaxError("duplicate row '" + f[1] + "'", line_, 1);
    if (type == 'N') {
      if (!objective_) objective_ = f[1];
      else free_rows_.insert(f[1]);  // extra free rows carry no constraint
      return;
    }
    MpsRow row;
    row.type = type;
    row.constraint.name = f[1];
    row.constraint.relation = type == 'L' ? Relation::less_equal : type == 'G' ? Relation::greater_equal : Relation::equal;
    row_index_[f[1]] = rows_.size();
    rows_.push_back(std::move(row));
  }

  void coefficient(const std::string& col, const std::string& row, const Rational& v) {
    if (row == objective_) {
      inst_.objective[col] += v;
    } else if (free_rows_.contains(row)) {
      return;
    } else {
      auto it = row_index_.find(row);
      if (it == row_index_.end()) throw UnknownRow("unknown row '" + row + "'", line_, 1);
      rows_[it->second].constraint.coefficients[col] += v;
    }
  }

  void column_line(const std::vector<std::string>& f) {
    if (f.size() >= 2 && f[1] == "'MARKER'")
      throw UnsupportedSection("integrality markers are not supported", line_, 1);
    if (f.size() != 3 && f.size() != 5) throw SyntaxError("COLUMNS entries are '<col> <row> <value> [<row> <value>]'", line_, 1);
    inst_.declare(f[0]);
    columns_.insert(f[0]);
    for (std::size_t k = 1; k + 1 < f.size(); k += 2) coefficient(f[0], f[k], value(f[k + 1]));
  }

  // Optional leading set name: pairs start at 0 when the count is even.
  template <class Fn>
  void pairs(const std::vector<std::string>& f, const char* section, Fn&& fn) {
    if (f.size() < 2 || f.size() > 5) throw SyntaxError(std::string("malformed ") + section + " entry", line_, 1);
    std::size_t start = f.size() % 2 == 0 ? 0 : 1;
    for (std::size_t k = start; k + 1 < f.size(); k += 2) fn(f[k], value(f[k + 1]));
  }

  void rhs_line(const std::vector<std::string>& f) {
    pairs(f, "RHS", [&](const std::string& row, const Rational& v) {
      if (row == objective_) {
        inst_.objective_constant = -v;
        return;
      }
      if (free_rows_.contains(row)) return;
      auto it = row_index_.find(row);
      if (it == row_index_.end()) throw UnknownRow("unknown row '" + row + "'", line_, 1);
      rows_[it->second].constraint.rhs = v;
    });
  }

  void range_line(const std::vector<std::string>& f) {
    pairs(f, "RANGES", [&](const std::string& row, const Rational& v) {
      auto it = row_index_.find(row);
      if (it == row_index_.end()) throw UnknownRow("unknown row '" + row + "'", line_, 1);
      rows_[it->second].range = v;
    });
  }

  void bound_line(const std::vector<std::string>& f) {
    if (f.empty()) return;
    const std::string& type = f[0];
    if (type == "BV" || type == "LI" || type == "UI" || type == "SC")
      throw UnsupportedSection("integer bound type '" + type + "' is not supported", line_, 1);
    bool needs_value = type == "UP" || type == "LO" || type == "FX";
    bool valueless = type == "FR" || type == "MI" || type == "PL";
    if (!needs_value && !valueless) throw SyntaxError("unknown bound type '" + type + "'", line_, 1);
    std::size_t expected = needs_value ? 3 : 2;
    std::size_t col_at;
    if (f.size() == expected) col_at = 1;
    else if (f.size() == expected + 1) col_at = 2;
    else throw SyntaxError("malformed BOUNDS entry", line_, 1);
    const std::string& col = f[col_at];
    if (!columns_.contains(col)) throw UnknownColumn("unknown column '" + col + "'", line_, 1);
    Bound& b = bounds_.try_emplace(col, Bound{Rational(0), std::nullopt}).first->second;
    if (type == "UP") {
      b.upper = value(f[col_at + 1]);
      // a negative upper bound on a column still at the default lower bound 0
      // makes the column unbounded below, as in common solvers
      if (*b.upper < 0 && b.lower && *b.lower == 0 && !explicit_lower_.contains(col)) b.lower.reset();
    }
    else if (type == "LO") {
      b.lower = value(f[col_at + 1]);
      explicit_lower_.insert(col);
    }
    else if (type == "FX") b.lower = b.upper = value(f[col_at + 1]);
    else if (type == "FR") b = Bound{};
    else if (type == "MI") b.lower.reset();
    else if (type == "PL") b.upper.reset();
  }

  LpInstance finish() {
    for (const auto& v : inst_.variables) {
      auto it = bounds_.find(v);
      inst_.bounds[v] = it == bounds_.end() ? Bound{Rational(0), std::nullopt} : it->second;
    }
    std::erase_if(inst_.objective, [](const auto& kv) { return kv.second == 0; });
    if (maximize_) {
      for (auto& [n, c] : inst_.objective) c = -c;
      inst_.objective_constant = -inst_.objective_constant;
    }
    std::set<std::string> names;
    auto add = [&](Constraint c) {
      if (!names.insert(c.name).second) throw SyntaxError("duplicate constraint name '" + c.name + "' after RANGES expansion", line_, 1);
      std::erase_if(c.coefficients, [](const auto& kv) { return kv.second == 0; });
      inst_.constraints.push_back(std::move(c));
    };
    for (auto& row : rows_) {
      if (!row.range || (row.type == 'E' && *row.range == 0)) {
        add(row.constraint);
        continue;
      }
      Rational r = *row.range;
      Rational abs_r = r < 0 ? Rational(-r) : r;
      Rational lo, hi;
      const Rational& rhs = row.constraint.rhs;
      if (row.type == 'L') {
        lo = rhs - abs_r;
        hi = rhs;
      } else if (row.type == 'G') {
        lo = rhs;
        hi = rhs + abs_r;
      } else if (r > 0) {
        lo = rhs;
        hi = rhs + r;
      } else {
        lo = rhs + r;
        hi = rhs;
      }
      Constraint low = row.constraint;
      low.name += "_lo";
      low.relation = Relation::greater_equal;
      low.rhs = lo;
      Constraint high = row.constraint;
      high.name += "_hi";
      high.relation = Relation::less_equal;
      high.rhs = hi;
      add(std::move(low));
      add(std::move(high));
    }
    return std::move(inst_);
  }

  std::string_view text_;
  int line_ = 0;
  bool maximize_ = false;
  std::optional<std::string> objective_;
  std::set<std::string> free_rows_;
  std::map<std::string, std::size_t> row_index_;
  std::vector<MpsRow> rows_;
  std::set<std::string> columns_;
  std::map<std::string, Bound> bounds_;
  std::set<std::string> explicit_lower_;
  LpInstance inst_;
};

// ---------------------------------------------------------------------------
// Writer

void write_expr(std::ostream& out, const LpInstance& inst, const LinearExpr& expr, const Rational* constant) {
  bool first = true;
  auto emit = [&](const Rational& c, const std::string* var) {
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) out << (negative ? "- " : "");
    else out << (negative ? " - " : " + ");
    if (!var) out << to_string(mag);
    else if (mag == 1) out << *var;
    else out << to_string(mag) << ' ' << *var;
    first = false;
  };
  for (const auto& v : inst.variables) {
    auto it = expr.find(v);
    if (it != expr.end() && it->second != 0) emit(it->second, &v);
  }
  if (constant && *constant != 0) emit(*constant, nullptr);
  if (first) out << '0';
}

}  // namespace

LpInstance parse_lp(std::string_view text) {
  LpInstance inst = LpParser(text).parse();
  inst.validate();
  return inst;
}

LpInstance parse_mps(std::string_view text) {
  LpInstance inst = MpsParser(text).parse();
  inst.validate();
  return inst;
}

std::string write_lp(const LpInstance& instance) {
  instance.validate();
  std::ostringstream out;
  out << "\\ exact rational LP, coefficients written as p/q\n";
  out << "Minimize\n obj: ";
  write_expr(out, instance, instance.objective, &instance.objective_constant);
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < instance.constraints.size(); ++i) {
    const auto& c = instance.constraints[i];
    out << ' ' << (c.name.empty() ? "R" + std::to_string(i + 1) : c.name) << ": ";
    write_expr(out, instance, c.coefficients, nullptr);
    out << ' ' << to_string(c.relation) << ' ' << to_string(c.rhs) << '\n';
  }
  out << "Bounds\n";
  for (const auto& v : instance.variables) {
    Bound b = instance.bound_of(v);
    out << ' ';
    if (!b.lower && !b.upper) out << v << " free";
    else if (b.lower && b.upper && *b.lower == *b.upper) out << v << " = " << to_string(*b.lower);
    else if (b.lower && !b.upper) out << v << " >= " << to_string(*b.lower);
    else out << (b.lower ? to_string(*b.lower) : std::string("-inf")) << " <= " << v << " <= " << to_string(*b.upper);
    out << '\n';
  }
  out << "End\n";
  return out.str();
}

bool semantically_equal(const LpInstance& a, const LpInstance& b) {
  auto vars = [](const LpInstance& x) { return std::set<std::string>(x.variables.begin(), x.variables.end()); };
  if (vars(a) != vars(b)) return false;
  auto clean = [](LinearExpr e) {
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
    return e;
  };
  if (clean(a.objective) != clean(b.objective) || a.objective_constant != b.objective_constant) return false;
  for (const auto& v : a.variables)
    if (a.bound_of(v) != b.bound_of(v)) return false;
  using Key = std::tuple<std::string, int, std::string, std::vector<std::pair<std::string, std::string>>>;
  auto keys = [&](const LpInstance& x) {
    std::vector<Key> out;
    for (const auto& c : x.constraints) {
      std::vector<std::pair<std::string, std::string>> coeffs;
      for (const auto& [n, v] : clean(c.coefficients)) coeffs.emplace_back(n, to_string(v));
      out.emplace_back(c.name, static_cast<int>(c.relation), to_string(c.rhs), std::move(coeffs));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return keys(a) == keys(b);
}

}  // namespace sextic::lp
