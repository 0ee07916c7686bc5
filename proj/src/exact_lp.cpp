#include "sextic/exact_lp.hpp"

#include <algorithm>
#include <set>

namespace sextic::lp {

const char* to_string(Relation relation) {
  switch (relation) {
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
    case Relation::greater_equal: return ">=";
  }
  return "?";
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::optimal: return "Optimal";
    case LpStatus::infeasible: return "Infeasible";
    case LpStatus::unbounded: return "Unbounded";
  }
  return "?";
}

std::size_t LpInstance::declare(const std::string& name) {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it != variables.end()) return static_cast<std::size_t>(it - variables.begin());
  variables.push_back(name);
  return variables.size() - 1;
}

bool LpInstance::has_variable(const std::string& name) const {
  return std::find(variables.begin(), variables.end(), name) != variables.end();
}

Bound LpInstance::bound_of(const std::string& name) const {
  auto it = bounds.find(name);
  return it == bounds.end() ? Bound{} : it->second;
}

void LpInstance::validate() const {
  std::set<std::string> declared;
  for (const auto& v : variables)
    if (!declared.insert(v).second) throw MalformedInstance("duplicate variable '" + v + "'");
  auto check_expr = [&](const LinearExpr& expr, const std::string& where) {
    for (const auto& [name, coeff] : expr)
      if (!declared.contains(name))
        throw MalformedInstance("undeclared variable '" + name + "' in " + where);
  };
  check_expr(objective, "objective");
  std::set<std::string> names;
  for (const auto& c : constraints) {
    check_expr(c.coefficients, "constraint '" + c.name + "'");
    if (!c.name.empty() && !names.insert(c.name).second)
      throw MalformedInstance("duplicate constraint name '" + c.name + "'");
  }
  for (const auto& [name, b] : bounds)
    if (!declared.contains(name)) throw MalformedInstance("bound on undeclared variable '" + name + "'");
}

namespace {

// Standard form: columns y >= 0, rows G y (>= | =) h. Each original
// variable is offset + sum(sign * y[col]).
struct ColumnMap {
  Rational offset;
  std::vector<std::pair<std::size_t, int>> parts;
};

struct Row {
  std::vector<Rational> coeffs;  // over structural columns
  Rational rhs;
  bool equality = false;
  std::optional<std::size_t> source;  // index of the original constraint
};

class Tableau {
 public:
  Tableau(const std::vector<Row>& rows, std::size_t structural) : m_(rows.size()), structural_(structural) {
    // Column layout: structural | surplus (one per >= row) | artificial (one per row).
    for (const auto& r : rows)
      if (!r.equality) ++surplus_;
    n_ = structural_ + surplus_ + m_;
    cells_.assign(m_, std::vector<Rational>(n_ + 1));
    flip_.assign(m_, 1);
    basis_.resize(m_);
    std::size_t next_surplus = structural_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < structural_; ++j) cells_[i][j] = rows[i].coeffs[j];
      if (!rows[i].equality) cells_[i][next_surplus++] = -1;
      cells_[i][n_] = rows[i].rhs;
      if (rows[i].rhs < 0) {
        flip_[i] = -1;
        for (auto& v : cells_[i]) v = -v;
      }
      cells_[i][artificial(i)] = 1;
      basis_[i] = artificial(i);
    }
  }

  std::size_t artificial(std::size_t row) const { return structural_ + surplus_ + row; }
  bool is_artificial(std::size_t col) const { return col >= structural_ + surplus_ && col < n_; }
  std::size_t rows() const { return m_; }
  std::size_t columns() const { return n_; }
  int flip(std::size_t row) const { return flip_[row]; }
  const Rational& rhs(std::size_t row) const { return cells_[row][n_]; }
  const Rational& at(std::size_t row, std::size_t col) const { return cells_[row][col]; }
  std::size_t basic(std::size_t row) const { return basis_[row]; }

  // Installs cost vector c (size n_) and returns reduced costs c - c_B B^-1 A.
  void price(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (cells_[i][j] != 0) reduced_[j] -= cb * cells_[i][j];
    }
  }

  const Rational& reduced(std::size_t col) const { return reduced_[col]; }

  Rational objective() const {
    Rational total;
    for (std::size_t i = 0; i < m_; ++i) total += cost_[basis_[i]] * cells_[i][n_];
    return total;
  }

  enum class Result { optimal, unbounded };

  // Bland's rule: lowest-index entering column, lowest-index leaving basic
  // variable among ratio ties. Returns the entering column on unboundedness.
  Result iterate(bool allow_artificial, std::size_t& unbounded_column) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return Result::optimal;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = cells_[i][*entering];
        if (a <= 0) continue;
        Rational ratio = cells_[i][n_] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) {
        unbounded_column = *entering;
        return Result::unbounded;
      }
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / cells_[row][col];
    for (auto& v : cells_[row]) v *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || cells_[i][col] == 0) continue;
      Rational factor = cells_[i][col];
      for (std::size_t j = 0; j <= n_; ++j)
        if (cells_[row][j] != 0) cells_[i][j] -= factor * cells_[row][j];
    }
    if (reduced_[col] != 0) {
      Rational factor = reduced_[col];
      for (std::size_t j = 0; j < n_; ++j)
        if (cells_[row][j] != 0) reduced_[j] -= factor * cells_[row][j];
    }
    basis_[row] = col;
  }

  // After phase 1, pivots zero-level artificials out of the basis where a
  // structural or surplus column allows it. Rows left with an artificial are
  // redundant and stay fixed at zero.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < structural_ + surplus_; ++j) {
        if (cells_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<Rational> column_values() const {
    std::vector<Rational> values(n_);
    for (std::size_t i = 0; i < m_; ++i) values[basis_[i]] = cells_[i][n_];
    return values;
  }

 private:
  std::size_t m_;
  std::size_t structural_;
  std::size_t surplus_ = 0;
  std::size_t n_ = 0;
  std::vector<std::vector<Rational>> cells_;
  std::vector<int> flip_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

struct StandardForm {
  std::vector<ColumnMap> maps;  // per original variable
  std::size_t structural = 0;
  std::vector<Row> rows;
  std::vector<Rational> cost;  // over structural columns
  Rational constant;
  bool empty_box = false;
};

StandardForm standardize(const LpInstance& inst) {
  StandardForm sf;
  const std::size_t nvars = inst.variables.size();
  sf.maps.resize(nvars);
  std::vector<std::optional<Rational>> width(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    Bound b = inst.bound_of(inst.variables[v]);
    ColumnMap& map = sf.maps[v];
    if (b.lower) {
      map.offset = *b.lower;
      map.parts.push_back({sf.structural++, 1});
      if (b.upper) {
        if (*b.upper < *b.lower) sf.empty_box = true;
        width[v] = *b.upper - *b.lower;
      }
    } else if (b.upper) {
      map.offset = *b.upper;
      map.parts.push_back({sf.structural++, -1});
    } else {
      map.parts.push_back({sf.structural++, 1});
      map.parts.push_back({sf.structural++, -1});
    }
  }
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < nvars; ++v) index[inst.variables[v]] = v;

  for (std::size_t c = 0; c < inst.constraints.size(); ++c) {
    const Constraint& con = inst.constraints[c];
    const int sign = con.relation == Relation::less_equal ? -1 : 1;
    Row row;
    row.coeffs.assign(sf.structural, Rational(0));
    row.rhs = sign * con.rhs;
    row.equality = con.relation == Relation::equal;
    row.source = c;
    for (const auto& [name, coeff] : con.coefficients) {
      const ColumnMap& map = sf.maps[index.at(name)];
      Rational a = sign * coeff;
      row.rhs -= a * map.offset;
      for (auto [col, s] : map.parts) row.coeffs[col] += s * a;
    }
    sf.rows.push_back(std::move(row));
  }
  // Finite two-sided bounds become y <= width, i.e. -y >= -width.
  for (std::size_t v = 0; v < nvars; ++v) {
    if (!width[v]) continue;
    Row row;
    row.coeffs.assign(sf.structural, Rational(0));
    row.coeffs[sf.maps[v].parts.front().first] = -1;
    row.rhs = -*width[v];
    sf.rows.push_back(std::move(row));
  }
  sf.cost.assign(sf.structural, Rational(0));
  sf.constant = inst.objective_constant;
  for (const auto& [name, coeff] : inst.objective) {
    const ColumnMap& map = sf.maps[index.at(name)];
    sf.constant += coeff * map.offset;
    for (auto [col, s] : map.parts) sf.cost[col] += s * coeff;
  }
  return sf;
}

std::map<std::string, Rational> to_original(const LpInstance& inst, const StandardForm& sf,
                                            const std::vector<Rational>& columns, bool with_offset) {
  std::map<std::string, Rational> out;
  for (std::size_t v = 0; v < inst.variables.size(); ++v) {
    Rational x = with_offset ? sf.maps[v].offset : Rational(0);
    for (auto [col, s] : sf.maps[v].parts) x += s * columns[col];
    out[inst.variables[v]] = x;
  }
  return out;
}

}  // namespace

LpOutcome solve(const LpInstance& instance) {
  instance.validate();
  StandardForm sf = standardize(instance);
  LpOutcome out;
  if (sf.empty_box) {
    out.status = LpStatus::infeasible;
    out.farkas.assign(instance.constraints.size(), Rational(0));
    return out;
  }

  Tableau tab(sf.rows, sf.structural);
  const std::size_t n = tab.columns();

  std::vector<Rational> phase1(n);
  for (std::size_t i = 0; i < tab.rows(); ++i) phase1[tab.artificial(i)] = 1;
  tab.price(phase1);
  std::size_t ignored = 0;
  tab.iterate(true, ignored);  // bounded below by 0

  if (tab.objective() > 0) {
    out.status = LpStatus::infeasible;
    out.farkas.assign(instance.constraints.size(), Rational(0));
    for (std::size_t i = 0; i < tab.rows(); ++i) {
      if (!sf.rows[i].source) continue;
      out.farkas[*sf.rows[i].source] = tab.flip(i) * (1 - tab.reduced(tab.artificial(i)));
    }
    return out;
  }

  tab.expel_artificials();
  std::vector<Rational> phase2(n);
  std::copy(sf.cost.begin(), sf.cost.end(), phase2.begin());
  tab.price(phase2);
  std::size_t entering = 0;
  auto result = tab.iterate(false, entering);

  std::vector<Rational> values = tab.column_values();
  out.primal = to_original(instance, sf, values, true);
  if (result == Tableau::Result::unbounded) {
    out.status = LpStatus::unbounded;
    std::vector<Rational> direction(n);
    direction[entering] = 1;
    for (std::size_t i = 0; i < tab.rows(); ++i) direction[tab.basic(i)] = -tab.at(i, entering);
    out.ray = to_original(instance, sf, direction, false);
    return out;
  }
  out.status = LpStatus::optimal;
  out.value = sf.constant + tab.objective();
  out.duals.assign(instance.constraints.size(), Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (!sf.rows[i].source) continue;
    out.duals[*sf.rows[i].source] = -tab.flip(i) * tab.reduced(tab.artificial(i));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Certificate checking

namespace {

Rational dot(const LinearExpr& expr, const std::map<std::string, Rational>& point) {
  Rational total;
  for (const auto& [name, coeff] : expr) {
    auto it = point.find(name);
    if (it != point.end()) total += coeff * it->second;
  }
  return total;
}

int normal_sign(Relation r) { return r == Relation::less_equal ? -1 : 1; }

void require_known(const LpInstance& inst, const std::map<std::string, Rational>& point, const char* what) {
  for (const auto& [name, value] : point)
    if (!inst.has_variable(name)) throw ShapeMismatch(std::string(what) + " references unknown variable '" + name + "'");
}

// sum_i y_i * s_i * a_i, per variable
std::map<std::string, Rational> combine(const LpInstance& inst, const std::vector<Rational>& y) {
  std::map<std::string, Rational> g;
  for (const auto& v : inst.variables) g[v] = 0;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i) {
    const auto& c = inst.constraints[i];
    if (y[i] == 0) continue;
    for (const auto& [name, coeff] : c.coefficients) g[name] += y[i] * normal_sign(c.relation) * coeff;
  }
  return g;
}

bool multipliers_signed(const LpInstance& inst, const std::vector<Rational>& y) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (inst.constraints[i].relation != Relation::equal && y[i] < 0) return false;
  return true;
}

bool check_optimal(const LpInstance& inst, const LpOutcome& out) {
  if (out.duals.size() != inst.constraints.size()) throw ShapeMismatch("dual vector length differs from constraint count");
  for (const auto& v : inst.variables)
    if (!out.primal.contains(v)) throw ShapeMismatch("primal assignment misses variable '" + v + "'");
  if (!is_feasible_point(inst, out.primal)) return false;
  if (evaluate_objective(inst, out.primal) != out.value) return false;
  if (!multipliers_signed(inst, out.duals)) return false;

  std::map<std::string, Rational> g = combine(inst, out.duals);
  Rational dual_value = inst.objective_constant;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i)
    dual_value += out.duals[i] * normal_sign(inst.constraints[i].relation) * inst.constraints[i].rhs;
  for (const auto& v : inst.variables) {
    auto it = inst.objective.find(v);
    Rational reduced = (it == inst.objective.end() ? Rational(0) : it->second) - g[v];
    Bound b = inst.bound_of(v);
    if (reduced > 0) {
      if (!b.lower) return false;
      dual_value += reduced * *b.lower;
    } else if (reduced < 0) {
      if (!b.upper) return false;
      dual_value += reduced * *b.upper;
    }
  }
  return dual_value == out.value;
}

bool check_infeasible(const LpInstance& inst, const LpOutcome& out) {
  if (out.farkas.size() != inst.constraints.size()) throw ShapeMismatch("Farkas vector length differs from constraint count");
  for (const auto& v : inst.variables) {
    Bound b = inst.bound_of(v);
    if (b.lower && b.upper && *b.upper < *b.lower) return true;
  }
  if (!multipliers_signed(inst, out.farkas)) return false;
  std::map<std::string, Rational> g = combine(inst, out.farkas);
  Rational beta;
  for (std::size_t i = 0; i < inst.constraints.size(); ++i)
    beta += out.farkas[i] * normal_sign(inst.constraints[i].relation) * inst.constraints[i].rhs;
  // Every feasible x has g.x >= beta; refute with the supremum over the bound box.
  Rational sup;
  for (const auto& v : inst.variables) {
    const Rational& gj = g[v];
    if (gj == 0) continue;
    Bound b = inst.bound_of(v);
    if (gj > 0) {
      if (!b.upper) return false;
      sup += gj * *b.upper;
    } else {
      if (!b.lower) return false;
      sup += gj * *b.lower;
    }
  }
  return sup < beta;
}

bool check_unbounded(const LpInstance& inst, const LpOutcome& out) {
  for (const auto& v : inst.variables)
    if (!out.primal.contains(v)) throw ShapeMismatch("base point misses variable '" + v + "'");
  if (!is_feasible_point(inst, out.primal)) return false;
  for (const auto& c : inst.constraints) {
    Rational slope = dot(c.coefficients, out.ray) * normal_sign(c.relation);
    if (c.relation == Relation::equal ? slope != 0 : slope < 0) return false;
  }
  for (const auto& [name, d] : out.ray) {
    Bound b = inst.bound_of(name);
    if (b.lower && d < 0) return false;
    if (b.upper && d > 0) return false;
  }
  return dot(inst.objective, out.ray) < 0;
}

}  // namespace

Rational evaluate_objective(const LpInstance& instance, const std::map<std::string, Rational>& point) {
  return instance.objective_constant + dot(instance.objective, point);
}

bool is_feasible_point(const LpInstance& instance, const std::map<std::string, Rational>& point) {
  for (const auto& c : instance.constraints) {
    Rational lhs = dot(c.coefficients, point);
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  for (const auto& [name, b] : instance.bounds) {
    auto it = point.find(name);
    Rational x = it == point.end() ? Rational(0) : it->second;
    if (b.lower && x < *b.lower) return false;
    if (b.upper && x > *b.upper) return false;
  }
  return true;
}

bool check_certificate(const LpInstance& instance, const LpOutcome& outcome) {
  require_known(instance, outcome.primal, "primal assignment");
  require_known(instance, outcome.ray, "ray");
  switch (outcome.status) {
    case LpStatus::optimal: return check_optimal(instance, outcome);
    case LpStatus::infeasible: return check_infeasible(instance, outcome);
    case LpStatus::unbounded: return check_unbounded(instance, outcome);
  }
  return false;
}

}  // namespace sextic::lp
