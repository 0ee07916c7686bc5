#pragma once

#include "sextic/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic::lp {

/// Undeclared variable, duplicate name, or similar structural defect.
class MalformedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate that does not fit the instance it is checked against.
class ShapeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Relation { less_equal, equal, greater_equal };

const char* to_string(Relation relation);

using LinearExpr = std::map<std::string, Rational>;

struct Constraint {
  std::string name;
  LinearExpr coefficients;
  Relation relation = Relation::greater_equal;
  Rational rhs;
};

/// Missing side means unbounded on that side.
struct Bound {
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool operator==(const Bound&) const = default;
};

/// Minimization problem over exact rationals. Variables without an entry in
/// `bounds` are free.
struct LpInstance {
  std::vector<std::string> variables;
  LinearExpr objective;
  Rational objective_constant;
  std::vector<Constraint> constraints;
  std::map<std::string, Bound> bounds;

  /// Declares `name` if new; returns its position in `variables`.
  std::size_t declare(const std::string& name);
  bool has_variable(const std::string& name) const;
  Bound bound_of(const std::string& name) const;

  /// Throws MalformedInstance when a coefficient or bound names an
  /// undeclared variable, or when variable/constraint names repeat.
  void validate() const;
};

enum class LpStatus { optimal, infeasible, unbounded };

const char* to_string(LpStatus status);

/// Solver result with its certificate.
///
/// Multiplier conventions: every constraint is read in ">=" form
/// (a <= b becomes -a >= -b). `duals` (optimal) and `farkas` (infeasible)
/// hold one multiplier per constraint in that form, nonnegative for
/// inequalities and free for equalities. Bound multipliers are not stored;
/// the checker reconstructs them from the reduced costs.
struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  Rational value;                  // optimal only
  std::map<std::string, Rational> primal;  // optimal solution, or unbounded base point
  std::vector<Rational> duals;     // optimal
  std::vector<Rational> farkas;    // infeasible
  std::map<std::string, Rational> ray;     // unbounded: feasible direction, negative slope
};

/// Two-phase primal simplex on a dense rational tableau with Bland's rule.
LpOutcome solve(const LpInstance& instance);

/// Independent validation of a solver claim; shares no code with `solve`.
bool check_certificate(const LpInstance& instance, const LpOutcome& outcome);

/// Objective value (including the constant) at `point`; missing variables are 0.
Rational evaluate_objective(const LpInstance& instance, const std::map<std::string, Rational>& point);

/// True iff `point` satisfies every constraint and bound.
bool is_feasible_point(const LpInstance& instance, const std::map<std::string, Rational>& point);

}  // namespace sextic::lp
