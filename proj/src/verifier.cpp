#include "sextic/verifier.hpp"

#include "sextic/lp_format.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>

namespace sextic::verify {

void CaseSpec::validate() const {
  auto check = [](int regime, const std::optional<GapBranch>& gaps, const char* side) {
    if (regime < 1 || regime > 3)
      throw MalformedCase(std::string(side) + " regime must be 1, 2 or 3; got " + std::to_string(regime));
    if ((regime == 1) != gaps.has_value())
      throw MalformedCase(std::string(side) + " gap branch must be present exactly in regime 1");
  };
  check(target_case, target_gaps, "target");
  check(bad_case, bad_gaps, "bad");
}

namespace {

std::string branch_label(const std::optional<GapBranch>& gaps) {
  if (!gaps) return "none";
  std::string s;
  for (bool g : *gaps) s += g ? 'G' : 'E';
  return s;
}

std::vector<std::pair<int, std::optional<GapBranch>>> regimes() {
  std::vector<std::pair<int, std::optional<GapBranch>>> out;
  for (int mask = 0; mask < 8; ++mask)
    out.emplace_back(1, GapBranch{(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0});
  out.emplace_back(2, std::nullopt);
  out.emplace_back(3, std::nullopt);
  return out;
}

// Affine form over the case LP variables.
struct Affine {
  lp::LinearExpr terms;
  Rational constant;

  Affine& add(const std::string& var, int coeff) {
    terms[var] += coeff;
    if (terms[var] == 0) terms.erase(var);
    return *this;
  }
  Affine operator-(const Affine& o) const {
    Affine r = *this;
    for (const auto& [v, c] : o.terms) {
      r.terms[v] -= c;
      if (r.terms[v] == 0) r.terms.erase(v);
    }
    r.constant -= o.constant;
    return r;
  }
};

Affine diff(const std::string& hi, const std::string& lo) { return Affine{}.add(hi, 1).add(lo, -1); }

// Appends "form rel rhs", moving the constant to the right-hand side.
void add_row(lp::LpInstance& inst, std::string name, const Affine& form, lp::Relation rel, int rhs) {
  inst.constraints.push_back({std::move(name), form.terms, rel, Rational(rhs) - form.constant});
}

// Constraints and dimension expression for one side. `low`, `mid`, `high`
// are the entries of the nondecreasing type; the base is (e1, e2).
Affine side(lp::LpInstance& inst, const std::string& prefix, int regime, const std::optional<GapBranch>& gaps,
            const Affine& low, const Affine& mid, const Affine& high) {
  using lp::Relation;
  const Affine spread = high - low;
  Affine dim;
  switch (regime) {
    case 1: {
      add_row(inst, prefix + "_regime", spread - Affine{}.add("e1", 1), Relation::less_equal, 0);
      dim = Affine{}.add("e1", 1).add("e2", 1);
      dim.constant = -2;
      const std::array<Affine, 3> pair_gaps{mid - low, high - low, high - mid};
      const std::array<const char*, 3> tags{"12", "13", "23"};
      for (std::size_t p = 0; p < 3; ++p) {
        if ((*gaps)[p]) {
          add_row(inst, prefix + "_gap" + tags[p], pair_gaps[p], Relation::greater_equal, 1);
          dim = dim - pair_gaps[p];
          dim.constant += 1;
        } else {
          add_row(inst, prefix + "_gap" + tags[p], pair_gaps[p], Relation::equal, 0);
        }
      }
      break;
    }
    case 2:
      add_row(inst, prefix + "_regime_lo", spread - Affine{}.add("e1", 1), Relation::greater_equal, 1);
      add_row(inst, prefix + "_regime_hi", spread - Affine{}.add("e2", 1), Relation::less_equal, -1);
      dim = Affine{}.add("e2", 1) - spread;
      break;
    case 3:
      // spread = e2, excluding e1 = e2 where the first regime takes precedence
      add_row(inst, prefix + "_regime", spread - Affine{}.add("e2", 1), Relation::equal, 0);
      add_row(inst, prefix + "_regime_lo", spread - Affine{}.add("e1", 1), Relation::greater_equal, 1);
      break;
  }
  return dim;
}

}  // namespace

std::string CaseSpec::label() const {
  return "T" + std::to_string(target_case) + "_" + branch_label(target_gaps) + "_B" + std::to_string(bad_case) + "_" +
         branch_label(bad_gaps);
}

std::vector<CaseSpec> all_cases() {
  std::vector<CaseSpec> out;
  for (const auto& [t, tg] : regimes())
    for (const auto& [b, bg] : regimes()) out.push_back(CaseSpec{t, tg, b, bg});
  return out;
}

lp::LpInstance build_case_lp(const CaseSpec& spec, const CaseOptions& options) {
  spec.validate();
  using lp::Relation;
  lp::LpInstance inst;
  for (const char* v : {"e1", "e2", "e3", "e4", "e5", "a1", "a2", "a3"}) inst.declare(v);

  auto e = [](int i) { return "e" + std::to_string(i); };
  add_row(inst, "e1_min", Affine{}.add("e1", 1), Relation::greater_equal, 1);
  for (int i = 1; i < 5; ++i) add_row(inst, "e_order" + std::to_string(i), diff(e(i + 1), e(i)), Relation::greater_equal, 0);
  // P3
  add_row(inst, "p3_e5_e1e4", Affine{}.add("e5", 1).add("e1", -1).add("e4", -1), Relation::less_equal, 0);
  add_row(inst, "p3_e5_e2e3", Affine{}.add("e5", 1).add("e2", -1).add("e3", -1), Relation::less_equal, 0);
  add_row(inst, "p3_e2_2e1", Affine{}.add("e2", 1).add("e1", -2), Relation::less_equal, 0);
  add_row(inst, "p3_e4_e1e3", Affine{}.add("e4", 1).add("e1", -1).add("e3", -1), Relation::less_equal, 0);
  // bad type: nondecreasing, nonempty locus, degree, negative entry
  add_row(inst, "a_order1", diff("a2", "a1"), Relation::greater_equal, 0);
  add_row(inst, "a_order2", diff("a3", "a2"), Relation::greater_equal, 0);
  add_row(inst, "a_nonempty1", diff("a2", "a1").add("e1", -1), Relation::less_equal, 0);
  add_row(inst, "a_nonempty2", diff("a3", "a2").add("e1", -1), Relation::less_equal, 0);
  add_row(inst, "a_nonempty3", diff("a3", "a1").add("e2", -1), Relation::less_equal, 0);
  if (options.require_negative_a1) add_row(inst, "a1_negative", Affine{}.add("a1", 1), Relation::less_equal, -1);
  add_row(inst, "a_degree",
          Affine{}.add("a1", 1).add("a2", 1).add("a3", 1).add("e3", -2).add("e4", -2).add("e5", -2).add("e1", 3).add("e2", 3),
          Relation::equal, 0);

  auto var = [](const char* name, int sign) { return Affine{}.add(name, sign); };
  const Affine target_dim_expr =
      side(inst, "t", spec.target_case, spec.target_gaps, var("e5", -1), var("e4", -1), var("e3", -1));
  const Affine bad_dim_expr = side(inst, "b", spec.bad_case, spec.bad_gaps, var("a1", 1), var("a2", 1), var("a3", 1));
  Affine objective = target_dim_expr - bad_dim_expr;
  inst.objective = objective.terms;
  inst.objective_constant = objective.constant;
  return inst;
}

CaseSpec case_of(const ScrollarTuple& e, const SplittingType& a) {
  auto regime = [](int spread, int e1, int e2, int g12, int g13, int g23) -> std::pair<int, std::optional<GapBranch>> {
    if (spread <= e1) return {1, GapBranch{g12 >= 1, g13 >= 1, g23 >= 1}};
    if (spread < e2) return {2, std::nullopt};
    return {3, std::nullopt};
  };
  const int e1 = e.e(1), e2 = e.e(2);
  auto [t, tg] = regime(e.e(5) - e.e(3), e1, e2, e.e(5) - e.e(4), e.e(5) - e.e(3), e.e(4) - e.e(3));
  auto [b, bg] = regime(a[3] - a[1], e1, e2, a[2] - a[1], a[3] - a[1], a[3] - a[2]);
  return CaseSpec{t, tg, b, bg};
}

std::map<std::string, Rational> lp_point(const ScrollarTuple& e, const SplittingType& a) {
  std::map<std::string, Rational> p;
  for (int i = 1; i <= 5; ++i) p["e" + std::to_string(i)] = e.e(i);
  for (int i = 1; i <= 3; ++i) p["a" + std::to_string(i)] = a[i];
  return p;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(CaseResult r) {
  switch (r) {
    case CaseResult::Infeasible: return "infeasible";
    case CaseResult::Positive: return "positive";
    case CaseResult::Fractional: return "fractional";
    case CaseResult::NonPositive: return "nonpositive";
    case CaseResult::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

CaseRecord solve_case(const CaseSpec& spec, const CaseOptions& options) {
  lp::LpInstance inst = build_case_lp(spec, options);
  lp::LpOutcome outcome = lp::solve(inst);
  if (!lp::check_certificate(inst, outcome)) throw SolverFailure("certificate rejected for case " + spec.label());
  CaseResult result;
  switch (outcome.status) {
    case lp::LpStatus::infeasible: result = CaseResult::Infeasible; break;
    case lp::LpStatus::unbounded: result = CaseResult::Unbounded; break;
    default:
      if (outcome.value >= 1) result = CaseResult::Positive;
      else if (outcome.value > 0) result = CaseResult::Fractional;
      else result = CaseResult::NonPositive;
  }
  return CaseRecord{spec, std::move(outcome), result};
}

// Runs body(i) for i in [0, n), rethrowing the first exception after the loop.
template <class Body>
void for_each_index(std::size_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(sextic_verify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

VerificationReport run_cases(const std::vector<CaseSpec>& cases, const CaseOptions& options, Execution exec) {
  for (const auto& c : cases) c.validate();
  std::vector<std::optional<CaseRecord>> slots(cases.size());
  for_each_index(cases.size(), exec, [&](std::size_t i) { slots[i] = solve_case(cases[i], options); });

  VerificationReport report;
  bool fail = false, fractional = false;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    report.records.push_back(std::move(*slots[i]));
    switch (report.records.back().result) {
      case CaseResult::Infeasible:
      case CaseResult::Positive: break;
      case CaseResult::Fractional:
        fractional = true;
        report.failing.push_back(i);
        break;
      case CaseResult::NonPositive:
      case CaseResult::Unbounded:
        fail = true;
        report.failing.push_back(i);
        break;
    }
  }
  report.verdict = fail ? Verdict::Fail : fractional ? Verdict::Inconclusive : Verdict::Pass;
  return report;
}

VerificationReport run_verification(const CaseOptions& options, Execution exec) {
  return run_cases(all_cases(), options, exec);
}

std::vector<ScrollarTuple> p3_tuples(int e_max) {
  std::vector<ScrollarTuple> out;
  for (int e1 = 1; e1 <= e_max; ++e1)
    for (int e2 = e1; e2 <= std::min(e_max, 2 * e1); ++e2)
      for (int e3 = e2; e3 <= e_max; ++e3)
        for (int e4 = e3; e4 <= std::min(e_max, e1 + e3); ++e4)
          for (int e5 = e4; e5 <= std::min({e_max, e1 + e4, e2 + e3}); ++e5)
            out.push_back(ScrollarTuple::sextic({e1, e2, e3, e4, e5}));
  return out;
}

BruteForceReport brute_force_check(int e_max, Execution exec) {
  BruteForceReport report;
  report.e_max = e_max;
  const std::vector<ScrollarTuple> tuples = p3_tuples(e_max);
  report.tuples = tuples.size();

  std::vector<std::vector<Violation>> found(tuples.size());
  std::vector<std::size_t> counts(tuples.size());
  for_each_index(tuples.size(), exec, [&](std::size_t i) {
    const ScrollarTuple& e = tuples[i];
    const TrigonalBase base(e.e(1), e.e(2));
    const int target = target_dim(e);
    const auto bad = enumerate_bad_types(e);
    counts[i] = bad.size();
    for (const auto& a : bad) {
      const int d = dim_splitting_locus(base, a);
      if (target <= d) found[i].push_back(Violation{e, a, target, d});
    }
  });
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    report.bad_types += counts[i];
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
  }
  return report;
}

std::string case_file_name(const CaseSpec& spec) {
  return "case_T" + std::to_string(spec.target_case) + "_" + branch_label(spec.target_gaps) + "_B" +
         std::to_string(spec.bad_case) + "_" + branch_label(spec.bad_gaps) + ".lp";
}

std::vector<std::string> export_cases(const std::filesystem::path& directory, const CaseOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec || !std::filesystem::is_directory(directory))
    throw IoError("cannot create directory '" + directory.string() + "'" + (ec ? ": " + ec.message() : ""));
  std::vector<std::string> names;
  for (const auto& spec : all_cases()) {
    const std::string name = case_file_name(spec);
    std::ofstream out(directory / name, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + (directory / name).string() + "' for writing");
    out << "\\ case " << spec.label() << "\n" << lp::write_lp(build_case_lp(spec, options));
    out.close();
    if (!out) throw IoError("failed writing '" + (directory / name).string() + "'");
    names.push_back(name);
  }
  return names;
}

}  // namespace sextic::verify
