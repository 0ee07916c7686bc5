#pragma once

#include "sextic/exact_lp.hpp"
#include "sextic/scrollar.hpp"
#include "sextic/splitting_loci.hpp"

#include <array>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

/// Positivity of dim U^{(-e5,-e4,-e3)} - dim U^{a} over every e in P3 and
/// every bad type a, checked by splitting the piecewise-linear difference
/// into exact rational LPs.
///
/// Each side of the difference is one of the three dimension regimes
/// (indexed by the spread a3 - a1 against e1 and e2). In regime 1 the
/// dimension is g_X - mu, and each of the three mu terms max(0, x - 1)
/// with x >= 0 an integer is linearized by a branch: x = 0 (term 0) or
/// x >= 1 (term x - 1). Strict inequalities between integers are closed
/// up by one unit. Every integer point of a case lies in its LP, so a
/// positive LP minimum proves the integer statement for that case.
namespace sextic::verify {

class MalformedCase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per mu term: false = the gap is zero, true = the gap is at least one.
using GapBranch = std::array<bool, 3>;

/// One linear piece: a dimension regime for the target type and one for
/// the bad type, each with its gap branch when the regime is 1.
struct CaseSpec {
  int target_case = 1;
  std::optional<GapBranch> target_gaps;
  int bad_case = 1;
  std::optional<GapBranch> bad_gaps;

  /// Throws MalformedCase unless each regime is in {1,2,3} and carries a
  /// branch exactly when it is 1.
  void validate() const;
  /// e.g. "T1_EGG_B3_none"; E = zero gap, G = gap >= 1.
  std::string label() const;

  bool operator==(const CaseSpec&) const = default;
};

/// The 100 cases in deterministic order.
std::vector<CaseSpec> all_cases();

struct CaseOptions {
  /// Dropping the a1 <= -1 row turns the lemma false; kept for mutation tests.
  bool require_negative_a1 = true;
};

/// Variables e1..e5, a1..a3; objective target dim minus bad dim.
lp::LpInstance build_case_lp(const CaseSpec& spec, const CaseOptions& options = {});

/// Case whose regime rules (taken in the same precedence as
/// dim_splitting_locus) apply to the integer point (e, a).
CaseSpec case_of(const ScrollarTuple& e, const SplittingType& a);

/// The point (e, a) as an assignment to the case LP variables.
std::map<std::string, Rational> lp_point(const ScrollarTuple& e, const SplittingType& a);

enum class Verdict { Pass, Fail, Inconclusive };
const char* to_string(Verdict v);

enum class CaseResult { Infeasible, Positive, Fractional, NonPositive, Unbounded };
const char* to_string(CaseResult r);

struct CaseRecord {
  CaseSpec spec;
  lp::LpOutcome outcome;
  CaseResult result;
};

/// Pass iff every case is infeasible or has minimum >= 1. A minimum in
/// (0, 1) would need integer reasoning and is reported as Inconclusive.
struct VerificationReport {
  std::vector<CaseRecord> records;
  Verdict verdict = Verdict::Pass;
  std::vector<std::size_t> failing;  // indices into records
};

enum class Execution { serial, parallel };

/// Solves every case and re-checks every certificate; throws SolverFailure
/// if a certificate does not verify.
VerificationReport run_verification(const CaseOptions& options = {}, Execution exec = Execution::parallel);
VerificationReport run_cases(const std::vector<CaseSpec>& cases, const CaseOptions& options = {},
                             Execution exec = Execution::parallel);

struct Violation {
  ScrollarTuple e;
  SplittingType bad;
  int target_dim;
  int bad_dim;
};

struct BruteForceReport {
  int e_max = 0;
  std::size_t tuples = 0;
  std::size_t bad_types = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

/// Every e in P3 with e5 <= e_max in lexicographic order.
std::vector<ScrollarTuple> p3_tuples(int e_max);

/// Direct integer scan: target_dim(e) > dim U^a for every bad a.
BruteForceReport brute_force_check(int e_max, Execution exec = Execution::parallel);

/// `case_T<k>_<branch>_B<k>_<branch>.lp`
std::string case_file_name(const CaseSpec& spec);

/// Writes one .lp file per case into `directory` (created if missing) and
/// returns the file names in case order. Throws IoError.
std::vector<std::string> export_cases(const std::filesystem::path& directory, const CaseOptions& options = {});

}  // namespace sextic::verify
