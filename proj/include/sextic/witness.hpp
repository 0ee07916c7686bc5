#pragma once

#include "sextic/scrollar.hpp"
#include "sextic/splitting_loci.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

/// Degree-level witnesses for the two factorization constructions of
/// sextic covers: a double cover of a trigonal curve (tuples in P3) and a
/// triple cover of a hyperelliptic curve (tuples in Q). Plans record the
/// numbers the constructions depend on and assert the inequalities that
/// make them go through; they do not produce equations.
namespace sextic::witness {

class NotInQ : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotAdmissible : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class Unrealizable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// An invariant that holds for every legal input failed: a bug, not an answer.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct BadLocus {
  SplittingType type;
  int dim;
};

struct DoubleOverTriplePlan {
  int e1;
  int e2;
  int base_genus;  // g_X
  int delta;
  SplittingType target;
  int target_dim;
  std::vector<BadLocus> bad;
  int total_genus;
};

/// Divisor bookkeeping on the hyperelliptic base: L1 = tau^*O(-e_i)(D1),
/// L2 = tau^*O(-e_k)(D2), D1 = mQ + D1', D2 = 2mQ + D2', and
/// Delta = c H + D2' with c = 2 e_i - e_k - deg D1'.
struct TripleOverDoublePlan {
  int base_genus;  // g_X = e1 - 1
  OrientedPartition partition;
  std::array<int, 2> l1_type;  // (-e_j, -e_i)
  std::array<int, 2> l2_type;  // (-e_l, -e_k)
  int deg_d1;
  int deg_d2;
  int m;
  int deg_d1_prime;
  int deg_d2_prime;
  int delta_coefficient;  // c
  int deg_delta;
  int deg_l1;
  int deg_l2;
  int deg_l1_l2_neg2;  // deg(L1 (x) L2^{-2})
  int total_genus;
};

using Plan = std::variant<DoubleOverTriplePlan, TripleOverDoublePlan>;

/// Throws NotInP3; throws InternalContradiction if a bad locus is not
/// strictly smaller than the target locus.
DoubleOverTriplePlan plan_double_over_triple(const ScrollarTuple& e);

/// Uses `partition` when given (NotAdmissible if it fails), otherwise the
/// first admissible partition in lexicographic order. Throws NotInQ.
TripleOverDoublePlan plan_triple_over_double(const ScrollarTuple& e,
                                             const std::optional<OrientedPartition>& partition = std::nullopt);

/// P3 first, then Q; throws Unrealizable outside Q ∪ P3.
Plan realization_witness(const ScrollarTuple& e);

}  // namespace sextic::witness
