#pragma once

#include "sextic/scrollar.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

/// Splitting types of line bundles on trigonal and hyperelliptic curves:
/// nonemptiness and dimension of splitting loci, the enumeration of bad
/// types in Pic^{-2 delta}, and the semireduced-divisor degree on a
/// hyperelliptic base.
namespace sextic {

class InvalidBase : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EmptyLocus : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};
class NotInP3 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class GapTooLarge : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Trigonal curve X -> P^1 with scrollar invariants (e1, e2), restricted to
/// the Maroni range 1 <= e1 <= e2 <= 2 e1.
struct TrigonalBase {
  int e1;
  int e2;

  TrigonalBase(int first, int second);
  int genus() const { return e1 + e2 - 2; }
};

/// Nondecreasing degrees (a1, a2, a3) of the pushforward of a line bundle.
struct SplittingType {
  std::array<int, 3> a;

  explicit SplittingType(std::array<int, 3> degrees);
  SplittingType(int a1, int a2, int a3) : SplittingType(std::array<int, 3>{a1, a2, a3}) {}

  int operator[](int i) const { return a[static_cast<std::size_t>(i - 1)]; }  // 1-based
  int sum() const { return a[0] + a[1] + a[2]; }

  bool operator==(const SplittingType&) const = default;
  auto operator<=>(const SplittingType&) const = default;
};

std::string to_string(const SplittingType& t);

/// Rank-2 splitting type (a, b) on a hyperelliptic curve of genus g_X.
struct HyperellipticSplit {
  int a;
  int b;
  int genus;

  HyperellipticSplit(int low, int high, int base_genus);
};

/// sum over i<j of max(0, a_j - a_i - 1).
int mu(const SplittingType& t);

/// a2 <= a1 + e1, a3 <= a2 + e1, a3 <= a1 + e2.
bool is_nonempty(const TrigonalBase& base, const SplittingType& t);

/// Case analysis on a3 - a1, taken in order: <= e1 gives g_X - mu,
/// strictly between e1 and e2 gives e2 - (a3 - a1), = e2 gives 0.
/// Throws EmptyLocus when the locus is empty.
int dim_splitting_locus(const TrigonalBase& base, const SplittingType& t);

/// e1 + e2 - e3 - e4 - e5.
int delta(const ScrollarTuple& e);

/// Splitting type (-e5, -e4, -e3) carried by the trigonal factor.
SplittingType target_type(const ScrollarTuple& e);

/// Dimension of the locus of the target type over the base (e1, e2).
/// Throws NotInP3.
int target_dim(const ScrollarTuple& e);

/// a1 + a2 + a3 for a bundle in Pic^{-2 delta}, i.e. -2 delta - g_X - 2.
int bad_type_sum(const ScrollarTuple& e);

/// All nonempty nondecreasing types with the bad-type sum and a1 <= -1,
/// in lexicographic order. Throws NotInP3.
std::vector<SplittingType> enumerate_bad_types(const ScrollarTuple& e);

/// Degree of the semireduced divisor D with L = tau^* O(b) (x) O(D), i.e.
/// g_X + 1 - (b - a). Throws GapTooLarge when b - a > g_X + 1.
int semireduced_degree(const HyperellipticSplit& h);

}  // namespace sextic
