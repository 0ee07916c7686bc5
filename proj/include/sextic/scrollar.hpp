#pragma once

#include "sextic/rational.hpp"

#include <array>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic {

class InvalidTuple : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class WrongDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class UnsupportedDegree : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotInP2 : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class BadParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scrollar invariants (e_1, ..., e_{d-1}) of a degree-d cover of P^1,
/// normalized so that 1 <= e_1 <= ... <= e_{d-1}. Any d >= 2 can be held;
/// the realizability answer is only available for d in {2, 3, 6}.
class ScrollarTuple {
 public:
  /// Throws InvalidTuple on a length mismatch, an entry below 1, or a
  /// decreasing step.
  ScrollarTuple(int degree, std::vector<int> entries);

  /// Degree-6 shorthand.
  static ScrollarTuple sextic(const std::array<int, 5>& e) { return ScrollarTuple(6, {e.begin(), e.end()}); }

  int degree() const { return degree_; }
  /// 1-based access, matching the e_1..e_{d-1} labelling.
  int e(int index) const { return entries_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<int>& entries() const { return entries_; }
  int sum() const;

  bool operator==(const ScrollarTuple&) const = default;
  auto operator<=>(const ScrollarTuple&) const = default;

 private:
  int degree_;
  std::vector<int> entries_;
};

std::string to_string(const ScrollarTuple& e);

/// Split {2,3,4,5} = {i,j} ⊔ {k,l} with i < j and k < l. `light` is the pair
/// whose entries appear on the small side of condition (1).
struct OrientedPartition {
  std::array<int, 2> light;
  std::array<int, 2> heavy;

  /// Throws std::invalid_argument unless the pairs partition {2,3,4,5}.
  OrientedPartition(std::array<int, 2> light_pair, std::array<int, 2> heavy_pair);

  bool operator==(const OrientedPartition&) const = default;
  auto operator<=>(const OrientedPartition&) const = default;
};

std::string to_string(const OrientedPartition& p);

/// The six oriented partitions in lexicographic order.
const std::array<OrientedPartition, 6>& all_oriented_partitions();

enum class RegionLabel { Outside, P3Only, Both, QOnly, P2NotQ };

const char* to_string(RegionLabel label);

bool in_P2(const ScrollarTuple& e);
bool in_P3(const ScrollarTuple& e);
bool in_P6(const ScrollarTuple& e);

/// Throws NotInP2 when e is outside P2.
bool is_admissible(const ScrollarTuple& e, const OrientedPartition& p);
std::vector<OrientedPartition> find_admissible_partitions(const ScrollarTuple& e);

bool in_Q(const ScrollarTuple& e);

/// Realizability as the scrollar invariants of a smooth irreducible cover.
/// d = 2: always; d = 3: the Maroni bound e_2 <= 2 e_1; d = 6: Q ∪ P3.
/// Throws UnsupportedDegree otherwise.
bool realizable(const ScrollarTuple& e);

/// g with sum(e) = d + g - 1.
int genus(const ScrollarTuple& e);

/// sum over i<j of max(0, e_j - e_i - 1).
int expected_codim(const ScrollarTuple& e);

/// 2(g + d - 1)/d, the bound on the summand spread of a semistable bundle's
/// pushforward.
Rational semistable_gap_bound(int degree, int genus);

RegionLabel classify_region(const ScrollarTuple& e);

}  // namespace sextic
