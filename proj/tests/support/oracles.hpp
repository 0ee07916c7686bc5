#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls into the solver or the classification code it
// is meant to check.

#include "sextic/exact_lp.hpp"
#include "sextic/rational.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using sextic::Rational;
using sextic::lp::LpInstance;
using sextic::lp::Relation;

// ---------------------------------------------------------------------------
// Random LP instances

struct RandomLpOptions {
  int max_variables = 6;
  int max_constraints = 10;
  int coefficient_range = 4;   // numerators in [-range, range]
  int max_denominator = 3;
  bool lower_bound_everything = false;  // makes the feasible set pointed
};

inline Rational random_rational(std::mt19937_64& rng, int range, int max_den) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, max_den);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline LpInstance random_instance(std::mt19937_64& rng, const RandomLpOptions& opt) {
  std::uniform_int_distribution<int> nvar(1, opt.max_variables);
  std::uniform_int_distribution<int> ncon(0, opt.max_constraints);
  std::uniform_int_distribution<int> rel(0, 5);
  std::uniform_int_distribution<int> coin(0, 3);
  LpInstance inst;
  const int n = nvar(rng);
  for (int j = 0; j < n; ++j) inst.declare("x" + std::to_string(j));
  for (const auto& v : inst.variables) {
    Rational c = random_rational(rng, opt.coefficient_range, opt.max_denominator);
    if (c != 0) inst.objective[v] = c;
  }
  const int m = ncon(rng);
  for (int i = 0; i < m; ++i) {
    sextic::lp::Constraint c;
    c.name = "c" + std::to_string(i);
    for (const auto& v : inst.variables) {
      if (coin(rng) == 0) continue;
      Rational a = random_rational(rng, opt.coefficient_range, opt.max_denominator);
      if (a != 0) c.coefficients[v] = a;
    }
    const int r = rel(rng);
    c.relation = r < 2 ? Relation::less_equal : (r < 5 ? Relation::greater_equal : Relation::equal);
    c.rhs = random_rational(rng, 2 * opt.coefficient_range, opt.max_denominator);
    inst.constraints.push_back(std::move(c));
  }
  for (const auto& v : inst.variables) {
    sextic::lp::Bound b;
    const int kind = coin(rng);
    if (opt.lower_bound_everything || kind != 0) b.lower = random_rational(rng, opt.coefficient_range, 1);
    if (kind == 3) b.upper = *b.lower + Rational(coin(rng) + 1);
    if (!opt.lower_bound_everything && kind == 0 && coin(rng) == 0) b.upper = random_rational(rng, 4, 1);
    inst.bounds[v] = b;
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Vertex enumeration: every constraint and finite bound is a candidate
// hyperplane; each n-subset is solved exactly, and feasible unique
// intersections are the vertices. Valid as a minimum oracle when the
// feasible set is pointed (e.g. every variable lower-bounded) and the LP
// is bounded.

struct Halfspace {
  std::vector<Rational> a;
  Rational b;
  Relation rel;
};

inline std::vector<Halfspace> halfspaces(const LpInstance& inst) {
  const std::size_t n = inst.variables.size();
  std::vector<Halfspace> out;
  for (const auto& c : inst.constraints) {
    Halfspace h{std::vector<Rational>(n), c.rhs, c.relation};
    for (std::size_t j = 0; j < n; ++j) {
      auto it = c.coefficients.find(inst.variables[j]);
      if (it != c.coefficients.end()) h.a[j] = it->second;
    }
    out.push_back(std::move(h));
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto b = inst.bound_of(inst.variables[j]);
    if (b.lower) {
      Halfspace h{std::vector<Rational>(n), *b.lower, Relation::greater_equal};
      h.a[j] = 1;
      out.push_back(std::move(h));
    }
    if (b.upper) {
      Halfspace h{std::vector<Rational>(n), *b.upper, Relation::less_equal};
      h.a[j] = 1;
      out.push_back(std::move(h));
    }
  }
  return out;
}

inline bool satisfies(const Halfspace& h, const std::vector<Rational>& x) {
  Rational lhs = 0;
  for (std::size_t j = 0; j < x.size(); ++j) lhs += h.a[j] * x[j];
  switch (h.rel) {
    case Relation::less_equal: return lhs <= h.b;
    case Relation::greater_equal: return lhs >= h.b;
    case Relation::equal: return lhs == h.b;
  }
  return false;
}

// Gauss-Jordan on an n x n system; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) rhs[r] /= m[r][r];
  return rhs;
}

struct VertexResult {
  std::size_t vertices = 0;
  std::optional<Rational> minimum;
};

inline VertexResult vertex_minimum(const LpInstance& inst) {
  const auto hs = halfspaces(inst);
  const std::size_t n = inst.variables.size();
  VertexResult result;
  if (hs.size() < n) return result;
  std::vector<bool> pick(hs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < hs.size(); ++i)
      if (pick[i]) {
        m.push_back(hs[i].a);
        rhs.push_back(hs[i].b);
      }
    auto x = solve_square(m, rhs);
    if (!x) continue;
    if (!std::all_of(hs.begin(), hs.end(), [&](const Halfspace& h) { return satisfies(h, *x); })) continue;
    ++result.vertices;
    Rational value = inst.objective_constant;
    for (std::size_t j = 0; j < n; ++j) {
      auto it = inst.objective.find(inst.variables[j]);
      if (it != inst.objective.end()) value += it->second * (*x)[j];
    }
    if (!result.minimum || value < *result.minimum) result.minimum = value;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return result;
}

// ---------------------------------------------------------------------------
// Region classification straight from the defining inequalities and the
// four admissibility conditions, written without reference to the library.

enum class Region { Outside, P3Only, Both, QOnly, P2NotQ };

inline bool direct_p2(const std::array<int, 6>& e) {
  return e[5] <= e[1] + e[4] && e[5] <= e[2] + e[3] && e[3] <= e[1] + e[2] && e[4] <= 2 * e[2];
}

inline bool direct_p3(const std::array<int, 6>& e) {
  return e[5] <= e[1] + e[4] && e[5] <= e[2] + e[3] && e[2] <= 2 * e[1] && e[4] <= e[1] + e[3];
}

inline bool direct_p6(const std::array<int, 6>& e) {
  for (int i = 1; i <= 5; ++i)
    for (int j = i; i + j <= 5; ++j)
      if (e[i + j] > e[i] + e[j]) return false;
  return true;
}

// `e` is 1-indexed: e[0] is unused.
inline bool direct_has_admissible(const std::array<int, 6>& e) {
  const std::array<std::array<int, 4>, 6> orientations{{
      {2, 3, 4, 5}, {4, 5, 2, 3}, {2, 4, 3, 5}, {3, 5, 2, 4}, {2, 5, 3, 4}, {3, 4, 2, 5},
  }};
  for (const auto& o : orientations) {
    int ei = e[o[0]], ej = e[o[1]], ek = e[o[2]], el = e[o[3]];
    if (ei > ej) std::swap(ei, ej);
    if (ek > el) std::swap(ek, el);
    const bool c1 = ei + ej <= ek + el;
    const bool c2 = ei <= ej && ej <= ei + e[1];
    const bool c3 = ek <= el && el <= ek + e[1];
    const bool c4 = ek + el + e[1] <= 2 * ei + 2 * ej;
    if (c1 && c2 && c3 && c4) return true;
  }
  return false;
}

inline Region direct_region(const std::array<int, 6>& e) {
  const bool p2 = direct_p2(e), p3 = direct_p3(e);
  if (!p2 && !p3) return Region::Outside;
  if (p3) return p2 ? Region::Both : Region::P3Only;
  return direct_has_admissible(e) ? Region::QOnly : Region::P2NotQ;
}

// All nondecreasing 1-indexed tuples with 1 <= e1 and e5 <= e_max.
template <class F>
void for_each_tuple(int e_max, F&& f) {
  std::array<int, 6> e{};
  for (e[1] = 1; e[1] <= e_max; ++e[1])
    for (e[2] = e[1]; e[2] <= e_max; ++e[2])
      for (e[3] = e[2]; e[3] <= e_max; ++e[3])
        for (e[4] = e[3]; e[4] <= e_max; ++e[4])
          for (e[5] = e[4]; e[5] <= e_max; ++e[5]) f(e);
}

// Partitions of n into exactly k positive parts: p(n,k) = p(n-1,k-1) + p(n-k,k).
inline long long partitions_exact(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  return partitions_exact(n - 1, k - 1) + partitions_exact(n - k, k);
}

}  // namespace oracle
