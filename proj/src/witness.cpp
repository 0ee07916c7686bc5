#include "sextic/witness.hpp"

#include <algorithm>

namespace sextic::witness {

namespace {

void ensure(bool condition, const ScrollarTuple& e, const char* what) {
  if (!condition) throw InternalContradiction(std::string(what) + " fails for " + to_string(e));
}

}  // namespace

DoubleOverTriplePlan plan_double_over_triple(const ScrollarTuple& e) {
  if (e.degree() != 6) throw WrongDegree("witness plans need a degree-6 tuple");
  if (!in_P3(e)) throw NotInP3(to_string(e) + " is not in P3");
  const TrigonalBase base(e.e(1), e.e(2));
  DoubleOverTriplePlan plan{
      .e1 = base.e1,
      .e2 = base.e2,
      .base_genus = base.genus(),
      .delta = delta(e),
      .target = target_type(e),
      .target_dim = 0,
      .bad = {},
      .total_genus = 0,
  };
  ensure(is_nonempty(base, plan.target), e, "nonemptiness of the target locus");
  plan.target_dim = dim_splitting_locus(base, plan.target);
  for (const auto& t : enumerate_bad_types(e)) {
    const int d = dim_splitting_locus(base, t);
    ensure(d < plan.target_dim, e, "target dimension exceeding every bad dimension");
    plan.bad.push_back({t, d});
  }
  // Riemann-Hurwitz for the double cover branched over a divisor of degree -2 delta.
  plan.total_genus = 2 * plan.base_genus - 1 - plan.delta;
  ensure(plan.total_genus == e.sum() - 5, e, "genus bookkeeping");
  return plan;
}

TripleOverDoublePlan plan_triple_over_double(const ScrollarTuple& e, const std::optional<OrientedPartition>& partition) {
  if (e.degree() != 6) throw WrongDegree("witness plans need a degree-6 tuple");
  if (!in_Q(e)) throw NotInQ(to_string(e) + " is not in Q");
  OrientedPartition p = partition.value_or(OrientedPartition({2, 3}, {4, 5}));
  if (partition) {
    if (!is_admissible(e, p)) throw NotAdmissible(to_string(p) + " is not admissible for " + to_string(e));
  } else {
    p = find_admissible_partitions(e).front();
  }
  const int ei = e.e(p.light[0]), ej = e.e(p.light[1]);
  const int ek = e.e(p.heavy[0]), el = e.e(p.heavy[1]);
  const int e1 = e.e(1);
  const int g_x = e1 - 1;

  TripleOverDoublePlan plan{
      .base_genus = g_x,
      .partition = p,
      .l1_type = {-ej, -ei},
      .l2_type = {-el, -ek},
      .deg_d1 = semireduced_degree(HyperellipticSplit(-ej, -ei, g_x)),
      .deg_d2 = semireduced_degree(HyperellipticSplit(-el, -ek, g_x)),
      .m = 0,
      .deg_d1_prime = 0,
      .deg_d2_prime = 0,
      .delta_coefficient = 0,
      .deg_delta = 0,
      .deg_l1 = 0,
      .deg_l2 = 0,
      .deg_l1_l2_neg2 = 0,
      .total_genus = 0,
  };
  ensure(plan.deg_d1 == e1 - (ej - ei) && plan.deg_d1 >= 0, e, "deg D1 = e1 - (e_j - e_i) >= 0");
  ensure(plan.deg_d2 == e1 - (el - ek) && plan.deg_d2 >= 0, e, "deg D2 = e1 - (e_l - e_k) >= 0");

  plan.m = std::min(plan.deg_d1, plan.deg_d2 / 2);
  plan.deg_d1_prime = plan.deg_d1 - plan.m;
  plan.deg_d2_prime = plan.deg_d2 - 2 * plan.m;
  plan.delta_coefficient = 2 * ei - ek - plan.deg_d1_prime;
  // H has degree 2 on a hyperelliptic curve.
  plan.deg_delta = 2 * plan.delta_coefficient + plan.deg_d2_prime;
  ensure(plan.deg_delta >= 0, e, "deg Delta >= 0");
  if (plan.deg_d1_prime == 0) {
    ensure(2 * ei - ek >= 0, e, "2 e_i - e_k >= 0 when D1' = 0");
  } else {
    ensure(plan.deg_d2_prime >= 0 && plan.deg_d2_prime <= 1, e, "0 <= deg D2' <= 1 when D1' != 0");
    ensure(plan.delta_coefficient >= 0, e, "effective Delta when D1' != 0");
  }

  // deg L from the divisor description and from Riemann-Roch on tau_* L.
  plan.deg_l1 = -2 * ei + plan.deg_d1;
  plan.deg_l2 = -2 * ek + plan.deg_d2;
  const int rr_l1 = (plan.l1_type[0] + plan.l1_type[1] + 2) - 1 + g_x;
  const int rr_l2 = (plan.l2_type[0] + plan.l2_type[1] + 2) - 1 + g_x;
  ensure(plan.deg_l1 == rr_l1 && -plan.deg_l1 == ei + ej - e1, e, "deg L1 = e1 - e_i - e_j");
  ensure(plan.deg_l2 == rr_l2, e, "deg L2 = e1 - e_k - e_l");
  ensure(-(plan.l1_type[0] + plan.l1_type[1]) == ei + ej, e, "-deg(tau_* L1) = e_i + e_j");

  plan.deg_l1_l2_neg2 = plan.deg_l1 - 2 * plan.deg_l2;
  ensure(plan.deg_l1_l2_neg2 == 2 * (ek + el) - (ei + ej) - e1, e, "deg(L1 (x) L2^-2) closed form");
  ensure(plan.deg_l1_l2_neg2 >= g_x + 1, e, "deg(L1 (x) L2^-2) >= g_X + 1");

  // chi(O_C) = chi(O_X) + chi(L1) + chi(L2)
  plan.total_genus = 3 * g_x - 2 - plan.deg_l1 - plan.deg_l2;
  ensure(plan.total_genus == e.sum() - 5, e, "genus bookkeeping");
  return plan;
}

Plan realization_witness(const ScrollarTuple& e) {
  if (e.degree() != 6) throw WrongDegree("witness plans need a degree-6 tuple");
  if (in_P3(e)) return plan_double_over_triple(e);
  if (in_Q(e)) return plan_triple_over_double(e);
  throw Unrealizable(to_string(e) + " lies outside Q ∪ P3");
}

}  // namespace sextic::witness
