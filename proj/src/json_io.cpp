#include "sextic/json_io.hpp"

#include "sextic/splitting_loci.hpp"

namespace sextic::json_io {

namespace {

Json type_json(const SplittingType& t) { return Json::array({t[1], t[2], t[3]}); }

Json point_json(const lp::LpInstance& inst, const std::map<std::string, Rational>& point) {
  Json out = Json::object();
  for (const auto& v : inst.variables) {
    auto it = point.find(v);
    out[v] = to_string(it == point.end() ? Rational(0) : it->second);
  }
  return out;
}

Json multipliers(const lp::LpInstance& inst, const std::vector<Rational>& values) {
  Json out = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    out.push_back(Json{{"constraint", inst.constraints[i].name}, {"value", to_string(values[i])}});
  return out;
}

Json partition_json(const OrientedPartition& p) {
  return Json{{"light", Json::array({p.light[0], p.light[1]})}, {"heavy", Json::array({p.heavy[0], p.heavy[1]})}};
}

}  // namespace

Json outcome(const lp::LpInstance& instance, const lp::LpOutcome& out) {
  Json j;
  j["status"] = lp::to_string(out.status);
  switch (out.status) {
    case lp::LpStatus::optimal:
      j["value"] = to_string(out.value);
      j["primal"] = point_json(instance, out.primal);
      j["duals"] = multipliers(instance, out.duals);
      break;
    case lp::LpStatus::infeasible:
      j["farkas"] = multipliers(instance, out.farkas);
      break;
    case lp::LpStatus::unbounded:
      j["point"] = point_json(instance, out.primal);
      j["ray"] = point_json(instance, out.ray);
      break;
  }
  j["certificate_valid"] = lp::check_certificate(instance, out);
  return j;
}

Json report(const verify::VerificationReport& r) {
  Json j;
  j["verdict"] = verify::to_string(r.verdict);
  j["case_count"] = r.records.size();
  Json cases = Json::array();
  for (const auto& rec : r.records) {
    Json c;
    c["case"] = rec.spec.label();
    c["status"] = lp::to_string(rec.outcome.status);
    c["result"] = verify::to_string(rec.result);
    if (rec.outcome.status == lp::LpStatus::optimal) c["minimum"] = to_string(rec.outcome.value);
    cases.push_back(c);
  }
  j["cases"] = cases;
  Json failing = Json::array();
  for (std::size_t i : r.failing) {
    const auto& rec = r.records[i];
    Json f;
    f["case"] = rec.spec.label();
    f["result"] = verify::to_string(rec.result);
    if (rec.outcome.status == lp::LpStatus::optimal) f["minimum"] = to_string(rec.outcome.value);
    Json point = Json::object();
    for (const auto& [name, value] : rec.outcome.primal) point[name] = to_string(value);
    f["witness"] = point;
    failing.push_back(f);
  }
  j["failing"] = failing;
  return j;
}

Json brute_force(const verify::BruteForceReport& r) {
  Json j;
  j["e_max"] = r.e_max;
  j["tuples"] = r.tuples;
  j["bad_types"] = r.bad_types;
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back(Json{{"e", x.e.entries()}, {"bad_type", type_json(x.bad)}, {"target_dim", x.target_dim}, {"bad_dim", x.bad_dim}});
  j["violations"] = v;
  j["passed"] = r.passed();
  return j;
}

Json plan(const witness::Plan& p) {
  Json j;
  if (const auto* d = std::get_if<witness::DoubleOverTriplePlan>(&p)) {
    j["kind"] = "DoubleOverTriple";
    j["base"] = Json::array({d->e1, d->e2});
    j["g_X"] = d->base_genus;
    j["delta"] = d->delta;
    j["target_type"] = type_json(d->target);
    j["target_dim"] = d->target_dim;
    Json bad = Json::array();
    for (const auto& b : d->bad) bad.push_back(Json{{"type", type_json(b.type)}, {"dim", b.dim}});
    j["bad_types"] = bad;
    j["total_genus"] = d->total_genus;
  } else {
    const auto& t = std::get<witness::TripleOverDoublePlan>(p);
    j["kind"] = "TripleOverDouble";
    j["g_X"] = t.base_genus;
    j["partition"] = partition_json(t.partition);
    j["L1_type"] = Json::array({t.l1_type[0], t.l1_type[1]});
    j["L2_type"] = Json::array({t.l2_type[0], t.l2_type[1]});
    j["deg_D1"] = t.deg_d1;
    j["deg_D2"] = t.deg_d2;
    j["m"] = t.m;
    j["deg_D1_prime"] = t.deg_d1_prime;
    j["deg_D2_prime"] = t.deg_d2_prime;
    j["delta_coefficient"] = t.delta_coefficient;
    j["deg_Delta"] = t.deg_delta;
    j["deg_L1"] = t.deg_l1;
    j["deg_L2"] = t.deg_l2;
    j["deg_L1_L2_neg2"] = t.deg_l1_l2_neg2;
    j["total_genus"] = t.total_genus;
  }
  return j;
}

Json classification(const ScrollarTuple& e) {
  Json j;
  j["degree"] = e.degree();
  j["e"] = e.entries();
  j["genus"] = genus(e);
  if (e.degree() == 6) {
    const bool p2 = in_P2(e);
    j["region"] = to_string(classify_region(e));
    j["realizable"] = realizable(e);
    j["in_P2"] = p2;
    j["in_P3"] = in_P3(e);
    j["in_Q"] = in_Q(e);
    j["in_P6"] = in_P6(e);
    Json parts = Json::array();
    if (p2)
      for (const auto& p : find_admissible_partitions(e)) parts.push_back(partition_json(p));
    j["admissible_partitions"] = parts;
    j["expected_codim"] = expected_codim(e);
  } else {
    j["realizable"] = realizable(e);
  }
  return j;
}

Json bad_types(const ScrollarTuple& e) {
  Json j;
  j["e"] = e.entries();
  j["target_type"] = type_json(target_type(e));
  j["target_dim"] = target_dim(e);
  j["sum"] = bad_type_sum(e);
  const TrigonalBase base(e.e(1), e.e(2));
  Json list = Json::array();
  for (const auto& t : enumerate_bad_types(e))
    list.push_back(Json{{"type", type_json(t)}, {"dim", dim_splitting_locus(base, t)}});
  j["bad_types"] = list;
  return j;
}

}  // namespace sextic::json_io
