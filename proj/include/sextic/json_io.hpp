#pragma once

#include "sextic/exact_lp.hpp"
#include "sextic/scrollar.hpp"
#include "sextic/verifier.hpp"
#include "sextic/witness.hpp"

#include "json.hpp"

/// JSON views used by the CLI. Rationals are strings ("3", "-1/2") so that
/// no value passes through floating point.
namespace sextic::json_io {

using Json = nlohmann::ordered_json;

Json outcome(const lp::LpInstance& instance, const lp::LpOutcome& outcome);
Json report(const verify::VerificationReport& report);
Json brute_force(const verify::BruteForceReport& report);
Json plan(const witness::Plan& plan);
Json classification(const ScrollarTuple& e);
Json bad_types(const ScrollarTuple& e);

}  // namespace sextic::json_io
