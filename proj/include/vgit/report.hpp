#pragma once

#include <json.hpp>

#include <string>

#include "vgit/fan.hpp"
#include "vgit/problem.hpp"
#include "vgit/quasimap.hpp"

// Canonical structured reports. Serialization uses insertion-ordered JSON
// with fixed key order, so identical inputs produce byte-identical output.
// Cones are always reported in both descriptions with primitive integer
// vectors.

namespace vgit {

using Json = nlohmann::ordered_json;

Json vec_json(const IntVec& v);
Json vec_json(const RatVec& v);  // entries must be integral
Json cone_json(const Cone& C);
Json family_json(const SupportFamily& fam);
Json census_json(const StackCensus& census);
Json fan_json(const GitFan& fan);
Json witness_json(const QuasimapDatum& qm, const Character& kappa);
Json verify_json(const VerificationReport& report);

Json report_envelope(const std::string& command, const ProblemFile& pf,
                     Json arguments, Json result, int exit_code);

// Canonical JSON serialization: two-space indent, arrays of primitives on
// one line, newline-terminated.
std::string canonical_dump(const Json& j);

// Indented human-readable rendering of a report.
std::string plain_text(const Json& j);

}  // namespace vgit
