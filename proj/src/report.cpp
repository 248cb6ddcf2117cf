#include "vgit/report.hpp"

namespace vgit {

namespace {

long long to_i64(const Integer& z) {
  if (!z.fits_slong_p())
    throw Error("report: integer entry exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

Json vecs_json(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const RatVec& v : vs) a.push_back(vec_json(v));
  return a;
}

Json support_json(const Support& s) {
  Json a = Json::array();
  for (int i : s.indices()) a.push_back(i);
  return a;
}

}  // namespace

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(to_i64(v[i]));
  return a;
}

Json vec_json(const RatVec& v) { return vec_json(int_vec(v)); }

Json cone_json(const Cone& C) {
  Json j;
  j["ambient_dim"] = C.ambient_dim();
  j["dim"] = C.dim();
  j["lineality_dim"] = C.lineality_dim();
  j["rays"] = vecs_json(C.rays());
  j["lineality"] = vecs_json(C.lineality());
  j["inequalities"] = vecs_json(C.inequalities());
  return j;
}

Json family_json(const SupportFamily& fam) {
  Json j;
  j["n"] = fam.n;
  Json mins = Json::array();
  for (const Support& s : fam.minimal) mins.push_back(support_json(s));
  j["minimal_supports"] = std::move(mins);
  return j;
}

Json census_json(const StackCensus& census) {
  Json j;
  j["quotient_dim"] = census.quotient_dim;
  Json strata = Json::array();
  for (const StackStratum& s : census.strata) {
    Json row;
    row["support"] = support_json(s.support);
    row["codim"] = s.codim;
    Json factors = Json::array();
    bool finite = true;
    Integer order = 1;
    for (const Integer& f : s.stabilizer) {
      factors.push_back(to_i64(f));
      if (f == 0)
        finite = false;
      else
        order *= f;
    }
    row["stabilizer_factors"] = std::move(factors);
    row["stabilizer_finite"] = finite;
    if (finite) row["stabilizer_order"] = to_i64(order);
    strata.push_back(std::move(row));
  }
  j["strata"] = std::move(strata);
  return j;
}

Json fan_json(const GitFan& fan) {
  Json j;
  j["effective_cone"] = cone_json(fan.effective);
  j["chamber_count"] = fan.chambers.size();
  j["wall_count"] = fan.walls.size();
  Json chambers = Json::array();
  for (const GitClass& c : fan.chambers) {
    Json row;
    row["cone"] = cone_json(c.cone);
    row["minimal_supports"] = family_json(c.family)["minimal_supports"];
    chambers.push_back(std::move(row));
  }
  j["chambers"] = std::move(chambers);
  Json walls = Json::array();
  for (const GitClass& c : fan.walls) walls.push_back(cone_json(c.cone));
  j["walls"] = std::move(walls);
  return j;
}

Json witness_json(const QuasimapDatum& qm, const Character& kappa) {
  Json j;
  j["lambda"] = vec_json(qm.lambda);
  j["support"] = support_json(qm.support);
  j["degree"] = to_i64(hm_weight(kappa, qm.lambda));
  return j;
}

Json verify_json(const VerificationReport& report) {
  Json j;
  j["theta"] = vec_json(report.theta);
  j["pass"] = report.pass();
  j["duality_match"] = report.duality_match;
  j["c_cone"] = cone_json(report.c_theta);
  j["ne_cone"] = cone_json(report.ne);
  j["dual_ne_cone"] = cone_json(report.dual_ne);
  int failures = 0;
  Json checks = Json::array();
  for (const VerificationCheck& c : report.checks) {
    Json row;
    row["character"] = vec_json(c.test_char);
    row["effective"] = c.effective;
    row["git_equivalent"] = c.equivalent;
    row["in_relint_dual_ne"] = c.in_relint_dual_ne;
    row["equivalence_agrees"] = c.equivalence_agrees;
    row["cv_routes_agree"] = c.cv_routes_agree;
    row["monotonicity_ok"] = c.monotonicity_ok;
    if (c.witness) row["witness"] = witness_json(*c.witness, c.test_char);
    if (c.boundary_generator)
      row["boundary_generator"] = vec_json(*c.boundary_generator);
    row["pass"] = c.pass;
    if (!c.pass) ++failures;
    checks.push_back(std::move(row));
  }
  j["check_count"] = report.checks.size();
  j["failures"] = failures;
  j["checks"] = std::move(checks);
  return j;
}

Json report_envelope(const std::string& command, const ProblemFile& pf,
                     Json arguments, Json result, int exit_code) {
  Json j;
  j["tool"] = "vgit";
  j["report_version"] = 1;
  j["command"] = command;
  j["problem_digest"] = problem_digest(pf);
  j["arguments"] = std::move(arguments);
  j["result"] = std::move(result);
  j["exit_code"] = exit_code;
  j["status"] = exit_code == 0 || exit_code == 1 ? "ok" : "error";
  return j;
}

namespace {

bool scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const Json& v : j)
    if (v.is_structured()) return false;
  return true;
}

void dump_rec(const Json& j, std::string& out, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  std::string pad2(static_cast<size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad2 + Json(it.key()).dump() + ": ";
      dump_rec(it.value(), out, indent + 2);
      if (i + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
      return;
    }
    if (scalar_array(j)) {
      out += "[";
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += pad2;
      dump_rec(j[i], out, indent + 2);
      if (i + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string canonical_dump(const Json& j) {
  std::string out;
  dump_rec(j, out, 0);
  out += "\n";
  return out;
}

namespace {

std::string inline_scalar(const Json& j) {
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ", ";
    s += inline_scalar(j[i]);
  }
  return s + "]";
}

bool vector_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const Json& v : j)
    if (!scalar_array(v)) return false;
  return true;
}

void render(const Json& j, std::string& out, int indent) {
  std::string pad(static_cast<size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_primitive() || scalar_array(v)) {
        out += pad + it.key() + ": " + inline_scalar(v) + "\n";
      } else if (vector_list(v)) {
        // List of vectors prints on one line.
        out += pad + it.key() + ": " + inline_scalar(v) + "\n";
      } else {
        out += pad + it.key() + ":\n";
        render(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (v.is_primitive() || scalar_array(v)) {
        out += pad + "- " + inline_scalar(v) + "\n";
      } else {
        out += pad + "-\n";
        render(v, out, indent + 2);
      }
    }
  } else {
    out += pad + inline_scalar(j) + "\n";
  }
}

}  // namespace

std::string plain_text(const Json& j) {
  std::string out;
  render(j, out, 0);
  return out;
}

}  // namespace vgit
