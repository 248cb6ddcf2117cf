#include "vgit/problem.hpp"

#include <json.hpp>

#include "vgit/report.hpp"

#include <algorithm>
#include <istream>

namespace vgit {

namespace {

using Json = nlohmann::ordered_json;

long require_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw ParseError(where + ": expected an integer, got " + j.dump());
  return j.get<long>();
}

void reject_unknown_keys(const Json& obj,
                         std::initializer_list<const char*> allowed,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  }
}

ChargeMatrix parse_charge(const Json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("charge_matrix: expected a nonempty array of rows");
  const Index k = static_cast<Index>(j.size());
  if (!j[0].is_array() || j[0].empty())
    throw ParseError("charge_matrix: rows must be nonempty arrays");
  const Index n = static_cast<Index>(j[0].size());
  IntMat W(k, n);
  for (Index i = 0; i < k; ++i) {
    const Json& row = j[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("charge_matrix: row " + std::to_string(i + 1) +
                       " does not have " + std::to_string(n) + " entries");
    for (Index c = 0; c < n; ++c)
      W(i, c) = Integer(require_int(row[static_cast<size_t>(c)],
                                    "charge_matrix row " +
                                        std::to_string(i + 1)));
  }
  return ChargeMatrix(std::move(W));
}

}  // namespace

const Character& ProblemFile::character(const std::string& name) const {
  for (const auto& [n, c] : characters)
    if (n == name) return c;
  throw Error("unknown character \"" + name +
              "\" (not named in the problem file)");
}

ProblemFile parse_problem(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("problem file: expected a JSON object");
  reject_unknown_keys(
      j, {"format_version", "charge_matrix", "characters", "options"},
      "problem file");
  if (!j.contains("format_version"))
    throw ParseError("problem file: missing format_version");
  long version = require_int(j["format_version"], "format_version");
  if (version != kProblemFormatVersion)
    throw VersionError("problem file: unknown format_version " +
                       std::to_string(version) + " (expected " +
                       std::to_string(kProblemFormatVersion) + ")");
  if (!j.contains("charge_matrix"))
    throw ParseError("problem file: missing charge_matrix");

  ChargeMatrix charge = parse_charge(j["charge_matrix"]);
  ProblemFile pf{kProblemFormatVersion, std::move(charge), {}, {}};

  if (j.contains("characters")) {
    const Json& chars = j["characters"];
    if (!chars.is_object())
      throw ParseError("characters: expected an object of named vectors");
    for (auto it = chars.begin(); it != chars.end(); ++it) {
      const Json& v = it.value();
      if (!v.is_array() ||
          static_cast<Index>(v.size()) != pf.charge.torus_rank())
        throw ParseError("character \"" + it.key() + "\": expected " +
                         std::to_string(pf.charge.torus_rank()) +
                         " integer entries");
      IntVec c(pf.charge.torus_rank());
      for (Index i = 0; i < c.size(); ++i)
        c[i] = Integer(require_int(v[static_cast<size_t>(i)],
                                   "character \"" + it.key() + "\""));
      pf.characters.emplace_back(it.key(), std::move(c));
    }
    std::sort(pf.characters.begin(), pf.characters.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < pf.characters.size(); ++i)
      if (pf.characters[i].first == pf.characters[i + 1].first)
        throw ParseError("character \"" + pf.characters[i].first +
                         "\" declared twice");
  }

  if (j.contains("options")) {
    const Json& opt = j["options"];
    if (!opt.is_object()) throw ParseError("options: expected an object");
    reject_unknown_keys(opt, {"cap", "seed"}, "options");
    if (opt.contains("cap")) {
      long cap = require_int(opt["cap"], "options.cap");
      if (cap < 1 || cap > 31)
        throw ParseError("options.cap: must be between 1 and 31");
      pf.options.cap = static_cast<int>(cap);
    }
    if (opt.contains("seed")) {
      const Json& s = opt["seed"];
      if (!s.is_number_integer() && !s.is_number_unsigned())
        throw ParseError("options.seed: expected an unsigned integer");
      if (s.is_number_integer() && s.get<long long>() < 0)
        throw ParseError("options.seed: must be nonnegative");
      pf.options.seed = s.get<std::uint64_t>();
    }
  }
  return pf;
}

ProblemFile parse_problem(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_problem(text);
}

std::string serialize_problem(const ProblemFile& pf) {
  Json j;
  j["format_version"] = pf.format_version;
  Json rows = Json::array();
  for (Index i = 0; i < pf.charge.torus_rank(); ++i) {
    Json row = Json::array();
    for (Index c = 0; c < pf.charge.coord_count(); ++c)
      row.push_back(pf.charge.W(i, c).get_si());
    rows.push_back(std::move(row));
  }
  j["charge_matrix"] = std::move(rows);
  Json chars = Json::object();
  for (const auto& [name, c] : pf.characters) {
    Json v = Json::array();
    for (Index i = 0; i < c.size(); ++i) v.push_back(c[i].get_si());
    chars[name] = std::move(v);
  }
  j["characters"] = std::move(chars);
  j["options"] = Json{{"cap", pf.options.cap}, {"seed", pf.options.seed}};
  return canonical_dump(j);
}

std::string problem_digest(const ProblemFile& pf) {
  std::string text = serialize_problem(pf);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vgit
