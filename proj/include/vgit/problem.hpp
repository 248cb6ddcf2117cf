#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "vgit/git.hpp"

// Versioned problem-file schema. A problem file is a strict JSON document:
//
//   {
//     "format_version": 1,
//     "charge_matrix": [[2, 1, 0], [0, 1, 1]],
//     "characters": { "theta_plus": [4, 2], "theta_minus": [2, 4] },
//     "options": { "cap": 16, "seed": 0 }
//   }
//
// Unknown fields, malformed matrices, non-integer entries, and characters of
// the wrong length are rejected. "characters" and "options" are optional.
// Serialization is canonical: parsing the output of serialize_problem yields
// the same value, and identical problems serialize byte-identically.

namespace vgit {

inline constexpr int kProblemFormatVersion = 1;

struct ProblemOptions {
  int cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  bool operator==(const ProblemOptions&) const = default;
};

struct ProblemFile {
  int format_version = kProblemFormatVersion;
  ChargeMatrix charge;
  std::vector<std::pair<std::string, Character>> characters;  // name-sorted
  ProblemOptions options;

  // Throws Error when the name is not declared in the file.
  const Character& character(const std::string& name) const;

  bool operator==(const ProblemFile&) const = default;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile parse_problem(std::istream& in);

std::string serialize_problem(const ProblemFile& pf);

// FNV-1a over the canonical serialization, rendered as "fnv1a64:<hex>".
std::string problem_digest(const ProblemFile& pf);

}  // namespace vgit
