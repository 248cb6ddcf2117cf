#pragma once

#include <stdexcept>
#include <string>

namespace vgit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vector does not match the ambient dimension it is used in.
struct DimensionError : Error {
  using Error::Error;
};

// A character outside the effective cone was passed where a nonempty
// semistable locus is required.
struct NotEffectiveError : Error {
  using Error::Error;
};

// Subset enumeration was requested beyond the configured cap.
struct SizeCapError : Error {
  using Error::Error;
};

// Problem-file syntax or schema violation.
struct ParseError : Error {
  using Error::Error;
};

// Problem file declares a format_version this build does not understand.
struct VersionError : ParseError {
  using ParseError::ParseError;
};

// Fan rendering is only defined for rank-2 character lattices.
struct UnsupportedRankError : Error {
  using Error::Error;
};

// A quasimap datum violating its invariants was passed to a checked entry
// point.
struct InvalidDatumError : Error {
  using Error::Error;
};

}  // namespace vgit
