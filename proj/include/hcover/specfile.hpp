#pragma once

// Curve specification files.  One "key = value" pair per line, '#' starts a comment:
//
//   p = 2
//   e = 1
//   n = 1
//   alpha.0 = 1
//   c = 1,0,0,0
//   modulus = 1,1,0,0,1      (optional)
//
// alpha.i and c are coordinate vectors over GF(p) in the power basis of the top field
// GF(q^(2(n+1))), lowest coefficient first; missing trailing coordinates are zero.
// When modulus is given it must equal the defining polynomial the toolkit picks for the top field.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "hcover/curve.hpp"

namespace hcover::specfile {

/// Malformed or inconsistent specification, with the offending line when known.
class SpecError : public Error {
 public:
  using Error::Error;
};

curve::CurveFamilyParams parse(std::istream& is, std::uint64_t max_field_order = gf::kDefaultMaxOrder);
curve::CurveFamilyParams load(const std::string& path, std::uint64_t max_field_order = gf::kDefaultMaxOrder);

/// Canonical text; parse(write(P)) reproduces P.
std::string write(const curve::CurveFamilyParams& params);

}  // namespace hcover::specfile
