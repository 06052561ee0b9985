#pragma once

// p^s-Frobenius nonclassicality of plane curves f(x, y) = 0 monic in y.
// The curve is nonclassical exactly when
//   f_x (x^(p^s) - x) + f_y (y^(p^s) - y)  ==  0  mod f.

#include <cstdint>
#include <optional>
#include <vector>

#include "hcover/curve.hpp"

namespace hcover::frobenius {

struct FrobeniusReport {
  std::uint32_t s = 0;
  bool nonclassical = false;
  /// Monomials left in the remainder; zero exactly when nonclassical.
  std::size_t remainder_terms = 0;
  /// Highest y-power in the remainder, -1 when it vanishes.
  long remainder_y_degree = -1;
};

/// f must have a constant leading coefficient in y or, failing that, in x (it is rescaled to 1).  Throws
/// PreconditionError otherwise, when s = 0, or when f_x and f_y both vanish identically.  Throws CapExceeded when
/// p^s exceeds 2^20.
FrobeniusReport is_frobenius_nonclassical(const poly::BiPoly& f, std::uint32_t s);

/// Verdicts for s = 1 .. s_max, sharing the repeated p-th powers of y modulo f.
std::vector<FrobeniusReport> scan(const poly::BiPoly& f, std::uint32_t s_max);

/// 2(n+1)e + 4.
std::uint32_t default_scan_window(const curve::CurveFamilyParams& params);

struct FamilyClassification {
  /// 2(n+1)e when a normalizing witness exists.
  std::optional<std::uint32_t> s;
  std::optional<gf::Code> alpha;  // L(alpha)^(q+1) = c
  std::optional<gf::Code> beta;   // 1/L(alpha), with a_i = beta^(q^(2(i+1)) - 1) and beta^(q+1) c = 1
};

/// Searches every alpha with L(alpha)^(q+1) = c for a beta = 1/L(alpha) that maps the curve to the normalized
/// member under x -> x/beta^(q^2).
FamilyClassification classify_family_member(const curve::CurveFamilyParams& params);

/// The member with a_i = beta^(q^(2(i+1)) - 1) and c = beta^-(q+1); it is the normalized curve pulled back by
/// x -> beta^(q^2) x, y -> beta^(q^2) y.  Throws PreconditionError unless beta is a nonzero element of the top field.
curve::CurveFamilyParams scaled_member(const curve::CurveFamilyParams& normalized, gf::Code beta);

/// (x^(Q^n) + ... + x)^((Q-1)/(Q'-1)) + (same in y) + c over GF(Q), checked at p^s = Q^(n+1).
/// c is a code of GF(Q) lying in GF(Q').  Throws PreconditionError unless Q' - 1 divides Q - 1 and c is a
/// nonzero element of GF(Q').
FrobeniusReport check_generalized_family(std::uint32_t Q, std::uint32_t Qp, std::uint32_t n, gf::Code c);

}  // namespace hcover::frobenius
