#pragma once

#include <cstdint>
#include <vector>

#include "hcover/curve.hpp"
#include "hcover/poly.hpp"

namespace hcover::localgeom {

using AffinePoint = std::array<gf::Code, 2>;

/// Branch of f = 0 through a smooth point Q = (a, b).  With swapped == false the branch is
/// y = b + sum_i coeffs[i] (x - a)^i; otherwise x = a + sum_i coeffs[i] (y - b)^i.
struct TruncatedSeries {
  gf::FieldRef field;
  AffinePoint base{};
  bool swapped = false;
  std::vector<gf::Code> coeffs;  // c_0 = 0 .. c_N
  std::uint32_t precision = 0;   // N
};

/// Newton lifting to precision N; the residual f(x, y(x)) mod (x - a)^(N+1) is checked to vanish.
/// Throws PreconditionError when Q is off the curve or singular.
TruncatedSeries expand_branch(const poly::BiPoly& f, const AffinePoint& Q, std::uint32_t N);

/// Coefficients of g along the branch, i.e. g(x(t), y(t)) mod t^(N+1) for the branch parameter t.
std::vector<gf::Code> evaluate_along(const TruncatedSeries& branch, const poly::BiPoly& g);

struct OrdOptions {
  std::uint32_t precision = 0;  // 0: caller default
  std::uint32_t max_doublings = 3;
};

/// Valuation of g at the smooth point Q along f = 0.  Precision is doubled up to max_doublings times;
/// CapExceeded when g still vanishes to the final precision.
std::uint32_t ord_at(const poly::BiPoly& f, const AffinePoint& Q, const poly::BiPoly& g, OrdOptions opts);

/// Default precision 2 q^(2n+1).
std::uint32_t default_precision(const curve::CurveFamilyParams& params);

struct GapCertificate {
  AffinePoint point{};
  std::uint32_t computed_order = 0;
  std::uint32_t expected_order = 0;
  /// 0 when x - a is the local parameter used, 1 when y - b is (then x and y trade places in the function).
  int parameter_variable = 0;
  /// ord_Q(x - a - g (y - b)) for each g with g^(q+1) = -1, all expected to be 1.
  std::vector<std::uint32_t> line_orders;
  bool valid = false;
};

/// (x - a)^(q^(2n+1) - q - 2) ((x - a)^(q+1) + (y - b)^(q+1)) for Q = (a, b); with variable = 1 the
/// leading factor is (y - b) instead.
poly::BiPoly gap_function(const curve::CurveFamilyParams& params, const AffinePoint& Q, int variable = 0);

/// Uses x - a when it is a local parameter at Q and y - b otherwise (exactly one of L(x), L(y) can vanish).
GapCertificate verify_gap_at_affine(const curve::CurveFamilyParams& params, const curve::PlaneCurve& cn,
                                    const AffinePoint& Q, OrdOptions opts = {});

struct RamificationCheck {
  std::size_t roots = 0;
  std::size_t constant_substitutions = 0;
  gf::Code constant = 0;
  bool passed = false;
};

/// For every root u0 of L, f'(t, u0) is the nonzero constant c', so the line u = u0 meets C_n' only at (1:0:0).
RamificationCheck verify_total_ramification(const curve::TuModel& tu, const poly::LinearizedPoly& L);

struct TransversalityCheck {
  std::size_t branches = 0;
  std::size_t transversal = 0;
  bool passed = false;
};

/// Every branch through a singular point on Z = 0 is smooth after one blow-up and meets Z = 0 with
/// intersection multiplicity 1; the multiplicities at infinity sum to the degree.
TransversalityCheck verify_transversality(const curve::PlaneCurve& curve,
                                          const std::vector<curve::PointAnalysis>& singular);

}  // namespace hcover::localgeom
