#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hcover/gf.hpp"
#include "hcover/poly.hpp"
#include "hcover/projective.hpp"

namespace hcover::curve {

/// Parameters of L(x)^(q+1) + L(y)^(q+1) + c = 0 with L = a_0 x + ... + a_(n-1) x^(q^(2(n-1))) + x^(q^(2n)).
/// The coefficients and c are codes in the top field GF(q^(2(n+1))).
struct CurveFamilyParams {
  std::shared_ptr<const gf::Tower> tower;
  std::vector<gf::Code> alpha;  // a_0 .. a_(n-1)
  gf::Code c = 1;

  /// All a_i = 1 and c = 1.
  static CurveFamilyParams normalized(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                                      std::uint64_t max_order = gf::kDefaultMaxOrder);

  std::uint32_t p() const { return tower->p; }
  std::uint32_t e() const { return tower->e; }
  std::uint32_t n() const { return tower->n; }
  std::uint32_t q() const { return tower->q(); }
  const gf::FieldRef& field() const { return tower->top; }

  /// Throws PreconditionError on a_0 = 0, c = 0, wrong coefficient count or out-of-range codes.
  void validate() const;
  bool is_normalized() const;
  poly::LinearizedPoly L() const;
};

enum class Model { xy, tu };

struct PlaneCurve {
  Model model = Model::xy;
  gf::FieldRef field;
  poly::BiPoly f;
  poly::TriPoly F;
  std::uint64_t degree = 0;
};

PlaneCurve make_plane_curve(Model model, poly::BiPoly f);

/// C_n: L(x)^(q+1) + L(y)^(q+1) + c.
PlaneCurve build_cn(const CurveFamilyParams& params);

struct TuModel {
  PlaneCurve curve;
  gf::Code alpha = 0;  // a^(q+1) = -1, in GF(q^2) inside the top field
  gf::Code c_prime = 0;
  /// f(x(t,u), y(t,u)) == unit * f'(t,u); here unit = 1/(a^q + a).
  gf::Code unit = 0;
  bool substitution_verified = false;
  /// (x:y:z) -> (t:u:v) with t = a^q x + y, u = x + a^q y.
  proj::Mat3 xy_to_tu{};
};

/// C_n': L(t)^q L(u) + L(t) L(u)^q + c' with c' = (a^q + a) c.
TuModel build_cn_prime(const CurveFamilyParams& params, gf::Code alpha);
/// Least code a in the top field with a in GF(q^2), a^(q+1) = -1 and a^q + a != 0.
gf::Code default_tu_alpha(const CurveFamilyParams& params);

struct PointAnalysis {
  proj::Point point{};
  std::uint32_t multiplicity = 0;
  /// Rational tangent lines, normalized line coordinates, in code order.
  std::vector<proj::Line> tangent_lines;
  /// Tangent cone is a product of distinct linear forms.
  bool ordinary = false;
  /// Every linear factor of the tangent cone is defined over the field.
  bool rational_tangents = false;
};

/// Multiplicity and tangent cone at a point of the curve.  Throws PreconditionError off the curve.
PointAnalysis analyze_point(const PlaneCurve& curve, const proj::Point& P);

/// Singular points rational over the curve's field (affine scan plus the line Z = 0), in index order.
std::vector<PointAnalysis> singular_locus(const PlaneCurve& curve);

/// Points of the curve on Z = 0.
std::vector<proj::Point> points_at_infinity(const PlaneCurve& curve);

std::int64_t genus_closed_form(std::int64_t q, std::uint32_t n);
/// (d-1)(d-2)/2 - sum m(m-1)/2; throws PreconditionError unless every singular point is ordinary.
std::int64_t genus_plucker(const PlaneCurve& curve, const std::vector<PointAnalysis>& singular);

std::int64_t p_rank_closed_form(std::int64_t q, std::uint32_t n);
/// (g - 1)/q^(2n+1) == -1 + q^(2n)(1 - 1/q^(2n+1)) after clearing denominators.
bool ds_identity_check(std::int64_t q, std::uint32_t n, std::int64_t p_rank);

std::int64_t degree_closed_form(std::int64_t q, std::uint32_t n);
std::int64_t places_closed_form(std::int64_t q, std::uint32_t n);
std::int64_t plane_points_closed_form(std::int64_t q, std::uint32_t n);
std::int64_t aut_order_closed_form(std::int64_t q, std::uint32_t n);
/// (q^(2n+1) - 2) deg D == 2g - 2 with deg D = q^(2n)(q+1).
bool canonical_degree_check(std::int64_t q, std::uint32_t n);

struct PointCount {
  std::uint64_t affine = 0;
  std::uint64_t at_infinity = 0;
  std::uint64_t plane = 0;
  /// Rational places of the smooth model: smooth points count once, ordinary singular points once per rational tangent.
  std::uint64_t places = 0;
  bool places_exact = true;
};

PointCount count_points(const PlaneCurve& curve, const std::vector<PointAnalysis>& singular);

/// No line over the field is a component (each line meets the curve in fewer than Q + 1 rational points).
bool no_rational_line_component(const PlaneCurve& curve);

}  // namespace hcover::curve
