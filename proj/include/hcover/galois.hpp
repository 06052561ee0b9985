#pragma once

// Outer Galois points.  A point R off the curve is Galois exactly when the
// collineations fixing every line through R number deg C.

#include <cstdint>
#include <optional>
#include <vector>

#include "hcover/autgrp.hpp"

namespace hcover::galois {

using proj::Mat3;
using proj::Point;

/// Elements of the group fixing every line through R.  Throws PreconditionError when R lies on the curve.
std::vector<Mat3> pencil_stabilizer(const autgrp::AutGroup& group, const curve::PlaneCurve& curve, const Point& R);

struct GaloisPointReport {
  Point point{};
  std::vector<Mat3> stabilizer;  // G_R
  bool is_galois = false;
  /// Generator of a cyclic subgroup C_R of order q+1 inside G_R, when one exists.
  std::optional<Mat3> cyclic_generator;
  std::size_t cyclic_order = 0;
  /// Points of {Z=0}(F_(q^2)) off Sing fixed by C_R.
  std::vector<Point> cyclic_fixed_on_line;
};

/// Fills in C_R and its fixed points for a point already known to be Galois.
void analyze_cyclic_part(GaloisPointReport& report, const curve::CurveFamilyParams& params,
                         const std::vector<curve::PointAnalysis>& singular);

struct GaloisScan {
  std::size_t scanned = 0;  // points of P^2 off the curve
  std::vector<GaloisPointReport> points;
  std::size_t expected = 0;  // q^2 - q
  bool on_line_at_infinity = false;
  bool quad_rational = false;
  bool off_singular = false;
  bool passed = false;
};

/// Exhaustive scan of P^2 over the curve's field.
GaloisScan enumerate_outer_galois(const autgrp::AutGroup& group, const curve::PlaneCurve& curve,
                                  const curve::CurveFamilyParams& params,
                                  const std::vector<curve::PointAnalysis>& singular);

enum class ProjectionForm {
  corrected,  // w = y + b^q v/(b^(q+1) + 1)
  literal,    // w = y + b v/(b^(q+1) + 1)
};

/// With v = x - b y and w as above, L(w)^(q+1) + L(v)^(q+1)/(b^(q+1)+1)^(q+1) + c/(b^(q+1)+1) equals
/// f(x, y)/(b^(q+1)+1) as polynomials.  Throws PreconditionError if b^(q+1) = -1 or b is outside GF(q^2).
bool verify_projection_substitution(const curve::CurveFamilyParams& params, gf::Code beta,
                                    ProjectionForm form = ProjectionForm::corrected);

struct GenerationReport {
  std::size_t generated_order = 0;
  bool equals_group = false;
};

/// Closure of the union of the given stabilizers compared with the full group.
GenerationReport verify_generation(const autgrp::AutGroup& group, const std::vector<GaloisPointReport>& points);

/// For sampled lines through R, G_R acts transitively on the affine rational points of the curve on the line.
/// Returns the number of lines checked; throws Error on the first non-transitive fiber.
std::size_t check_fiber_transitivity(const GaloisPointReport& report, const curve::PlaneCurve& curve,
                                     std::size_t max_lines);

/// r(C_R) = r(C_R') exactly when R' is fixed by C_R, over all pairs of analyzed Galois points.
bool check_cyclic_restrictions(const std::vector<GaloisPointReport>& points, const gf::Field& f);

}  // namespace hcover::galois
