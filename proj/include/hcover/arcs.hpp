#pragma once

// Arc parameters of the rational points of a plane curve in PG(2, Q).

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "hcover/curve.hpp"
#include "hcover/projective.hpp"

namespace hcover::arcs {

struct PointSet {
  std::vector<std::uint8_t> member;    // indexed by plane point index
  std::vector<std::uint32_t> indices;  // ascending
  std::size_t size() const { return indices.size(); }
};

/// All points of the plane on the curve, including those on Z = 0.
PointSet rational_point_set(const curve::PlaneCurve& curve, const proj::ProjPlane& plane);
PointSet make_point_set(const proj::ProjPlane& plane, const std::vector<proj::Point>& points);

struct IntersectionProfile {
  std::vector<std::uint32_t> line_counts;  // indexed by line
  std::map<std::uint32_t, std::uint64_t> histogram;  // |l cap S| -> number of lines
  std::uint32_t d = 0;
  /// sum over lines of |l cap S| == |S| (Q + 1).
  bool incidence_sum_ok = false;
};

IntersectionProfile intersection_profile(const proj::ProjPlane& plane, const PointSet& S);

/// Largest |l cap S| over the lines l through P.
std::uint32_t max_through(const proj::ProjPlane& plane, const IntersectionProfile& profile, const proj::Point& P);

struct ArcReport {
  std::size_t k = 0;
  std::uint32_t d = 0;
  bool complete = true;
  /// Points off S whose lines all meet S in fewer than d points, in index order.
  std::vector<proj::Point> extension_witnesses;
};

/// Points Q off S such that S + Q is still a (k+1, d)-arc.  d is usually profile.d.
ArcReport completeness_check(const proj::ProjPlane& plane, const PointSet& S, std::uint32_t d);

/// T_lambda = {a/lambda : L(a) = 0} for a nonzero root lambda of L; ascending codes.
std::vector<gf::Code> t_lambda(const poly::LinearizedPoly& L, gf::Code lambda);

/// L_lambda = x^(q^2) - lambda^(q^2 - 1) x.
poly::LinearizedPoly l_lambda(const poly::LinearizedPoly& L, gf::Code lambda);

struct PencilCheck {
  std::size_t kernel_size = 0;  // roots of L_lambda; q^2 expected
  bool kernel_inside_L = false;
  /// sigma_(b,g) maps l_m to l_m exactly when b = a g, over all (b, g) with L(b) = L_lambda(g) = 0.
  bool fixes_iff_equal = false;
  /// Number of distinct lines sigma_(b,g)(l_0) through (a:1:0).
  std::size_t distinct_lines = 0;
};

/// Pencil of the lines X - aY - mZ through (a:1:0) under the translations (x + b, y + g).
PencilCheck verify_pencil(const curve::CurveFamilyParams& params, gf::Code a, gf::Code lambda);

void write_histogram_csv(std::ostream& os, const IntersectionProfile& profile);
void write_witnesses_csv(std::ostream& os, const ArcReport& report);

}  // namespace hcover::arcs
