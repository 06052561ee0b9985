#include "hcover/arcs.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "hcover/kernels.hpp"

namespace hcover::arcs {

using gf::Code;
using proj::Point;

PointSet make_point_set(const proj::ProjPlane& plane, const std::vector<Point>& points) {
  PointSet out;
  out.member.assign(plane.size(), 0);
  for (const Point& P : points) out.member[plane.index(P)] = 1;
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    if (out.member[i]) out.indices.push_back(i);
  }
  return out;
}

PointSet rational_point_set(const curve::PlaneCurve& curve, const proj::ProjPlane& plane) {
  if (plane.field() != curve.field) throw FieldMismatch("plane and curve live over different fields");
  std::vector<Point> pts;
  for (const auto& a : kernels::parallel::affine_zeros(curve.f)) pts.push_back({a[0], a[1], 1});
  for (const Point& P : curve::points_at_infinity(curve)) pts.push_back(P);
  return make_point_set(plane, pts);
}

IntersectionProfile intersection_profile(const proj::ProjPlane& plane, const PointSet& S) {
  IntersectionProfile out;
  out.line_counts = kernels::parallel::line_counts(plane, S.member);
  std::uint64_t total = 0;
  for (std::uint32_t c : out.line_counts) {
    ++out.histogram[c];
    total += c;
    out.d = std::max(out.d, c);
  }
  out.incidence_sum_ok = total == static_cast<std::uint64_t>(S.size()) * (plane.field_order() + 1);
  return out;
}

std::uint32_t max_through(const proj::ProjPlane& plane, const IntersectionProfile& profile, const Point& P) {
  std::uint32_t m = 0;
  for (std::uint32_t l : plane.incident(plane.index(P))) m = std::max(m, profile.line_counts[l]);
  return m;
}

ArcReport completeness_check(const proj::ProjPlane& plane, const PointSet& S, std::uint32_t d) {
  ArcReport out;
  out.k = S.size();
  out.d = d;
  for (std::uint32_t i : kernels::parallel::extension_points(plane, S.member, d)) {
    out.extension_witnesses.push_back(plane.point(i));
  }
  out.complete = out.extension_witnesses.empty();
  return out;
}

std::vector<Code> t_lambda(const poly::LinearizedPoly& L, Code lambda) {
  const gf::Field& f = *L.field();
  if (lambda == 0 || L.eval(lambda) != 0) throw PreconditionError("lambda must be a nonzero root of L");
  std::vector<Code> out;
  for (Code a : poly::kernel(L)) out.push_back(f.div(a, lambda));
  std::sort(out.begin(), out.end());
  return out;
}

poly::LinearizedPoly l_lambda(const poly::LinearizedPoly& L, Code lambda) {
  const gf::Field& f = *L.field();
  const std::uint64_t q2 = static_cast<std::uint64_t>(L.q()) * L.q();
  return poly::LinearizedPoly(L.field(), L.q(), {f.neg(f.pow(lambda, q2 - 1)), 1});
}

namespace {

/// Image of line l under the collineation m: l m^-1.
proj::Line push_line(const gf::Field& f, const proj::Line& l, const proj::Mat3& m) {
  const proj::Mat3 inv = proj::inverse(f, m);
  proj::Line out{};
  for (int j = 0; j < 3; ++j) {
    Code acc = 0;
    for (int i = 0; i < 3; ++i) acc = f.add(acc, f.mul(l[i], inv[3 * i + j]));
    out[j] = acc;
  }
  return proj::normalize(f, out);
}

}  // namespace

PencilCheck verify_pencil(const curve::CurveFamilyParams& params, Code a, Code lambda) {
  const gf::Field& f = *params.field();
  const auto L = params.L();
  if (lambda == 0 || L.eval(lambda) != 0) throw PreconditionError("lambda must be a nonzero root of L");
  const auto betas = poly::kernel(L);
  const auto gammas = poly::kernel(l_lambda(L, lambda));

  PencilCheck out;
  out.kernel_size = gammas.size();
  out.kernel_inside_L = std::all_of(gammas.begin(), gammas.end(), [&](Code g) { return L.eval(g) == 0; });
  out.fixes_iff_equal = true;
  const proj::Line l0{1, f.neg(a), 0};
  std::set<proj::Line> images;
  for (Code b : betas) {
    for (Code g : gammas) {
      const proj::Line img = push_line(f, l0, {1, 0, b, 0, 1, g, 0, 0, 1});
      images.insert(img);
      const bool fixed = img == proj::normalize(f, l0);
      out.fixes_iff_equal = out.fixes_iff_equal && fixed == (b == f.mul(a, g));
    }
  }
  out.distinct_lines = images.size();
  return out;
}

void write_histogram_csv(std::ostream& os, const IntersectionProfile& profile) {
  os << "intersection_size,lines\n";
  for (const auto& [size, count] : profile.histogram) os << size << ',' << count << '\n';
}

void write_witnesses_csv(std::ostream& os, const ArcReport& report) {
  os << "x,y,z\n";
  for (const Point& P : report.extension_witnesses) os << P[0] << ',' << P[1] << ',' << P[2] << '\n';
}

}  // namespace hcover::arcs
