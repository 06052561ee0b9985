#include "hcover/galois.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hcover/kernels.hpp"

namespace hcover::galois {

using gf::Code;
using poly::BiPoly;

std::vector<Mat3> pencil_stabilizer(const autgrp::AutGroup& group, const curve::PlaneCurve& curve, const Point& R) {
  const gf::Field& f = *group.field();
  const Point P = proj::normalize(f, R);
  if (curve.F.eval(P) == 0) throw PreconditionError("point " + proj::to_string(P) + " lies on the curve");
  std::vector<Mat3> out;
  for (const Mat3& m : group.elements()) {
    if (kernels::fixes_pencil(f, m, P)) out.push_back(m);
  }
  return out;
}

namespace {

std::size_t element_order(const gf::Field& f, const Mat3& m, std::size_t limit) {
  Mat3 acc = m;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (acc == proj::identity()) return k;
    acc = proj::canonical(f, proj::multiply(f, acc, m));
  }
  return 0;
}

std::vector<Mat3> cyclic_closure(const gf::Field& f, const Mat3& g) {
  std::vector<Mat3> out{proj::identity()};
  Mat3 acc = g;
  while (acc != proj::identity()) {
    out.push_back(acc);
    acc = proj::canonical(f, proj::multiply(f, acc, g));
  }
  return out;
}

/// {Z=0}(F_(q^2)) minus the singular points.
std::vector<Point> line_points_off_sing(const curve::CurveFamilyParams& params,
                                        const std::vector<curve::PointAnalysis>& singular) {
  const gf::Field& f = *params.field();
  std::vector<Point> out;
  auto add = [&](const Point& P) {
    const bool sing = std::any_of(singular.begin(), singular.end(), [&](const auto& s) { return s.point == P; });
    if (!sing) out.push_back(P);
  };
  for (Code a = 0; a < f.order(); ++a) {
    if (f.in_subfield(a, 2 * params.e())) add({a, 1, 0});
  }
  add({1, 0, 0});
  return out;
}

bool fixes(const gf::Field& f, const Mat3& m, const Point& P) {
  return proj::proportional(f, proj::apply(f, m, P), P);
}

}  // namespace

void analyze_cyclic_part(GaloisPointReport& report, const curve::CurveFamilyParams& params,
                         const std::vector<curve::PointAnalysis>& singular) {
  const gf::Field& f = *params.field();
  const std::size_t target = params.q() + 1;
  for (const Mat3& m : report.stabilizer) {
    if (element_order(f, m, target) != target) continue;
    report.cyclic_generator = m;
    const auto C = cyclic_closure(f, m);
    report.cyclic_order = C.size();
    report.cyclic_fixed_on_line.clear();
    for (const Point& P : line_points_off_sing(params, singular)) {
      if (std::all_of(C.begin(), C.end(), [&](const Mat3& c) { return fixes(f, c, P); })) {
        report.cyclic_fixed_on_line.push_back(P);
      }
    }
    return;
  }
}

GaloisScan enumerate_outer_galois(const autgrp::AutGroup& group, const curve::PlaneCurve& curve,
                                  const curve::CurveFamilyParams& params,
                                  const std::vector<curve::PointAnalysis>& singular) {
  const gf::Field& f = *group.field();
  const proj::ProjPlane plane(curve.field);
  std::vector<Point> candidates;
  for (std::uint32_t i = 0; i < plane.size(); ++i) {
    const Point P = plane.point(i);
    if (curve.F.eval(P) != 0) candidates.push_back(P);
  }
  const auto sizes = kernels::parallel::pencil_stabilizer_sizes(f, group.elements(), candidates);

  GaloisScan out;
  out.scanned = candidates.size();
  const std::uint32_t q = params.q();
  out.expected = static_cast<std::size_t>(q) * q - q;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (sizes[i] != curve.degree) continue;
    GaloisPointReport r;
    r.point = candidates[i];
    r.stabilizer = pencil_stabilizer(group, curve, r.point);
    r.is_galois = r.stabilizer.size() == curve.degree;
    analyze_cyclic_part(r, params, singular);
    out.points.push_back(std::move(r));
  }
  out.on_line_at_infinity = true;
  out.quad_rational = true;
  out.off_singular = true;
  for (const auto& r : out.points) {
    const Point& P = r.point;
    out.on_line_at_infinity = out.on_line_at_infinity && P[2] == 0;
    out.quad_rational = out.quad_rational && std::all_of(P.begin(), P.end(), [&](Code c) {
                          return f.in_subfield(c, 2 * params.e());
                        });
    out.off_singular = out.off_singular && std::none_of(singular.begin(), singular.end(),
                                                        [&](const auto& s) { return s.point == P; });
  }
  out.passed = out.points.size() == out.expected && out.on_line_at_infinity && out.quad_rational && out.off_singular;
  return out;
}

bool verify_projection_substitution(const curve::CurveFamilyParams& params, Code beta, ProjectionForm form) {
  const gf::FieldRef& field = params.field();
  const gf::Field& f = *field;
  const std::uint32_t q = params.q();
  if (beta >= f.order() || !f.in_subfield(beta, 2 * params.e())) throw PreconditionError("b must lie in GF(q^2)");
  const Code N = f.add(f.pow(beta, q + 1), 1);
  if (N == 0) throw PreconditionError("b^(q+1) = -1: (b:1:0) is a singular point");
  const Code Ninv = f.inv(N);

  const auto L = params.L();
  const BiPoly Lw = L.as_sparse<2>(0), Lv = L.as_sparse<2>(1);
  const BiPoly G = Lw.pow(q + 1) + Lv.pow(q + 1).scaled(f.pow(Ninv, q + 1)) +
                   BiPoly::constant(field, f.mul(params.c, Ninv));
  const BiPoly x = BiPoly::variable(field, 0), y = BiPoly::variable(field, 1);
  const BiPoly v = x - y.scaled(beta);
  const Code shift = form == ProjectionForm::corrected ? f.pow(beta, q) : beta;
  const BiPoly w = y + v.scaled(f.mul(shift, Ninv));
  const BiPoly pulled = G.substitute<2>({w, v});
  return pulled == curve::build_cn(params).f.scaled(Ninv);
}

GenerationReport verify_generation(const autgrp::AutGroup& group, const std::vector<GaloisPointReport>& points) {
  std::vector<Mat3> gens;
  for (const auto& r : points) gens.insert(gens.end(), r.stabilizer.begin(), r.stabilizer.end());
  const auto H = autgrp::generate_group(group.field(), gens, group.order() + 1);
  GenerationReport out;
  out.generated_order = H.order();
  out.equals_group = autgrp::same_elements(group, H);
  return out;
}

std::size_t check_fiber_transitivity(const GaloisPointReport& report, const curve::PlaneCurve& curve,
                                     std::size_t max_lines) {
  const gf::Field& f = *curve.field;
  std::map<Point, std::vector<Point>> fibers;
  for (const auto& a : kernels::parallel::affine_zeros(curve.f)) {
    const Point P{a[0], a[1], 1};
    fibers[proj::normalize(f, proj::cross(f, report.point, P))].push_back(P);
  }
  std::size_t checked = 0;
  for (const auto& [line, pts] : fibers) {
    if (checked == max_lines) break;
    std::set<Point> orbit;
    for (const Mat3& m : report.stabilizer) orbit.insert(proj::normalize(f, proj::apply(f, m, pts.front())));
    for (const Point& P : pts) {
      if (!orbit.count(P)) {
        throw Error("G_R is not transitive on the fiber over line " + proj::to_string(line));
      }
    }
    ++checked;
  }
  return checked;
}

bool check_cyclic_restrictions(const std::vector<GaloisPointReport>& points, const gf::Field& f) {
  std::vector<std::set<autgrp::Mat2>> images;
  for (const auto& r : points) {
    if (!r.cyclic_generator) return false;
    std::set<autgrp::Mat2> img;
    for (const Mat3& m : cyclic_closure(f, *r.cyclic_generator)) img.insert(autgrp::restriction(f, m));
    images.push_back(std::move(img));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      const auto& fixed = points[i].cyclic_fixed_on_line;
      const bool in_F = std::find(fixed.begin(), fixed.end(), points[j].point) != fixed.end();
      if ((images[i] == images[j]) != in_F) return false;
    }
  }
  return true;
}

}  // namespace hcover::galois
