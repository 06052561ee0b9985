#include "hcover/curve.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "hcover/intmath.hpp"
#include "hcover/kernels.hpp"

namespace hcover::curve {

using gf::Code;
using poly::BiPoly;
using poly::TriPoly;
using proj::Point;

CurveFamilyParams CurveFamilyParams::normalized(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                                                std::uint64_t max_order) {
  CurveFamilyParams out;
  out.tower = gf::make_tower(p, e, n, max_order);
  out.alpha.assign(n, 1);
  out.c = 1;
  return out;
}

void CurveFamilyParams::validate() const {
  if (!tower) throw PreconditionError("missing field tower");
  if (alpha.size() != tower->n) throw PreconditionError("expected n coefficients a_0 .. a_(n-1)");
  const Code order = tower->top->order();
  for (Code a : alpha) {
    if (a >= order) throw PreconditionError("coefficient outside " + tower->top->describe());
  }
  if (c >= order) throw PreconditionError("c outside " + tower->top->describe());
  if (alpha.front() == 0) throw PreconditionError("a_0 must be nonzero");
  if (c == 0) throw PreconditionError("c must be nonzero");
}

bool CurveFamilyParams::is_normalized() const {
  return c == 1 && std::all_of(alpha.begin(), alpha.end(), [](Code a) { return a == 1; });
}

poly::LinearizedPoly CurveFamilyParams::L() const {
  std::vector<Code> coeffs = alpha;
  coeffs.push_back(1);
  return poly::LinearizedPoly(tower->top, tower->q(), std::move(coeffs));
}

PlaneCurve make_plane_curve(Model model, BiPoly f) {
  PlaneCurve out;
  out.model = model;
  out.field = f.field();
  out.F = poly::homogenize(f);
  out.degree = static_cast<std::uint64_t>(f.total_degree());
  out.f = std::move(f);
  return out;
}

PlaneCurve build_cn(const CurveFamilyParams& params) {
  params.validate();
  const auto L = params.L();
  const std::uint32_t q = params.q();
  const BiPoly Lx = L.as_sparse<2>(0), Ly = L.as_sparse<2>(1);
  BiPoly f = Lx.pow(q + 1) + Ly.pow(q + 1) + BiPoly::constant(params.field(), params.c);
  return make_plane_curve(Model::xy, std::move(f));
}

namespace {

bool valid_tu_alpha(const gf::Field& f, std::uint32_t q, std::uint32_t e, Code a) {
  return f.in_subfield(a, 2 * e) && f.pow(a, q + 1) == f.neg(1) && f.add(f.pow(a, q), a) != 0;
}

}  // namespace

Code default_tu_alpha(const CurveFamilyParams& params) {
  const gf::Field& f = *params.field();
  for (Code a = 1; a < f.order(); ++a) {
    if (valid_tu_alpha(f, params.q(), params.e(), a)) return a;
  }
  throw PreconditionError("no a in GF(q^2) with a^(q+1) = -1 and a^q + a != 0");
}

TuModel build_cn_prime(const CurveFamilyParams& params, Code alpha) {
  params.validate();
  const gf::FieldRef& field = params.field();
  const gf::Field& f = *field;
  const std::uint32_t q = params.q();
  if (alpha >= f.order() || !f.in_subfield(alpha, 2 * params.e())) {
    throw PreconditionError("a must lie in GF(q^2)");
  }
  if (f.pow(alpha, q + 1) != f.neg(1)) throw PreconditionError("a^(q+1) must equal -1");
  const Code D = f.add(f.pow(alpha, q), alpha);
  if (D == 0) throw PreconditionError("a^q + a = 0: the change of variables is singular");

  TuModel out;
  out.alpha = alpha;
  out.c_prime = f.mul(D, params.c);
  out.unit = f.inv(D);
  const Code aq = f.pow(alpha, q);
  out.xy_to_tu = {aq, 1, 0, 1, aq, 0, 0, 0, 1};

  const auto L = params.L();
  const BiPoly Lt = L.as_sparse<2>(0), Lu = L.as_sparse<2>(1);
  const BiPoly Ltq = Lt.pow(q), Luq = Lu.pow(q);
  BiPoly g = Ltq * Lu + Lt * Luq + BiPoly::constant(field, out.c_prime);
  out.curve = make_plane_curve(Model::tu, g);

  // x = (t + a u)/D, y = (a t + u)/D.
  const Code Dinv = f.inv(D);
  const BiPoly t = BiPoly::variable(field, 0), u = BiPoly::variable(field, 1);
  const BiPoly x_img = (t + u.scaled(alpha)).scaled(Dinv);
  const BiPoly y_img = (t.scaled(alpha) + u).scaled(Dinv);
  const BiPoly fxy = build_cn(params).f;
  const BiPoly pulled = fxy.substitute<2>({x_img, y_img});
  out.substitution_verified = pulled == g.scaled(out.unit);
  return out;
}

// ---------------------------------------------------------------------------

PointAnalysis analyze_point(const PlaneCurve& curve, const Point& P0) {
  const gf::FieldRef& field = curve.field;
  const gf::Field& f = *field;
  const Point P = proj::normalize(f, P0);
  if (curve.F.eval(P) != 0) throw PreconditionError("point " + proj::to_string(P) + " is not on the curve");
  int k = 2;
  while (P[k] == 0) --k;
  int i = -1, j = -1;
  for (int v = 0; v < 3; ++v) {
    if (v == k) continue;
    (i < 0 ? i : j) = v;
  }
  // Local chart V_k = 1, V_i = a + P_i, V_j = b + P_j.
  std::array<BiPoly, 3> images{BiPoly(field), BiPoly(field), BiPoly(field)};
  images[k] = BiPoly::constant(field, 1);
  images[i] = BiPoly::variable(field, 0) + BiPoly::constant(field, P[i]);
  images[j] = BiPoly::variable(field, 1) + BiPoly::constant(field, P[j]);
  const BiPoly g = curve.F.substitute<2>(images);

  PointAnalysis out;
  out.point = P;
  std::uint32_t m = std::numeric_limits<std::uint32_t>::max();
  for (const auto& [e, c] : g.terms()) m = std::min(m, e[0] + e[1]);
  out.multiplicity = m;
  // Tangent cone sum_t a_t a^t b^(m-t); roots s of sum_t a_t s^t give the factors a - s b.
  std::vector<Code> cone(m + 1, 0);
  for (const auto& [e, c] : g.terms()) {
    if (e[0] + e[1] == m) cone[e[0]] = c;
  }
  const poly::UniPoly u(field, cone);
  const auto roots = poly::rational_roots(u);
  const std::uint32_t b_mult = m - static_cast<std::uint32_t>(u.degree());
  out.ordinary = poly::is_squarefree(u) && b_mult <= 1;
  out.rational_tangents = roots.size() == static_cast<std::size_t>(u.degree());
  for (Code s : roots) {
    proj::Line l{};
    l[i] = 1;
    l[j] = f.neg(s);
    l[k] = f.sub(f.mul(s, P[j]), P[i]);
    out.tangent_lines.push_back(proj::normalize(f, l));
  }
  if (b_mult > 0) {
    proj::Line l{};
    l[j] = 1;
    l[k] = f.neg(P[j]);
    out.tangent_lines.push_back(proj::normalize(f, l));
  }
  std::sort(out.tangent_lines.begin(), out.tangent_lines.end());
  return out;
}

std::vector<Point> points_at_infinity(const PlaneCurve& curve) {
  const gf::Field& f = *curve.field;
  std::vector<Point> out;
  for (Code a = 0; a < f.order(); ++a) {
    if (curve.F.eval({a, 1, 0}) == 0) out.push_back({a, 1, 0});
  }
  if (curve.F.eval({1, 0, 0}) == 0) out.push_back({1, 0, 0});
  return out;
}

std::vector<PointAnalysis> singular_locus(const PlaneCurve& curve) {
  std::vector<PointAnalysis> out;
  for (const auto& a : kernels::parallel::affine_singular(curve.f)) out.push_back(analyze_point(curve, {a[0], a[1], 1}));
  const TriPoly FX = curve.F.derivative(0), FY = curve.F.derivative(1), FZ = curve.F.derivative(2);
  for (const Point& P : points_at_infinity(curve)) {
    if (FX.eval(P) == 0 && FY.eval(P) == 0 && FZ.eval(P) == 0) out.push_back(analyze_point(curve, P));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t degree_closed_form(std::int64_t q, std::uint32_t n) { return checked_pow(q, 2 * n) * (q + 1); }

std::int64_t genus_closed_form(std::int64_t q, std::uint32_t n) {
  return checked_pow(q, 2 * n) * (q + 1) * (checked_pow(q, 2 * n + 1) - 2) / 2 + 1;
}

std::int64_t genus_plucker(const PlaneCurve& curve, const std::vector<PointAnalysis>& singular) {
  const std::int64_t d = static_cast<std::int64_t>(curve.degree);
  std::int64_t g = (d - 1) * (d - 2) / 2;
  for (const auto& s : singular) {
    if (!s.ordinary) throw PreconditionError("genus formula needs ordinary singularities");
    const std::int64_t m = s.multiplicity;
    g -= m * (m - 1) / 2;
  }
  return g;
}

std::int64_t p_rank_closed_form(std::int64_t q, std::uint32_t n) {
  return checked_pow(q, 4 * n + 1) - checked_pow(q, 2 * n + 1) - checked_pow(q, 2 * n) + 1;
}

bool ds_identity_check(std::int64_t q, std::uint32_t n, std::int64_t p_rank) {
  // Multiply both sides by q^(2n+1): gamma - 1 = -q^(2n+1) + q^(2n) (q^(2n+1) - 1).
  const std::int64_t Q = checked_pow(q, 2 * n + 1);
  return p_rank - 1 == -Q + checked_pow(q, 2 * n) * (Q - 1);
}

std::int64_t places_closed_form(std::int64_t q, std::uint32_t n) {
  return checked_pow(q, 4 * n + 3) - checked_pow(q, 4 * n + 1) + checked_pow(q, 2 * n + 1) + checked_pow(q, 2 * n);
}

std::int64_t plane_points_closed_form(std::int64_t q, std::uint32_t n) {
  return checked_pow(q, 4 * n + 3) - checked_pow(q, 4 * n + 1) + q + 1;
}

std::int64_t aut_order_closed_form(std::int64_t q, std::uint32_t n) {
  return checked_pow(q, 4 * n + 1) * (q * q - 1) * (q + 1);
}

bool canonical_degree_check(std::int64_t q, std::uint32_t n) {
  return (checked_pow(q, 2 * n + 1) - 2) * degree_closed_form(q, n) == 2 * genus_closed_form(q, n) - 2;
}

PointCount count_points(const PlaneCurve& curve, const std::vector<PointAnalysis>& singular) {
  PointCount out;
  out.affine = kernels::parallel::affine_zeros(curve.f).size();
  const auto inf = points_at_infinity(curve);
  out.at_infinity = inf.size();
  out.plane = out.affine + out.at_infinity;
  out.places = out.plane;
  for (const auto& s : singular) {
    if (!s.ordinary || !s.rational_tangents) out.places_exact = false;
    out.places += s.tangent_lines.size();
    out.places -= 1;
  }
  return out;
}

bool no_rational_line_component(const PlaneCurve& curve) {
  const proj::ProjPlane plane(curve.field);
  std::vector<std::uint8_t> member(plane.size(), 0);
  for (const auto& a : kernels::parallel::affine_zeros(curve.f)) member[plane.index({a[0], a[1], 1})] = 1;
  for (const Point& P : points_at_infinity(curve)) member[plane.index(P)] = 1;
  const auto counts = kernels::parallel::line_counts(plane, member);
  return *std::max_element(counts.begin(), counts.end()) < plane.field_order() + 1;
}

}  // namespace hcover::curve
