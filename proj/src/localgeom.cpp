#include "hcover/localgeom.hpp"

#include <algorithm>

#include "hcover/intmath.hpp"

namespace hcover::localgeom {

using gf::Code;
using poly::BiPoly;
using Series = std::vector<Code>;

namespace {

Series mul(const gf::Field& f, const Series& a, const Series& b, std::size_t M) {
  Series r(M, 0);
  for (std::size_t i = 0; i < std::min(a.size(), M); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < M; ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  return r;
}

Series inverse(const gf::Field& f, const Series& a, std::size_t M) {
  if (a.empty() || a[0] == 0) throw PreconditionError("series with zero constant term is not invertible");
  Series r(M, 0);
  const Code c0 = f.inv(a[0]);
  r[0] = c0;
  for (std::size_t n = 1; n < M; ++n) {
    Code acc = 0;
    for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], r[n - i]));
    r[n] = f.neg(f.mul(acc, c0));
  }
  return r;
}

// g(t, s) stored as rows[j] = coefficient of s^j, a polynomial in t.
std::vector<Series> rows_in_s(const BiPoly& g) {
  const long ds = g.degree_in(1);
  std::vector<Series> rows(ds < 0 ? 0 : static_cast<std::size_t>(ds) + 1);
  for (const auto& [e, c] : g.terms()) {
    auto& r = rows[e[1]];
    if (r.size() <= e[0]) r.resize(e[0] + 1, 0);
    r[e[0]] = c;
  }
  return rows;
}

/// sum_j rows[j](t) S(t)^j mod t^M.
Series horner(const gf::Field& f, const std::vector<Series>& rows, const Series& S, std::size_t M) {
  Series acc(M, 0);
  for (std::size_t j = rows.size(); j-- > 0;) {
    acc = mul(f, acc, S, M);
    for (std::size_t i = 0; i < std::min(rows[j].size(), M); ++i) acc[i] = f.add(acc[i], rows[j][i]);
  }
  return acc;
}

/// g(a + t, b + s), with t the branch parameter; when swapped, t replaces y - b and s replaces x - a.
BiPoly shifted(const BiPoly& g, const AffinePoint& Q, bool swapped) {
  const gf::FieldRef& field = g.field();
  const BiPoly t = BiPoly::variable(field, 0), s = BiPoly::variable(field, 1);
  const BiPoly x_img = (swapped ? s : t) + BiPoly::constant(field, Q[0]);
  const BiPoly y_img = (swapped ? t : s) + BiPoly::constant(field, Q[1]);
  return g.substitute<2>({x_img, y_img});
}

bool all_zero(const Series& s) {
  return std::all_of(s.begin(), s.end(), [](Code c) { return c == 0; });
}

}  // namespace

TruncatedSeries expand_branch(const BiPoly& f, const AffinePoint& Q, std::uint32_t N) {
  const gf::FieldRef& field = f.field();
  const gf::Field& F = *field;
  if (f.eval(Q) != 0) throw PreconditionError("point is not on the curve");
  const bool fy_zero = f.derivative(1).eval(Q) == 0;
  const bool fx_zero = f.derivative(0).eval(Q) == 0;
  if (fx_zero && fy_zero) throw PreconditionError("point is singular");

  TruncatedSeries out;
  out.field = field;
  out.base = Q;
  out.swapped = fy_zero;
  out.precision = N;
  const std::size_t M = static_cast<std::size_t>(N) + 1;
  const BiPoly g = shifted(f, Q, out.swapped);
  const auto rows = rows_in_s(g);
  const auto drows = rows_in_s(g.derivative(1));

  Series S(M, 0);
  for (std::size_t cur = 1; cur < M;) {
    cur = std::min(2 * cur, M);
    const Series val = horner(F, rows, S, cur);
    const Series der = horner(F, drows, S, cur);
    const Series step = mul(F, val, inverse(F, der, cur), cur);
    for (std::size_t i = 0; i < cur; ++i) S[i] = F.sub(S[i], step[i]);
  }
  if (!all_zero(horner(F, rows, S, M))) throw Error("Newton lifting failed its residual check");
  out.coeffs = std::move(S);
  return out;
}

std::vector<Code> evaluate_along(const TruncatedSeries& branch, const BiPoly& g) {
  const std::size_t M = static_cast<std::size_t>(branch.precision) + 1;
  const BiPoly h = shifted(g, branch.base, branch.swapped);
  return horner(*branch.field, rows_in_s(h), branch.coeffs, M);
}

std::uint32_t ord_at(const BiPoly& f, const AffinePoint& Q, const BiPoly& g, OrdOptions opts) {
  std::uint32_t N = opts.precision == 0 ? 16 : opts.precision;
  for (std::uint32_t round = 0; round <= opts.max_doublings; ++round, N *= 2) {
    const auto branch = expand_branch(f, Q, N);
    const auto v = evaluate_along(branch, g);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) return static_cast<std::uint32_t>(i);
    }
  }
  throw CapExceeded("function vanishes to precision " + std::to_string(N / 2) +
                    " along the branch; it may vanish identically on the curve");
}

std::uint32_t default_precision(const curve::CurveFamilyParams& params) {
  return static_cast<std::uint32_t>(2 * checked_pow(params.q(), 2 * params.n() + 1));
}

BiPoly gap_function(const curve::CurveFamilyParams& params, const AffinePoint& Q, int variable) {
  const gf::FieldRef& field = params.field();
  const std::uint32_t q = params.q();
  const BiPoly xa = BiPoly::variable(field, 0) - BiPoly::constant(field, Q[0]);
  const BiPoly yb = BiPoly::variable(field, 1) - BiPoly::constant(field, Q[1]);
  const auto e = static_cast<std::uint64_t>(checked_pow(q, 2 * params.n() + 1) - q - 2);
  return (variable == 0 ? xa : yb).pow(e) * (xa.pow(q + 1) + yb.pow(q + 1));
}

GapCertificate verify_gap_at_affine(const curve::CurveFamilyParams& params, const curve::PlaneCurve& cn,
                                    const AffinePoint& Q, OrdOptions opts) {
  if (opts.precision == 0) opts.precision = default_precision(params);
  const gf::FieldRef& field = params.field();
  const gf::Field& f = *field;
  GapCertificate out;
  out.point = Q;
  out.expected_order = static_cast<std::uint32_t>(checked_pow(params.q(), 2 * params.n() + 1) - 1);
  const BiPoly xa = BiPoly::variable(field, 0) - BiPoly::constant(field, Q[0]);
  const BiPoly yb = BiPoly::variable(field, 1) - BiPoly::constant(field, Q[1]);
  out.parameter_variable = ord_at(cn.f, Q, xa, opts) == 1 ? 0 : 1;
  const bool has_parameter = out.parameter_variable == 0 || ord_at(cn.f, Q, yb, opts) == 1;
  out.computed_order = ord_at(cn.f, Q, gap_function(params, Q, out.parameter_variable), opts);
  for (Code g = 1; g < f.order(); ++g) {
    if (f.pow(g, params.q() + 1) != f.neg(1)) continue;
    out.line_orders.push_back(ord_at(cn.f, Q, xa - yb.scaled(g), opts));
  }
  out.valid = has_parameter && out.computed_order == out.expected_order && out.line_orders.size() == params.q() + 1 &&
              std::all_of(out.line_orders.begin(), out.line_orders.end(), [](std::uint32_t o) { return o == 1; });
  return out;
}

RamificationCheck verify_total_ramification(const curve::TuModel& tu, const poly::LinearizedPoly& L) {
  const gf::FieldRef& field = tu.curve.field;
  RamificationCheck out;
  out.constant = tu.c_prime;
  const auto roots = poly::kernel(L);
  out.roots = roots.size();
  for (Code u0 : roots) {
    const BiPoly sub = tu.curve.f.substitute<2>({BiPoly::variable(field, 0), BiPoly::constant(field, u0)});
    if (sub == BiPoly::constant(field, tu.c_prime) && tu.c_prime != 0) ++out.constant_substitutions;
  }
  out.passed = out.roots == L.degree() && out.constant_substitutions == out.roots;
  return out;
}

TransversalityCheck verify_transversality(const curve::PlaneCurve& curve,
                                          const std::vector<curve::PointAnalysis>& singular) {
  const gf::FieldRef& field = curve.field;
  const gf::Field& f = *field;
  TransversalityCheck out;
  std::uint64_t multiplicity_sum = 0;
  bool ok = true;
  const auto at_infinity = curve::points_at_infinity(curve);
  for (const auto& P : at_infinity) {
    const auto it = std::find_if(singular.begin(), singular.end(), [&](const auto& s) { return s.point == P; });
    const curve::PointAnalysis info = it != singular.end() ? *it : curve::analyze_point(curve, P);
    multiplicity_sum += info.multiplicity;
    if (!info.ordinary || !info.rational_tangents) {
      ok = false;
      continue;
    }
    // Chart at P: V_k = 1 with local coordinates a (index i) and b = Z (index 2).
    const int k = P[1] != 0 ? 1 : 0;
    const int i = k == 1 ? 0 : 1;
    std::array<BiPoly, 3> chart{BiPoly(field), BiPoly(field), BiPoly(field)};
    for (const proj::Line& l : info.tangent_lines) {
      ++out.branches;
      if (l[i] == 0) {
        ok = false;  // tangent is Z = 0 itself
        continue;
      }
      // Tangent a = s b; blow up a = b (s + w) and divide by b^m.
      const Code s = f.neg(f.div(l[2], l[i]));
      const BiPoly b = BiPoly::variable(field, 0), w = BiPoly::variable(field, 1);
      chart[k] = BiPoly::constant(field, 1);
      chart[i] = b * (w + BiPoly::constant(field, s)) + BiPoly::constant(field, P[i]);
      chart[2] = b;
      const BiPoly full = curve.F.substitute<2>(chart);
      BiPoly h(field);
      bool divisible = true;
      for (const auto& [e, c] : full.terms()) {
        if (e[0] < info.multiplicity) divisible = false;
        else h.add_term({e[0] - info.multiplicity, e[1]}, c);
      }
      if (!divisible || h.eval({0, 0}) != 0 || h.derivative(1).eval({0, 0}) == 0) {
        ok = false;
        continue;
      }
      if (ord_at(h, {0, 0}, b, {8, 2}) == 1) ++out.transversal;
    }
  }
  out.passed = ok && out.branches == out.transversal && multiplicity_sum == curve.degree;
  return out;
}

}  // namespace hcover::localgeom
