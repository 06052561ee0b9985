#include "doctest.h"
#include "hcover/kernels.hpp"
#include "hcover/localgeom.hpp"

using namespace hcover;
using curve::CurveFamilyParams;
using gf::Code;
using poly::BiPoly;

namespace {

// First affine point with L(y) != 0 (branch parametrized by x) or L(y) = 0 (parametrized by y).
localgeom::AffinePoint first_point_with(const CurveFamilyParams& P, const curve::PlaneCurve& cn, bool Ly_nonzero) {
  const auto L = P.L();
  for (const auto& a : kernels::serial::affine_zeros(cn.f)) {
    if ((L.eval(a[1]) != 0) == Ly_nonzero) return a;
  }
  FAIL("no suitable point");
  return {};
}

}  // namespace

TEST_CASE("branch of a line") {
  auto F = gf::Field::make(3, 1);
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const auto br = localgeom::expand_branch(y - x, {0, 0}, 5);
  CHECK_FALSE(br.swapped);
  REQUIRE(br.coeffs.size() == 6);
  CHECK(br.coeffs[1] == 1);
  for (std::size_t i : {0, 2, 3, 4, 5}) CHECK(br.coeffs[i] == 0);
}

TEST_CASE("square root branch") {
  auto F = gf::Field::make(7, 1);
  const gf::Field& f = *F;
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const std::uint32_t N = 20;
  const auto br = localgeom::expand_branch(y * y - x, {1, 1}, N);
  // (1 + S(t))^2 must equal 1 + t.
  std::vector<Code> Y = br.coeffs;
  Y[0] = f.add(Y[0], 1);
  for (std::uint32_t k = 0; k <= N; ++k) {
    Code acc = 0;
    for (std::uint32_t i = 0; i <= k; ++i) acc = f.add(acc, f.mul(Y[i], Y[k - i]));
    CHECK(acc == (k <= 1 ? 1 : 0));
  }
}

TEST_CASE("branch with vertical tangent is swapped") {
  auto F = gf::Field::make(5, 1);
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const auto br = localgeom::expand_branch(x - y * y, {0, 0}, 6);
  CHECK(br.swapped);
  CHECK(br.coeffs[2] == 1);
  CHECK(localgeom::ord_at(x - y * y, {0, 0}, x, {8, 1}) == 2);
  CHECK(localgeom::ord_at(x - y * y, {0, 0}, y, {8, 1}) == 1);
  CHECK_THROWS_AS(localgeom::expand_branch(x * y, {0, 0}, 4), PreconditionError);
  CHECK_THROWS_AS(localgeom::expand_branch(x * y, {1, 1}, 4), PreconditionError);
}

TEST_CASE("orders on C_n") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const auto cn = curve::build_cn(P);
  const auto Q = first_point_with(P, cn, true);
  const BiPoly x = BiPoly::variable(P.field(), 0);
  CHECK(localgeom::ord_at(cn.f, Q, x - BiPoly::constant(P.field(), Q[0]), {16, 2}) == 1);
  CHECK_THROWS_AS(localgeom::ord_at(cn.f, Q, cn.f, {16, 1}), CapExceeded);
}

TEST_CASE("gap certificate") {
  struct Case {
    std::uint32_t p, e, n, order;
  };
  for (const auto& c : {Case{2, 1, 1, 7}, Case{3, 1, 1, 26}}) {
    const auto P = CurveFamilyParams::normalized(c.p, c.e, c.n);
    const auto cn = curve::build_cn(P);
    for (bool by_x : {true, false}) {
      const auto Q = first_point_with(P, cn, by_x);
      const auto cert = localgeom::verify_gap_at_affine(P, cn, Q);
      CHECK(cert.expected_order == c.order);
      CHECK(cert.computed_order == c.order);
      CHECK(cert.line_orders.size() == P.q() + 1);
      CHECK(cert.parameter_variable == (by_x ? 0 : 1));
      CHECK(cert.valid);
    }
    // Where the tangent is x = a the x-form has order (q+1)(q^(2n+1) - q - 2) + q + 1.
    const auto Q = first_point_with(P, cn, false);
    const std::uint32_t q = P.q(), top = c.order + 1;
    CHECK(localgeom::ord_at(cn.f, Q, localgeom::gap_function(P, Q, 0), {2 * top, 3}) == (q + 1) * (top - q - 2) + q + 1);
  }
}

TEST_CASE("total ramification at (1:0:0) of the tu model") {
  for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    const auto P = CurveFamilyParams::normalized(p, 1, n);
    const auto tu = curve::build_cn_prime(P, curve::default_tu_alpha(P));
    const auto r = localgeom::verify_total_ramification(tu, P.L());
    CHECK(r.roots == P.L().degree());
    CHECK(r.constant != 0);
    CHECK(r.passed);
  }
}

TEST_CASE("branches at infinity are transversal to Z = 0") {
  for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    const auto P = CurveFamilyParams::normalized(p, 1, n);
    const auto cn = curve::build_cn(P);
    const auto t = localgeom::verify_transversality(cn, curve::singular_locus(cn));
    CHECK(t.branches == cn.degree);
    CHECK(t.passed);
  }
  // Y Z = X^2 is tangent to Z = 0 at (0:1:0).
  auto F = gf::Field::make(5, 1);
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const auto parabola = curve::make_plane_curve(curve::Model::xy, y - x * x);
  CHECK_FALSE(localgeom::verify_transversality(parabola, {}).passed);
}
