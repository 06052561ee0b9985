#include <algorithm>
#include <set>

#include "doctest.h"
#include "hcover/curve.hpp"
#include "hcover/kernels.hpp"

using namespace hcover;
using curve::CurveFamilyParams;
using gf::Code;

namespace {

struct GridCase {
  std::uint32_t p, e, n;
};

const GridCase kGrid[] = {{2, 1, 1}, {3, 1, 1}, {2, 1, 2}};

// L evaluated straight from its coefficients with field powers.
Code naive_L(const CurveFamilyParams& P, Code x) {
  const gf::Field& f = *P.field();
  Code r = 0;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i <= P.n(); ++i) {
    const Code a = i < P.n() ? P.alpha[i] : 1;
    r = f.add(r, f.mul(a, f.pow(x, e)));
    e *= static_cast<std::uint64_t>(P.q()) * P.q();
  }
  return r;
}

std::uint64_t naive_affine_count(const CurveFamilyParams& P) {
  const gf::Field& f = *P.field();
  std::vector<Code> pw(f.order());
  for (Code x = 0; x < f.order(); ++x) pw[x] = f.pow(naive_L(P, x), P.q() + 1);
  std::uint64_t count = 0;
  for (Code x = 0; x < f.order(); ++x) {
    for (Code y = 0; y < f.order(); ++y) {
      if (f.add(f.add(pw[x], pw[y]), P.c) == 0) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("C_n has the expected degree") {
  const std::uint64_t expected[] = {12, 36, 48};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto P = CurveFamilyParams::normalized(kGrid[k].p, kGrid[k].e, kGrid[k].n);
    const auto cn = curve::build_cn(P);
    CHECK(cn.degree == expected[k]);
    CHECK(static_cast<std::int64_t>(cn.degree) == curve::degree_closed_form(P.q(), P.n()));
    CHECK(poly::dehomogenize(cn.F) == cn.f);
  }
}

TEST_CASE("curve parameters are validated") {
  auto P = CurveFamilyParams::normalized(2, 1, 1);
  P.c = 0;
  CHECK_THROWS_AS(curve::build_cn(P), PreconditionError);
  P = CurveFamilyParams::normalized(2, 1, 1);
  P.alpha = {0};
  CHECK_THROWS_AS(curve::build_cn(P), PreconditionError);
  P.alpha = {1, 1};
  CHECK_THROWS_AS(curve::build_cn(P), PreconditionError);
  P.alpha = {16};
  CHECK_THROWS_AS(curve::build_cn(P), PreconditionError);
}

TEST_CASE("tu model") {
  SUBCASE("q = 2 keeps c") {
    const auto P = CurveFamilyParams::normalized(2, 1, 1);
    const Code a = curve::default_tu_alpha(P);
    const auto tu = curve::build_cn_prime(P, a);
    CHECK(tu.substitution_verified);
    CHECK(tu.c_prime == P.c);
    CHECK(tu.curve.degree == 12);
    CHECK_THROWS_AS(curve::build_cn_prime(P, 1), PreconditionError);
  }
  SUBCASE("q = 3 and q = 2, n = 2") {
    for (const auto& g : {kGrid[1], kGrid[2]}) {
      const auto P = CurveFamilyParams::normalized(g.p, g.e, g.n);
      const auto tu = curve::build_cn_prime(P, curve::default_tu_alpha(P));
      CHECK(tu.substitution_verified);
      const gf::Field& f = *P.field();
      CHECK(tu.c_prime == f.mul(f.add(f.pow(tu.alpha, P.q()), tu.alpha), P.c));
    }
  }
  SUBCASE("a outside GF(q^2) is rejected") {
    const auto P = CurveFamilyParams::normalized(2, 1, 1);
    const gf::Field& f = *P.field();
    Code outside = 0;
    for (Code a = 1; a < f.order(); ++a) {
      if (!f.in_subfield(a, 2)) {
        outside = a;
        break;
      }
    }
    CHECK_THROWS_AS(curve::build_cn_prime(P, outside), PreconditionError);
  }
}

TEST_CASE("singular points are the q+1 points at infinity") {
  for (const auto& g : kGrid) {
    const auto P = CurveFamilyParams::normalized(g.p, g.e, g.n);
    const gf::Field& f = *P.field();
    const auto cn = curve::build_cn(P);
    const auto sing = curve::singular_locus(cn);
    REQUIRE(sing.size() == P.q() + 1);
    const auto ker = poly::kernel(P.L());
    for (const auto& s : sing) {
      CHECK(s.point[2] == 0);
      CHECK(s.point[1] == 1);
      CHECK(f.pow(s.point[0], P.q() + 1) == f.neg(1));
      CHECK(s.multiplicity == P.L().degree());
      CHECK(s.ordinary);
      CHECK(s.rational_tangents);
      // Tangents X - aY - bZ with L(b) = 0.
      std::vector<proj::Line> expected;
      for (Code b : ker) expected.push_back(proj::normalize(f, {1, f.neg(s.point[0]), f.neg(b)}));
      std::sort(expected.begin(), expected.end());
      CHECK(s.tangent_lines == expected);
    }
  }
}

TEST_CASE("genus both ways") {
  const std::int64_t expected[] = {37, 451, 721};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto P = CurveFamilyParams::normalized(kGrid[k].p, kGrid[k].e, kGrid[k].n);
    const auto cn = curve::build_cn(P);
    CHECK(curve::genus_closed_form(P.q(), P.n()) == expected[k]);
    CHECK(curve::genus_plucker(cn, curve::singular_locus(cn)) == expected[k]);
  }
}

TEST_CASE("p-rank") {
  CHECK(curve::p_rank_closed_form(2, 1) == 21);
  CHECK(curve::p_rank_closed_form(3, 1) == 208);
  CHECK(curve::ds_identity_check(2, 1, 21));
  CHECK(curve::ds_identity_check(3, 1, 208));
  CHECK(curve::ds_identity_check(2, 2, curve::p_rank_closed_form(2, 2)));
  CHECK_FALSE(curve::ds_identity_check(2, 1, 22));
}

TEST_CASE("point counts") {
  struct Expect {
    std::uint64_t affine, plane, places;
  };
  const Expect expected[] = {{96, 99, 108}, {1944, 1948, 1980}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto P = CurveFamilyParams::normalized(kGrid[k].p, kGrid[k].e, kGrid[k].n);
    const auto cn = curve::build_cn(P);
    const auto pc = curve::count_points(cn, curve::singular_locus(cn));
    CHECK(pc.affine == expected[k].affine);
    CHECK(pc.affine == naive_affine_count(P));
    CHECK(pc.plane == expected[k].plane);
    CHECK(pc.places == expected[k].places);
    CHECK(pc.places_exact);
    CHECK(static_cast<std::int64_t>(pc.places) == curve::places_closed_form(P.q(), P.n()));
    CHECK(static_cast<std::int64_t>(pc.plane) == curve::plane_points_closed_form(P.q(), P.n()));
  }
  const auto P = CurveFamilyParams::normalized(2, 1, 2);
  CHECK(curve::places_closed_form(2, 2) == 1584);
  const auto cn = curve::build_cn(P);
  const auto pc = curve::count_points(cn, curve::singular_locus(cn));
  CHECK(pc.affine == naive_affine_count(P));
  CHECK(pc.places == 1584);
}

TEST_CASE("point counts of a non-normalized member") {
  auto P = CurveFamilyParams::normalized(3, 1, 1);
  const gf::Field& f = *P.field();
  P.alpha = {f.generator()};
  P.c = f.pow(f.generator(), 5);
  const auto cn = curve::build_cn(P);
  CHECK(kernels::parallel::affine_zeros(cn.f).size() == naive_affine_count(P));
}

TEST_CASE("canonical degree") {
  CHECK(curve::canonical_degree_check(2, 1));
  CHECK(curve::canonical_degree_check(3, 1));
  CHECK(curve::canonical_degree_check(2, 2));
  CHECK((8 - 2) * curve::degree_closed_form(2, 1) == 72);
  CHECK((27 - 2) * curve::degree_closed_form(3, 1) == 900);
  CHECK((32 - 2) * curve::degree_closed_form(2, 2) == 1440);
}

TEST_CASE("aut order closed form") {
  CHECK(curve::aut_order_closed_form(2, 1) == 288);
  CHECK(curve::aut_order_closed_form(3, 1) == 7776);
  CHECK(curve::aut_order_closed_form(2, 2) == 4608);
}

TEST_CASE("no rational line lies on C_n") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  CHECK(curve::no_rational_line_component(curve::build_cn(P)));
  // A reducible curve with a line component.
  const auto F = P.field();
  const poly::BiPoly x = poly::BiPoly::variable(F, 0), y = poly::BiPoly::variable(F, 1);
  CHECK_FALSE(curve::no_rational_line_component(curve::make_plane_curve(curve::Model::xy, (x - y) * (x * x + y))));
}

TEST_CASE("analyze_point on a node") {
  auto F = gf::Field::make(5, 1);
  const poly::BiPoly x = poly::BiPoly::variable(F, 0), y = poly::BiPoly::variable(F, 1);
  // y^2 = x^2 (x + 1): node at the origin with tangents y = +-x.
  const auto c = curve::make_plane_curve(curve::Model::xy, y * y - x * x * (x + poly::BiPoly::constant(F, 1)));
  const auto a = curve::analyze_point(c, {0, 0, 1});
  CHECK(a.multiplicity == 2);
  CHECK(a.ordinary);
  CHECK(a.rational_tangents);
  CHECK(a.tangent_lines.size() == 2);
  const auto s = curve::analyze_point(c, {4, 0, 1});
  CHECK(s.multiplicity == 1);
  CHECK_THROWS_AS(curve::analyze_point(c, {1, 1, 1}), PreconditionError);
  // Cusp y^2 = x^3 is not ordinary.
  const auto cusp = curve::make_plane_curve(curve::Model::xy, y * y - x * x * x);
  CHECK_FALSE(curve::analyze_point(cusp, {0, 0, 1}).ordinary);
}
