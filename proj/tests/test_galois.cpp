#include <algorithm>

#include "doctest.h"
#include "hcover/galois.hpp"
#include "hcover/kernels.hpp"

using namespace hcover;
using curve::CurveFamilyParams;
using gf::Code;
using proj::Mat3;

namespace {

struct Setup {
  CurveFamilyParams params;
  curve::PlaneCurve cn;
  curve::TuModel tu;
  std::vector<curve::PointAnalysis> sing;
  autgrp::AutGroup group;

  Setup(std::uint32_t p, std::uint32_t n)
      : params(CurveFamilyParams::normalized(p, 1, n)),
        cn(curve::build_cn(params)),
        tu(curve::build_cn_prime(params, curve::default_tu_alpha(params))),
        sing(curve::singular_locus(cn)),
        group(autgrp::generate_group(params.field(),
                                     autgrp::explicit_generators(params, tu, curve::Model::xy).all())) {}
};

}  // namespace

TEST_CASE("pencil stabilizer of (1:0:0)") {
  const Setup s(2, 1);
  const gf::Field& f = *s.params.field();
  const auto G = galois::pencil_stabilizer(s.group, s.cn, {1, 0, 0});
  CHECK(G.size() == 12);
  // Exactly the maps (l x + b, y), l^3 = 1, L(b) = 0.
  const auto ker = poly::kernel(s.params.L());
  std::vector<Mat3> expected;
  for (Code l = 1; l < f.order(); ++l) {
    if (f.pow(l, 3) != 1) continue;
    for (Code b : ker) expected.push_back(proj::canonical(f, {l, 0, b, 0, 1, 0, 0, 0, 1}));
  }
  std::sort(expected.begin(), expected.end());
  auto got = G;
  std::sort(got.begin(), got.end());
  CHECK(got == expected);

  CHECK(galois::pencil_stabilizer(s.group, s.cn, {1, 1, 1}).size() < 12);
  CHECK_THROWS_AS(galois::pencil_stabilizer(s.group, s.cn, s.sing.front().point), PreconditionError);
}

TEST_CASE("serial and parallel pencil kernels agree on the curve group") {
  const Setup s(2, 1);
  const gf::Field& f = *s.params.field();
  std::vector<proj::Point> pts{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}, {0, 0, 1}, {2, 1, 0}, {5, 7, 1}};
  CHECK(kernels::serial::pencil_stabilizer_sizes(f, s.group.elements(), pts) ==
        kernels::parallel::pencil_stabilizer_sizes(f, s.group.elements(), pts));
}

TEST_CASE("outer Galois points") {
  struct Case {
    std::uint32_t p;
    std::size_t count;
  };
  for (const auto& c : {Case{2, 2}, Case{3, 6}}) {
    const Setup s(c.p, 1);
    const gf::Field& f = *s.params.field();
    const auto scan = galois::enumerate_outer_galois(s.group, s.cn, s.params, s.sing);
    CHECK(scan.points.size() == c.count);
    CHECK(scan.on_line_at_infinity);
    CHECK(scan.quad_rational);
    CHECK(scan.off_singular);
    CHECK(scan.passed);
    for (const auto& r : scan.points) {
      CHECK(r.is_galois);
      CHECK(r.stabilizer.size() == s.cn.degree);
      CHECK(s.group.order() % r.stabilizer.size() == 0);
      if (r.point[1] == 1) CHECK(f.pow(r.point[0], s.params.q() + 1) != f.neg(1));
      CHECK(r.cyclic_order == s.params.q() + 1);
      CHECK(r.cyclic_fixed_on_line.size() == 2);
      CHECK(std::find(r.cyclic_fixed_on_line.begin(), r.cyclic_fixed_on_line.end(), r.point) !=
            r.cyclic_fixed_on_line.end());
      CHECK(galois::check_fiber_transitivity(r, s.cn, 10) > 0);
    }
    CHECK(galois::check_cyclic_restrictions(scan.points, f));
    const auto gen = galois::verify_generation(s.group, scan.points);
    if (c.p == 2) {
      // The two stabilizers are {(l x + b, y)} and {(x, m y + g)}; they only reach (l x + b, m y + g).
      CHECK(gen.generated_order == 144);
      CHECK_FALSE(gen.equals_group);
    } else {
      CHECK(gen.generated_order == s.group.order());
      CHECK(gen.equals_group);
    }
    const auto one = galois::verify_generation(s.group, {scan.points.front()});
    CHECK(one.generated_order < s.group.order());
    CHECK(one.generated_order % s.cn.degree == 0);
  }
}

TEST_CASE("projection substitution") {
  const auto P3 = CurveFamilyParams::normalized(3, 1, 1);
  const gf::Field& f = *P3.field();
  CHECK(galois::verify_projection_substitution(P3, 0));
  CHECK(galois::verify_projection_substitution(P3, 1));
  int checked = 0, literal_fails = 0;
  for (Code b = 0; b < f.order(); ++b) {
    if (!f.in_subfield(b, 2)) continue;
    if (f.pow(b, 4) == f.neg(1)) {
      CHECK_THROWS_AS(galois::verify_projection_substitution(P3, b), PreconditionError);
      continue;
    }
    CHECK(galois::verify_projection_substitution(P3, b));
    ++checked;
    const bool in_base = f.in_subfield(b, 1);
    const bool literal = galois::verify_projection_substitution(P3, b, galois::ProjectionForm::literal);
    CHECK(literal == in_base);
    literal_fails += !literal;
  }
  CHECK(checked == 9 - 4);
  CHECK(literal_fails > 0);

  const auto P2 = CurveFamilyParams::normalized(2, 1, 1);
  CHECK(galois::verify_projection_substitution(P2, 0));
  CHECK_THROWS_AS(galois::verify_projection_substitution(P2, 1), PreconditionError);
}

TEST_CASE("generation by Galois groups at q = 4") {
  const auto P = CurveFamilyParams::normalized(2, 2, 1);
  const gf::Field& f = *P.field();
  const auto cn = curve::build_cn(P);
  const auto tu = curve::build_cn_prime(P, curve::default_tu_alpha(P));
  const auto G = autgrp::generate_group(P.field(), autgrp::explicit_generators(P, tu, curve::Model::xy).all());
  REQUIRE(G.order() == 76800);
  std::vector<galois::GaloisPointReport> pts;
  std::vector<proj::Point> candidates{{1, 0, 0}};
  for (Code a = 0; a < f.order(); ++a) {
    if (f.in_subfield(a, 4) && f.pow(a, 5) != 1) candidates.push_back({a, 1, 0});
  }
  CHECK(candidates.size() == 12);
  for (const auto& R : candidates) {
    galois::GaloisPointReport r;
    r.point = R;
    r.stabilizer = galois::pencil_stabilizer(G, cn, R);
    CHECK(r.stabilizer.size() == cn.degree);
    pts.push_back(std::move(r));
  }
  CHECK(galois::verify_generation(G, pts).equals_group);
}
