#include <algorithm>
#include <random>

#include "doctest.h"
#include "hcover/frobenius.hpp"

using namespace hcover;
using curve::CurveFamilyParams;
using gf::Code;
using poly::BiPoly;

TEST_CASE("normalized member over GF(16)") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const auto cn = curve::build_cn(P);
  CHECK(frobenius::is_frobenius_nonclassical(cn.f, 4).nonclassical);
  for (std::uint32_t s : {1u, 2u, 3u, 5u}) {
    const auto r = frobenius::is_frobenius_nonclassical(cn.f, s);
    CHECK_FALSE(r.nonclassical);
    CHECK(r.remainder_terms > 0);
  }
  const auto sc = frobenius::scan(cn.f, frobenius::default_scan_window(P));
  REQUIRE(sc.size() == 8);
  for (const auto& r : sc) CHECK(r.nonclassical == (r.s == 4));
}

TEST_CASE("scan windows on the rest of the grid") {
  for (auto [p, n] : {std::pair{3u, 1u}, std::pair{2u, 2u}}) {
    const auto P = CurveFamilyParams::normalized(p, 1, n);
    const auto sc = frobenius::scan(curve::build_cn(P).f, frobenius::default_scan_window(P));
    const std::uint32_t expected = 2 * (n + 1);
    for (const auto& r : sc) CHECK(r.nonclassical == (r.s == expected));
  }
}

TEST_CASE("c outside the value set") {
  auto P = CurveFamilyParams::normalized(2, 1, 1);
  const gf::Field& f = *P.field();
  const auto V = poly::value_set(P.L().to_unipoly().pow(P.q() + 1));
  Code c = 1;
  while (std::binary_search(V.begin(), V.end(), c)) ++c;
  P.c = c;
  CHECK_FALSE(frobenius::classify_family_member(P).s.has_value());
  CHECK_FALSE(frobenius::is_frobenius_nonclassical(curve::build_cn(P).f, 4).nonclassical);
  CHECK(c < f.order());
}

TEST_CASE("classifier agrees with the checker on perturbed members") {
  std::mt19937 rng(11);
  int checked = 0, witnesses = 0;
  for (auto [p, n] : {std::pair{2u, 1u}, std::pair{3u, 1u}}) {
    const auto base = CurveFamilyParams::normalized(p, 1, n);
    const gf::Field& f = *base.field();
    std::uniform_int_distribution<Code> d(1, f.order() - 1);
    const int rounds = p == 2 ? 12 : 4;
    for (int i = 0; i < rounds; ++i) {
      // Half the rounds start from a scaled normalized member so that both verdicts occur.
      auto P = i % 2 == 0 ? frobenius::scaled_member(base, d(rng)) : base;
      if (i % 2 == 1) {
        for (auto& a : P.alpha) a = d(rng);
        P.c = d(rng);
      }
      const auto cls = frobenius::classify_family_member(P);
      const auto s = 2 * (n + 1);
      const auto chk = frobenius::is_frobenius_nonclassical(curve::build_cn(P).f, s);
      CHECK(cls.s.has_value() == chk.nonclassical);
      if (cls.s) {
        CHECK(*cls.s == s);
        CHECK(f.mul(f.pow(*cls.beta, P.q() + 1), P.c) == 1);
        ++witnesses;
      }
      ++checked;
    }
  }
  CHECK(checked >= 10);
  CHECK(witnesses > 0);
  CHECK(witnesses < checked);
}

TEST_CASE("normalized witness and scaled round trip") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const auto w = frobenius::classify_family_member(P);
  REQUIRE(w.s.has_value());
  CHECK(*w.s == 4);
  CHECK(*w.beta == 1);
  const gf::Field& f = *P.field();
  for (Code b = 1; b < f.order(); ++b) {
    const auto S = frobenius::scaled_member(P, b);
    const auto r = frobenius::classify_family_member(S);
    REQUIRE(r.beta.has_value());
    CHECK(frobenius::scaled_member(P, *r.beta).alpha == S.alpha);
    CHECK(frobenius::scaled_member(P, *r.beta).c == S.c);
  }
  CHECK_THROWS_AS(frobenius::scaled_member(P, 0), PreconditionError);
}

TEST_CASE("generalized family") {
  CHECK(frobenius::check_generalized_family(4, 2, 1, 1).nonclassical);
  CHECK(frobenius::check_generalized_family(4, 4, 1, 1).nonclassical);
  CHECK(frobenius::check_generalized_family(3, 3, 1, 1).nonclassical);
  CHECK(frobenius::check_generalized_family(9, 3, 1, 2).nonclassical);
  CHECK_THROWS_AS(frobenius::check_generalized_family(8, 4, 1, 1), PreconditionError);
  CHECK_THROWS_AS(frobenius::check_generalized_family(4, 2, 1, 2), PreconditionError);
  CHECK_THROWS_AS(frobenius::check_generalized_family(7, 3, 1, 1), PreconditionError);
}

TEST_CASE("verdicts are invariant under affine changes of coordinates") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const auto& field = P.field();
  const gf::Field& f = *field;
  const BiPoly fc = curve::build_cn(P).f;
  std::mt19937 rng(5);
  std::uniform_int_distribution<Code> d(0, f.order() - 1);
  int applied = 0;
  while (applied < 6) {
    const Code a = d(rng), b = d(rng), c = d(rng), e = d(rng);
    if (f.sub(f.mul(a, e), f.mul(b, c)) == 0) continue;
    // y^12 has coefficient (b^3 + e^3)^4; keep it so the image stays monic in y after scaling.
    if (f.pow(b, 3) == f.pow(e, 3)) continue;
    const BiPoly x = BiPoly::variable(field, 0), y = BiPoly::variable(field, 1);
    const BiPoly X = x.scaled(a) + y.scaled(b) + BiPoly::constant(field, d(rng));
    const BiPoly Y = x.scaled(c) + y.scaled(e) + BiPoly::constant(field, d(rng));
    const BiPoly g = fc.substitute<2>({X, Y});
    for (std::uint32_t s : {2u, 4u}) {
      CHECK(frobenius::is_frobenius_nonclassical(g, s).nonclassical == (s == 4));
    }
    ++applied;
  }
}

TEST_CASE("checker preconditions") {
  const auto field = gf::Field::make(2, 4);
  const BiPoly x = BiPoly::variable(field, 0), y = BiPoly::variable(field, 1);
  CHECK_THROWS_AS(frobenius::is_frobenius_nonclassical(x * y * y + x * x * y + BiPoly::constant(field, 1), 1),
                  PreconditionError);
  CHECK_THROWS_AS(frobenius::is_frobenius_nonclassical(x * x + y * y, 1), PreconditionError);
  CHECK_THROWS_AS(frobenius::is_frobenius_nonclassical(x + y, 0), PreconditionError);
  CHECK_THROWS_AS(frobenius::is_frobenius_nonclassical(x + y, 40), CapExceeded);
  // A line is nonclassical for every s.
  CHECK(frobenius::is_frobenius_nonclassical(x + y, 3).nonclassical);
}
