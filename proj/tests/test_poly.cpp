#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hcover/poly.hpp"

using namespace hcover;
using gf::Code;
using gf::Field;
using poly::BiPoly;
using poly::LinearizedPoly;
using poly::UniPoly;

namespace {

std::vector<Code> brute_roots(const LinearizedPoly& L) {
  std::vector<Code> r;
  for (Code x = 0; x < L.field()->order(); ++x) {
    if (L.eval(x) == 0) r.push_back(x);
  }
  return r;
}

std::vector<Code> brute_image(const UniPoly& F) {
  std::set<Code> s;
  for (Code x = 0; x < F.field()->order(); ++x) s.insert(F.eval(x));
  return {s.begin(), s.end()};
}

UniPoly X(const gf::FieldRef& f) { return UniPoly::x(f); }

}  // namespace

TEST_CASE("sparse polynomial basics") {
  auto F = Field::make(3, 2);
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const BiPoly g = x * x + y * x + BiPoly::constant(F, 2);
  CHECK(g.total_degree() == 2);
  CHECK(g.degree_in(1) == 1);
  CHECK(g.pow(3) == g * g * g);
  CHECK(g.pow(10) == g.pow(9) * g);
  CHECK(g.frobenius_power(1) == g.pow(3));
  CHECK(g.derivative(0) == x.scaled(2) + y);
  const auto G = poly::homogenize(g);
  CHECK(G.is_homogeneous());
  CHECK(poly::dehomogenize(G) == g);
  // Substitution x -> x + y, y -> 2y.
  const auto h = g.substitute<2>({x + y, y.scaled(2)});
  for (Code a = 0; a < 9; ++a) {
    for (Code b = 0; b < 9; ++b) {
      CHECK(h.eval({a, b}) == g.eval({F->add(a, b), F->mul(2, b)}));
    }
  }
}

TEST_CASE("univariate arithmetic") {
  auto F = Field::make(2, 4);
  const UniPoly a(F, {1, 3, 0, 7, 1}), b(F, {5, 1, 1});
  auto [qt, r] = a.divmod(b);
  CHECK(qt * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(a.pow(6) == a * a * a * a * a * a);
  CHECK(a.compose(b).eval(9) == a.eval(b.eval(9)));
  CHECK(poly::gcd(a * b, b * b) == b.monic());
  CHECK(poly::is_squarefree(b) == (poly::gcd(b, b.derivative()).degree() == 0));
  CHECK_FALSE(poly::is_squarefree(b * b));
}

TEST_CASE("linearized polynomial construction") {
  auto F = Field::make(2, 4);
  CHECK_THROWS_AS(LinearizedPoly(F, 2, {0, 1}), PreconditionError);
  CHECK_THROWS_AS(LinearizedPoly(F, 2, {1, 3}), PreconditionError);
  CHECK_THROWS_AS(LinearizedPoly(F, 1, {1, 1}), PreconditionError);
  CHECK_THROWS_AS(LinearizedPoly(F, 3, {1, 1}), PreconditionError);
  const auto L = LinearizedPoly::normalized(F, 2, 1);
  CHECK(L.to_unipoly() == X(F) + UniPoly::monomial(F, 1, 4));
  CHECK(L.degree() == 4);
}

TEST_CASE("kernel") {
  SUBCASE("x + x^4 over GF(16) is GF(4)") {
    auto F = Field::make(2, 4);
    const auto L = LinearizedPoly::normalized(F, 2, 1);
    const auto k = poly::kernel(L);
    CHECK(k.size() == 4);
    CHECK(k == brute_roots(L));
    for (Code a : k) CHECK(F->pow(a, 4) == a);
  }
  SUBCASE("x + x^9 over GF(81)") {
    auto F = Field::make(3, 4);
    const auto L = LinearizedPoly::normalized(F, 3, 1);
    CHECK(poly::kernel(L).size() == 9);
    CHECK(poly::kernel(L) == brute_roots(L));
  }
  SUBCASE("random coefficients agree with brute force") {
    std::mt19937_64 rng(11);
    for (auto [p, k, q, n] : {std::tuple{2u, 4u, 2u, 1u}, {2u, 6u, 2u, 2u}, {3u, 4u, 3u, 1u}, {2u, 8u, 4u, 1u},
                              {2u, 6u, 2u, 1u}, {5u, 2u, 5u, 1u}}) {
      auto F = Field::make(p, k);
      std::uniform_int_distribution<Code> d(1, F->order() - 1);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<Code> c(n + 1);
        for (auto& v : c) v = d(rng);
        c.back() = 1;
        const LinearizedPoly L(F, q, c);
        const auto ker = poly::kernel(L);
        CHECK(ker == brute_roots(L));
        CHECK(L.degree() % ker.size() == 0);
        CHECK(std::binary_search(ker.begin(), ker.end(), Code{0}));
      }
    }
  }
  SUBCASE("kernel is closed under addition and GF(q^2) scalars") {
    auto t = gf::make_tower(3, 1, 1);
    const Field& f = *t->top;
    const auto L = LinearizedPoly::normalized(t->top, 3, 1);
    const auto ker = poly::kernel(L);
    for (Code a : ker) {
      for (Code b : ker) CHECK(std::binary_search(ker.begin(), ker.end(), f.add(a, b)));
      for (Code s = 0; s < t->quad->order(); ++s) {
        CHECK(std::binary_search(ker.begin(), ker.end(), f.mul(t->quad_to_top.map(s), a)));
      }
    }
  }
}

TEST_CASE("linearized evaluation agrees with monomial evaluation") {
  for (auto [p, k, q, n] : {std::tuple{2u, 4u, 2u, 1u}, {2u, 12u, 2u, 2u}, {3u, 4u, 3u, 1u}, {2u, 8u, 4u, 1u}}) {
    auto F = Field::make(p, k);
    std::vector<Code> c(n + 1, 1);
    c[0] = F->generator();
    const LinearizedPoly L(F, q, c);
    const UniPoly U = L.to_unipoly();
    for (Code x = 0; x < F->order(); ++x) REQUIRE(L.eval(x) == U.eval(x));
  }
}

TEST_CASE("value sets") {
  auto F4 = Field::make(2, 2);
  CHECK(poly::value_set(X(F4)) == std::vector<Code>{0, 1, 2, 3});
  auto F16 = Field::make(2, 4);
  const UniPoly F = LinearizedPoly::normalized(F16, 2, 1).to_unipoly().pow(3);
  const auto V = poly::value_set(F);
  CHECK(V.size() == 2);
  CHECK(V.front() == 0);
  CHECK(V == brute_image(F));
  auto F3 = Field::make(3, 1);
  CHECK(poly::value_set(UniPoly::monomial(F3, 1, 2)) == std::vector<Code>{0, 1});

  CHECK(poly::is_minimal_value_set(F));
  CHECK(poly::is_minimal_value_set(X(F16)));
  CHECK(poly::is_minimal_value_set(UniPoly::monomial(F4, 1, 2) + X(F4)));
  CHECK_THROWS_AS(poly::is_minimal_value_set(UniPoly::constant(F4, 1)), PreconditionError);
}

TEST_CASE("value sets of L^(q+1) and -L^(q+1) - c coincide on normalized members") {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    auto t = gf::make_tower(p, 1, n);
    const auto Fp = LinearizedPoly::normalized(t->top, p, n).to_unipoly().pow(p + 1);
    const UniPoly W = -Fp - UniPoly::constant(t->top, 1);
    CHECK(poly::is_minimal_value_set(Fp));
    CHECK(poly::is_minimal_value_set(W));
    CHECK(poly::value_set(Fp) == poly::value_set(W));
  }
}

TEST_CASE("minimal value set identities") {
  SUBCASE("q=2, n=1") {
    auto F = Field::make(2, 4);
    const auto L = LinearizedPoly::normalized(F, 2, 1);
    const auto r = poly::check_mvsp_factorization(L);
    CHECK(r.holds);
    REQUIRE(r.theta.has_value());
    CHECK(*r.theta != 0);
    CHECK(r.value_set.size() == 2);
  }
  SUBCASE("q=3, n=1 and q=2, n=2") {
    CHECK(poly::check_mvsp_factorization(LinearizedPoly::normalized(Field::make(3, 4), 3, 1)).holds);
    CHECK(poly::check_mvsp_factorization(LinearizedPoly::normalized(Field::make(2, 6), 2, 2)).holds);
  }
  SUBCASE("non-minimal value set fails") {
    // x + x^4 is injective modulo {0, 1} on GF(32), so L^3 takes 16 values, not ceil(32/12) = 3.
    const auto r = poly::check_mvsp_factorization(LinearizedPoly::normalized(Field::make(2, 5), 2, 1));
    CHECK_FALSE(r.holds);
    CHECK_FALSE(r.theta.has_value());
    CHECK(r.value_set.size() == 16);
    CHECK(r.failure.find("degree") != std::string::npos);
  }
}

TEST_CASE("shape of T") {
  SUBCASE("q=2, n=1") {
    auto F = Field::make(2, 4);
    const auto s = poly::build_T_and_check_shape(LinearizedPoly::normalized(F, 2, 1));
    CHECK(s.shape_ok);
    CHECK(s.u == 1);
    CHECK(s.m == 1);
    CHECK(s.T.support() == std::vector<std::size_t>{1, 2});
    CHECK(s.T == UniPoly::monomial(F, 1, 2) - X(F));
    CHECK(s.reduced_form);
    CHECK(s.omegas.size() == 1);
  }
  SUBCASE("q=3, n=1: T = x^3 - x") {
    auto F = Field::make(3, 4);
    const auto s = poly::build_T_and_check_shape(LinearizedPoly::normalized(F, 3, 1));
    CHECK(s.shape_ok);
    CHECK(s.T == UniPoly::monomial(F, 1, 3) - X(F));
    CHECK(s.omegas == std::vector<Code>{F->neg(1)});
    CHECK(s.reduced_form);
  }
  SUBCASE("q=2, n=2") {
    auto F = Field::make(2, 6);
    const auto s = poly::build_T_and_check_shape(LinearizedPoly::normalized(F, 2, 2));
    CHECK(s.shape_ok);
    CHECK(s.T == UniPoly::monomial(F, 1, 2) - X(F));
  }
  SUBCASE("value set {0} gives T = x") {
    auto F = Field::make(2, 2);
    const auto L = LinearizedPoly::normalized(F, 2, 1);
    CHECK(poly::value_set(L.to_unipoly().pow(3)) == std::vector<Code>{0});
    const auto s = poly::build_T_and_check_shape(L);
    CHECK(s.shape_ok);
    CHECK(s.T == X(F));
  }
  SUBCASE("not a minimal value set polynomial") {
    CHECK_THROWS_AS(poly::build_T_and_check_shape(LinearizedPoly::normalized(Field::make(2, 5), 2, 1)),
                    PreconditionError);
  }
}

TEST_CASE("composition identity") {
  auto F = Field::make(2, 4);
  const auto L = LinearizedPoly::normalized(F, 2, 1);
  const auto s = poly::build_T_and_check_shape(L);
  CHECK(poly::check_compos(L, s.T, 4));
  for (std::uint32_t bad : {1u, 2u, 3u, 5u, 6u}) CHECK_FALSE(poly::check_compos(L, s.T, bad));

  auto F81 = Field::make(3, 4);
  const auto L3 = LinearizedPoly::normalized(F81, 3, 1);
  const auto s3 = poly::build_T_and_check_shape(L3);
  CHECK(poly::check_compos(L3, s3.T, 4));
  CHECK_FALSE(poly::check_compos(L3, s3.T, 3));
}

TEST_CASE("poly-L identity") {
  auto F16 = Field::make(2, 4);
  const auto L = LinearizedPoly::normalized(F16, 2, 1);
  CHECK(poly::check_poly_L(L, 1));
  const auto L3 = LinearizedPoly::normalized(Field::make(3, 4), 3, 1);
  CHECK(poly::check_poly_L(L3, 1));
  // beta outside GF(4): beta^3 != 1.
  for (Code b = 1; b < 16; ++b) {
    const bool in_f4 = F16->pow(b, 3) == 1;
    CHECK(poly::check_poly_L(L, b) == in_f4);
  }
  CHECK_THROWS_AS(poly::check_poly_L(L, 0), PreconditionError);
}

TEST_CASE("pseudo reduction") {
  auto F = Field::make(2, 4);
  const BiPoly x = BiPoly::variable(F, 0), y = BiPoly::variable(F, 1);
  const BiPoly f = y.pow(3) + x * y + x.pow(5) + BiPoly::constant(F, 1);
  CHECK(poly::pseudo_reduce(f, f).is_zero());
  CHECK(poly::pseudo_reduce(y * f + BiPoly::constant(F, 1), f) == BiPoly::constant(F, 1));
  CHECK(poly::pseudo_reduce(f * f + x * f + x * x, f) == x * x);
  CHECK_THROWS_AS(poly::pseudo_reduce(x, x * y.pow(2) + y), PreconditionError);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Code> c(0, 15);
  std::uniform_int_distribution<std::uint32_t> e(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    BiPoly a(F), r(F);
    for (int i = 0; i < 6; ++i) a.add_term({e(rng), e(rng)}, c(rng));
    for (int i = 0; i < 6; ++i) r.add_term({e(rng), e(rng) % 3}, c(rng));
    REQUIRE(poly::pseudo_reduce(a * f + r, f) == r);
  }
}
