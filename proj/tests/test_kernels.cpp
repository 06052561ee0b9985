#include <random>

#include "doctest.h"
#include "hcover/kernels.hpp"
#include "hcover/poly.hpp"

using namespace hcover;
using gf::Code;
using poly::BiPoly;

namespace {

BiPoly random_bipoly(const gf::FieldRef& F, std::mt19937_64& rng, int terms, std::uint32_t maxdeg) {
  std::uniform_int_distribution<Code> c(0, F->order() - 1);
  std::uniform_int_distribution<std::uint32_t> e(0, maxdeg);
  BiPoly r(F);
  for (int i = 0; i < terms; ++i) r.add_term({e(rng), e(rng)}, c(rng));
  return r;
}

proj::Mat3 random_matrix(const gf::Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Code> c(0, f.order() - 1);
  proj::Mat3 m;
  do {
    for (auto& v : m) v = c(rng);
  } while (proj::det(f, m) == 0);
  return m;
}

}  // namespace

TEST_CASE("serial and parallel evaluation kernels agree") {
  std::mt19937_64 rng(3);
  for (auto [p, k] : {std::pair{2u, 4u}, {3u, 2u}, {3u, 4u}}) {
    auto F = gf::Field::make(p, k);
    for (int trial = 0; trial < 4; ++trial) {
      const BiPoly f = random_bipoly(F, rng, 8, 9);
      CHECK(kernels::serial::affine_zeros(f) == kernels::parallel::affine_zeros(f));
      CHECK(kernels::serial::affine_singular(f) == kernels::parallel::affine_singular(f));
      const poly::UniPoly u(F, {1, 2, 0, 1, 1 % p, 1});
      CHECK(kernels::serial::evaluate_all(u) == kernels::parallel::evaluate_all(u));
    }
  }
}

TEST_CASE("projective plane incidence") {
  auto F = gf::Field::make(2, 2);
  const proj::ProjPlane plane(F);
  const std::uint32_t N = plane.size();
  CHECK(N == 21);
  for (std::uint32_t i = 0; i < N; ++i) {
    CHECK(plane.index(plane.point(i)) == i);
    CHECK(plane.incident(i).size() == 5);
    for (std::uint32_t pi : plane.incident(i)) CHECK(proj::dot(*F, plane.point(i), plane.point(pi)) == 0);
  }
  // Two distinct points lie on exactly one line.
  for (std::uint32_t a = 0; a < N; ++a) {
    for (std::uint32_t b = a + 1; b < N; ++b) {
      int lines = 0;
      for (std::uint32_t l = 0; l < N; ++l) {
        const auto& inc = plane.incident(l);
        const bool ha = std::find(inc.begin(), inc.end(), a) != inc.end();
        const bool hb = std::find(inc.begin(), inc.end(), b) != inc.end();
        lines += ha && hb;
      }
      REQUIRE(lines == 1);
    }
  }
}

TEST_CASE("line counts and extension points agree") {
  std::mt19937_64 rng(9);
  for (auto [p, k] : {std::pair{2u, 2u}, {3u, 1u}, {2u, 3u}}) {
    auto F = gf::Field::make(p, k);
    const proj::ProjPlane plane(F);
    std::bernoulli_distribution coin(0.3);
    std::vector<std::uint8_t> member(plane.size());
    for (auto& m : member) m = coin(rng);
    const auto a = kernels::serial::line_counts(plane, member);
    const auto b = kernels::parallel::line_counts(plane, member);
    CHECK(a == b);
    std::uint64_t total = 0, k_pts = 0;
    for (auto v : a) total += v;
    for (auto m : member) k_pts += m;
    CHECK(total == k_pts * (F->order() + 1));
    for (std::uint32_t d : {2u, 3u, 4u}) {
      CHECK(kernels::serial::extension_points(plane, member, d) == kernels::parallel::extension_points(plane, member, d));
    }
  }
}

TEST_CASE("pencil stabilizer kernels agree") {
  std::mt19937_64 rng(21);
  auto F = gf::Field::make(3, 1);
  const gf::Field& f = *F;
  std::vector<proj::Mat3> group;
  for (int i = 0; i < 40; ++i) group.push_back(random_matrix(f, rng));
  // Some homologies and elations with centre (1:0:0) and (0:1:0).
  group.push_back({2, 0, 0, 0, 1, 0, 0, 0, 1});
  group.push_back({1, 0, 1, 0, 1, 0, 0, 0, 1});
  group.push_back({1, 0, 0, 0, 1, 2, 0, 0, 1});
  group.push_back(proj::identity());
  const proj::ProjPlane plane(F);
  std::vector<proj::Point> pts;
  for (std::uint32_t i = 0; i < plane.size(); ++i) pts.push_back(plane.point(i));
  const auto a = kernels::serial::pencil_stabilizer_sizes(f, group, pts);
  CHECK(a == kernels::parallel::pencil_stabilizer_sizes(f, group, pts));
  CHECK(a[plane.index({1, 0, 0})] >= 3);
}

TEST_CASE("first failure") {
  auto pred = [](std::size_t i) { return i % 17 != 16 || i < 40; };
  CHECK(kernels::serial::first_failure(100, pred) == std::optional<std::size_t>(50));
  CHECK(kernels::parallel::first_failure(100, pred) == std::optional<std::size_t>(50));
  CHECK_FALSE(kernels::parallel::first_failure(30, pred).has_value());
}
