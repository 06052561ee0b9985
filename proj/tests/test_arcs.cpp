#include <algorithm>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "hcover/arcs.hpp"
#include "hcover/kernels.hpp"

using namespace hcover;
using curve::CurveFamilyParams;
using gf::Code;
using proj::Point;

TEST_CASE("arc over GF(16)") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const gf::Field& f = *P.field();
  const auto cn = curve::build_cn(P);
  const proj::ProjPlane plane(P.field());
  const auto S = arcs::rational_point_set(cn, plane);
  CHECK(S.size() == 99);
  CHECK(S.size() == static_cast<std::size_t>(curve::plane_points_closed_form(2, 1)));

  const auto prof = arcs::intersection_profile(plane, S);
  CHECK(prof.d == 12);
  CHECK(prof.d <= cn.degree);
  CHECK(prof.incidence_sum_ok);
  std::uint64_t lines = 0;
  for (const auto& [size, count] : prof.histogram) lines += count;
  CHECK(lines == 273);
  CHECK(prof.line_counts[plane.index({0, 0, 1})] == 3);  // Z = 0
  CHECK(arcs::max_through(plane, prof, {1, 0, 0}) == 12);
  CHECK(arcs::max_through(plane, prof, {0, 1, 0}) == 12);

  const auto arc = arcs::completeness_check(plane, S, prof.d);
  CHECK(arc.k == 99);
  CHECK_FALSE(arc.complete);
  REQUIRE_FALSE(arc.extension_witnesses.empty());

  const auto L = P.L();
  const auto ker = poly::kernel(L);
  const Code lambda = ker.back();
  const auto T = arcs::t_lambda(L, lambda);
  CHECK(T.size() == ker.size());
  int witnesses = 0;
  for (Code a = 0; a < f.order(); ++a) {
    if (std::binary_search(T.begin(), T.end(), a)) continue;
    const Point R{a, 1, 0};
    CHECK(std::find(arc.extension_witnesses.begin(), arc.extension_witnesses.end(), R) !=
          arc.extension_witnesses.end());
    ++witnesses;
  }
  CHECK(witnesses == 12);
}

TEST_CASE("arc over GF(81)") {
  const auto P = CurveFamilyParams::normalized(3, 1, 1);
  const gf::Field& f = *P.field();
  const auto cn = curve::build_cn(P);
  const proj::ProjPlane plane(P.field());
  const auto S = arcs::rational_point_set(cn, plane);
  CHECK(S.size() == 1948);
  const auto prof = arcs::intersection_profile(plane, S);
  CHECK(prof.d == 36);
  CHECK(prof.incidence_sum_ok);
  CHECK(prof.line_counts[plane.index({0, 0, 1})] == 4);
  CHECK(arcs::max_through(plane, prof, {1, 0, 0}) == 36);
  const auto arc = arcs::completeness_check(plane, S, prof.d);
  CHECK_FALSE(arc.complete);
  const auto L = P.L();
  const auto T = arcs::t_lambda(L, poly::kernel(L).back());
  for (Code a = 0; a < f.order(); ++a) {
    if (std::binary_search(T.begin(), T.end(), a)) continue;
    CHECK(std::find(arc.extension_witnesses.begin(), arc.extension_witnesses.end(), Point{a, 1, 0}) !=
          arc.extension_witnesses.end());
  }
}

TEST_CASE("pencil of lines through (a:1:0)") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const gf::Field& f = *P.field();
  const auto L = P.L();
  const Code lambda = poly::kernel(L).back();
  const auto T = arcs::t_lambda(L, lambda);
  CHECK(poly::kernel(arcs::l_lambda(L, lambda)).size() == 4);
  for (Code a = 0; a < f.order(); ++a) {
    const auto r = arcs::verify_pencil(P, a, lambda);
    CHECK(r.kernel_size == 4);
    CHECK(r.kernel_inside_L);
    CHECK(r.fixes_iff_equal);
    if (!std::binary_search(T.begin(), T.end(), a)) CHECK(r.distinct_lines == 16);
    else CHECK(r.distinct_lines < 16);
  }
  CHECK_THROWS_AS(arcs::verify_pencil(P, 1, 0), PreconditionError);
  CHECK_THROWS_AS(arcs::t_lambda(L, 2), PreconditionError);
}

TEST_CASE("degenerate point sets") {
  const auto field = gf::Field::make(2, 2);
  const proj::ProjPlane plane(field);
  const auto empty = arcs::make_point_set(plane, {});
  const auto prof = arcs::intersection_profile(plane, empty);
  CHECK(prof.d == 0);
  CHECK(prof.histogram.size() == 1);
  CHECK(prof.histogram.at(0) == 21);
  CHECK(prof.incidence_sum_ok);

  const auto one = arcs::make_point_set(plane, {{1, 1, 1}});
  const auto arc = arcs::completeness_check(plane, one, 2);
  CHECK_FALSE(arc.complete);
  CHECK(arc.extension_witnesses.size() == 20);
  CHECK(arcs::completeness_check(plane, one, 1).complete);
}

TEST_CASE("serial and parallel line kernels agree") {
  const auto P = CurveFamilyParams::normalized(2, 1, 1);
  const auto cn = curve::build_cn(P);
  const proj::ProjPlane plane(P.field());
  const auto S = arcs::rational_point_set(cn, plane);
  CHECK(kernels::serial::line_counts(plane, S.member) == kernels::parallel::line_counts(plane, S.member));
  CHECK(kernels::serial::extension_points(plane, S.member, 12) ==
        kernels::parallel::extension_points(plane, S.member, 12));
}

TEST_CASE("CSV output") {
  arcs::IntersectionProfile prof;
  prof.histogram = {{0, 5}, {3, 2}};
  std::ostringstream os;
  arcs::write_histogram_csv(os, prof);
  CHECK(os.str() == "intersection_size,lines\n0,5\n3,2\n");
  arcs::ArcReport r;
  r.extension_witnesses = {{1, 1, 0}};
  std::ostringstream w;
  arcs::write_witnesses_csv(w, r);
  CHECK(w.str() == "x,y,z\n1,1,0\n");
}
