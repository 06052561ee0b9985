// Serial reference vs OpenMP kernels on the q = 2, n = 1 and q = 3, n = 1 members.

#include <benchmark/benchmark.h>

#include "hcover/arcs.hpp"
#include "hcover/autgrp.hpp"
#include "hcover/kernels.hpp"

using namespace hcover;

namespace {

struct Fixture {
  curve::CurveFamilyParams params;
  curve::PlaneCurve cn;
  proj::ProjPlane plane;
  arcs::PointSet S;
  std::uint32_t d;

  explicit Fixture(std::uint32_t p)
      : params(curve::CurveFamilyParams::normalized(p, 1, 1)),
        cn(curve::build_cn(params)),
        plane(params.field()),
        S(arcs::rational_point_set(cn, plane)),
        d(arcs::intersection_profile(plane, S).d) {}
};

const Fixture& fixture(std::uint32_t p) {
  static const Fixture f2(2), f3(3);
  return p == 2 ? f2 : f3;
}

template <auto Fn>
void affine_zeros(benchmark::State& state) {
  const auto& fx = fixture(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(fx.cn.f));
}

template <auto Fn>
void line_counts(benchmark::State& state) {
  const auto& fx = fixture(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(fx.plane, fx.S.member));
}

template <auto Fn>
void extension_points(benchmark::State& state) {
  const auto& fx = fixture(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Fn(fx.plane, fx.S.member, fx.d));
}

template <auto Fn>
void pencil_stabilizers(benchmark::State& state) {
  const auto& fx = fixture(2);
  static const auto group = [&] {
    const auto tu = curve::build_cn_prime(fx.params, curve::default_tu_alpha(fx.params));
    return autgrp::generate_group(fx.params.field(),
                                  autgrp::explicit_generators(fx.params, tu, curve::Model::xy).all());
  }();
  std::vector<proj::Point> candidates;
  for (std::uint32_t i = 0; i < fx.plane.size(); ++i) {
    if (fx.cn.F.eval(fx.plane.point(i)) != 0) candidates.push_back(fx.plane.point(i));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(Fn(*fx.params.field(), group.elements(), candidates));
  }
}

}  // namespace

BENCHMARK(affine_zeros<kernels::serial::affine_zeros>)->Name("affine_zeros/serial")->Arg(2)->Arg(3);
BENCHMARK(affine_zeros<kernels::parallel::affine_zeros>)->Name("affine_zeros/parallel")->Arg(2)->Arg(3);
BENCHMARK(line_counts<kernels::serial::line_counts>)->Name("line_counts/serial")->Arg(2)->Arg(3);
BENCHMARK(line_counts<kernels::parallel::line_counts>)->Name("line_counts/parallel")->Arg(2)->Arg(3);
BENCHMARK(extension_points<kernels::serial::extension_points>)->Name("extension_points/serial")->Arg(2)->Arg(3);
BENCHMARK(extension_points<kernels::parallel::extension_points>)->Name("extension_points/parallel")->Arg(2)->Arg(3);
BENCHMARK(pencil_stabilizers<kernels::serial::pencil_stabilizer_sizes>)->Name("pencil_stabilizers/serial");
BENCHMARK(pencil_stabilizers<kernels::parallel::pencil_stabilizer_sizes>)->Name("pencil_stabilizers/parallel");

BENCHMARK_MAIN();
