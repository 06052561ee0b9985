#pragma once

// Enumeration kernels.  Each has a straightforward serial reference and an
// OpenMP version that precompiles the input; tests compare the two.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hcover/projective.hpp"
#include "hcover/sparse_poly.hpp"
#include "hcover/unipoly.hpp"

namespace hcover::kernels {

using AffinePoint = std::array<gf::Code, 2>;

/// Sets the OpenMP team size used by the parallel kernels (no-op without OpenMP).
void set_threads(int n);
int max_threads();

namespace serial {

/// F(a) for every field element a, indexed by code.
std::vector<gf::Code> evaluate_all(const poly::UniPoly& F);
/// Zeros of f in the coefficient field, lexicographic on (x, y).
std::vector<AffinePoint> affine_zeros(const poly::BiPoly& f);
/// Common zeros of f, f_x, f_y.
std::vector<AffinePoint> affine_singular(const poly::BiPoly& f);
/// |l cap S| for every line l, with S given as a membership mask over point indices.
std::vector<std::uint32_t> line_counts(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member);
/// Points outside S all of whose lines meet S in fewer than d points.
std::vector<std::uint32_t> extension_points(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member,
                                            std::uint32_t d);
/// For each R, the number of group elements fixing every line through R.
std::vector<std::uint32_t> pencil_stabilizer_sizes(const gf::Field& f, const std::vector<proj::Mat3>& group,
                                                   const std::vector<proj::Point>& candidates);
/// Index of the first i in [0, n) with pred(i) false.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace serial

namespace parallel {

std::vector<gf::Code> evaluate_all(const poly::UniPoly& F);
std::vector<AffinePoint> affine_zeros(const poly::BiPoly& f);
std::vector<AffinePoint> affine_singular(const poly::BiPoly& f);
std::vector<std::uint32_t> line_counts(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member);
std::vector<std::uint32_t> extension_points(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member,
                                            std::uint32_t d);
/// Uses the three-line test: sigma fixes R and the lines R A, R B, R (A + B).
std::vector<std::uint32_t> pencil_stabilizer_sizes(const gf::Field& f, const std::vector<proj::Mat3>& group,
                                                   const std::vector<proj::Point>& candidates);
/// Smallest failing index; pred must be safe to call concurrently.
std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred);

}  // namespace parallel

/// True when sigma fixes R and each line through R (three-line test).
bool fixes_pencil(const gf::Field& f, const proj::Mat3& sigma, const proj::Point& R);

}  // namespace hcover::kernels
