#pragma once

// Collineation groups of C_n.  Group elements are canonical 3x3 matrices
// (first nonzero entry 1) in the xy coordinates unless stated otherwise.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hcover/curve.hpp"
#include "hcover/projective.hpp"

namespace hcover::autgrp {

using proj::Mat3;
using Mat2 = std::array<gf::Code, 4>;

struct MatHash {
  std::size_t operator()(const Mat3& m) const noexcept;
};

/// Canonical representative; throws PreconditionError for a singular matrix.
Mat3 collineation(const gf::Field& f, const Mat3& m);

/// A_tu = M A_xy M^-1 for M = tu.xy_to_tu, and back.
Mat3 xy_to_tu(const gf::Field& f, const curve::TuModel& tu, const Mat3& a);
Mat3 tu_to_xy(const gf::Field& f, const curve::TuModel& tu, const Mat3& a);

struct ExplicitGenerators {
  curve::Model model = curve::Model::xy;
  std::vector<Mat3> translations;  // (a) (t,u) -> (t + b, u + g), L(b) = L(g) = 0
  std::vector<Mat3> shears;        // (b) (t,u) -> (t + d u, u), d^q + d = 0
  std::vector<Mat3> scalings;      // (c) (t,u) -> (e t, e^-q u), e in GF(q^2)*
  std::vector<Mat3> rotations;     // (d) (x,y) -> (l x, y), l^(q+1) = 1
  std::vector<Mat3> all() const;
};

/// Types (a)-(c) live on the tu model and (d) on the xy model; everything is expressed in `model`.
/// Throws PreconditionError if ker L is not contained in the working field.
ExplicitGenerators explicit_generators(const curve::CurveFamilyParams& params, const curve::TuModel& tu,
                                       curve::Model model);

struct ExplicitList {
  /// (x,y) -> (a^q x - l b^q y + d, b x + l a y + e), a, b in GF(q^2)*, a^(q+1) + b^(q+1) = 1, l^(q+1) = 1.
  std::vector<Mat3> type_i;
  /// (x,y) -> (a y + d, b x + e) and (a x + d, b y + e), a^(q+1) = b^(q+1) = 1.
  std::vector<Mat3> type_ii;
};

/// The explicit list of automorphisms in xy coordinates, L(d) = L(e) = 0 throughout.
ExplicitList explicit_list(const curve::CurveFamilyParams& params);
std::int64_t explicit_type_i_count(std::int64_t q, std::uint32_t n);
std::int64_t explicit_type_ii_count(std::int64_t q, std::uint32_t n);

/// F(sigma(X,Y,Z)) is a nonzero multiple of F.  Affine maps are substituted into f, others into F.
bool preserves_curve(const Mat3& sigma, const curve::PlaneCurve& curve);
/// Third row (0, 0, *): the line Z = 0 is mapped to itself.
bool fixes_line_at_infinity(const Mat3& sigma);

class AutGroup {
 public:
  AutGroup(gf::FieldRef field, std::vector<Mat3> elements, std::vector<Mat3> generators);

  const gf::FieldRef& field() const { return field_; }
  const std::vector<Mat3>& elements() const { return elements_; }
  /// Generators actually needed during closure (a subset of the input list).
  const std::vector<Mat3>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const Mat3& m) const { return index_.count(m) != 0; }

 private:
  gf::FieldRef field_;
  std::vector<Mat3> elements_;
  std::vector<Mat3> generators_;
  std::unordered_map<Mat3, std::size_t, MatHash> index_;
};

/// Closure under composition, adding a generator only when it is not yet in the group.
/// Throws CapExceeded once more than `bound` elements appear.
AutGroup generate_group(const gf::FieldRef& field, const std::vector<Mat3>& gens, std::size_t bound = 1u << 20);

/// Index of the first element that does not preserve the curve.
std::optional<std::size_t> first_non_preserving(const AutGroup& group, const curve::PlaneCurve& curve);
/// Same set of elements.
bool same_elements(const AutGroup& a, const AutGroup& b);

/// Action on the line Z = 0 of a tu-coordinate matrix, as a canonical 2x2 matrix.
Mat2 restriction(const gf::Field& f, const Mat3& tu_matrix);
/// PGL(2, F_q) as canonical 2x2 matrices with entries in the subfield GF(q) of `f`.
std::vector<Mat2> pgl2(const gf::Field& f, std::uint32_t subfield_degree);

struct ExactSequenceReport {
  std::size_t group_order = 0;
  std::size_t kernel_order = 0;
  std::size_t expected_kernel_order = 0;
  std::size_t image_order = 0;
  std::size_t expected_image_order = 0;
  bool kernel_matches_explicit = false;  // ker r = {(l x + b, l y + g)}
  bool translations_normal = false;
  bool trivial_intersection = false;
  bool full_product = false;
  bool image_is_pgl2 = false;
  gf::Code delta = 0;  // d^(q-1) = -1 used in V(t:u) = (t:du)
  std::optional<Mat3> witness;
  std::string failure;
  bool passed = false;
};

/// r is computed in tu coordinates.  Kernel, its splitting Sigma_0 x| Z/(q+1) and the conjugated image are
/// checked by explicit set comparisons.
ExactSequenceReport restriction_and_exact_sequence(const AutGroup& group, const curve::CurveFamilyParams& params,
                                                   const curve::TuModel& tu);

std::vector<proj::Point> orbit(const AutGroup& group, const proj::Point& P);
std::size_t stabilizer_order(const AutGroup& group, const proj::Point& P);

struct OrbitReport {
  std::size_t orbit_size = 0;
  bool orbit_is_singular_locus = false;
  std::size_t stabilizer_order = 0;  // of (1:0:0) in tu coordinates
  std::size_t expected_stabilizer_order = 0;
  bool orbit_stabilizer_product = false;
  bool passed = false;
};

OrbitReport orbit_stabilizer_checks(const AutGroup& group, const curve::CurveFamilyParams& params,
                                    const curve::TuModel& tu, const std::vector<curve::PointAnalysis>& singular);

struct GrowthReport {
  /// |Aut|^(2n+1) >= g^(2n+2), exact.
  bool aut_exceeds_genus_power = false;
  /// Sylow p-subgroup order against p (gamma - 1)/(p - 2); only meaningful for p > 2 and gamma >= 2.
  bool nakajima_applicable = false;
  std::uint64_t sylow_order = 0;
  std::int64_t p_rank = 0;
  bool within_nakajima = false;
  double nakajima_ratio = 0;  // sylow_order / bound
};

GrowthReport growth_checks(std::uint64_t group_order, std::int64_t genus, std::int64_t p_rank, std::uint32_t p,
                           std::uint32_t n);

/// Text format: one header line "# hcover-group p=<p> modulus=<c0,..,ck> order=<N>", then one element per
/// line as nine codes in row-major order.
void dump_group(std::ostream& os, const AutGroup& group);
/// Throws Error on malformed input or a field mismatch.  The element list is taken as is (not re-closed).
AutGroup load_group(std::istream& is, const gf::FieldRef& field);

}  // namespace hcover::autgrp
