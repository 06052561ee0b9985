#pragma once

// Points, lines and 3x3 matrices over a finite field.
//
// Points and lines share one normalization: the last nonzero coordinate is 1,
// so affine points read (x:y:1), points at infinity (x:1:0), and (1:0:0).
// Line (a:b:c) is aX + bY + cZ = 0.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hcover/gf.hpp"

namespace hcover::proj {

using gf::Code;
using Point = std::array<Code, 3>;
using Line = Point;
/// Row-major.
using Mat3 = std::array<Code, 9>;

inline bool is_zero(const Point& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

/// Scales v so its last nonzero coordinate is 1.  Throws PreconditionError on the zero vector.
Point normalize(const gf::Field& f, const Point& v);
bool proportional(const gf::Field& f, const Point& a, const Point& b);
Code dot(const gf::Field& f, const Point& a, const Point& b);
Point cross(const gf::Field& f, const Point& a, const Point& b);
/// Determinant of the matrix with rows a, b, c.
Code det3(const gf::Field& f, const Point& a, const Point& b, const Point& c);

Mat3 identity();
Mat3 multiply(const gf::Field& f, const Mat3& a, const Mat3& b);
Point apply(const gf::Field& f, const Mat3& m, const Point& v);
Code det(const gf::Field& f, const Mat3& m);
Mat3 inverse(const gf::Field& f, const Mat3& m);
/// Scales m so its first nonzero entry is 1.
Mat3 canonical(const gf::Field& f, const Mat3& m);
/// Entry-wise image under a field embedding.
Mat3 embed(const gf::Embedding& emb, const Mat3& m);

std::string to_string(const Point& v);

/// PG(2, Q) with points and lines indexed 0 .. Q^2+Q.  Index of (x:y:1) is xQ + y,
/// of (x:1:0) is Q^2 + x, of (1:0:0) is Q^2 + Q; lines use the same scheme.
class ProjPlane {
 public:
  explicit ProjPlane(gf::FieldRef field);

  const gf::FieldRef& field() const { return field_; }
  std::uint32_t field_order() const { return q_; }
  std::uint32_t size() const { return q_ * q_ + q_ + 1; }

  std::uint32_t index(const Point& v) const;
  Point point(std::uint32_t i) const;
  /// Points on line i.  By duality these are also the indices of the lines through point i.
  const std::vector<std::uint32_t>& incident(std::uint32_t i) const { return incidence_[i]; }

 private:
  gf::FieldRef field_;
  std::uint32_t q_;
  std::vector<std::vector<std::uint32_t>> incidence_;
};

}  // namespace hcover::proj
