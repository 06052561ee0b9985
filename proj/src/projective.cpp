#include "hcover/projective.hpp"

#include <sstream>

namespace hcover::proj {

Point normalize(const gf::Field& f, const Point& v) {
  for (int i = 2; i >= 0; --i) {
    if (v[i] != 0) {
      const Code s = f.inv(v[i]);
      return {f.mul(v[0], s), f.mul(v[1], s), f.mul(v[2], s)};
    }
  }
  throw PreconditionError("zero vector is not a projective point");
}

bool proportional(const gf::Field& f, const Point& a, const Point& b) {
  return is_zero(cross(f, a, b));
}

Code dot(const gf::Field& f, const Point& a, const Point& b) {
  return f.add(f.add(f.mul(a[0], b[0]), f.mul(a[1], b[1])), f.mul(a[2], b[2]));
}

Point cross(const gf::Field& f, const Point& a, const Point& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

Code det3(const gf::Field& f, const Point& a, const Point& b, const Point& c) { return dot(f, a, cross(f, b, c)); }

Mat3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

Mat3 multiply(const gf::Field& f, const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Code acc = 0;
      for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = acc;
    }
  }
  return r;
}

Point apply(const gf::Field& f, const Mat3& m, const Point& v) {
  Point r{};
  for (int i = 0; i < 3; ++i) {
    r[i] = f.add(f.add(f.mul(m[3 * i], v[0]), f.mul(m[3 * i + 1], v[1])), f.mul(m[3 * i + 2], v[2]));
  }
  return r;
}

Code det(const gf::Field& f, const Mat3& m) {
  return det3(f, {m[0], m[1], m[2]}, {m[3], m[4], m[5]}, {m[6], m[7], m[8]});
}

Mat3 inverse(const gf::Field& f, const Mat3& m) {
  const Code d = det(f, m);
  if (d == 0) throw PreconditionError("singular matrix");
  const Point r0{m[0], m[1], m[2]}, r1{m[3], m[4], m[5]}, r2{m[6], m[7], m[8]};
  // Columns of the inverse are the cross products of row pairs.
  const Point c0 = cross(f, r1, r2), c1 = cross(f, r2, r0), c2 = cross(f, r0, r1);
  const Code s = f.inv(d);
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    r[3 * i + 0] = f.mul(c0[i], s);
    r[3 * i + 1] = f.mul(c1[i], s);
    r[3 * i + 2] = f.mul(c2[i], s);
  }
  return r;
}

Mat3 canonical(const gf::Field& f, const Mat3& m) {
  for (Code c : m) {
    if (c != 0) {
      const Code s = f.inv(c);
      Mat3 r{};
      for (int i = 0; i < 9; ++i) r[i] = f.mul(m[i], s);
      return r;
    }
  }
  throw PreconditionError("zero matrix");
}

Mat3 embed(const gf::Embedding& emb, const Mat3& m) {
  Mat3 r{};
  for (int i = 0; i < 9; ++i) r[i] = emb.map(m[i]);
  return r;
}

std::string to_string(const Point& v) {
  std::ostringstream os;
  os << "(" << v[0] << ":" << v[1] << ":" << v[2] << ")";
  return os.str();
}

ProjPlane::ProjPlane(gf::FieldRef field) : field_(std::move(field)), q_(field_->order()) {
  const gf::Field& f = *field_;
  incidence_.resize(size());
  for (std::uint32_t li = 0; li < size(); ++li) {
    const Line l = point(li);
    Point v1, v2;
    if (l[2] != 0) {
      v1 = {l[2], 0, f.neg(l[0])};
      v2 = {0, l[2], f.neg(l[1])};
    } else if (l[1] != 0) {
      v1 = {l[1], f.neg(l[0]), 0};
      v2 = {0, 0, 1};
    } else {
      v1 = {0, 1, 0};
      v2 = {0, 0, 1};
    }
    auto& row = incidence_[li];
    row.reserve(q_ + 1);
    row.push_back(index(v2));
    for (Code t = 0; t < q_; ++t) {
      row.push_back(index({f.add(v1[0], f.mul(t, v2[0])), f.add(v1[1], f.mul(t, v2[1])), f.add(v1[2], f.mul(t, v2[2]))}));
    }
  }
}

std::uint32_t ProjPlane::index(const Point& v) const {
  const Point n = normalize(*field_, v);
  if (n[2] == 1) return n[0] * q_ + n[1];
  if (n[1] == 1) return q_ * q_ + n[0];
  return q_ * q_ + q_;
}

Point ProjPlane::point(std::uint32_t i) const {
  if (i < q_ * q_) return {i / q_, i % q_, 1};
  if (i < q_ * q_ + q_) return {i - q_ * q_, 1, 0};
  if (i == q_ * q_ + q_) return {1, 0, 0};
  throw PreconditionError("point index out of range");
}

}  // namespace hcover::proj
