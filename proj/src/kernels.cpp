#include "hcover/kernels.hpp"

#include <algorithm>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hcover::kernels {

using gf::Code;
using proj::Mat3;
using proj::Point;

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// f as a polynomial in y with dense x-polynomial coefficients, for Horner evaluation.
struct CompiledBi {
  const gf::Field* f;
  std::vector<std::vector<Code>> rows;  // rows[j][i]: coefficient of x^i y^j

  explicit CompiledBi(const poly::BiPoly& p) : f(p.field().get()) {
    const long dy = p.degree_in(1);
    rows.resize(dy < 0 ? 0 : static_cast<std::size_t>(dy) + 1);
    for (const auto& [e, c] : p.terms()) {
      auto& r = rows[e[1]];
      if (r.size() <= e[0]) r.resize(e[0] + 1, 0);
      r[e[0]] = c;
    }
  }

  static Code horner(const gf::Field& f, const std::vector<Code>& c, Code x) {
    Code acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c[i]);
    return acc;
  }

  /// Coefficients in y after fixing x.
  std::vector<Code> specialize(Code x) const {
    std::vector<Code> out(rows.size());
    for (std::size_t j = 0; j < rows.size(); ++j) out[j] = horner(*f, rows[j], x);
    return out;
  }
};

// Two basis vectors A (returned) and B with R, A, B independent.
Point independent_pair(const gf::Field& f, const Point& R, Point& B) {
  static const Point e[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if (proj::det3(f, R, e[i], e[j]) != 0) {
        B = e[j];
        return e[i];
      }
    }
  }
  throw PreconditionError("zero point");
}

}  // namespace

bool fixes_pencil(const gf::Field& f, const Mat3& sigma, const Point& R) {
  if (!proj::proportional(f, proj::apply(f, sigma, R), R)) return false;
  Point B;
  const Point A = independent_pair(f, R, B);
  const Point C{f.add(A[0], B[0]), f.add(A[1], B[1]), f.add(A[2], B[2])};
  for (const Point& P : {A, B, C}) {
    if (proj::det3(f, R, P, proj::apply(f, sigma, P)) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace serial {

std::vector<Code> evaluate_all(const poly::UniPoly& F) {
  std::vector<Code> out(F.field()->order());
  for (Code a = 0; a < out.size(); ++a) out[a] = F.eval(a);
  return out;
}

std::vector<AffinePoint> affine_zeros(const poly::BiPoly& f) {
  std::vector<AffinePoint> out;
  const Code Q = f.field()->order();
  for (Code x = 0; x < Q; ++x) {
    for (Code y = 0; y < Q; ++y) {
      if (f.eval({x, y}) == 0) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<AffinePoint> affine_singular(const poly::BiPoly& f) {
  const poly::BiPoly fx = f.derivative(0), fy = f.derivative(1);
  std::vector<AffinePoint> out;
  for (const auto& P : affine_zeros(f)) {
    if (fx.eval(P) == 0 && fy.eval(P) == 0) out.push_back(P);
  }
  return out;
}

std::vector<std::uint32_t> line_counts(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member) {
  const gf::Field& f = *plane.field();
  std::vector<std::uint32_t> out(plane.size(), 0);
  // Direct incidence test, independent of the precomputed incidence lists.
  for (std::uint32_t li = 0; li < plane.size(); ++li) {
    const Point l = plane.point(li);
    for (std::uint32_t pi = 0; pi < plane.size(); ++pi) {
      if (member[pi] && proj::dot(f, l, plane.point(pi)) == 0) ++out[li];
    }
  }
  return out;
}

std::vector<std::uint32_t> extension_points(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member,
                                            std::uint32_t d) {
  const auto counts = line_counts(plane, member);
  const gf::Field& f = *plane.field();
  std::vector<std::uint32_t> out;
  for (std::uint32_t pi = 0; pi < plane.size(); ++pi) {
    if (member[pi]) continue;
    const Point P = plane.point(pi);
    bool ok = true;
    for (std::uint32_t li = 0; li < plane.size() && ok; ++li) {
      if (proj::dot(f, plane.point(li), P) == 0 && counts[li] + 1 > d) ok = false;
    }
    if (ok) out.push_back(pi);
  }
  return out;
}

std::vector<std::uint32_t> pencil_stabilizer_sizes(const gf::Field& f, const std::vector<Mat3>& group,
                                                   const std::vector<Point>& candidates) {
  std::vector<std::uint32_t> out;
  const Code Q = f.order();
  for (const Point& R : candidates) {
    // Every line through R meets a fixed line m not through R in exactly one point.
    Point m{0, 0, 1};
    if (proj::dot(f, m, R) == 0) m = R[0] != 0 ? Point{1, 0, 0} : Point{0, 1, 0};
    std::vector<Point> directions;
    for (Code t = 0; t <= Q; ++t) {
      Point P;
      if (m == Point{0, 0, 1}) {
        P = t == Q ? Point{1, 0, 0} : Point{t, 1, 0};
      } else if (m == Point{1, 0, 0}) {
        P = t == Q ? Point{0, 1, 0} : Point{0, t, 1};
      } else {
        P = t == Q ? Point{1, 0, 0} : Point{t, 0, 1};
      }
      directions.push_back(P);
    }
    std::uint32_t count = 0;
    for (const Mat3& s : group) {
      if (!proj::proportional(f, proj::apply(f, s, R), R)) continue;
      bool ok = true;
      for (const Point& P : directions) {
        if (proj::det3(f, R, P, proj::apply(f, s, P)) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
    }
    out.push_back(count);
  }
  return out;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  for (std::size_t i = 0; i < n; ++i) {
    if (!pred(i)) return i;
  }
  return std::nullopt;
}

}  // namespace serial

// ---------------------------------------------------------------------------

namespace parallel {

std::vector<Code> evaluate_all(const poly::UniPoly& F) {
  const gf::Field& f = *F.field();
  const auto& c = F.coeffs();
  const std::int64_t n = f.order();
  std::vector<Code> out(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < n; ++a) out[a] = CompiledBi::horner(f, c, static_cast<Code>(a));
  return out;
}

std::vector<AffinePoint> affine_zeros(const poly::BiPoly& fpoly) {
  const CompiledBi cf(fpoly);
  const gf::Field& f = *fpoly.field();
  const std::int64_t Q = f.order();
  std::vector<std::vector<AffinePoint>> per_x(Q);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < Q; ++x) {
    const auto ry = cf.specialize(static_cast<Code>(x));
    for (Code y = 0; y < Q; ++y) {
      if (CompiledBi::horner(f, ry, y) == 0) per_x[x].push_back({static_cast<Code>(x), y});
    }
  }
  std::vector<AffinePoint> out;
  for (auto& v : per_x) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<AffinePoint> affine_singular(const poly::BiPoly& fpoly) {
  const CompiledBi cf(fpoly), cx(fpoly.derivative(0)), cy(fpoly.derivative(1));
  const gf::Field& f = *fpoly.field();
  const std::int64_t Q = f.order();
  std::vector<std::vector<AffinePoint>> per_x(Q);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t x = 0; x < Q; ++x) {
    const Code xc = static_cast<Code>(x);
    const auto r0 = cf.specialize(xc), r1 = cx.specialize(xc), r2 = cy.specialize(xc);
    for (Code y = 0; y < Q; ++y) {
      if (CompiledBi::horner(f, r0, y) == 0 && CompiledBi::horner(f, r1, y) == 0 &&
          CompiledBi::horner(f, r2, y) == 0) {
        per_x[x].push_back({xc, y});
      }
    }
  }
  std::vector<AffinePoint> out;
  for (auto& v : per_x) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<std::uint32_t> line_counts(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member) {
  const std::int64_t n = plane.size();
  std::vector<std::uint32_t> out(n, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t li = 0; li < n; ++li) {
    std::uint32_t c = 0;
    for (std::uint32_t pi : plane.incident(static_cast<std::uint32_t>(li))) c += member[pi];
    out[li] = c;
  }
  return out;
}

std::vector<std::uint32_t> extension_points(const proj::ProjPlane& plane, const std::vector<std::uint8_t>& member,
                                            std::uint32_t d) {
  const auto counts = line_counts(plane, member);
  const std::int64_t n = plane.size();
  std::vector<std::uint8_t> ok(n, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t pi = 0; pi < n; ++pi) {
    if (member[pi]) continue;
    bool good = true;
    for (std::uint32_t li : plane.incident(static_cast<std::uint32_t>(pi))) {
      if (counts[li] + 1 > d) {
        good = false;
        break;
      }
    }
    ok[pi] = good;
  }
  std::vector<std::uint32_t> out;
  for (std::int64_t pi = 0; pi < n; ++pi) {
    if (ok[pi]) out.push_back(static_cast<std::uint32_t>(pi));
  }
  return out;
}

std::vector<std::uint32_t> pencil_stabilizer_sizes(const gf::Field& f, const std::vector<Mat3>& group,
                                                   const std::vector<Point>& candidates) {
  const std::int64_t n = static_cast<std::int64_t>(candidates.size());
  std::vector<std::uint32_t> out(n, 0);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    std::uint32_t c = 0;
    for (const Mat3& s : group) c += fixes_pencil(f, s, candidates[i]) ? 1 : 0;
    out[i] = c;
  }
  return out;
}

std::optional<std::size_t> first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred) {
  std::size_t first = std::numeric_limits<std::size_t>::max();
  const std::int64_t N = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : first)
  for (std::int64_t i = 0; i < N; ++i) {
    if (static_cast<std::size_t>(i) < first && !pred(static_cast<std::size_t>(i))) first = static_cast<std::size_t>(i);
  }
  if (first == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return first;
}

}  // namespace parallel

}  // namespace hcover::kernels
