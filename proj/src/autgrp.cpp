#include "hcover/autgrp.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "hcover/intmath.hpp"
#include "hcover/kernels.hpp"

namespace hcover::autgrp {

using gf::Code;
using poly::BiPoly;
using poly::TriPoly;
using proj::Point;

std::size_t MatHash::operator()(const Mat3& m) const noexcept {
  std::size_t h = 0;
  for (Code c : m) h = h * 1000003u + c;
  return h;
}

Mat3 collineation(const gf::Field& f, const Mat3& m) {
  if (proj::det(f, m) == 0) throw PreconditionError("singular matrix is not a collineation");
  return proj::canonical(f, m);
}

Mat3 xy_to_tu(const gf::Field& f, const curve::TuModel& tu, const Mat3& a) {
  const Mat3& M = tu.xy_to_tu;
  return proj::canonical(f, proj::multiply(f, proj::multiply(f, M, a), proj::inverse(f, M)));
}

Mat3 tu_to_xy(const gf::Field& f, const curve::TuModel& tu, const Mat3& a) {
  const Mat3& M = tu.xy_to_tu;
  return proj::canonical(f, proj::multiply(f, proj::multiply(f, proj::inverse(f, M), a), M));
}

std::vector<Mat3> ExplicitGenerators::all() const {
  std::vector<Mat3> out = translations;
  for (const auto* v : {&shears, &scalings, &rotations}) out.insert(out.end(), v->begin(), v->end());
  return out;
}

namespace {

std::vector<Code> full_kernel(const curve::CurveFamilyParams& params) {
  const auto L = params.L();
  auto ker = poly::kernel(L);
  if (ker.size() != L.degree()) throw PreconditionError("ker L is not contained in the working field");
  return ker;
}

std::vector<Code> quad_elements(const curve::CurveFamilyParams& params) {
  const gf::Field& f = *params.field();
  std::vector<Code> out;
  for (Code a = 0; a < f.order(); ++a) {
    if (f.in_subfield(a, 2 * params.e())) out.push_back(a);
  }
  return out;
}

std::vector<Code> norm_one(const curve::CurveFamilyParams& params) {
  const gf::Field& f = *params.field();
  std::vector<Code> out;
  for (Code a : quad_elements(params)) {
    if (a != 0 && f.pow(a, params.q() + 1) == 1) out.push_back(a);
  }
  return out;
}

Mat3 affine(Code a, Code b, Code c, Code d, Code e, Code g) { return {a, b, c, d, e, g, 0, 0, 1}; }

}  // namespace

ExplicitGenerators explicit_generators(const curve::CurveFamilyParams& params, const curve::TuModel& tu,
                                       curve::Model model) {
  const gf::Field& f = *params.field();
  const std::uint32_t q = params.q();
  const auto ker = full_kernel(params);
  ExplicitGenerators tu_gens;
  tu_gens.model = curve::Model::tu;
  for (Code b : ker) {
    for (Code g : ker) tu_gens.translations.push_back(affine(1, 0, b, 0, 1, g));
  }
  const auto quad = quad_elements(params);
  for (Code d : quad) {
    if (f.add(f.pow(d, q), d) == 0) tu_gens.shears.push_back(affine(1, d, 0, 0, 1, 0));
  }
  for (Code e : quad) {
    if (e != 0) tu_gens.scalings.push_back(affine(e, 0, 0, 0, f.inv(f.pow(e, q)), 0));
  }
  std::vector<Mat3> rotations_xy;
  for (Code l : norm_one(params)) rotations_xy.push_back(affine(l, 0, 0, 0, 1, 0));

  ExplicitGenerators out;
  out.model = model;
  auto convert = [&](const std::vector<Mat3>& in, bool from_tu) {
    std::vector<Mat3> r;
    for (const Mat3& m : in) {
      const bool same = (model == curve::Model::tu) == from_tu;
      r.push_back(same ? proj::canonical(f, m) : from_tu ? tu_to_xy(f, tu, m) : xy_to_tu(f, tu, m));
    }
    return r;
  };
  out.translations = convert(tu_gens.translations, true);
  out.shears = convert(tu_gens.shears, true);
  out.scalings = convert(tu_gens.scalings, true);
  out.rotations = convert(rotations_xy, false);
  return out;
}

std::int64_t explicit_type_i_count(std::int64_t q, std::uint32_t n) {
  return (q * q - q - 2) * (q + 1) * (q + 1) * checked_pow(q, 4 * n);
}

std::int64_t explicit_type_ii_count(std::int64_t q, std::uint32_t n) {
  return 2 * (q + 1) * (q + 1) * checked_pow(q, 4 * n);
}

ExplicitList explicit_list(const curve::CurveFamilyParams& params) {
  const gf::Field& f = *params.field();
  const std::uint32_t q = params.q();
  const auto ker = full_kernel(params);
  const auto quad = quad_elements(params);
  const auto units = norm_one(params);
  ExplicitList out;
  for (Code a : quad) {
    if (a == 0) continue;
    for (Code b : quad) {
      if (b == 0 || f.add(f.pow(a, q + 1), f.pow(b, q + 1)) != 1) continue;
      for (Code l : units) {
        for (Code d : ker) {
          for (Code e : ker) {
            const Mat3 m = affine(f.pow(a, q), f.neg(f.mul(l, f.pow(b, q))), d, b, f.mul(l, a), e);
            out.type_i.push_back(proj::canonical(f, m));
          }
        }
      }
    }
  }
  for (Code a : units) {
    for (Code b : units) {
      for (Code d : ker) {
        for (Code e : ker) {
          out.type_ii.push_back(proj::canonical(f, affine(0, a, d, b, 0, e)));
          out.type_ii.push_back(proj::canonical(f, affine(a, 0, d, 0, b, e)));
        }
      }
    }
  }
  return out;
}

bool fixes_line_at_infinity(const Mat3& sigma) { return sigma[6] == 0 && sigma[7] == 0 && sigma[8] != 0; }

bool preserves_curve(const Mat3& sigma, const curve::PlaneCurve& curve) {
  const gf::FieldRef& field = curve.field;
  const gf::Field& f = *field;
  if (proj::det(f, sigma) == 0) return false;
  if (fixes_line_at_infinity(sigma)) {
    // Dehomogenized: x -> (a x + b y + c)/s, y -> (d x + e y + g)/s with s = sigma[8].
    const Code s = f.inv(sigma[8]);
    const BiPoly x = BiPoly::variable(field, 0), y = BiPoly::variable(field, 1);
    auto image = [&](int row) {
      return (x.scaled(sigma[3 * row]) + y.scaled(sigma[3 * row + 1]) + BiPoly::constant(field, sigma[3 * row + 2]))
          .scaled(s);
    };
    const BiPoly g = curve.f.substitute<2>({image(0), image(1)});
    const auto& [e0, c0] = *curve.f.terms().begin();
    const Code k = f.div(g.coeff(e0), c0);
    return k != 0 && g == curve.f.scaled(k);
  }
  const TriPoly X = TriPoly::variable(field, 0), Y = TriPoly::variable(field, 1), Z = TriPoly::variable(field, 2);
  auto image = [&](int row) {
    return X.scaled(sigma[3 * row]) + Y.scaled(sigma[3 * row + 1]) + Z.scaled(sigma[3 * row + 2]);
  };
  const TriPoly G = curve.F.substitute<3>({image(0), image(1), image(2)});
  const auto& [e0, c0] = *curve.F.terms().begin();
  const Code k = f.div(G.coeff(e0), c0);
  return k != 0 && G == curve.F.scaled(k);
}

AutGroup::AutGroup(gf::FieldRef field, std::vector<Mat3> elements, std::vector<Mat3> generators)
    : field_(std::move(field)), elements_(std::move(elements)), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

AutGroup generate_group(const gf::FieldRef& field, const std::vector<Mat3>& gens, std::size_t bound) {
  const gf::Field& f = *field;
  std::vector<Mat3> elements{proj::identity()};
  std::unordered_set<Mat3, MatHash> seen{proj::identity()};
  std::vector<Mat3> used;
  auto add = [&](const Mat3& m, std::deque<std::size_t>& queue) {
    if (seen.insert(m).second) {
      elements.push_back(m);
      queue.push_back(elements.size() - 1);
      if (elements.size() > bound) {
        throw CapExceeded("group closure exceeded " + std::to_string(bound) + " elements");
      }
    }
  };
  for (const Mat3& raw : gens) {
    const Mat3 g = collineation(f, raw);
    if (seen.count(g)) continue;
    used.push_back(g);
    std::deque<std::size_t> queue;
    const std::size_t existing = elements.size();
    for (std::size_t i = 0; i < existing; ++i) add(proj::canonical(f, proj::multiply(f, elements[i], g)), queue);
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (const Mat3& h : used) add(proj::canonical(f, proj::multiply(f, elements[i], h)), queue);
    }
  }
  return AutGroup(field, std::move(elements), std::move(used));
}

std::optional<std::size_t> first_non_preserving(const AutGroup& group, const curve::PlaneCurve& curve) {
  const auto& el = group.elements();
  return kernels::parallel::first_failure(el.size(), [&](std::size_t i) { return preserves_curve(el[i], curve); });
}

bool same_elements(const AutGroup& a, const AutGroup& b) {
  if (a.order() != b.order()) return false;
  return std::all_of(a.elements().begin(), a.elements().end(), [&](const Mat3& m) { return b.contains(m); });
}

Mat2 restriction(const gf::Field& f, const Mat3& m) {
  if (!fixes_line_at_infinity(m)) throw PreconditionError("collineation does not fix Z = 0");
  Mat2 r{m[0], m[1], m[3], m[4]};
  for (Code c : r) {
    if (c != 0) {
      const Code s = f.inv(c);
      for (Code& x : r) x = f.mul(x, s);
      break;
    }
  }
  return r;
}

std::vector<Mat2> pgl2(const gf::Field& f, std::uint32_t subfield_degree) {
  std::vector<Code> sub;
  for (Code a = 0; a < f.order(); ++a) {
    if (f.in_subfield(a, subfield_degree)) sub.push_back(a);
  }
  std::set<Mat2> out;
  for (Code a : sub) {
    for (Code b : sub) {
      for (Code c : sub) {
        for (Code d : sub) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
          // Canonical means first nonzero entry 1.
          const Code lead = a != 0 ? a : b;
          if (lead == 1) out.insert({a, b, c, d});
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

ExactSequenceReport restriction_and_exact_sequence(const AutGroup& group, const curve::CurveFamilyParams& params,
                                                   const curve::TuModel& tu) {
  const gf::Field& f = *group.field();
  const std::uint32_t q = params.q();
  ExactSequenceReport out;
  out.group_order = group.order();
  out.expected_kernel_order = static_cast<std::size_t>(checked_pow(q, 4 * params.n()) * (q + 1));
  out.expected_image_order = static_cast<std::size_t>(checked_pow(q, 3) - q);
  auto fail = [&](const std::string& why, const std::optional<Mat3>& w) {
    if (out.failure.empty()) {
      out.failure = why;
      out.witness = w;
    }
  };

  std::vector<Mat3> kernel;
  std::set<Mat2> image;
  for (const Mat3& m : group.elements()) {
    if (!fixes_line_at_infinity(m)) {
      fail("element does not fix Z = 0", m);
      continue;
    }
    const Mat2 r = restriction(f, xy_to_tu(f, tu, m));
    if (r[1] == 0 && r[2] == 0 && r[3] == 1) kernel.push_back(m);
    image.insert(r);
  }
  out.kernel_order = kernel.size();
  out.image_order = image.size();
  if (out.kernel_order != out.expected_kernel_order) fail("kernel order mismatch", std::nullopt);
  if (out.image_order * out.kernel_order != out.group_order) fail("|ker r| |im r| != |G|", std::nullopt);

  // Explicit kernel, its translation part and the cyclic complement.
  const auto ker_L = full_kernel(params);
  const auto units = norm_one(params);
  std::unordered_set<Mat3, MatHash> explicit_kernel, translations, cyclic;
  for (Code l : units) {
    cyclic.insert(proj::canonical(f, affine(l, 0, 0, 0, l, 0)));
    for (Code b : ker_L) {
      for (Code g : ker_L) explicit_kernel.insert(proj::canonical(f, affine(l, 0, b, 0, l, g)));
    }
  }
  for (Code b : ker_L) {
    for (Code g : ker_L) translations.insert(affine(1, 0, b, 0, 1, g));
  }
  out.kernel_matches_explicit =
      explicit_kernel.size() == kernel.size() &&
      std::all_of(kernel.begin(), kernel.end(), [&](const Mat3& m) { return explicit_kernel.count(m) != 0; });
  if (!out.kernel_matches_explicit) fail("ker r differs from {(l x + b, l y + g)}", std::nullopt);

  out.translations_normal = true;
  for (const Mat3& k : kernel) {
    const Mat3 kinv = proj::inverse(f, k);
    for (const Mat3& s : translations) {
      const Mat3 c = proj::canonical(f, proj::multiply(f, proj::multiply(f, k, s), kinv));
      if (!translations.count(c)) {
        out.translations_normal = false;
        fail("translation subgroup is not normal in ker r", k);
        break;
      }
    }
    if (!out.translations_normal) break;
  }
  std::size_t overlap = 0;
  for (const Mat3& c : cyclic) overlap += translations.count(c);
  out.trivial_intersection = overlap == 1;
  if (!out.trivial_intersection) fail("translations meet the cyclic complement nontrivially", std::nullopt);
  std::unordered_set<Mat3, MatHash> products;
  for (const Mat3& s : translations) {
    for (const Mat3& c : cyclic) products.insert(proj::canonical(f, proj::multiply(f, s, c)));
  }
  out.full_product = products.size() == kernel.size() &&
                     std::all_of(products.begin(), products.end(), [&](const Mat3& m) {
                       return std::find(kernel.begin(), kernel.end(), m) != kernel.end();
                     });
  if (!out.full_product) fail("translations times the cyclic complement is not ker r", std::nullopt);

  // V = diag(1, d) with d^(q-1) = -1.
  for (Code d = 1; d < f.order(); ++d) {
    if (f.in_subfield(d, 2 * params.e()) && f.pow(d, q - 1) == f.neg(1)) {
      out.delta = d;
      break;
    }
  }
  if (out.delta == 0) {
    fail("no d in GF(q^2) with d^(q-1) = -1", std::nullopt);
  } else {
    std::set<Mat2> conjugated;
    const Code d = out.delta, dinv = f.inv(out.delta);
    for (const Mat2& r : image) {
      Mat2 c{r[0], f.mul(r[1], dinv), f.mul(r[2], d), r[3]};
      const Code lead = c[0] != 0 ? c[0] : c[1];
      const Code s = f.inv(lead);
      for (Code& x : c) x = f.mul(x, s);
      conjugated.insert(c);
    }
    const auto target = pgl2(f, params.e());
    out.image_is_pgl2 = conjugated.size() == target.size() &&
                        std::equal(conjugated.begin(), conjugated.end(), target.begin());
    if (!out.image_is_pgl2) fail("conjugated image differs from PGL(2, F_q)", std::nullopt);
  }
  out.passed = out.failure.empty() && out.image_order == out.expected_image_order;
  if (out.failure.empty() && !out.passed) out.failure = "image order mismatch";
  return out;
}

std::vector<Point> orbit(const AutGroup& group, const Point& P) {
  const gf::Field& f = *group.field();
  std::set<Point> out;
  for (const Mat3& m : group.elements()) out.insert(proj::normalize(f, proj::apply(f, m, P)));
  return {out.begin(), out.end()};
}

std::size_t stabilizer_order(const AutGroup& group, const Point& P) {
  const gf::Field& f = *group.field();
  const Point Pn = proj::normalize(f, P);
  std::size_t n = 0;
  for (const Mat3& m : group.elements()) n += proj::normalize(f, proj::apply(f, m, Pn)) == Pn;
  return n;
}

OrbitReport orbit_stabilizer_checks(const AutGroup& group, const curve::CurveFamilyParams& params,
                                    const curve::TuModel& tu, const std::vector<curve::PointAnalysis>& singular) {
  const gf::Field& f = *group.field();
  OrbitReport out;
  // (1:0:0) in tu coordinates, pulled back to xy.
  const Point P = proj::normalize(f, proj::apply(f, proj::inverse(f, tu.xy_to_tu), {1, 0, 0}));
  const auto orb = orbit(group, P);
  out.orbit_size = orb.size();
  std::vector<Point> sing;
  for (const auto& s : singular) sing.push_back(s.point);
  std::sort(sing.begin(), sing.end());
  out.orbit_is_singular_locus = orb == sing;
  out.stabilizer_order = stabilizer_order(group, P);
  const std::int64_t q = params.q();
  out.expected_stabilizer_order = static_cast<std::size_t>(checked_pow(q, 4 * params.n() + 1) * (q * q - 1));
  out.orbit_stabilizer_product = out.orbit_size * out.stabilizer_order == group.order();
  out.passed = out.orbit_is_singular_locus && out.stabilizer_order == out.expected_stabilizer_order &&
               out.orbit_stabilizer_product;
  return out;
}

GrowthReport growth_checks(std::uint64_t group_order, std::int64_t genus, std::int64_t p_rank, std::uint32_t p,
                           std::uint32_t n) {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::pow;
  GrowthReport out;
  out.aut_exceeds_genus_power = pow(cpp_int(group_order), 2 * n + 1) >= pow(cpp_int(genus), 2 * n + 2);
  out.p_rank = p_rank;
  std::uint64_t s = 1, rest = group_order;
  while (rest % p == 0) {
    rest /= p;
    s *= p;
  }
  out.sylow_order = s;
  out.nakajima_applicable = p > 2 && p_rank >= 2;
  if (out.nakajima_applicable) {
    // |H| (p - 2) <= p (gamma - 1)
    out.within_nakajima = cpp_int(s) * (p - 2) <= cpp_int(p) * (p_rank - 1);
    out.nakajima_ratio = static_cast<double>(s) * (p - 2) / (static_cast<double>(p) * (p_rank - 1));
  }
  return out;
}

void dump_group(std::ostream& os, const AutGroup& group) {
  const gf::Field& f = *group.field();
  os << "# hcover-group p=" << f.characteristic() << " modulus=";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) os << (i ? "," : "") << f.modulus()[i];
  os << " order=" << group.order() << "\n";
  for (const Mat3& m : group.elements()) {
    for (int i = 0; i < 9; ++i) os << (i ? " " : "") << m[i];
    os << "\n";
  }
}

AutGroup load_group(std::istream& is, const gf::FieldRef& field) {
  const gf::Field& f = *field;
  std::string line;
  if (!std::getline(is, line) || line.rfind("# hcover-group ", 0) != 0) throw Error("missing group header");
  std::istringstream hs(line.substr(15));
  std::string tok;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> modulus;
  std::size_t order = 0;
  bool have_order = false;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw Error("malformed header token '" + tok + "'");
    const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "p") {
      p = static_cast<std::uint32_t>(std::stoul(val));
    } else if (key == "modulus") {
      std::istringstream ms(val);
      std::string c;
      while (std::getline(ms, c, ',')) modulus.push_back(static_cast<std::uint32_t>(std::stoul(c)));
    } else if (key == "order") {
      order = std::stoul(val);
      have_order = true;
    }
  }
  if (p != f.characteristic() || modulus != f.modulus()) throw FieldMismatch("group file is over a different field");
  std::vector<Mat3> elements;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Mat3 m{};
    for (auto& c : m) {
      long long v = -1;
      if (!(ls >> v) || v < 0 || v >= static_cast<long long>(f.order())) throw Error("malformed group element: " + line);
      c = static_cast<Code>(v);
    }
    elements.push_back(collineation(f, m));
  }
  if (have_order && order != elements.size()) throw Error("group file lists a different number of elements");
  return AutGroup(field, std::move(elements), {});
}

}  // namespace hcover::autgrp
