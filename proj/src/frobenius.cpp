#include "hcover/frobenius.hpp"

#include <algorithm>
#include <set>

#include "hcover/intmath.hpp"

namespace hcover::frobenius {

using gf::Code;
using poly::BiPoly;
using poly::RowPoly;

namespace {

constexpr std::uint64_t kMaxPower = std::uint64_t{1} << 20;

BiPoly swapped(const BiPoly& g) {
  BiPoly out(g.field());
  for (const auto& [e, c] : g.terms()) out.add_term({e[1], e[0]}, c);
  return out;
}

/// Leading y-coefficient of g when it is a constant, else 0.
Code constant_y_lead(const BiPoly& g) {
  const long dy = g.degree_in(1);
  if (dy < 1) return 0;
  Code lead = 0;
  for (const auto& [e, c] : g.terms()) {
    if (e[1] != static_cast<std::uint32_t>(dy)) continue;
    if (e[0] != 0) return 0;
    lead = c;
  }
  return lead;
}

/// f rescaled to be monic in y, swapping x and y if only x has a constant leading coefficient.
BiPoly monic_form(const BiPoly& f) {
  if (const Code a = constant_y_lead(f)) return f.scaled(f.field()->inv(a));
  const BiPoly g = swapped(f);
  if (const Code a = constant_y_lead(g)) return g.scaled(g.field()->inv(a));
  throw PreconditionError("curve is not monic in either variable");
}

RowPoly pth_power(const gf::Field& f, const RowPoly& g) {
  const std::uint32_t p = f.characteristic();
  RowPoly out;
  if (g.rows.empty()) return out;
  out.rows.resize((g.rows.size() - 1) * p + 1);
  for (std::size_t j = 0; j < g.rows.size(); ++j) {
    const auto& src = g.rows[j];
    if (src.empty()) continue;
    auto& dst = out.rows[j * p];
    dst.assign((src.size() - 1) * p + 1, 0);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i * p] = f.frobenius(src[i], 1);
  }
  return out;
}

void add_scaled_product(const gf::Field& f, RowPoly& acc, const BiPoly& a, const RowPoly& b) {
  for (const auto& [e, c] : a.terms()) {
    for (std::size_t j = 0; j < b.rows.size(); ++j) {
      const auto& src = b.rows[j];
      if (src.empty()) continue;
      const std::size_t row = j + e[1];
      if (acc.rows.size() <= row) acc.rows.resize(row + 1);
      auto& dst = acc.rows[row];
      if (dst.size() < src.size() + e[0]) dst.resize(src.size() + e[0], 0);
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (src[i] != 0) dst[i + e[0]] = f.add(dst[i + e[0]], f.mul(c, src[i]));
      }
    }
  }
}

RowPoly x_power_minus_x(const gf::Field& f, std::uint64_t P) {
  RowPoly out;
  out.rows.resize(1);
  out.rows[0].assign(P + 1, 0);
  out.rows[0][P] = 1;
  out.rows[0][1] = f.sub(out.rows[0][1], 1);
  return out;
}

class Checker {
 public:
  explicit Checker(const BiPoly& f)
      : g_(monic_form(f)), div_(g_), fx_(g_.derivative(0)), fy_(g_.derivative(1)) {
    if (fx_.is_zero() && fy_.is_zero()) throw PreconditionError("both partial derivatives vanish");
    y_power_.rows = {{}, {1}};  // y
  }

  /// Advances y^(p^s) mod f to the next s.
  void step() {
    const gf::Field& f = *g_.field();
    y_power_ = pth_power(f, y_power_);
    div_.reduce(y_power_);
    ++s_;
    power_ *= f.characteristic();
  }

  std::uint32_t s() const { return s_; }
  std::uint64_t power() const { return power_; }

  FrobeniusReport verdict() const {
    const gf::Field& f = *g_.field();
    RowPoly r = y_power_;
    if (r.rows.size() < 2) r.rows.resize(2);
    if (r.rows[1].empty()) r.rows[1].push_back(0);
    r.rows[1][0] = f.sub(r.rows[1][0], 1);  // y^P - y
    RowPoly h;
    add_scaled_product(f, h, fy_, r);
    add_scaled_product(f, h, fx_, x_power_minus_x(f, power_));
    div_.reduce(h);
    FrobeniusReport out;
    out.s = s_;
    out.remainder_terms = h.term_count();
    out.nonclassical = out.remainder_terms == 0;
    out.remainder_y_degree = static_cast<long>(h.rows.size()) - 1;
    return out;
  }

 private:
  BiPoly g_;
  poly::MonicYDivisor div_;
  BiPoly fx_, fy_;
  RowPoly y_power_;
  std::uint32_t s_ = 0;
  std::uint64_t power_ = 1;
};

std::uint64_t checked_power(std::uint32_t p, std::uint32_t s) {
  std::uint64_t P = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    P *= p;
    if (P > kMaxPower) throw CapExceeded("p^s exceeds 2^20");
  }
  return P;
}

}  // namespace

FrobeniusReport is_frobenius_nonclassical(const BiPoly& f, std::uint32_t s) {
  if (s == 0) throw PreconditionError("s must be positive");
  checked_power(f.field()->characteristic(), s);
  Checker c(f);
  while (c.s() < s) c.step();
  return c.verdict();
}

std::vector<FrobeniusReport> scan(const BiPoly& f, std::uint32_t s_max) {
  checked_power(f.field()->characteristic(), s_max);
  Checker c(f);
  std::vector<FrobeniusReport> out;
  while (c.s() < s_max) {
    c.step();
    out.push_back(c.verdict());
  }
  return out;
}

std::uint32_t default_scan_window(const curve::CurveFamilyParams& params) {
  return 2 * (params.n() + 1) * params.e() + 4;
}

FamilyClassification classify_family_member(const curve::CurveFamilyParams& params) {
  params.validate();
  const gf::Field& f = *params.field();
  const std::uint64_t q = params.q();
  const auto L = params.L();
  FamilyClassification out;
  std::set<Code> tried;
  for (Code a = 0; a < f.order(); ++a) {
    const Code v = L.eval(a);
    if (v == 0 || f.pow(v, q + 1) != params.c || !tried.insert(v).second) continue;
    const Code beta = f.inv(v);
    bool ok = f.mul(f.pow(beta, q + 1), params.c) == 1;
    std::uint64_t qq = q * q;  // q^(2(i+1))
    for (std::size_t i = 0; ok && i < params.alpha.size(); ++i, qq *= q * q) {
      ok = params.alpha[i] == f.pow(beta, qq - 1);
    }
    if (!ok) continue;
    out.s = 2 * (params.n() + 1) * params.e();
    out.alpha = a;
    out.beta = beta;
    return out;
  }
  return out;
}

curve::CurveFamilyParams scaled_member(const curve::CurveFamilyParams& normalized, Code beta) {
  const gf::Field& f = *normalized.field();
  if (beta == 0 || beta >= f.order()) throw PreconditionError("beta must be a nonzero element of the top field");
  const std::uint64_t q = normalized.q();
  curve::CurveFamilyParams out = normalized;
  std::uint64_t qq = q * q;
  for (auto& a : out.alpha) {
    a = f.pow(beta, qq - 1);
    qq *= q * q;
  }
  out.c = f.inv(f.pow(beta, q + 1));
  return out;
}

FrobeniusReport check_generalized_family(std::uint32_t Q, std::uint32_t Qp, std::uint32_t n, Code c) {
  if (Q < 2 || Qp < 2 || (Q - 1) % (Qp - 1) != 0) throw PreconditionError("Q' - 1 must divide Q - 1");
  if (n == 0) throw PreconditionError("n must be positive");
  std::uint32_t p = 2;
  while (Q % p != 0) ++p;
  const auto k = exact_log(p, Q);
  const auto kp = exact_log(p, Qp);
  if (!k) throw PreconditionError("Q must be a prime power");
  if (!kp || *k % *kp != 0) throw PreconditionError("GF(Q') must be a subfield of GF(Q)");
  const auto field = gf::Field::make(p, *k);
  const gf::Field& f = *field;
  if (c == 0 || c >= f.order() || !f.in_subfield(c, *kp)) throw PreconditionError("c must be a nonzero element of GF(Q')");

  const std::uint64_t exponent = (Q - 1) / (Qp - 1);
  auto trace_like = [&](std::size_t var) {
    BiPoly t(field);
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i <= n; ++i, e *= Q) {
      BiPoly::Exponents ex{};
      ex[var] = static_cast<std::uint32_t>(e);
      t.add_term(ex, 1);
    }
    return t.pow(exponent);
  };
  const BiPoly curve = trace_like(0) + trace_like(1) + BiPoly::constant(field, c);
  return is_frobenius_nonclassical(curve, *k * (n + 1));
}

}  // namespace hcover::frobenius
