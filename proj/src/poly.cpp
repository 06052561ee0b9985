#include "hcover/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hcover/intmath.hpp"
#include "hcover/kernels.hpp"

namespace hcover::poly {

using gf::Code;

LinearizedPoly::LinearizedPoly(gf::FieldRef field, std::uint32_t q, std::vector<Code> coeffs)
    : field_(std::move(field)), q_(q), coeffs_(std::move(coeffs)) {
  const auto e = exact_log(field_->characteristic(), q);
  if (q < 2 || !e) throw PreconditionError("q must be a power of the characteristic greater than 1");
  e_ = static_cast<std::uint32_t>(*e);
  if (coeffs_.size() < 2) throw PreconditionError("linearized polynomial needs depth n >= 1");
  if (coeffs_.back() != 1) throw PreconditionError("leading coefficient of L must be 1");
  if (coeffs_.front() == 0) throw PreconditionError("alpha_0 must be nonzero");
  for (Code c : coeffs_) {
    if (c >= field_->order()) throw PreconditionError("coefficient outside the field");
  }
}

LinearizedPoly LinearizedPoly::normalized(gf::FieldRef field, std::uint32_t q, std::uint32_t n) {
  return LinearizedPoly(std::move(field), q, std::vector<Code>(n + 1, 1));
}

std::uint64_t LinearizedPoly::degree() const { return checked_pow(q_, 2 * depth()); }

UniPoly LinearizedPoly::to_unipoly() const {
  UniPoly r(field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    r = r + UniPoly::monomial(field_, coeffs_[i], checked_pow(q_, static_cast<std::uint32_t>(2 * i)));
  }
  return r;
}

LinearizedPoly LinearizedPoly::embedded(const gf::Embedding& emb) const {
  if (!emb.source()->same_as(*field_)) throw FieldMismatch("embedding source differs from coefficient field");
  std::vector<Code> c;
  c.reserve(coeffs_.size());
  for (Code a : coeffs_) c.push_back(emb.map(a));
  return LinearizedPoly(emb.target(), q_, std::move(c));
}

std::vector<Code> kernel(const LinearizedPoly& L) {
  const gf::Field& f = *L.field();
  const std::uint32_t p = f.characteristic();
  const std::uint32_t k = f.degree();
  // Column j holds the coordinates of L(p^j); reduce the k x k matrix over GF(p).
  std::vector<std::vector<std::uint32_t>> a(k, std::vector<std::uint32_t>(k));
  Code basis = 1;
  for (std::uint32_t j = 0; j < k; ++j) {
    const auto c = f.coords(L.eval(basis));
    for (std::uint32_t i = 0; i < k; ++i) a[i][j] = c[i];
    basis *= p;
  }
  auto inv_mod = [p](std::uint32_t v) {
    for (std::uint32_t w = 1; w < p; ++w) {
      if (v * w % p == 1) return w;
    }
    return 0u;
  };
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(k, false);
  std::uint32_t row = 0;
  for (std::uint32_t col = 0; col < k && row < k; ++col) {
    std::uint32_t r = row;
    while (r < k && a[r][col] == 0) ++r;
    if (r == k) continue;
    std::swap(a[r], a[row]);
    const std::uint32_t s = inv_mod(a[row][col]);
    for (auto& v : a[row]) v = v * s % p;
    for (std::uint32_t i = 0; i < k; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const std::uint32_t m = a[i][col];
      for (std::uint32_t j = 0; j < k; ++j) a[i][j] = (a[i][j] + (p - m) * a[row][j]) % p;
    }
    pivot_col_of_row.push_back(static_cast<int>(col));
    is_pivot[col] = true;
    ++row;
  }
  // Null space basis: one vector per free column.
  std::vector<Code> null_basis;
  for (std::uint32_t free = 0; free < k; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(k, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
      v[pivot_col_of_row[r]] = (p - a[r][free]) % p;
    }
    null_basis.push_back(f.from_coords(v));
  }
  std::vector<Code> roots{0};
  for (Code b : null_basis) {
    const std::size_t sz = roots.size();
    for (std::uint32_t m = 1; m < p; ++m) {
      const Code mb = f.mul(f.from_int(m), b);
      for (std::size_t i = 0; i < sz; ++i) roots.push_back(f.add(roots[i], mb));
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<Code> value_set(const UniPoly& F) {
  std::vector<Code> values = kernels::parallel::evaluate_all(F);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

bool is_minimal_value_set(const UniPoly& F) {
  if (F.degree() < 1) throw PreconditionError("minimal value set test needs deg F >= 1");
  const std::uint64_t bound = ceil_div(F.field()->order(), static_cast<std::uint64_t>(F.degree()));
  return value_set(F).size() == bound;
}

namespace {

UniPoly frobenius_minus_x(const gf::FieldRef& field, std::uint64_t P) {
  return UniPoly::monomial(field, 1, P) - UniPoly::x(field);
}

UniPoly product_of_shifts(const UniPoly& F, const std::vector<Code>& values, bool skip_zero) {
  const gf::FieldRef& field = F.field();
  UniPoly acc = UniPoly::constant(field, 1);
  for (Code g : values) {
    if (skip_zero && g == 0) continue;
    acc = acc * (F - UniPoly::constant(field, g));
  }
  return acc;
}

}  // namespace

MvspCheck check_mvsp_factorization(const LinearizedPoly& L) {
  const gf::FieldRef& field = L.field();
  const gf::Field& f = *field;
  MvspCheck out;
  const UniPoly Lp = L.to_unipoly();
  const UniPoly F = Lp.pow(L.q() + 1);
  out.value_set = value_set(F);
  if (!std::binary_search(out.value_set.begin(), out.value_set.end(), Code{0})) {
    throw PreconditionError("value set of L^(q+1) does not contain 0");
  }
  const UniPoly Fp = F.derivative();
  const UniPoly xP = frobenius_minus_x(field, f.order());
  const UniPoly lhs = product_of_shifts(F, out.value_set, false);
  const UniPoly rhs = xP * Fp;
  if (rhs.is_zero()) {
    out.failure = "F' vanishes identically";
    return out;
  }
  if (lhs.degree() != rhs.degree()) {
    std::ostringstream os;
    os << "degree mismatch in the value-set factorization: " << lhs.degree() << " vs " << rhs.degree();
    out.failure = os.str();
    return out;
  }
  const Code theta = f.div(lhs.lead(), rhs.lead());
  if (lhs != rhs.scaled(theta)) {
    out.failure = "value-set factorization of (x^P - x) F' fails";
    return out;
  }
  const UniPoly lhs2 = Lp * product_of_shifts(F, out.value_set, true);
  if (lhs2 != xP.scaled(f.mul(theta, L.alpha0()))) {
    out.failure = "identity L prod(F - g) = theta a_0 (x^P - x) fails";
    return out;
  }
  out.theta = theta;
  out.holds = true;
  return out;
}

TShape build_T_and_check_shape(const LinearizedPoly& L) {
  const gf::FieldRef& field = L.field();
  const std::uint64_t q = L.q();
  const UniPoly F = L.to_unipoly().pow(q + 1);
  const auto V = value_set(F);
  if (V.size() != ceil_div(field->order(), static_cast<std::uint64_t>(F.degree()))) {
    throw PreconditionError("L^(q+1) is not a minimal value set polynomial over " + field->describe());
  }
  TShape out(UniPoly::x(field));
  for (Code g : V) {
    if (g != 0) out.T = out.T * (UniPoly::x(field) - UniPoly::constant(field, g));
  }
  const auto support = out.T.support();

  const auto N = exact_log(q, field->order());
  if (!N) {
    out.detail = "field order is not a power of q";
    return out;
  }
  const long rem = static_cast<long>(*N) - 2 * static_cast<long>(L.depth());
  if (rem < 0 || rem % 2 != 0) {
    out.detail = "log_q of the field order minus 2n is not a nonnegative even number";
    return out;
  }
  const std::uint32_t um = static_cast<std::uint32_t>(rem / 2);
  if (um == 0) {
    out.allowed_exponents = {1};
    out.shape_ok = out.T == UniPoly::x(field);
    if (!out.shape_ok) {
      for (auto s : support) {
        if (s != 1) out.offending_exponents.push_back(s);
      }
      out.detail = "expected T(x) = x";
    }
    return out;
  }

  auto allowed_for = [&](std::uint32_t u, std::uint32_t m) {
    std::vector<std::uint64_t> ex;
    for (std::uint32_t i = 0; i <= m; ++i) ex.push_back((checked_pow(q, 2 * u * i) + q) / (q + 1));
    return ex;
  };
  for (std::uint32_t u = 1; u <= um; ++u) {
    if (um % u != 0) continue;
    const std::uint32_t m = um / u;
    const auto ex = allowed_for(u, m);
    bool ok = static_cast<std::uint64_t>(out.T.degree()) == ex.back() && out.T.coeff(1) != 0;
    for (auto s : support) {
      ok = ok && std::find(ex.begin(), ex.end(), s) != ex.end();
    }
    if (ok) {
      out.shape_ok = true;
      out.u = u;
      out.m = m;
      out.allowed_exponents = ex;
      for (std::uint32_t i = 0; i < m; ++i) out.omegas.push_back(out.T.coeff(ex[i]));
      break;
    }
  }
  if (!out.shape_ok) {
    out.allowed_exponents = allowed_for(1, um);
    for (auto s : support) {
      if (std::find(out.allowed_exponents.begin(), out.allowed_exponents.end(), s) == out.allowed_exponents.end()) {
        out.offending_exponents.push_back(s);
      }
    }
    out.detail = "support of T does not match any exponent pattern (q^(2ui) + q)/(q + 1)";
    return out;
  }
  if (out.u == 1 && out.m == 1) {
    const gf::Field& f = *field;
    bool all = true;
    for (Code g : V) {
      if (g == 0) continue;
      const UniPoly expected = UniPoly::monomial(field, 1, q) - UniPoly::monomial(field, f.pow(g, q - 1), 1);
      all = all && out.T == expected;
    }
    out.reduced_form = all;
  }
  return out;
}

bool check_compos(const LinearizedPoly& L, const UniPoly& T, std::uint32_t s) {
  const gf::FieldRef& field = L.field();
  const gf::Field& f = *field;
  const std::uint64_t P = checked_pow(f.characteristic(), s);
  if (P > (std::uint64_t{1} << 24)) throw CapExceeded("p^s too large for a symbolic identity check");
  const UniPoly Lp = L.to_unipoly();
  const UniPoly lhs = T.compose(Lp.pow(L.q() + 1));
  const UniPoly rhs = frobenius_minus_x(field, P) * Lp.pow(L.q());
  if (lhs.is_zero() || lhs.degree() != rhs.degree()) return false;
  const Code theta_a0 = f.div(lhs.lead(), rhs.lead());
  return lhs == rhs.scaled(theta_a0);
}

bool check_poly_L(const LinearizedPoly& L, Code beta) {
  const gf::FieldRef& field = L.field();
  const gf::Field& f = *field;
  if (beta == 0) throw PreconditionError("beta must be nonzero");
  const std::uint64_t q2 = static_cast<std::uint64_t>(L.q()) * L.q();
  const UniPoly Lp = L.to_unipoly();
  const Code k = f.inv(f.pow(beta, q2 - 1));
  const UniPoly lhs = Lp.frobenius_power(2 * L.q_exponent()) - Lp.scaled(k);
  const UniPoly rhs = frobenius_minus_x(field, checked_pow(L.q(), 2 * (L.depth() + 1)));
  return lhs == rhs;
}

// ---------------------------------------------------------------------------

bool RowPoly::is_zero() const {
  for (const auto& r : rows) {
    for (Code c : r) {
      if (c != 0) return false;
    }
  }
  return true;
}

std::size_t RowPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](Code c) { return c != 0; }));
  return n;
}

RowPoly to_rows(const BiPoly& g) {
  RowPoly out;
  const long dy = g.degree_in(1);
  if (dy < 0) return out;
  out.rows.resize(static_cast<std::size_t>(dy) + 1);
  for (const auto& [e, c] : g.terms()) {
    auto& row = out.rows[e[1]];
    if (row.size() <= e[0]) row.resize(e[0] + 1, 0);
    row[e[0]] = c;
  }
  return out;
}

BiPoly from_rows(const gf::FieldRef& field, const RowPoly& g) {
  BiPoly out(field);
  for (std::size_t j = 0; j < g.rows.size(); ++j) {
    for (std::size_t i = 0; i < g.rows[j].size(); ++i) {
      out.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, g.rows[j][i]);
    }
  }
  return out;
}

MonicYDivisor::MonicYDivisor(const BiPoly& f) : field_(f.field()) {
  const long dy = f.degree_in(1);
  if (dy < 1) throw PreconditionError("divisor has no y-degree");
  degree_ = static_cast<std::uint32_t>(dy);
  for (const auto& [e, c] : f.terms()) {
    if (e[1] == degree_) {
      if (e[0] != 0 || c != 1) throw PreconditionError("divisor is not monic in y");
      continue;
    }
    lower_.push_back({e[1], e[0], field_->neg(c)});
  }
}

void MonicYDivisor::reduce(RowPoly& g) const {
  const gf::Field& f = *field_;
  for (std::size_t j = g.rows.size(); j-- > degree_;) {
    std::vector<Code> lead;
    lead.swap(g.rows[j]);
    const std::size_t shift = j - degree_;
    for (const Term& t : lower_) {
      auto& dst = g.rows[shift + t.row];
      if (dst.size() < lead.size() + t.xexp) dst.resize(lead.size() + t.xexp, 0);
      for (std::size_t i = 0; i < lead.size(); ++i) {
        if (lead[i] != 0) dst[i + t.xexp] = f.add(dst[i + t.xexp], f.mul(t.neg_coeff, lead[i]));
      }
    }
  }
  if (g.rows.size() > degree_) g.rows.resize(degree_);
  for (auto& r : g.rows) {
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  while (!g.rows.empty() && g.rows.back().empty()) g.rows.pop_back();
}

BiPoly pseudo_reduce(const BiPoly& g, const BiPoly& f) {
  const MonicYDivisor div(f);
  RowPoly rows = to_rows(g);
  div.reduce(rows);
  return from_rows(g.field(), rows);
}

}  // namespace hcover::poly
