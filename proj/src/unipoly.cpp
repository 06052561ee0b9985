#include "hcover/unipoly.hpp"

#include <sstream>

namespace hcover::poly {

using gf::Code;

UniPoly::UniPoly(gf::FieldRef field) : field_(std::move(field)) {}

UniPoly::UniPoly(gf::FieldRef field, std::vector<Code> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  normalize();
}

UniPoly UniPoly::monomial(gf::FieldRef field, Code c, std::size_t e) {
  std::vector<Code> v(e + 1, 0);
  v[e] = c;
  return UniPoly(std::move(field), std::move(v));
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void UniPoly::check_same(const UniPoly& o) const {
  if (!field_->same_as(*o.field_)) throw FieldMismatch("polynomials over different fields");
}

std::vector<std::size_t> UniPoly::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) s.push_back(i);
  }
  return s;
}

Code UniPoly::eval(Code x) const {
  const gf::Field& f = *field_;
  Code acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  check_same(o);
  std::vector<Code> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->add(coeff(i), o.coeff(i));
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  check_same(o);
  std::vector<Code> r(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->sub(coeff(i), o.coeff(i));
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator-() const {
  std::vector<Code> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->neg(coeffs_[i]);
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return UniPoly(field_);
  const gf::Field& f = *field_;
  std::vector<Code> r(coeffs_.size() + o.coeffs_.size() - 1, 0);
  const auto so = o.support();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Code a = coeffs_[i];
    if (a == 0) continue;
    for (auto j : so) r[i + j] = f.add(r[i + j], f.mul(a, o.coeffs_[j]));
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::scaled(Code c) const {
  std::vector<Code> r(coeffs_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_->mul(coeffs_[i], c);
  return UniPoly(field_, std::move(r));
}

bool UniPoly::operator==(const UniPoly& o) const {
  check_same(o);
  return coeffs_ == o.coeffs_;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(field_);
  std::vector<Code> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    r[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())));
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::frobenius_power(std::uint32_t m) const {
  if (is_zero()) return *this;
  std::size_t scale = 1;
  for (std::uint32_t i = 0; i < m; ++i) scale *= field_->characteristic();
  std::vector<Code> r((coeffs_.size() - 1) * scale + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) r[i * scale] = field_->frobenius(coeffs_[i], m);
  }
  return UniPoly(field_, std::move(r));
}

UniPoly UniPoly::pow(std::uint64_t e) const {
  // In characteristic p, g^e = prod_m (g^(p^m))^(d_m) over the base-p digits d_m of e.
  const std::uint32_t p = field_->characteristic();
  UniPoly result = constant(field_, 1);
  std::uint32_t m = 0;
  while (e > 0) {
    const std::uint64_t d = e % p;
    if (d != 0) {
      const UniPoly g = frobenius_power(m);
      for (std::uint64_t i = 0; i < d; ++i) result = result * g;
    }
    e /= p;
    ++m;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  check_same(inner);
  UniPoly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + constant(field_, coeffs_[i]);
  return acc;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  check_same(d);
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  const gf::Field& f = *field_;
  std::vector<Code> rem = coeffs_;
  const std::size_t dd = d.coeffs_.size() - 1;
  if (rem.size() <= dd) return {UniPoly(field_), *this};
  std::vector<Code> quo(rem.size() - dd, 0);
  const Code lead_inv = f.inv(d.lead());
  for (std::size_t i = rem.size(); i-- > dd;) {
    const Code c = rem[i];
    if (c == 0) continue;
    const Code factor = f.mul(c, lead_inv);
    quo[i - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, d.coeffs_[j]));
  }
  return {UniPoly(field_, std::move(quo)), UniPoly(field_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(lead()));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << gf::FieldElement(field_, coeffs_[i]).to_string();
    if (i > 0) os << "*x^" << i;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const UniPoly& a) {
  if (a.degree() <= 0) return true;
  const UniPoly d = a.derivative();
  if (d.is_zero()) return false;
  return gcd(a, d).degree() == 0;
}

std::vector<Code> rational_roots(const UniPoly& a) {
  std::vector<Code> roots;
  if (a.is_zero()) throw PreconditionError("roots of the zero polynomial");
  for (Code x = 0; x < a.field()->order(); ++x) {
    if (a.eval(x) == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace hcover::poly
