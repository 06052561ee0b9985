#pragma once

// Sparse multivariate polynomials over a finite field.  BiPoly holds affine
// plane-curve equations in (x, y); TriPoly holds homogeneous forms in (X, Y, Z).

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>

#include "hcover/gf.hpp"
#include "hcover/unipoly.hpp"

namespace hcover::poly {

template <std::size_t N>
class SparsePoly {
 public:
  using Exponents = std::array<std::uint32_t, N>;
  using Terms = std::map<Exponents, gf::Code>;

  /// Placeholder without a field; only assignment is meaningful.
  SparsePoly() = default;
  explicit SparsePoly(gf::FieldRef field) : field_(std::move(field)) {}

  static SparsePoly constant(gf::FieldRef field, gf::Code c) {
    SparsePoly r(std::move(field));
    r.add_term(Exponents{}, c);
    return r;
  }
  static SparsePoly variable(gf::FieldRef field, std::size_t i) {
    Exponents e{};
    e[i] = 1;
    return monomial(std::move(field), e, 1);
  }
  static SparsePoly monomial(gf::FieldRef field, const Exponents& e, gf::Code c) {
    SparsePoly r(std::move(field));
    r.add_term(e, c);
    return r;
  }

  const gf::FieldRef& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, gf::Code c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = field_->add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  gf::Code coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  long total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto v : e) s += v;
      d = std::max(d, s);
    }
    return d;
  }

  long degree_in(std::size_t i) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max<long>(d, e[i]);
    return d;
  }

  bool is_homogeneous() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
      long s = 0;
      for (auto v : e) s += v;
      if (d >= 0 && s != d) return false;
      d = s;
    }
    return true;
  }

  SparsePoly operator+(const SparsePoly& o) const {
    check_same(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  SparsePoly operator-(const SparsePoly& o) const {
    check_same(o);
    SparsePoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, field_->neg(c));
    return r;
  }
  SparsePoly operator-() const { return scaled(field_->neg(1)); }

  SparsePoly operator*(const SparsePoly& o) const {
    check_same(o);
    SparsePoly r(field_);
    for (const auto& [ea, ca] : terms_) {
      for (const auto& [eb, cb] : o.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < N; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, field_->mul(ca, cb));
      }
    }
    return r;
  }

  SparsePoly scaled(gf::Code c) const {
    SparsePoly r(field_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, field_->mul(v, c));
    return r;
  }

  bool operator==(const SparsePoly& o) const {
    check_same(o);
    return terms_ == o.terms_;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// this^(p^m).
  SparsePoly frobenius_power(std::uint32_t m) const {
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) scale *= field_->characteristic();
    SparsePoly r(field_);
    for (const auto& [e, c] : terms_) {
      Exponents s;
      for (std::size_t i = 0; i < N; ++i) s[i] = e[i] * scale;
      r.terms_.emplace(s, field_->frobenius(c, m));
    }
    return r;
  }

  /// Power via the base-p digits of e; keeps intermediate term counts small in characteristic p.
  SparsePoly pow(std::uint64_t e) const {
    const std::uint32_t p = field_->characteristic();
    SparsePoly result = constant(field_, 1);
    std::uint32_t m = 0;
    while (e > 0) {
      const std::uint64_t d = e % p;
      if (d != 0) {
        const SparsePoly g = frobenius_power(m);
        for (std::uint64_t i = 0; i < d; ++i) result = result * g;
      }
      e /= p;
      ++m;
    }
    return result;
  }

  SparsePoly derivative(std::size_t i) const {
    SparsePoly r(field_);
    const std::uint32_t p = field_->characteristic();
    for (const auto& [e, c] : terms_) {
      if (e[i] % p == 0) continue;
      Exponents s = e;
      s[i] -= 1;
      r.add_term(s, field_->mul(c, field_->from_int(e[i] % p)));
    }
    return r;
  }

  gf::Code eval(const std::array<gf::Code, N>& point) const {
    const gf::Field& f = *field_;
    gf::Code acc = 0;
    for (const auto& [e, c] : terms_) {
      gf::Code t = c;
      for (std::size_t i = 0; i < N && t != 0; ++i) {
        if (e[i] != 0) t = f.mul(t, f.pow(point[i], e[i]));
      }
      acc = f.add(acc, t);
    }
    return acc;
  }

  /// Substitutes images[i] for variable i.
  template <std::size_t M>
  SparsePoly<M> substitute(const std::array<SparsePoly<M>, N>& images) const {
    std::array<std::map<std::uint32_t, SparsePoly<M>>, N> cache;
    auto power = [&](std::size_t i, std::uint32_t k) -> const SparsePoly<M>& {
      auto it = cache[i].find(k);
      if (it == cache[i].end()) it = cache[i].emplace(k, images[i].pow(k)).first;
      return it->second;
    };
    SparsePoly<M> r(field_);
    for (const auto& [e, c] : terms_) {
      SparsePoly<M> t = SparsePoly<M>::constant(field_, c);
      for (std::size_t i = 0; i < N; ++i) {
        if (e[i] != 0) t = t * power(i, e[i]);
      }
      r = r + t;
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!first) os << " + ";
      first = false;
      os << gf::FieldElement(field_, it->second).to_string();
      for (std::size_t i = 0; i < N; ++i) {
        if (it->first[i] != 0) os << "*v" << i << "^" << it->first[i];
      }
    }
    return os.str();
  }

 private:
  void check_same(const SparsePoly& o) const {
    if (!field_->same_as(*o.field_)) throw FieldMismatch("polynomials over different fields");
  }

  gf::FieldRef field_;
  Terms terms_;
};

using BiPoly = SparsePoly<2>;
using TriPoly = SparsePoly<3>;

/// F(X, Y, Z) = Z^d f(X/Z, Y/Z) with d the total degree of f.
inline TriPoly homogenize(const BiPoly& f) {
  const long d = f.total_degree();
  TriPoly r(f.field());
  for (const auto& [e, c] : f.terms()) {
    r.add_term({e[0], e[1], static_cast<std::uint32_t>(d - e[0] - e[1])}, c);
  }
  return r;
}

/// f(x, y) = F(x, y, 1).
inline BiPoly dehomogenize(const TriPoly& F) {
  BiPoly r(F.field());
  for (const auto& [e, c] : F.terms()) r.add_term({e[0], e[1]}, c);
  return r;
}

/// Embeds a univariate polynomial as a polynomial in variable `var` of an N-variate ring.
template <std::size_t N>
SparsePoly<N> lift(const UniPoly& u, std::size_t var) {
  SparsePoly<N> r(u.field());
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    typename SparsePoly<N>::Exponents e{};
    e[var] = static_cast<std::uint32_t>(i);
    r.add_term(e, u.coeffs()[i]);
  }
  return r;
}

}  // namespace hcover::poly
