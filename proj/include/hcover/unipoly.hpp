#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hcover/gf.hpp"

namespace hcover::poly {

/// Dense univariate polynomial over a finite field; coefficients low to high,
/// no trailing zeros (the zero polynomial has an empty coefficient vector).
class UniPoly {
 public:
  explicit UniPoly(gf::FieldRef field);
  UniPoly(gf::FieldRef field, std::vector<gf::Code> coeffs);

  static UniPoly x(gf::FieldRef field) { return monomial(std::move(field), 1, 1); }
  static UniPoly constant(gf::FieldRef field, gf::Code c) { return monomial(std::move(field), c, 0); }
  static UniPoly monomial(gf::FieldRef field, gf::Code c, std::size_t e);

  const gf::FieldRef& field() const { return field_; }
  const std::vector<gf::Code>& coeffs() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  gf::Code coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  gf::Code lead() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::vector<std::size_t> support() const;

  gf::Code eval(gf::Code x) const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator-() const;
  UniPoly scaled(gf::Code c) const;
  bool operator==(const UniPoly& o) const;
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const;
  /// this^(p^m): coefficients raised to p^m, exponents multiplied by p^m.
  UniPoly frobenius_power(std::uint32_t m) const;
  UniPoly pow(std::uint64_t e) const;
  /// this(inner(x)).
  UniPoly compose(const UniPoly& inner) const;
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  UniPoly monic() const;

  std::string to_string() const;

 private:
  void normalize();
  void check_same(const UniPoly& o) const;

  gf::FieldRef field_;
  std::vector<gf::Code> coeffs_;
};

UniPoly gcd(UniPoly a, UniPoly b);

/// True when a has no repeated factor over the algebraic closure.
bool is_squarefree(const UniPoly& a);

/// Roots of a in its coefficient field, ascending by code.
std::vector<gf::Code> rational_roots(const UniPoly& a);

}  // namespace hcover::poly
