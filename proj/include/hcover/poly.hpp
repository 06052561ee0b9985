#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcover/gf.hpp"
#include "hcover/sparse_poly.hpp"
#include "hcover/unipoly.hpp"

namespace hcover::poly {

/// L(x) = a_0 x + a_1 x^(q^2) + ... + a_n x^(q^(2n)) with a_n = 1 and a_0 != 0.
class LinearizedPoly {
 public:
  LinearizedPoly(gf::FieldRef field, std::uint32_t q, std::vector<gf::Code> coeffs);

  /// x + x^(q^2) + ... + x^(q^(2n)).
  static LinearizedPoly normalized(gf::FieldRef field, std::uint32_t q, std::uint32_t n);

  const gf::FieldRef& field() const { return field_; }
  std::uint32_t q() const { return q_; }
  /// e with q = p^e.
  std::uint32_t q_exponent() const { return e_; }
  std::uint32_t depth() const { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  const std::vector<gf::Code>& coeffs() const { return coeffs_; }
  gf::Code alpha0() const { return coeffs_.front(); }
  std::uint64_t degree() const;

  gf::Code eval(gf::Code x) const {
    const gf::Field& f = *field_;
    gf::Code acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i] != 0) acc = f.add(acc, f.mul(coeffs_[i], f.frobenius(x, static_cast<std::uint32_t>(2 * i * e_))));
    }
    return acc;
  }

  UniPoly to_unipoly() const;
  /// L(var) as a polynomial in one variable of an N-variate ring.
  template <std::size_t N>
  SparsePoly<N> as_sparse(std::size_t var) const {
    return lift<N>(to_unipoly(), var);
  }
  LinearizedPoly embedded(const gf::Embedding& emb) const;

 private:
  gf::FieldRef field_;
  std::uint32_t q_;
  std::uint32_t e_;
  std::vector<gf::Code> coeffs_;
};

/// Roots of L in its coefficient field, found by GF(p)-linear algebra; ascending codes.
std::vector<gf::Code> kernel(const LinearizedPoly& L);

/// Image of the coefficient field under F, ascending codes.
std::vector<gf::Code> value_set(const UniPoly& F);

/// |value_set(F)| == ceil(|field| / deg F).
bool is_minimal_value_set(const UniPoly& F);

struct MvspCheck {
  bool holds = false;
  std::optional<gf::Code> theta;
  std::vector<gf::Code> value_set;
  std::string failure;
};

/// Verifies prod_{g in V}(F - g) = theta (x^P - x) F' and L prod_{g != 0}(F - g) = theta a_0 (x^P - x)
/// for F = L^(q+1) over the coefficient field of order P.
MvspCheck check_mvsp_factorization(const LinearizedPoly& L);

struct TShape {
  explicit TShape(UniPoly t) : T(std::move(t)) {}

  UniPoly T;
  bool shape_ok = false;
  std::uint32_t u = 0;
  std::uint32_t m = 0;
  std::vector<std::uint64_t> allowed_exponents;
  std::vector<std::uint64_t> offending_exponents;
  std::vector<gf::Code> omegas;  // coefficients at the allowed exponents below the top one
  /// u = m = 1 and T = x^q - g^(q-1) x for the nonzero values g.
  bool reduced_form = false;
  std::string detail;
};

/// T(x) = prod_{g in V}(x - g) for the value set V of L^(q+1), checked against the exponent pattern
/// q t_i = (q^(2ui) + q)/(q + 1), i = 0..m.  Requires L^(q+1) to be a minimal value set polynomial.
TShape build_T_and_check_shape(const LinearizedPoly& L);

/// T(L^(q+1)) == theta a_0 (x^(p^s) - x) L^q for some nonzero theta.
bool check_compos(const LinearizedPoly& L, const UniPoly& T, std::uint32_t s);

/// L^(q^2) - beta^-(q^2-1) L == x^(q^(2(n+1))) - x.
bool check_poly_L(const LinearizedPoly& L, gf::Code beta);

// ---------------------------------------------------------------------------
// Division by polynomials monic in y, with coefficients in k[x].

/// rows[j][i] is the coefficient of x^i y^j.
struct RowPoly {
  std::vector<std::vector<gf::Code>> rows;

  bool is_zero() const;
  std::size_t term_count() const;
};

RowPoly to_rows(const BiPoly& g);
BiPoly from_rows(const gf::FieldRef& field, const RowPoly& g);

class MonicYDivisor {
 public:
  /// Throws PreconditionError unless the leading y-coefficient of f is the constant 1.
  explicit MonicYDivisor(const BiPoly& f);

  std::uint32_t y_degree() const { return degree_; }
  const gf::FieldRef& field() const { return field_; }
  /// g <- g mod f, leaving fewer than y_degree() rows.
  void reduce(RowPoly& g) const;

 private:
  gf::FieldRef field_;
  std::uint32_t degree_ = 0;
  // Lower rows of f, sparse in x: (row, x-exponent, negated coefficient).
  struct Term {
    std::uint32_t row;
    std::uint32_t xexp;
    gf::Code neg_coeff;
  };
  std::vector<Term> lower_;
};

/// Remainder of g on division by f in (k[x])[y]; f must be monic in y.
BiPoly pseudo_reduce(const BiPoly& g, const BiPoly& f);

}  // namespace hcover::poly
