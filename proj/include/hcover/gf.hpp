#pragma once

// Finite fields GF(p^k) with table-driven arithmetic, plus explicit subfield
// embeddings used to build the tower GF(q) < GF(q^2) < GF(q^(2(n+1))).
//
// Elements are encoded as a single integer "code": the coordinate vector
// (c_0, ..., c_{k-1}) with respect to the power basis 1, X, ..., X^{k-1}
// packed as sum c_i p^i.  Code order is therefore lexicographic on the
// coordinates read from the highest coefficient down, and 0/1 are the
// additive/multiplicative identities.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcover/error.hpp"

namespace hcover::gf {

inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;

using Code = std::uint32_t;

class Field;
using FieldRef = std::shared_ptr<const Field>;

class Field {
 public:
  /// GF(p^k) defined by the lexicographically least monic irreducible of degree k.
  static FieldRef make(std::uint32_t p, std::uint32_t k, std::uint64_t max_order = kDefaultMaxOrder);
  /// GF(p^k) for an explicit monic modulus (coefficients low to high, length k+1).
  static FieldRef make_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                    std::uint64_t max_order = kDefaultMaxOrder);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::string describe() const;

  bool same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
  }

  Code add(Code a, Code b) const {
    if (a == 0) return b;
    if (b == 0) return a;
    if (p_ == 2) return a ^ b;
    const std::uint32_t la = log_[a];
    std::uint32_t d = log_[b] + mult_order_ - la;
    if (d >= mult_order_) d -= mult_order_;
    const std::uint32_t z = zech_[d];
    if (z == kNoLog) return 0;
    return exp_[la + z];
  }
  Code neg(Code a) const {
    if (a == 0 || p_ == 2) return a;
    return exp_[log_[a] + mult_order_ / 2];
  }
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code mul(Code a, Code b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Code inv(Code a) const {
    if (a == 0) throw PreconditionError("inverse of zero in " + describe());
    return exp_[(mult_order_ - log_[a]) % mult_order_];
  }
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[static_cast<std::uint32_t>((static_cast<std::uint64_t>(log_[a]) * (e % mult_order_)) % mult_order_)];
  }
  /// a^(p^m).
  Code frobenius(Code a, std::uint32_t m) const;

  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const;
  Code from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Code a) const;

  Code generator() const { return exp_[1]; }
  std::uint32_t log(Code a) const { return log_[a]; }
  Code exp(std::uint64_t e) const { return exp_[e % mult_order_]; }
  std::uint32_t multiplicative_order() const { return mult_order_; }

  /// True when a lies in the subfield GF(p^d) (a^(p^d) == a).
  bool in_subfield(Code a, std::uint32_t d) const { return frobenius(a, d) == a; }
  std::vector<Code> subfield_elements(std::uint32_t d) const;

  Field(std::uint32_t p, std::vector<std::uint32_t> modulus);

 private:
  static constexpr std::uint32_t kNoLog = 0xffffffffu;

  Code mul_slow(Code a, Code b) const;
  Code add_slow(Code a, Code b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t order_;
  std::uint32_t mult_order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<Code> exp_;  // length 2 * mult_order_
  std::vector<std::uint32_t> zech_;
};

/// Element of a specific field.  Mixing fields without an explicit Embedding throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldRef field, Code code);

  const FieldRef& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement inverse() const;
  FieldElement frobenius(std::uint32_t m) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;

  FieldRef field_;
  Code code_;
};

/// x^(p^m).
FieldElement frobenius(const FieldElement& x, std::uint32_t m);

/// All elements of the field in code order.
std::vector<FieldElement> enumerate(const FieldRef& field);

/// Injective ring homomorphism source -> target, determined by the image of X.
class Embedding {
 public:
  /// Embedding sending X to the least root (in code order) of the source modulus in target.
  static Embedding find(FieldRef source, FieldRef target);
  static Embedding from_generator_image(FieldRef source, FieldRef target, Code image);
  /// outer o inner.
  static Embedding compose(const Embedding& inner, const Embedding& outer);

  const FieldRef& source() const { return source_; }
  const FieldRef& target() const { return target_; }
  Code generator_image() const { return generator_image_; }

  Code map(Code a) const { return table_[a]; }
  FieldElement operator()(const FieldElement& x) const;
  /// Inverse image of a target code lying in the embedded subfield.
  std::optional<Code> preimage(Code b) const;

 private:
  Embedding(FieldRef source, FieldRef target, Code image);

  FieldRef source_;
  FieldRef target_;
  Code generator_image_;
  std::vector<Code> table_;
};

/// GF(q) < GF(q^2) < GF(q^(2(n+1))) with mutually compatible embeddings.
struct Tower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t n = 0;
  FieldRef base;  // GF(q)
  FieldRef quad;  // GF(q^2)
  FieldRef top;   // GF(q^(2(n+1)))
  Embedding base_to_quad;
  Embedding quad_to_top;
  Embedding base_to_top;

  std::uint32_t q() const { return base->order(); }
};

/// Builds the tower for q = p^e and cover depth n.
std::shared_ptr<const Tower> make_tower(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                                        std::uint64_t max_order = kDefaultMaxOrder);

}  // namespace hcover::gf
