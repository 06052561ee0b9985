#include "hcover/gf.hpp"

#include <algorithm>
#include <sstream>

#include "hcover/intmath.hpp"

namespace hcover::gf {
namespace {

using SmallPoly = std::vector<std::uint32_t>;  // coefficients over GF(p), low to high

void trim(SmallPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

SmallPoly poly_mod(SmallPoly a, const SmallPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t f = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

SmallPoly poly_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  SmallPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

SmallPoly poly_gcd(SmallPoly a, SmallPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    SmallPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or irreducibility test.
bool is_irreducible(const SmallPoly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  SmallPoly x = {0, 1};
  SmallPoly h = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    // h <- h^p mod f
    SmallPoly acc = {1};
    SmallPoly base = h;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    h = acc;
    SmallPoly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    SmallPoly g = poly_gcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint32_t checked_order(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw PreconditionError("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    order *= p;
    if (order > max_order) {
      throw PreconditionError("field order " + std::to_string(p) + "^" + std::to_string(k) +
                              " exceeds the configured maximum " + std::to_string(max_order));
    }
  }
  return static_cast<std::uint32_t>(order);
}

}  // namespace

FieldRef Field::make(std::uint32_t p, std::uint32_t k, std::uint64_t max_order) {
  const std::uint32_t order = checked_order(p, k, max_order);
  for (std::uint32_t tail = 0; tail < order; ++tail) {
    SmallPoly m(k + 1, 0);
    std::uint32_t t = tail;
    for (std::uint32_t i = 0; i < k; ++i) {
      m[i] = t % p;
      t /= p;
    }
    m[k] = 1;
    if (k > 1 && m[0] == 0) continue;
    if (is_irreducible(m, p)) return std::make_shared<const Field>(p, std::move(m));
  }
  throw Error("no irreducible polynomial found");  // unreachable for valid p, k
}

FieldRef Field::make_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus, std::uint64_t max_order) {
  if (modulus.size() < 2 || modulus.back() != 1) throw PreconditionError("modulus must be monic of degree >= 1");
  checked_order(p, static_cast<std::uint32_t>(modulus.size() - 1), max_order);
  for (auto c : modulus) {
    if (c >= p) throw PreconditionError("modulus coefficient out of range");
  }
  if (!is_irreducible(modulus, p)) throw PreconditionError("modulus is reducible");
  return std::make_shared<const Field>(p, std::move(modulus));
}

Field::Field(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  order_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i) order_ *= p_;
  mult_order_ = order_ - 1;

  // Find a primitive element using slow polynomial-basis arithmetic.
  const auto factors = prime_factors(mult_order_);
  auto pow_slow = [&](Code a, std::uint64_t e) {
    Code r = 1;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
    }
    return r;
  };
  Code g = 1;
  for (Code cand = (order_ == 2 ? 1 : 2); cand < order_; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow_slow(cand, mult_order_ / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }

  log_.assign(order_, kNoLog);
  exp_.assign(2 * static_cast<std::size_t>(mult_order_), 0);
  Code cur = 1;
  for (std::uint32_t i = 0; i < mult_order_; ++i) {
    exp_[i] = cur;
    exp_[i + mult_order_] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, g);
  }
  zech_.assign(mult_order_, kNoLog);
  for (std::uint32_t i = 0; i < mult_order_; ++i) {
    const Code s = add_slow(1, exp_[i]);
    zech_[i] = (s == 0) ? kNoLog : log_[s];
  }
}

Code Field::add_slow(Code a, Code b) const {
  Code r = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Code Field::mul_slow(Code a, Code b) const {
  auto ca = coords(a);
  auto cb = coords(b);
  SmallPoly r = poly_mulmod(ca, cb, modulus_, p_);
  r.resize(k_, 0);
  return from_coords(r);
}

Code Field::frobenius(Code a, std::uint32_t m) const {
  if (a == 0) return 0;
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < m % k_; ++i) e = e * p_ % mult_order_;
  if (mult_order_ == 1) return a;
  return pow(a, e);
}

Code Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

Code Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > k_) throw PreconditionError("too many coordinates for " + describe());
  Code r = 0, scale = 1;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= p_) throw PreconditionError("coordinate out of range for " + describe());
    r += coords[i] * scale;
    scale *= p_;
  }
  return r;
}

std::vector<std::uint32_t> Field::coords(Code a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

std::vector<Code> Field::subfield_elements(std::uint32_t d) const {
  if (d == 0 || k_ % d != 0) throw PreconditionError("GF(p^d) is not a subfield");
  std::vector<Code> out;
  for (Code a = 0; a < order_; ++a) {
    if (in_subfield(a, d)) out.push_back(a);
  }
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_ << "^" << k_ << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(FieldRef field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw PreconditionError("null field");
  if (code_ >= field_->order()) throw PreconditionError("element code out of range for " + field_->describe());
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same_as(*o.field_)) {
    throw FieldMismatch("cannot combine elements of " + field_->describe() + " and " + o.field_->describe() +
                        " without an embedding");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
FieldElement FieldElement::inverse() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::frobenius(std::uint32_t m) const { return {field_, field_->frobenius(code_, m)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  check_same(o);
  return code_ == o.code_;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  os << '[';
  auto c = field_->coords(code_);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  os << ']';
  return os.str();
}

FieldElement frobenius(const FieldElement& x, std::uint32_t m) { return x.frobenius(m); }

std::vector<FieldElement> enumerate(const FieldRef& field) {
  std::vector<FieldElement> out;
  out.reserve(field->order());
  for (Code a = 0; a < field->order(); ++a) out.emplace_back(field, a);
  return out;
}

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldRef source, FieldRef target, Code image)
    : source_(std::move(source)), target_(std::move(target)), generator_image_(image) {
  const Field& s = *source_;
  const Field& t = *target_;
  table_.resize(s.order());
  for (Code a = 0; a < s.order(); ++a) {
    auto c = s.coords(a);
    Code acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = t.add(t.mul(acc, image), t.from_int(c[i]));
    }
    table_[a] = acc;
  }
}

Embedding Embedding::from_generator_image(FieldRef source, FieldRef target, Code image) {
  if (source->characteristic() != target->characteristic() || target->degree() % source->degree() != 0) {
    throw PreconditionError(source->describe() + " does not embed in " + target->describe());
  }
  // The image must be a root of the source modulus.
  const auto& m = source->modulus();
  Code acc = 0;
  for (std::size_t i = m.size(); i-- > 0;) acc = target->add(target->mul(acc, image), target->from_int(m[i]));
  if (acc != 0) throw PreconditionError("generator image is not a root of the source modulus");
  return Embedding(std::move(source), std::move(target), image);
}

Embedding Embedding::find(FieldRef source, FieldRef target) {
  if (source->characteristic() != target->characteristic() || target->degree() % source->degree() != 0) {
    throw PreconditionError(source->describe() + " does not embed in " + target->describe());
  }
  const auto& m = source->modulus();
  const Field& t = *target;
  for (Code r = 0; r < t.order(); ++r) {
    Code acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = t.add(t.mul(acc, r), t.from_int(m[i]));
    if (acc == 0) return Embedding(std::move(source), std::move(target), r);
  }
  throw Error("source modulus has no root in target");  // impossible for finite fields
}

Embedding Embedding::compose(const Embedding& inner, const Embedding& outer) {
  if (!inner.target_->same_as(*outer.source_)) throw FieldMismatch("embeddings do not compose");
  return Embedding(inner.source_, outer.target_, outer.map(inner.generator_image_));
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (!x.field()->same_as(*source_)) throw FieldMismatch("element is not in the embedding source");
  return {target_, table_[x.code()]};
}

std::optional<Code> Embedding::preimage(Code b) const {
  auto it = std::find(table_.begin(), table_.end(), b);
  if (it == table_.end()) return std::nullopt;
  return static_cast<Code>(it - table_.begin());
}

std::shared_ptr<const Tower> make_tower(std::uint32_t p, std::uint32_t e, std::uint32_t n, std::uint64_t max_order) {
  if (!is_prime(p)) throw PreconditionError("p = " + std::to_string(p) + " is not prime");
  if (e == 0) throw PreconditionError("exponent e must be at least 1");
  if (n == 0) throw PreconditionError("cover depth n must be at least 1");
  auto base = Field::make(p, e, max_order);
  auto quad = Field::make(p, 2 * e, max_order);
  auto top = Field::make(p, 2 * (n + 1) * e, max_order);
  auto direct = Embedding::find(base, top);
  auto upper = Embedding::find(quad, top);
  auto lower_image = upper.preimage(direct.generator_image());
  if (!lower_image) throw Error("GF(q) image not contained in GF(q^2) image");
  auto lower = Embedding::from_generator_image(base, quad, *lower_image);
  return std::make_shared<const Tower>(Tower{p, e, n, base, quad, top, lower, upper, direct});
}

}  // namespace hcover::gf
