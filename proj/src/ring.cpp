#include "quiddity/ring.hpp"

#include <algorithm>
#include <cctype>
#include <cassert>
#include <functional>
#include <numeric>

namespace quiddity {

namespace {

using Coeffs = std::vector<Element>;

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// --- dense polynomial helpers over a coefficient ring -------------------------

void trim(const Ring& c, Coeffs& v) {
  while (!v.empty() && c.equal(v.back(), c.zero())) v.pop_back();
}

Coeffs poly_add(const Ring& c, const Coeffs& a, const Coeffs& b) {
  Coeffs out;
  out.reserve(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    if (i < a.size() && i < b.size()) out.push_back(c.add(a[i], b[i]));
    else out.push_back(i < a.size() ? a[i] : b[i]);
  }
  trim(c, out);
  return out;
}

Coeffs poly_neg(const Ring& c, const Coeffs& a) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(c.neg(x));
  return out;
}

Coeffs poly_mul(const Ring& c, const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, c.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = c.add(out[i + j], c.mul(a[i], b[j]));
    }
  }
  trim(c, out);
  return out;
}

Coeffs poly_scale(const Ring& c, const Coeffs& a, const Element& s) {
  Coeffs out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(c.mul(x, s));
  trim(c, out);
  return out;
}

// Division with remainder by a divisor whose leading coefficient is invertible.
// Returns {quotient, remainder}.
std::pair<Coeffs, Coeffs> poly_divrem(const Ring& c, Coeffs a, const Coeffs& d) {
  assert(!d.empty());
  Element lead_inv = c.one();
  if (!c.equal(d.back(), c.one())) {
    auto inv = c.inverse(d.back());
    if (!inv) throw RingError("polynomial division by a divisor with non-invertible leading coefficient");
    lead_inv = *inv;
  }
  trim(c, a);
  if (a.size() < d.size()) return {{}, a};
  Coeffs q(a.size() - d.size() + 1, c.zero());
  while (a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    Element factor = c.mul(a.back(), lead_inv);
    q[shift] = factor;
    for (std::size_t j = 0; j < d.size(); ++j) {
      a[shift + j] = c.sub(a[shift + j], c.mul(factor, d[j]));
    }
    // The leading term cancels exactly; drop it even if trim would keep it.
    a.pop_back();
    trim(c, a);
  }
  trim(c, q);
  return {q, a};
}

Coeffs poly_gcd_monic(const Ring& field, Coeffs a, Coeffs b) {
  while (!b.empty()) {
    auto r = poly_divrem(field, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  auto inv = field.inverse(a.back());
  return poly_scale(field, a, *inv);
}

void append_natural(std::string& out, const mpz_class& z) {
  std::size_t count = 0;
  std::string bytes;
  if (z != 0) {
    bytes.resize((mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8);
    mpz_export(bytes.data(), &count, 1, 1, 1, 0, z.get_mpz_t());
    bytes.resize(count);
  }
  const auto len = static_cast<std::uint32_t>(bytes.size());
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((len >> shift) & 0xff));
  out += bytes;
}

void append_count(std::string& out, std::size_t n) {
  const auto len = static_cast<std::uint32_t>(n);
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((len >> shift) & 0xff));
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::uint64_t n) {
  return static_cast<std::int64_t>(static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % n);
}

std::string ring_in_postfix(const Ring& r) {
  return r.kind() == RingKind::Product ? "(" + r.expression() + ")" : r.expression();
}

}  // namespace

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// --- Element ------------------------------------------------------------------

std::string Element::to_string() const { return ring_->format(*this); }

std::size_t Element::hash() const noexcept {
  return std::visit(
      [](const auto& p) -> std::size_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, mpz_class>) {
          std::size_t h = static_cast<std::size_t>(mpz_sgn(p.get_mpz_t()) + 7);
          const std::size_t limbs = mpz_size(p.get_mpz_t());
          for (std::size_t i = 0; i < limbs; ++i) {
            h = h * 0x9E3779B97F4A7C15ULL + mpz_getlimbn(p.get_mpz_t(), static_cast<mp_size_t>(i));
          }
          return h;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::hash<std::int64_t>{}(p) * 0xff51afd7ed558ccdULL;
        } else {
          std::size_t h = p.size() + 0x51ed27;
          for (const auto& e : p) h = (h ^ e.hash()) * 0x100000001b3ULL + 0x9e37;
          return h;
        }
      },
      payload_);
}

Element Element::operator+(const Element& y) const { return ring_->add(*this, y); }
Element Element::operator-(const Element& y) const { return ring_->sub(*this, y); }
Element Element::operator*(const Element& y) const { return ring_->mul(*this, y); }
Element Element::operator-() const { return ring_->neg(*this); }
bool Element::is_zero() const { return ring_->equal(*this, ring_->zero()); }
bool Element::is_one() const { return ring_->equal(*this, ring_->one()); }

// --- construction -------------------------------------------------------------

RingPtr Ring::integers() {
  static const RingPtr z = [] {
    auto r = std::make_shared<Ring>(Private{}, RingKind::Integers);
    r->finish_metadata();
    return r;
  }();
  return z;
}

RingPtr Ring::rationals() { return fraction(integers()); }

RingPtr Ring::mod_int(std::uint64_t n) {
  if (n < 2) throw RingError("Z/N requires N >= 2, got " + std::to_string(n));
  if (n > (std::uint64_t{1} << 62)) throw RingError("Z/N modulus too large: " + std::to_string(n));
  auto r = std::make_shared<Ring>(Private{}, RingKind::ModInt);
  r->n_ = n;
  r->finish_metadata();
  return r;
}

RingPtr Ring::polynomial(RingPtr base, std::string variable) {
  if (variable.empty()) throw RingError("polynomial ring needs a variable name");
  // Nested variables must be distinct so literals stay unambiguous.
  for (const Ring* r = base.get(); r != nullptr;) {
    if ((r->kind_ == RingKind::Polynomial || r->kind_ == RingKind::Quotient) && r->variable_ == variable) {
      throw RingError("variable '" + variable + "' already used in " + base->expression());
    }
    if (r->kind_ == RingKind::Polynomial || r->kind_ == RingKind::Quotient || r->kind_ == RingKind::Fraction) {
      r = r->a_.get();
    } else {
      r = nullptr;
    }
  }
  auto r = std::make_shared<Ring>(Private{}, RingKind::Polynomial);
  r->a_ = std::move(base);
  r->variable_ = std::move(variable);
  r->finish_metadata();
  return r;
}

RingPtr Ring::quotient(RingPtr poly_ring, const Element& modulus) {
  if (poly_ring->kind_ != RingKind::Polynomial) {
    throw RingError("quotient requires a polynomial ring, got " + poly_ring->expression());
  }
  poly_ring->check_member(modulus);
  const auto& coeffs = modulus.parts();
  const Ring& c = *poly_ring->a_;
  if (coeffs.size() < 2) {
    throw RingError("quotient modulus must have degree >= 1: " + modulus.to_string());
  }
  if (!c.equal(coeffs.back(), c.one())) {
    throw RingError("quotient modulus must be monic: " + modulus.to_string());
  }
  auto r = std::make_shared<Ring>(Private{}, RingKind::Quotient);
  r->a_ = poly_ring->a_;
  r->b_ = std::move(poly_ring);
  r->variable_ = r->b_->variable_;
  r->modulus_ = std::make_shared<const Element>(modulus);
  r->finish_metadata();
  return r;
}

RingPtr Ring::fraction(RingPtr domain) {
  if (!domain->is_gcd_domain()) {
    std::string why = domain->expression() + " is not a supported integral GCD domain";
    const Ring* inner = domain.get();
    if (inner->kind_ == RingKind::Polynomial) inner = inner->a_.get();
    if (!inner->is_domain()) {
      why = inner->expression() + " is not an integral domain";
      if (inner->kind_ == RingKind::ModInt) {
        for (std::uint64_t d = 2; d < inner->n_; ++d) {
          if (inner->n_ % d == 0) {
            why += " (" + std::to_string(d) + "*" + std::to_string(inner->n_ / d) + " = 0)";
            break;
          }
        }
      }
    }
    throw RingError("Frac(" + domain->expression() + "): " + why);
  }
  auto r = std::make_shared<Ring>(Private{}, RingKind::Fraction);
  r->a_ = std::move(domain);
  r->finish_metadata();
  return r;
}

RingPtr Ring::product(RingPtr left, RingPtr right) {
  auto r = std::make_shared<Ring>(Private{}, RingKind::Product);
  r->a_ = std::move(left);
  r->b_ = std::move(right);
  r->finish_metadata();
  return r;
}

void Ring::finish_metadata() {
  switch (kind_) {
    case RingKind::Integers:
      expression_ = "Z";
      finite_ = false;
      characteristic_ = 0;
      break;
    case RingKind::ModInt:
      expression_ = "Z/" + std::to_string(n_);
      finite_ = true;
      characteristic_ = n_;
      prime_ = is_prime_u64(n_);
      break;
    case RingKind::Polynomial:
      expression_ = ring_in_postfix(*a_) + "[" + variable_ + "]";
      finite_ = false;
      characteristic_ = a_->characteristic_;
      break;
    case RingKind::Quotient:
      expression_ = b_->expression_ + "/(" + modulus_->to_string() + ")";
      finite_ = a_->finite_;
      characteristic_ = a_->characteristic_;
      break;
    case RingKind::Fraction:
      expression_ = a_->kind_ == RingKind::Integers ? "Q" : "Frac(" + a_->expression_ + ")";
      finite_ = a_->finite_;
      characteristic_ = a_->characteristic_;
      break;
    case RingKind::Product: {
      const std::string rhs = b_->kind_ == RingKind::Product ? "(" + b_->expression_ + ")" : b_->expression_;
      expression_ = a_->expression_ + "*" + rhs;
      finite_ = a_->finite_ && b_->finite_;
      characteristic_ = lcm_u64(a_->characteristic_, b_->characteristic_);
      break;
    }
  }
}

// --- accessors ----------------------------------------------------------------

std::uint64_t Ring::modulus_n() const {
  if (kind_ != RingKind::ModInt) throw RingError(expression_ + " is not Z/N");
  return n_;
}
const RingPtr& Ring::coefficient_ring() const {
  if (kind_ != RingKind::Polynomial && kind_ != RingKind::Quotient) {
    throw RingError(expression_ + " has no coefficient ring");
  }
  return a_;
}
const RingPtr& Ring::polynomial_ring() const {
  if (kind_ != RingKind::Quotient) throw RingError(expression_ + " is not a quotient ring");
  return b_;
}
const RingPtr& Ring::domain() const {
  if (kind_ != RingKind::Fraction) throw RingError(expression_ + " is not a fraction field");
  return a_;
}
const RingPtr& Ring::left() const {
  if (kind_ != RingKind::Product) throw RingError(expression_ + " is not a product");
  return a_;
}
const RingPtr& Ring::right() const {
  if (kind_ != RingKind::Product) throw RingError(expression_ + " is not a product");
  return b_;
}
const std::string& Ring::variable_name() const {
  if (kind_ != RingKind::Polynomial && kind_ != RingKind::Quotient) {
    throw RingError(expression_ + " has no variable");
  }
  return variable_;
}
const Element& Ring::quotient_modulus() const {
  if (kind_ != RingKind::Quotient) throw RingError(expression_ + " is not a quotient ring");
  return *modulus_;
}
std::size_t Ring::quotient_degree() const { return quotient_modulus().parts().size() - 1; }

std::optional<std::uint64_t> Ring::cardinality() const {
  if (!finite_) return std::nullopt;
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 63;
  auto checked_mul = [&](std::uint64_t x, std::uint64_t y) {
    if (y != 0 && x > kLimit / y) throw RingError("cardinality of " + expression_ + " is too large");
    return x * y;
  };
  switch (kind_) {
    case RingKind::ModInt:
      return n_;
    case RingKind::Quotient: {
      std::uint64_t total = 1;
      const std::uint64_t c = *a_->cardinality();
      for (std::size_t i = 0; i < quotient_degree(); ++i) total = checked_mul(total, c);
      return total;
    }
    case RingKind::Fraction:
      return a_->cardinality();
    case RingKind::Product:
      return checked_mul(*a_->cardinality(), *b_->cardinality());
    default:
      return std::nullopt;
  }
}

bool Ring::is_field() const {
  switch (kind_) {
    case RingKind::ModInt:
      return prime_;
    case RingKind::Fraction:
      return true;
    default:
      return false;
  }
}

bool Ring::is_domain() const {
  switch (kind_) {
    case RingKind::Integers:
      return true;
    case RingKind::ModInt:
      return prime_;
    case RingKind::Polynomial:
      return a_->is_domain();
    case RingKind::Fraction:
      return true;
    default:
      return false;  // quotients are not classified; products never are
  }
}

bool Ring::is_gcd_domain() const {
  if (kind_ == RingKind::Integers || is_field()) return true;
  return kind_ == RingKind::Polynomial && a_->is_field();
}

// --- elements -----------------------------------------------------------------

Element Ring::make(Element::Payload payload) const { return Element(shared_from_this(), std::move(payload)); }

void Ring::check_member(const Element& x) const {
  if (!x.ring() || !same_as(*x.ring())) {
    throw RingError("mixed-ring operands: element of " + (x.ring() ? x.ring()->expression() : std::string("?")) +
                    " used in " + expression_);
  }
}

Element Ring::zero() const {
  switch (kind_) {
    case RingKind::Integers:
      return make(mpz_class(0));
    case RingKind::ModInt:
      return make(std::int64_t{0});
    case RingKind::Polynomial:
    case RingKind::Quotient:
      return make(Coeffs{});
    case RingKind::Fraction:
      return make(Coeffs{a_->zero(), a_->one()});
    case RingKind::Product:
      return make(Coeffs{a_->zero(), b_->zero()});
  }
  throw RingError("unreachable");
}

Element Ring::one() const { return from_int(mpz_class(1)); }

Element Ring::from_int(const mpz_class& n) const {
  switch (kind_) {
    case RingKind::Integers:
      return make(n);
    case RingKind::ModInt: {
      mpz_class r;
      mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), n_);
      return make(static_cast<std::int64_t>(r.get_ui()));
    }
    case RingKind::Polynomial:
    case RingKind::Quotient:
      return polynomial_from(Coeffs{a_->from_int(n)});
    case RingKind::Fraction:
      return fraction_of(a_->from_int(n), a_->one());
    case RingKind::Product:
      return make(Coeffs{a_->from_int(n), b_->from_int(n)});
  }
  throw RingError("unreachable");
}

Element Ring::residue(std::int64_t r) const {
  if (kind_ != RingKind::ModInt) throw RingError(expression_ + " is not Z/N");
  const auto n = static_cast<std::int64_t>(n_);
  return make(((r % n) + n) % n);
}

Element Ring::polynomial_from(Coeffs coeffs) const {
  if (kind_ != RingKind::Polynomial && kind_ != RingKind::Quotient) {
    throw RingError(expression_ + " is not a polynomial ring");
  }
  for (const auto& c : coeffs) a_->check_member(c);
  trim(*a_, coeffs);
  if (kind_ == RingKind::Quotient && coeffs.size() > quotient_degree()) {
    coeffs = poly_divrem(*a_, std::move(coeffs), modulus_->parts()).second;
  }
  return make(std::move(coeffs));
}

Element Ring::fraction_of(const Element& num, const Element& den) const {
  if (kind_ != RingKind::Fraction) throw RingError(expression_ + " is not a fraction field");
  const Ring& d = *a_;
  d.check_member(num);
  d.check_member(den);
  if (den.is_zero()) throw RingError("zero denominator in " + expression_);
  if (num.is_zero()) return make(Coeffs{d.zero(), d.one()});
  if (d.is_field()) {
    return make(Coeffs{d.mul(num, *d.inverse(den)), d.one()});
  }
  if (d.kind_ == RingKind::Integers) {
    mpz_class g = gcd(num.integer(), den.integer());
    mpz_class n = num.integer() / g;
    mpz_class m = den.integer() / g;
    if (m < 0) {
      n = -n;
      m = -m;
    }
    return make(Coeffs{d.make(n), d.make(m)});
  }
  // Polynomial over a field: divide out the gcd, then make the denominator monic.
  const Ring& f = *d.a_;
  const Coeffs g = poly_gcd_monic(f, num.parts(), den.parts());
  Coeffs n = poly_divrem(f, num.parts(), g).first;
  Coeffs m = poly_divrem(f, den.parts(), g).first;
  const Element lead_inv = *f.inverse(m.back());
  return make(Coeffs{d.make(poly_scale(f, n, lead_inv)), d.make(poly_scale(f, m, lead_inv))});
}

Element Ring::pair(const Element& l, const Element& r) const {
  if (kind_ != RingKind::Product) throw RingError(expression_ + " is not a product");
  a_->check_member(l);
  b_->check_member(r);
  return make(Coeffs{l, r});
}

Element Ring::canonicalize(Element::Payload payload) const {
  switch (kind_) {
    case RingKind::Integers:
      return make(std::get<mpz_class>(payload));
    case RingKind::ModInt:
      return residue(std::get<std::int64_t>(payload));
    case RingKind::Polynomial:
    case RingKind::Quotient:
      return polynomial_from(std::get<Coeffs>(std::move(payload)));
    case RingKind::Fraction: {
      const auto& p = std::get<Coeffs>(payload);
      if (p.size() != 2) throw RingError("fraction payload must have two parts");
      return fraction_of(p[0], p[1]);
    }
    case RingKind::Product: {
      const auto& p = std::get<Coeffs>(payload);
      if (p.size() != 2) throw RingError("product payload must have two parts");
      return pair(p[0], p[1]);
    }
  }
  throw RingError("unreachable");
}

Element Ring::variable(std::string_view name) const {
  switch (kind_) {
    case RingKind::Polynomial:
    case RingKind::Quotient:
      if (variable_ == name) return polynomial_from(Coeffs{a_->zero(), a_->one()});
      return coerce(a_->variable(name));
    case RingKind::Fraction:
      return coerce(a_->variable(name));
    default:
      throw RingError("unknown variable '" + std::string(name) + "' in " + expression_);
  }
}

Element Ring::coerce(const Element& x) const {
  if (same_as(*x.ring())) return x;
  if (x.ring()->kind_ == RingKind::Integers) return from_int(x.integer());
  switch (kind_) {
    case RingKind::Polynomial:
      return polynomial_from(Coeffs{a_->coerce(x)});
    case RingKind::Quotient:
      if (b_->same_as(*x.ring())) return polynomial_from(x.parts());
      return polynomial_from(Coeffs{a_->coerce(x)});
    case RingKind::Fraction:
      return fraction_of(a_->coerce(x), a_->one());
    default:
      throw RingError("cannot coerce element of " + x.ring()->expression() + " into " + expression_);
  }
}

// --- arithmetic ---------------------------------------------------------------

Element Ring::add(const Element& x, const Element& y) const {
  check_member(x);
  check_member(y);
  switch (kind_) {
    case RingKind::Integers:
      return make(mpz_class(x.integer() + y.integer()));
    case RingKind::ModInt: {
      std::int64_t s = x.residue() + y.residue();
      if (static_cast<std::uint64_t>(s) >= n_) s -= static_cast<std::int64_t>(n_);
      return make(s);
    }
    case RingKind::Polynomial:
    case RingKind::Quotient:
      return make(poly_add(*a_, x.parts(), y.parts()));
    case RingKind::Fraction: {
      const Ring& d = *a_;
      const auto& p = x.parts();
      const auto& q = y.parts();
      if (d.is_field()) return make(Coeffs{d.add(p[0], q[0]), d.one()});
      return fraction_of(d.add(d.mul(p[0], q[1]), d.mul(q[0], p[1])), d.mul(p[1], q[1]));
    }
    case RingKind::Product:
      return make(Coeffs{a_->add(x.parts()[0], y.parts()[0]), b_->add(x.parts()[1], y.parts()[1])});
  }
  throw RingError("unreachable");
}

Element Ring::neg(const Element& x) const {
  check_member(x);
  switch (kind_) {
    case RingKind::Integers:
      return make(mpz_class(-x.integer()));
    case RingKind::ModInt:
      return make(x.residue() == 0 ? std::int64_t{0} : static_cast<std::int64_t>(n_) - x.residue());
    case RingKind::Polynomial:
    case RingKind::Quotient:
      return make(poly_neg(*a_, x.parts()));
    case RingKind::Fraction:
      return make(Coeffs{a_->neg(x.parts()[0]), x.parts()[1]});
    case RingKind::Product:
      return make(Coeffs{a_->neg(x.parts()[0]), b_->neg(x.parts()[1])});
  }
  throw RingError("unreachable");
}

Element Ring::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

Element Ring::mul(const Element& x, const Element& y) const {
  check_member(x);
  check_member(y);
  switch (kind_) {
    case RingKind::Integers:
      return make(mpz_class(x.integer() * y.integer()));
    case RingKind::ModInt:
      return make(mod_mul(x.residue(), y.residue(), n_));
    case RingKind::Polynomial:
      return make(poly_mul(*a_, x.parts(), y.parts()));
    case RingKind::Quotient: {
      Coeffs prod = poly_mul(*a_, x.parts(), y.parts());
      if (prod.size() > quotient_degree()) prod = poly_divrem(*a_, std::move(prod), modulus_->parts()).second;
      return make(std::move(prod));
    }
    case RingKind::Fraction: {
      const Ring& d = *a_;
      const auto& p = x.parts();
      const auto& q = y.parts();
      if (d.is_field()) return make(Coeffs{d.mul(p[0], q[0]), d.one()});
      return fraction_of(d.mul(p[0], q[0]), d.mul(p[1], q[1]));
    }
    case RingKind::Product:
      return make(Coeffs{a_->mul(x.parts()[0], y.parts()[0]), b_->mul(x.parts()[1], y.parts()[1])});
  }
  throw RingError("unreachable");
}

Element Ring::pow(const Element& x, std::uint64_t k) const {
  Element result = one();
  Element base = x;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

bool Ring::equal(const Element& x, const Element& y) const {
  check_member(x);
  check_member(y);
  return x.payload() == y.payload();
}

std::optional<Element> Ring::inverse(const Element& x) const {
  check_member(x);
  switch (kind_) {
    case RingKind::Integers:
      if (x.integer() == 1 || x.integer() == -1) return x;
      return std::nullopt;
    case RingKind::ModInt: {
      mpz_class inv;
      const mpz_class a(static_cast<long>(x.residue()));
      const mpz_class n(static_cast<unsigned long>(n_));
      if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0) return std::nullopt;
      return make(static_cast<std::int64_t>(inv.get_ui()));
    }
    case RingKind::Polynomial:
    case RingKind::Quotient: {
      // Only constant units are recognized; units such as 1+2X over Z/4 are not.
      if (x.parts().size() != 1) return std::nullopt;
      auto c = a_->inverse(x.parts()[0]);
      if (!c) return std::nullopt;
      return polynomial_from(Coeffs{*c});
    }
    case RingKind::Fraction:
      if (x.is_zero()) return std::nullopt;
      return fraction_of(x.parts()[1], x.parts()[0]);
    case RingKind::Product: {
      auto l = a_->inverse(x.parts()[0]);
      auto r = b_->inverse(x.parts()[1]);
      if (!l || !r) return std::nullopt;
      return make(Coeffs{*l, *r});
    }
  }
  return std::nullopt;
}

Element Ring::divide(const Element& x, const Element& y) const {
  check_member(x);
  check_member(y);
  if (kind_ == RingKind::Integers) {
    if (y.integer() == 0) throw RingError("division by zero in Z");
    if (!mpz_divisible_p(x.integer().get_mpz_t(), y.integer().get_mpz_t())) {
      throw RingError(x.to_string() + "/" + y.to_string() + " is not an integer");
    }
    return make(mpz_class(x.integer() / y.integer()));
  }
  auto inv = inverse(y);
  if (!inv) throw RingError(y.to_string() + " is not invertible in " + expression_);
  return mul(x, *inv);
}

Element Ring::reduce(const Element& poly) const {
  if (kind_ != RingKind::Quotient) throw RingError(expression_ + " is not a quotient ring");
  b_->check_member(poly);
  return polynomial_from(poly.parts());
}

Element Ring::lift(const Element& x) const {
  if (kind_ != RingKind::Quotient) throw RingError(expression_ + " is not a quotient ring");
  check_member(x);
  return b_->polynomial_from(x.parts());
}

// --- formatting and order -----------------------------------------------------

std::string Ring::format(const Element& x) const {
  switch (kind_) {
    case RingKind::Integers:
      return x.integer().get_str();
    case RingKind::ModInt:
      return std::to_string(x.residue());
    case RingKind::Polynomial:
    case RingKind::Quotient: {
      const auto& c = x.parts();
      if (c.empty()) return "0";
      std::string out;
      for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i].is_zero()) continue;
        const std::string cs = c[i].to_string();
        std::string term;
        if (i == 0) {
          term = cs;
        } else {
          const std::string mono = i == 1 ? variable_ : variable_ + "^" + std::to_string(i);
          if (cs == "1") term = mono;
          else if (cs == "-1") term = "-" + mono;
          else if (is_integer_literal(cs)) term = cs + "*" + mono;
          else term = "(" + cs + ")*" + mono;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
      }
      return out;
    }
    case RingKind::Fraction: {
      const auto& p = x.parts();
      if (p[1].is_one()) return p[0].to_string();
      auto wrap = [](const std::string& s) {
        const bool atom = is_integer_literal(s) || std::all_of(s.begin(), s.end(), [](unsigned char c) {
                            return std::isalnum(c) || c == '_';
                          });
        return atom ? s : "(" + s + ")";
      };
      return wrap(p[0].to_string()) + "/" + wrap(p[1].to_string());
    }
    case RingKind::Product:
      return "(" + x.parts()[0].to_string() + ", " + x.parts()[1].to_string() + ")";
  }
  throw RingError("unreachable");
}

std::string Ring::encode(const Element& x) const {
  check_member(x);
  std::string out;
  switch (kind_) {
    case RingKind::Integers: {
      // 0, 1, -1, 2, -2, ... map to 0, 1, 2, 3, 4, ...
      const mpz_class& n = x.integer();
      append_natural(out, n > 0 ? mpz_class(2 * n - 1) : mpz_class(-2 * n));
      break;
    }
    case RingKind::ModInt:
      append_natural(out, mpz_class(static_cast<unsigned long>(x.residue())));
      break;
    case RingKind::Polynomial:
    case RingKind::Quotient: {
      const auto& c = x.parts();
      append_count(out, c.size());
      for (std::size_t i = c.size(); i-- > 0;) out += a_->encode(c[i]);
      break;
    }
    case RingKind::Fraction:
      out = a_->encode(x.parts()[1]) + a_->encode(x.parts()[0]);
      break;
    case RingKind::Product:
      out = a_->encode(x.parts()[0]) + b_->encode(x.parts()[1]);
      break;
  }
  return out;
}

std::strong_ordering Ring::compare(const Element& x, const Element& y) const {
  const int c = encode(x).compare(encode(y));
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::vector<Element> Ring::elements() const {
  if (!finite_) throw RingError("cannot enumerate the infinite ring " + expression_);
  constexpr std::uint64_t kMaxElements = std::uint64_t{1} << 20;
  if (*cardinality() > kMaxElements) {
    throw RingError(expression_ + " has " + std::to_string(*cardinality()) + " elements; enumeration limit is " +
                    std::to_string(kMaxElements));
  }
  std::vector<Element> out;
  switch (kind_) {
    case RingKind::ModInt:
      for (std::uint64_t r = 0; r < n_; ++r) out.push_back(make(static_cast<std::int64_t>(r)));
      break;
    case RingKind::Quotient: {
      const auto base = a_->elements();
      const std::size_t d = quotient_degree();
      std::vector<std::size_t> digits(d, 0);
      while (true) {
        Coeffs c;
        for (std::size_t i = 0; i < d; ++i) c.push_back(base[digits[i]]);
        out.push_back(polynomial_from(std::move(c)));
        std::size_t i = 0;
        while (i < d && ++digits[i] == base.size()) digits[i++] = 0;
        if (i == d) break;
      }
      break;
    }
    case RingKind::Fraction:
      for (const auto& e : a_->elements()) out.push_back(fraction_of(e, a_->one()));
      break;
    case RingKind::Product: {
      const auto l = a_->elements();
      const auto r = b_->elements();
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(make(Coeffs{x, y}));
      break;
    }
    default:
      break;
  }
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(encode(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Element> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

}  // namespace quiddity
