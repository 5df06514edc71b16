#pragma once

/**
 * @file ring.hpp
 * @brief Exact arithmetic over a tower of commutative unitary rings.
 *
 * A Ring is an immutable descriptor built from six constructors:
 *
 *   Z                 the integers (arbitrary precision)
 *   Z/N               residues modulo N >= 2
 *   R[x]              polynomials over R in the variable x
 *   R[x]/(f)          quotient of a polynomial ring by a monic f, deg f >= 1
 *   Frac(D)           fraction field of a supported GCD domain D
 *   R * S             direct product
 *
 * Elements carry a shared pointer to their ring and a payload that is always
 * kept canonical, so equality is payload equality.  The byte string returned
 * by Ring::encode() is injective and its lexicographic order is the total
 * order used for every canonical form in the library.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace quiddity {

enum class RingKind { Integers, ModInt, Polynomial, Quotient, Fraction, Product };

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Semantic error: a constructor rule or an operation precondition was violated.
class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a ring expression or element literal.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        detail_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

class Element {
 public:
  // Integers: mpz_class.  ModInt: residue in [0, N).
  // Polynomial/Quotient: coefficients low-to-high, no trailing zeros.
  // Fraction: {numerator, denominator}.  Product: {left, right}.
  using Payload = std::variant<mpz_class, std::int64_t, std::vector<Element>>;

  const RingPtr& ring() const noexcept { return ring_; }
  const Payload& payload() const noexcept { return payload_; }

  const mpz_class& integer() const { return std::get<mpz_class>(payload_); }
  std::int64_t residue() const { return std::get<std::int64_t>(payload_); }
  const std::vector<Element>& parts() const { return std::get<std::vector<Element>>(payload_); }

  std::string to_string() const;
  std::size_t hash() const noexcept;

  /// Payload equality; both operands must belong to the same ring.
  bool operator==(const Element& other) const { return payload_ == other.payload_; }

  Element operator+(const Element& y) const;
  Element operator-(const Element& y) const;
  Element operator*(const Element& y) const;
  Element operator-() const;

  bool is_zero() const;
  bool is_one() const;

 private:
  friend class Ring;
  Element(RingPtr ring, Payload payload) : ring_(std::move(ring)), payload_(std::move(payload)) {}

  RingPtr ring_;
  Payload payload_;
};

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr integers();
  static RingPtr rationals();
  static RingPtr mod_int(std::uint64_t n);
  static RingPtr polynomial(RingPtr base, std::string variable);
  /// @p modulus is an element of @p poly_ring; it must be monic of degree >= 1.
  static RingPtr quotient(RingPtr poly_ring, const Element& modulus);
  static RingPtr fraction(RingPtr domain);
  static RingPtr product(RingPtr left, RingPtr right);

  /// Parses the ASCII ring grammar, e.g. "Z[X]/(X^2+1)" or "Frac(Z/5[t])".
  static RingPtr parse(std::string_view expr);

  RingKind kind() const noexcept { return kind_; }
  const std::string& expression() const noexcept { return expression_; }
  bool same_as(const Ring& other) const noexcept {
    return this == &other || expression_ == other.expression_;
  }

  // Structure accessors; each throws RingError on the wrong kind.
  std::uint64_t modulus_n() const;
  const RingPtr& coefficient_ring() const;  // Polynomial, Quotient
  const RingPtr& polynomial_ring() const;   // Quotient
  const RingPtr& domain() const;            // Fraction
  const RingPtr& left() const;              // Product
  const RingPtr& right() const;             // Product
  const std::string& variable_name() const; // Polynomial, Quotient
  const Element& quotient_modulus() const;  // Quotient
  std::size_t quotient_degree() const;      // Quotient

  // Metadata.
  bool is_finite() const noexcept { return finite_; }
  /// Number of elements, absent for infinite rings.  Throws if it exceeds 2^63.
  std::optional<std::uint64_t> cardinality() const;
  /// Smallest n >= 1 with n*1 = 0, or 0 when no such n exists.
  std::uint64_t characteristic() const noexcept { return characteristic_; }
  bool is_field() const;
  bool is_domain() const;
  bool is_gcd_domain() const;

  // Constants and constructors.
  Element zero() const;
  Element one() const;
  Element from_int(const mpz_class& n) const;
  Element from_int(long n) const { return from_int(mpz_class(n)); }
  /// The generator named @p name, searched through the whole tower.
  Element variable(std::string_view name) const;
  /// Embeds an element of a subring of the tower (Z, coefficient rings, domains).
  Element coerce(const Element& x) const;
  Element residue(std::int64_t r) const;                       // ModInt
  Element polynomial_from(std::vector<Element> coeffs) const;  // Polynomial, Quotient
  Element fraction_of(const Element& num, const Element& den) const;  // Fraction
  Element pair(const Element& l, const Element& r) const;      // Product
  /// Canonicalizes an arbitrary payload of this ring's shape.
  Element canonicalize(Element::Payload payload) const;

  // Arithmetic.  Mixed-ring operands throw RingError.
  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, std::uint64_t k) const;
  bool equal(const Element& x, const Element& y) const;
  /// Multiplicative inverse when one exists and can be decided here.
  std::optional<Element> inverse(const Element& x) const;
  /// x / y, defined when y is invertible (or the quotient is exact in Z).
  Element divide(const Element& x, const Element& y) const;

  // Quotient helpers.
  Element reduce(const Element& poly) const;  // polynomial ring -> quotient
  Element lift(const Element& x) const;       // quotient -> polynomial ring

  // Order and serialization.
  std::string format(const Element& x) const;
  std::string encode(const Element& x) const;
  std::strong_ordering compare(const Element& x, const Element& y) const;

  /// Element literal in this ring: integers, a/b, variables, + - * ^, (l, r).
  Element parse_element(std::string_view text) const;
  /// Comma-separated element literals; commas inside parentheses do not split.
  std::vector<Element> parse_tuple(std::string_view text) const;

  /// All elements in encoding order.  The ring must be finite and small.
  std::vector<Element> elements() const;

  void check_member(const Element& x) const;

  // Public for std::make_shared; use the static factories.
  struct Private {};
  Ring(Private, RingKind kind) : kind_(kind) {}

 private:
  Element make(Element::Payload payload) const;
  void finish_metadata();

  RingKind kind_;
  std::string expression_;
  std::uint64_t n_ = 0;
  RingPtr a_;  // base / coefficient ring / domain / left
  RingPtr b_;  // polynomial ring of a quotient / right
  std::string variable_;
  std::shared_ptr<const Element> modulus_;
  bool finite_ = false;
  std::uint64_t characteristic_ = 0;
  bool prime_ = false;
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime_u64(std::uint64_t n);

}  // namespace quiddity
