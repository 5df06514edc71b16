#pragma once

/**
 * @file quiddity.hpp
 * @brief Matrix words M_n, continuants, and the λ-quiddity equation.
 *
 *   N(a)            = [[a, -1], [1, 0]]
 *   M_n(a_1..a_n)   = N(a_n) * ... * N(a_1)      (a_1's factor is applied first)
 *
 * A tuple is a λ-quiddity when M_n = ε·Id with ε = ±1.  Tuples are compared
 * entrywise by the ring's encoding order; dihedral transforms are identified by
 * (rotation, reversed) so certificates can name the exact representative used.
 */

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quiddity/ring.hpp"

namespace quiddity {

using Tuple = std::vector<Element>;

struct Mat2 {
  Element a11, a12, a21, a22;

  static Mat2 identity(const Ring& ring);
  const RingPtr& ring() const { return a11.ring(); }
  Element det() const;
  Mat2 operator*(const Mat2& m) const;
  Mat2 operator-() const;
  /// Inverse of a determinant-one matrix: [[a22, -a12], [-a21, a11]].
  Mat2 adjugate() const;
  bool operator==(const Mat2& m) const;
  bool is_scalar(const Element& c) const;
  std::size_t hash() const noexcept;
};

Mat2 n_matrix(const Element& a);
/// N(t_n)···N(t_1).  @p t must be non-empty and single-ring.
Mat2 m_matrix(std::span<const Element> t);

/// K() = 1, K(a_1) = a_1, K(a_1..a_j) = a_j K(a_1..a_{j-1}) - K(a_1..a_{j-2}).
Element continuant(const Ring& ring, std::span<const Element> s);

/// The ε of M_n = ε·Id.  In characteristic 2 the two signs coincide; the value
/// is then +1 and @c char2 is set.
struct QuidditySign {
  int value = 1;
  bool char2 = false;
  bool operator==(const QuidditySign&) const = default;
};

std::optional<QuidditySign> quiddity_sign(std::span<const Element> t);

/// (a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1}).
Tuple oplus(std::span<const Element> a, std::span<const Element> b);

struct Transform {
  std::size_t rotation = 0;
  bool reversed = false;
  /// Scan order: all plain rotations first, then rotations of the reversal.
  auto operator<=>(const Transform& o) const {
    if (reversed != o.reversed) return reversed <=> o.reversed;
    return rotation <=> o.rotation;
  }
  bool operator==(const Transform&) const = default;
};

/// d_i = t'_{(i + rotation) mod n} where t' is t or its reversal.
Tuple apply_transform(std::span<const Element> t, Transform tr);

/// All 2n (transform, sequence) pairs in scan order; duplicates kept.
std::vector<std::pair<Transform, Tuple>> dihedral_orbit(std::span<const Element> t);

bool equivalent(std::span<const Element> s, std::span<const Element> t);

/// Lexicographic comparison by entry encodings; shorter prefix sorts first.
std::strong_ordering compare_tuples(std::span<const Element> a, std::span<const Element> b);

struct CanonicalForm {
  Tuple sequence;
  Transform transform;  // first transform in scan order reaching the minimum
};

CanonicalForm canonical_form(std::span<const Element> t);

std::string format_tuple(std::span<const Element> t);

/**
 * A tuple over a fixed ring; the sign is present only once the tuple has been
 * checked against the quiddity equation.
 */
class QuiddityTuple {
 public:
  QuiddityTuple(RingPtr ring, Tuple entries);

  /// Checks the equation and returns the tuple with its sign, or nothing.
  static std::optional<QuiddityTuple> verify(RingPtr ring, Tuple entries);

  const RingPtr& ring() const noexcept { return ring_; }
  const Tuple& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::optional<QuidditySign>& sign() const noexcept { return sign_; }
  bool verified() const noexcept { return sign_.has_value(); }
  /// Recomputes M_n and compares it with the recorded sign.
  bool recheck() const;

 private:
  RingPtr ring_;
  Tuple entries_;
  std::optional<QuidditySign> sign_;
};

}  // namespace quiddity
