#pragma once

/**
 * @file finite_ring.hpp
 * @brief Dense index tables for small finite rings and their SL₂.
 *
 * Elements are numbered in encoding order, so comparing indices is comparing
 * elements.  All tables are immutable after construction and may be shared
 * between threads.
 */

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "quiddity/quiddity.hpp"
#include "quiddity/ring.hpp"

namespace quiddity {

using ElemIndex = std::uint16_t;
using GroupIndex = std::uint32_t;

class FiniteRing {
 public:
  static constexpr std::size_t kMaxSize = 64;

  explicit FiniteRing(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& element(ElemIndex i) const { return elements_[i]; }
  ElemIndex index_of(const Element& x) const;

  ElemIndex add(ElemIndex a, ElemIndex b) const { return add_[a * size() + b]; }
  ElemIndex mul(ElemIndex a, ElemIndex b) const { return mul_[a * size() + b]; }
  ElemIndex neg(ElemIndex a) const { return neg_[a]; }
  ElemIndex sub(ElemIndex a, ElemIndex b) const { return add(a, neg(b)); }
  ElemIndex zero() const noexcept { return zero_; }
  ElemIndex one() const noexcept { return one_; }
  ElemIndex minus_one() const noexcept { return minus_one_; }
  bool is_pm1(ElemIndex a) const noexcept { return a == one_ || a == minus_one_; }

  Tuple to_elements(std::span<const ElemIndex> t) const;

 private:
  RingPtr ring_;
  std::vector<Element> elements_;
  std::vector<ElemIndex> add_, mul_, neg_;
  ElemIndex zero_ = 0, one_ = 0, minus_one_ = 0;
};

/// SL₂(A) by brute force over |A|⁴ candidates, with the step action g ↦ N(a)·g.
class SL2Group {
 public:
  using Matrix = std::array<ElemIndex, 4>;  // a11, a12, a21, a22

  explicit SL2Group(const FiniteRing& ring);

  std::size_t order() const noexcept { return matrices_.size(); }
  const Matrix& matrix(GroupIndex g) const { return matrices_[g]; }
  GroupIndex index_of(const Matrix& m) const;
  GroupIndex identity() const noexcept { return identity_; }
  GroupIndex minus_identity() const noexcept { return minus_identity_; }
  bool is_pm_identity(GroupIndex g) const noexcept { return g == identity_ || g == minus_identity_; }
  /// Index of N(a)·g.
  GroupIndex step(GroupIndex g, ElemIndex a) const { return step_[static_cast<std::size_t>(g) * ring_size_ + a]; }
  std::size_t ring_size() const noexcept { return ring_size_; }

 private:
  std::size_t ring_size_;
  std::vector<Matrix> matrices_;
  std::vector<GroupIndex> lookup_;  // dense over |A|⁴, npos for det != 1
  std::vector<GroupIndex> step_;
  GroupIndex identity_ = 0, minus_identity_ = 0;
};

/**
 * reachable(g, r): some r factors N(a_1), ..., N(a_r) take g to ±Id.
 * Row r is computed from row r-1 by one backward sweep.
 */
class ReachabilityTable {
 public:
  ReachabilityTable(const SL2Group& group, std::size_t max_steps);

  std::size_t max_steps() const noexcept { return rows_.size() - 1; }
  bool reachable(GroupIndex g, std::size_t r) const { return rows_[r][g] != 0; }

 private:
  std::vector<std::vector<std::uint8_t>> rows_;
};

}  // namespace quiddity
