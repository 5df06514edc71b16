#pragma once

/**
 * @file enumeration.hpp
 * @brief Exhaustive enumeration of λ-quiddities over small finite rings, and ℓ_A.
 *
 * The search is a depth-first walk over entries a_1, a_2, ... carrying the
 * partial product g = N(a_k)···N(a_1) as an SL₂ index.  A prefix survives only
 * if ±Id is still reachable from g in the remaining number of steps.  For
 * irreducibles, a prefix is also cut as soon as it contains a contiguous
 * segment of length <= n-3 whose continuant is ±1, since every completion
 * is then reducible.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "quiddity/finite_ring.hpp"
#include "quiddity/quiddity.hpp"

namespace quiddity {

/// |SL₂(A)| by brute force.
std::uint64_t sl2_order(const RingPtr& ring);

/// |SL₂(A)|/|A| + 2 in characteristic 2, |SL₂(A)|/(2|A|) + 2 otherwise.
std::uint64_t ell_upper_bound(const RingPtr& ring);

/// max(4, char A) when char A != 2, else 4.
std::uint64_t ell_lower_bound(const RingPtr& ring);

enum class Pruning {
  Full,  // reachability table, segment cuts, canonical minimum-first cuts
  None,  // plain |A|^n product; irreducibility decided by is_irreducible
};

/**
 * Tables for one finite ring, built once and shared read-only.  Reachability
 * rows are computed up to @c max_size steps.
 */
class Enumerator {
 public:
  Enumerator(RingPtr ring, std::size_t max_size);

  const FiniteRing& ring() const noexcept { return ring_; }
  const SL2Group& group() const noexcept { return group_; }
  const ReachabilityTable& reachability() const noexcept { return reach_; }

  using Visitor = std::function<void(std::span<const ElemIndex>, QuidditySign)>;

  /// Calls @p visit for each λ-quiddity of size n in lexicographic (encoding) order.
  void for_each_quiddity(std::size_t n, bool canonical_only, const Visitor& visit) const;

  std::vector<QuiddityTuple> quiddities(std::size_t n, bool canonical_only, unsigned jobs = 1,
                                        Pruning pruning = Pruning::Full) const;

  /// Canonical representatives of the irreducible classes of size n >= 3, sorted.
  std::vector<QuiddityTuple> irreducibles(std::size_t n, unsigned jobs = 1, Pruning pruning = Pruning::Full) const;

  /// Number of size-n quiddities by transfer-matrix counting over SL₂.
  std::uint64_t count_quiddities(std::size_t n) const;

 private:
  std::vector<std::vector<ElemIndex>> search(std::size_t n, bool canonical_only, bool irreducible_only,
                                             Pruning pruning, unsigned jobs) const;
  QuiddityTuple to_tuple(std::span<const ElemIndex> t) const;

  FiniteRing ring_;
  SL2Group group_;
  ReachabilityTable reach_;
  std::size_t max_size_;
};

std::vector<QuiddityTuple> enumerate_quiddities(const RingPtr& ring, std::size_t n, bool canonical_only,
                                                unsigned jobs = 1);
std::vector<QuiddityTuple> enumerate_irreducibles(const RingPtr& ring, std::size_t n, unsigned jobs = 1);

struct EllReport {
  RingPtr ring;
  std::uint64_t cardinality = 0;
  std::uint64_t characteristic = 0;
  std::uint64_t sl2_order = 0;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::uint64_t ell = 0;
  /// Sizes 3..ell; the entry at ell is non-empty.
  std::map<std::size_t, std::vector<QuiddityTuple>> irreducibles_by_size;
  /// Number of irreducible classes for every size searched, 3..upper_bound.
  std::map<std::size_t, std::size_t> class_counts;
  std::chrono::duration<double> timing{};
  /// Exactness rests on the published upper bound, which is used, not re-proved.
  std::string provenance;
};

/// Enumerates irreducibles for n = 3..ell_upper_bound and reports the largest size found.
EllReport compute_ell(const RingPtr& ring, unsigned jobs = 1);

}  // namespace quiddity
