#pragma once

/**
 * @file bounded_search.hpp
 * @brief Irreducible quiddities whose entries lie in a finite box of an infinite ring.
 *
 * The search is meet-in-the-middle: the first h entries give L = M_h, the rest
 * give R, and the tuple is a quiddity iff R = ±adj(L).  Each half is walked
 * depth first with segment-continuant cuts, halves are joined through a hash
 * of the matrix, and every join is re-checked exactly.  Results say nothing
 * about tuples with entries outside the box.
 */

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "quiddity/box.hpp"
#include "quiddity/quiddity.hpp"

namespace quiddity {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t candidates, std::uint64_t budget);
  std::uint64_t candidates() const noexcept { return candidates_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t candidates_;
  std::uint64_t budget_;
};

struct BoundedSearchResult {
  std::vector<QuiddityTuple> irreducibles;  // canonical representatives, sorted
  std::size_t box_size = 0;
  std::uint64_t candidates = 0;  // |S|^h + |S|^(n-h)
  std::uint64_t joins = 0;       // quiddities assembled from the two halves before the final checks
  std::string scope = "complete within box only";
};

/// Number of half-word candidates the search would visit before pruning.
std::uint64_t bounded_search_candidates(std::size_t box_size, std::size_t n);

/// Throws BudgetExceeded when the candidate count is above @p budget, and
/// std::invalid_argument when n < 3 or n exceeds box.max_size.
BoundedSearchResult bounded_search(const RingPtr& ring, std::size_t n, const SearchBox& box,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace quiddity
