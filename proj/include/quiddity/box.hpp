#pragma once

#include <cstdint>
#include <vector>

#include "quiddity/ring.hpp"

namespace quiddity {

/// Finite truncation of an infinite ring: integer coefficients in [-height, height],
/// polynomial entries of degree <= degree.  Finite coefficient rings are taken whole.
struct SearchBox {
  std::size_t max_size = 6;
  std::uint64_t height = 2;
  std::uint64_t degree = 2;
};

/// Every element of @p ring inside @p box, deduplicated, in encoding order.
/// Throws RingError when the box holds more than @p limit elements.
std::vector<Element> box_elements(const RingPtr& ring, const SearchBox& box, std::size_t limit = 1'000'000);

}  // namespace quiddity
