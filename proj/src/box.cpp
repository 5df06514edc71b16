#include "quiddity/box.hpp"

#include <algorithm>
#include <map>

namespace quiddity {

namespace {

std::vector<Element> sorted_unique(const Ring& ring, std::vector<Element> in) {
  std::map<std::string, Element> keyed;
  for (auto& e : in) keyed.emplace(ring.encode(e), std::move(e));
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [k, e] : keyed) out.push_back(std::move(e));
  return out;
}

void check_limit(std::size_t count, std::size_t limit, const Ring& ring) {
  if (count > limit) {
    throw RingError("search box over " + ring.expression() + " has " + std::to_string(count) +
                    " elements (limit " + std::to_string(limit) + ")");
  }
}

std::vector<Element> coefficient_vectors(const Ring& ring, const std::vector<Element>& coeffs, std::size_t length,
                                         std::size_t limit) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < length; ++i) {
    total *= coeffs.size();
    check_limit(total, limit, ring);
  }
  std::vector<Element> out;
  out.reserve(total);
  std::vector<std::size_t> digits(length, 0);
  while (true) {
    std::vector<Element> c;
    for (std::size_t i = 0; i < length; ++i) c.push_back(coeffs[digits[i]]);
    out.push_back(ring.polynomial_from(std::move(c)));
    std::size_t i = 0;
    while (i < length && ++digits[i] == coeffs.size()) digits[i++] = 0;
    if (i == length) break;
  }
  return out;
}

}  // namespace

std::vector<Element> box_elements(const RingPtr& ring, const SearchBox& box, std::size_t limit) {
  if (ring->is_finite() && *ring->cardinality() <= limit) return ring->elements();
  std::vector<Element> out;
  switch (ring->kind()) {
    case RingKind::Integers: {
      const auto h = static_cast<long>(box.height);
      check_limit(static_cast<std::size_t>(2 * h + 1), limit, *ring);
      for (long v = -h; v <= h; ++v) out.push_back(ring->from_int(v));
      break;
    }
    case RingKind::Polynomial:
      out = coefficient_vectors(*ring, box_elements(ring->coefficient_ring(), box, limit), box.degree + 1, limit);
      break;
    case RingKind::Quotient: {
      const std::size_t len = std::min<std::size_t>(ring->quotient_degree(), box.degree + 1);
      out = coefficient_vectors(*ring, box_elements(ring->coefficient_ring(), box, limit), len, limit);
      break;
    }
    case RingKind::Fraction: {
      const auto& d = ring->domain();
      const auto nums = box_elements(d, box, limit);
      std::vector<Element> dens;
      if (d->kind() == RingKind::Integers) {
        for (std::uint64_t q = 1; q <= std::max<std::uint64_t>(1, box.height); ++q) {
          dens.push_back(d->from_int(mpz_class(static_cast<unsigned long>(q))));
        }
      } else {
        for (const auto& e : nums) {
          if (!e.is_zero()) dens.push_back(e);
        }
      }
      check_limit(nums.size() * dens.size(), limit, *ring);
      for (const auto& n : nums)
        for (const auto& q : dens) out.push_back(ring->fraction_of(n, q));
      break;
    }
    case RingKind::Product: {
      const auto l = box_elements(ring->left(), box, limit);
      const auto r = box_elements(ring->right(), box, limit);
      check_limit(l.size() * r.size(), limit, *ring);
      for (const auto& x : l)
        for (const auto& y : r) out.push_back(ring->pair(x, y));
      break;
    }
    case RingKind::ModInt:
      break;  // finite, handled above
  }
  return sorted_unique(*ring, std::move(out));
}

}  // namespace quiddity
