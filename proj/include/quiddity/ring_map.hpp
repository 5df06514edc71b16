#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiddity/ring.hpp"

namespace quiddity {

/// A map failed homomorphism or bijectivity verification.
class RingMapError : public RingError {
 public:
  using RingError::RingError;
};

/**
 * A verified bijective unital ring homomorphism between finite rings, stored
 * as an explicit element table.  Construction checks f(1) = 1, additivity and
 * multiplicativity on every pair, and bijectivity; the first violation is
 * reported with the offending elements.
 */
class RingMap {
 public:
  static RingMap from_table(RingPtr domain, RingPtr codomain, const std::vector<std::pair<Element, Element>>& table);
  /// x -> codomain.from_int(x) for a Z/N domain, e.g. the CRT map Z/6 -> Z/2*Z/3.
  static RingMap from_integers(RingPtr domain, RingPtr codomain);
  static RingMap identity(RingPtr ring);

  const RingPtr& domain() const noexcept { return domain_; }
  const RingPtr& codomain() const noexcept { return codomain_; }

  Element operator()(const Element& x) const;
  std::vector<Element> apply(std::span<const Element> t) const;

 private:
  RingMap(RingPtr domain, RingPtr codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  RingPtr domain_;
  RingPtr codomain_;
  std::unordered_map<std::string, Element> table_;
};

/// Entrywise image of a tuple under a verified map.
std::vector<Element> apply_ring_map(std::span<const Element> t, const RingMap& f);

}  // namespace quiddity
