#include "quiddity/ring_scan.hpp"

#include <algorithm>

namespace quiddity {

namespace {

constexpr std::size_t kExhaustiveLimit = 4096;
constexpr std::uint64_t kWitnessPowerLimit = 8;

ScanStatus weaker(ScanStatus a, ScanStatus b) {
  if (a == ScanStatus::Complete && b == ScanStatus::Complete) return ScanStatus::Complete;
  return ScanStatus::Partial;
}

std::optional<std::uint64_t> nilpotency_index(const Ring& ring, const Element& x, std::uint64_t max_power) {
  Element p = x;
  for (std::uint64_t k = 1; k <= max_power; ++k) {
    if (p.is_zero()) return k;
    p = ring.mul(p, x);
  }
  return std::nullopt;
}

RingScan exhaustive(const RingPtr& ring) {
  const auto elems = ring->elements();
  RingScan out;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (ring->mul(x, y).is_one()) {
        out.units.items.push_back({x, y});
        break;
      }
    }
    if (!x.is_zero()) {
      if (auto k = nilpotency_index(*ring, x, elems.size())) out.nilpotents.items.push_back({x, *k});
    }
    if (ring->equal(ring->mul(x, x), x)) out.idempotents.items.push_back(x);
  }
  out.units.status = out.nilpotents.status = out.idempotents.status = ScanStatus::Complete;
  out.units.note = out.nilpotents.note = out.idempotents.note = "exhaustive";
  return out;
}

RingScan integers(const RingPtr& ring) {
  RingScan out;
  out.units = {ScanStatus::Complete, {{ring->one(), ring->one()}, {ring->from_int(-1), ring->from_int(-1)}}, "structural"};
  out.nilpotents = {ScanStatus::Complete, {}, "structural: integral domain"};
  out.idempotents = {ScanStatus::Complete, {ring->zero(), ring->one()}, "structural"};
  return out;
}

RingScan field(const RingPtr& ring) {
  RingScan out;
  std::vector<UnitWitness> units{{ring->one(), ring->one()}};
  if (!ring->equal(ring->one(), ring->from_int(-1))) units.push_back({ring->from_int(-1), ring->from_int(-1)});
  // One sample unit outside {1, -1}: a small integer or a generator.
  std::vector<Element> candidates{ring->from_int(2), ring->from_int(3)};
  for (const Ring* r = ring->domain().get(); r != nullptr;) {
    if (r->kind() == RingKind::Polynomial) {
      candidates.push_back(ring->variable(r->variable_name()));
      r = r->coefficient_ring().get();
    } else {
      r = nullptr;
    }
  }
  for (const auto& c : candidates) {
    if (c.is_zero() || c.is_one() || ring->equal(c, ring->from_int(-1))) continue;
    units.push_back({c, *ring->inverse(c)});
    break;
  }
  out.units = {ScanStatus::Partial, std::move(units), "structural: every nonzero element is a unit"};
  out.nilpotents = {ScanStatus::Complete, {}, "structural: field"};
  out.idempotents = {ScanStatus::Complete, {ring->zero(), ring->one()}, "structural: field"};
  return out;
}

RingScan polynomial(const RingPtr& ring, const SearchBox& box) {
  const RingScan base = unit_and_nilpotent_scan(ring->coefficient_ring(), box);
  RingScan out;
  const bool reduced = base.nilpotents.status == ScanStatus::Complete && base.nilpotents.items.empty();
  for (const auto& u : base.units.items) out.units.items.push_back({ring->coerce(u.unit), ring->coerce(u.inverse)});
  for (const auto& n : base.nilpotents.items) out.nilpotents.items.push_back({ring->coerce(n.element), n.exponent});
  for (const auto& e : base.idempotents.items) out.idempotents.items.push_back(ring->coerce(e));
  out.units.status = reduced && base.units.status == ScanStatus::Complete ? ScanStatus::Complete : ScanStatus::Partial;
  out.units.note = reduced ? "structural: units of a reduced base" : "structural: base units; 1 + n*x units omitted";
  out.nilpotents.status = reduced ? ScanStatus::Complete : ScanStatus::Partial;
  out.nilpotents.note = reduced ? "structural: reduced base" : "structural: base nilpotents only";
  out.idempotents.status = base.idempotents.status == ScanStatus::Complete ? ScanStatus::Complete : ScanStatus::Partial;
  out.idempotents.note = "structural: idempotents of the base";
  return out;
}

RingScan product(const RingPtr& ring, const SearchBox& box) {
  const RingScan l = unit_and_nilpotent_scan(ring->left(), box);
  const RingScan r = unit_and_nilpotent_scan(ring->right(), box);
  RingScan out;
  for (const auto& a : l.units.items)
    for (const auto& b : r.units.items)
      out.units.items.push_back({ring->pair(a.unit, b.unit), ring->pair(a.inverse, b.inverse)});
  // Nilpotents of a product: pairs of nilpotent-or-zero components, not both zero.
  std::vector<NilpotentWitness> ln{{ring->left()->zero(), 0}}, rn{{ring->right()->zero(), 0}};
  ln.insert(ln.end(), l.nilpotents.items.begin(), l.nilpotents.items.end());
  rn.insert(rn.end(), r.nilpotents.items.begin(), r.nilpotents.items.end());
  for (const auto& a : ln)
    for (const auto& b : rn)
      if (a.exponent != 0 || b.exponent != 0) {
        out.nilpotents.items.push_back({ring->pair(a.element, b.element), std::max(a.exponent, b.exponent)});
      }
  for (const auto& a : l.idempotents.items)
    for (const auto& b : r.idempotents.items) out.idempotents.items.push_back(ring->pair(a, b));
  out.units.status = weaker(l.units.status, r.units.status);
  out.nilpotents.status = weaker(l.nilpotents.status, r.nilpotents.status);
  out.idempotents.status = weaker(l.idempotents.status, r.idempotents.status);
  out.units.note = out.nilpotents.note = out.idempotents.note = "structural: componentwise";
  return out;
}

RingScan box_search(const RingPtr& ring, const SearchBox& box) {
  const auto elems = box_elements(ring, box, 20'000);
  const Element one = ring->one();
  const Element minus_one = ring->from_int(-1);
  RingScan out;
  out.units.items.push_back({one, one});
  if (!ring->equal(one, minus_one)) out.units.items.push_back({minus_one, minus_one});
  out.idempotents.items = {ring->zero(), one};
  bool unit_found = false;
  for (const auto& x : elems) {
    if (x.is_one() || ring->equal(x, minus_one) || x.is_zero()) continue;
    for (const auto& y : elems) {
      if (ring->mul(x, y).is_one()) {
        out.units.items.push_back({x, y});
        unit_found = true;
        break;
      }
    }
  }
  for (const auto& x : elems) {
    if (x.is_zero()) continue;
    if (auto k = nilpotency_index(*ring, x, kWitnessPowerLimit)) out.nilpotents.items.push_back({x, *k});
  }
  for (const auto& x : elems) {
    if (x.is_zero() || x.is_one()) continue;
    if (ring->equal(ring->mul(x, x), x)) out.idempotents.items.push_back(x);
  }
  const std::string note = "box search (height " + std::to_string(box.height) + ", degree " +
                           std::to_string(box.degree) + "); no structural rule";
  out.units.status = unit_found ? ScanStatus::Partial : ScanStatus::Undecided;
  out.nilpotents.status = out.nilpotents.items.empty() ? ScanStatus::Undecided : ScanStatus::Partial;
  out.idempotents.status = out.idempotents.items.size() > 2 ? ScanStatus::Partial : ScanStatus::Undecided;
  out.units.note = out.nilpotents.note = out.idempotents.note = note;
  return out;
}

}  // namespace

std::string to_string(ScanStatus s) {
  switch (s) {
    case ScanStatus::Complete:
      return "complete";
    case ScanStatus::Partial:
      return "partial";
    case ScanStatus::Undecided:
      return "undecided";
  }
  return "?";
}

RingScan unit_and_nilpotent_scan(const RingPtr& ring, const SearchBox& box) {
  if (ring->is_finite() && *ring->cardinality() <= kExhaustiveLimit) return exhaustive(ring);
  switch (ring->kind()) {
    case RingKind::Integers:
      return integers(ring);
    case RingKind::Fraction:
      return field(ring);
    case RingKind::Polynomial:
      return polynomial(ring, box);
    case RingKind::Product:
      return product(ring, box);
    default:
      return box_search(ring, box);
  }
}

}  // namespace quiddity
