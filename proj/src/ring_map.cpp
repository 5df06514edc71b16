#include "quiddity/ring_map.hpp"

namespace quiddity {

RingMap RingMap::from_table(RingPtr domain, RingPtr codomain, const std::vector<std::pair<Element, Element>>& table) {
  if (!domain->is_finite() || !codomain->is_finite()) {
    throw RingMapError("explicit ring maps need finite rings");
  }
  RingMap f(domain, codomain);
  std::unordered_map<std::string, std::string> preimage;
  for (const auto& [x, y] : table) {
    domain->check_member(x);
    codomain->check_member(y);
    if (!f.table_.emplace(domain->encode(x), y).second) {
      throw RingMapError("element " + x.to_string() + " appears twice in the map table");
    }
    if (auto [it, fresh] = preimage.emplace(codomain->encode(y), x.to_string()); !fresh) {
      throw RingMapError("not injective: " + it->second + " and " + x.to_string() + " both map to " + y.to_string());
    }
  }
  const auto elems = domain->elements();
  if (f.table_.size() != elems.size()) throw RingMapError("map table does not cover the domain");
  if (*codomain->cardinality() != elems.size()) throw RingMapError("not surjective: cardinalities differ");

  if (!codomain->equal(f(domain->one()), codomain->one())) {
    throw RingMapError("not unital: f(1) = " + f(domain->one()).to_string());
  }
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      if (!codomain->equal(f(domain->add(x, y)), codomain->add(f(x), f(y)))) {
        throw RingMapError("not additive on (" + x.to_string() + ", " + y.to_string() + ")");
      }
      if (!codomain->equal(f(domain->mul(x, y)), codomain->mul(f(x), f(y)))) {
        throw RingMapError("not multiplicative on (" + x.to_string() + ", " + y.to_string() + ")");
      }
    }
  }
  return f;
}

RingMap RingMap::from_integers(RingPtr domain, RingPtr codomain) {
  if (domain->kind() != RingKind::ModInt) throw RingMapError("integer-residue maps need a Z/N domain");
  std::vector<std::pair<Element, Element>> table;
  for (const auto& x : domain->elements()) {
    table.emplace_back(x, codomain->from_int(mpz_class(static_cast<long>(x.residue()))));
  }
  return from_table(std::move(domain), std::move(codomain), table);
}

RingMap RingMap::identity(RingPtr ring) {
  std::vector<std::pair<Element, Element>> table;
  for (const auto& x : ring->elements()) table.emplace_back(x, x);
  return from_table(ring, ring, table);
}

Element RingMap::operator()(const Element& x) const {
  auto it = table_.find(domain_->encode(x));
  if (it == table_.end()) throw RingMapError("element outside the map's domain: " + x.to_string());
  return it->second;
}

std::vector<Element> RingMap::apply(std::span<const Element> t) const {
  std::vector<Element> out;
  out.reserve(t.size());
  for (const auto& x : t) out.push_back((*this)(x));
  return out;
}

std::vector<Element> apply_ring_map(std::span<const Element> t, const RingMap& f) { return f.apply(t); }

}  // namespace quiddity
