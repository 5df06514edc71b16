#pragma once

#include <string>
#include <vector>

#include "quiddity/box.hpp"
#include "quiddity/ring.hpp"

namespace quiddity {

/// How much a scanned list can be trusted.
enum class ScanStatus {
  Complete,   // the list is exactly the set
  Partial,    // every listed item is genuine; the set may be larger
  Undecided,  // no structural rule and the witness search found nothing beyond the trivial items
};

std::string to_string(ScanStatus s);

struct UnitWitness {
  Element unit;
  Element inverse;
};

struct NilpotentWitness {
  Element element;        // nonzero
  std::uint64_t exponent; // smallest k with element^k = 0
};

template <class T>
struct ScanList {
  ScanStatus status = ScanStatus::Undecided;
  std::vector<T> items;
  std::string note;
};

struct RingScan {
  ScanList<UnitWitness> units;
  ScanList<NilpotentWitness> nilpotents;
  ScanList<Element> idempotents;  // includes 0 and 1
};

/**
 * Units, nonzero nilpotents and idempotents of @p ring.
 *
 * Finite rings are scanned exhaustively.  Z and fraction fields use their
 * structural descriptions.  A polynomial ring B[x] inherits from B (units and
 * nilpotents are complete only when B is reduced; idempotents of B[x] are those
 * of B).  Products combine factorwise.  Any other infinite ring is searched in
 * @p box for witnesses and is reported Partial or Undecided, never Complete.
 */
RingScan unit_and_nilpotent_scan(const RingPtr& ring, const SearchBox& box = SearchBox{6, 2, 2});

}  // namespace quiddity
