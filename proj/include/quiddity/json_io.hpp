#pragma once

/**
 * @file json_io.hpp
 * @brief JSON views of the library's results.  Objects use sorted keys, so
 * equal values always serialize to identical bytes.
 */

#include "json.hpp"
#include "quiddity/bounded_search.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/families.hpp"
#include "quiddity/irreducibility.hpp"

namespace quiddity {

using Json = nlohmann::json;

Json entries_json(const Ring& ring, std::span<const Element> t);
Json sign_json(const std::optional<QuidditySign>& s);
/// {"ring", "tuple", "sign"}
Json tuple_json(const QuiddityTuple& t);
Json certificate_json(const Ring& ring, const ReductionCertificate& c);
/// Timing is left out unless @p with_timing, so reports are reproducible byte for byte.
Json ell_report_json(const EllReport& r, bool with_timing = false);
Json bounded_search_json(const RingPtr& ring, std::size_t n, const SearchBox& box, const BoundedSearchResult& r);
Json family_json(const FamilyResult& f);
Json criteria_json(const CriteriaReport& r);

}  // namespace quiddity
