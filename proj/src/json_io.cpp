#include "quiddity/json_io.hpp"

namespace quiddity {

namespace {

template <class T>
Json scan_list_json(const ScanList<T>& l) {
  return {{"status", to_string(l.status)}, {"count", l.items.size()}, {"note", l.note}};
}

}  // namespace

Json entries_json(const Ring& ring, std::span<const Element> t) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back(ring.format(x));
  return out;
}

Json sign_json(const std::optional<QuidditySign>& s) {
  if (!s) return nullptr;
  return s->value;
}

Json tuple_json(const QuiddityTuple& t) {
  Json j{{"ring", t.ring()->expression()}, {"tuple", entries_json(*t.ring(), t.entries())}, {"sign", sign_json(t.sign())}};
  if (t.sign() && t.sign()->char2) j["characteristic_2"] = true;
  return j;
}

Json certificate_json(const Ring& ring, const ReductionCertificate& c) {
  return {{"transform", {{"rotation", c.transform.rotation}, {"reversed", c.transform.reversed}}},
          {"l", c.l},
          {"m", c.m},
          {"a", entries_json(ring, c.a)},
          {"b", entries_json(ring, c.b)},
          {"sign_a", c.sign_a.value},
          {"sign_b", c.sign_b.value}};
}

Json ell_report_json(const EllReport& r, bool with_timing) {
  Json by_size = Json::object();
  for (const auto& [n, list] : r.irreducibles_by_size) {
    Json l = Json::array();
    for (const auto& q : list) l.push_back(entries_json(*r.ring, q.entries()));
    by_size[std::to_string(n)] = std::move(l);
  }
  Json counts = Json::object();
  for (const auto& [n, c] : r.class_counts) counts[std::to_string(n)] = c;
  Json j{{"ring", r.ring->expression()},
         {"cardinality", r.cardinality},
         {"characteristic", r.characteristic},
         {"sl2_order", r.sl2_order},
         {"lower_bound", r.lower_bound},
         {"upper_bound", r.upper_bound},
         {"ell", r.ell},
         {"irreducibles_by_size", std::move(by_size)},
         {"class_counts", std::move(counts)},
         {"provenance", r.provenance}};
  if (with_timing) j["timing_seconds"] = r.timing.count();
  return j;
}

Json bounded_search_json(const RingPtr& ring, std::size_t n, const SearchBox& box, const BoundedSearchResult& r) {
  Json list = Json::array();
  for (const auto& q : r.irreducibles) list.push_back(entries_json(*ring, q.entries()));
  return {{"ring", ring->expression()},
          {"size", n},
          {"box", {{"height", box.height}, {"degree", box.degree}, {"elements", r.box_size}}},
          {"candidates", r.candidates},
          {"irreducibles", std::move(list)},
          {"count", r.irreducibles.size()},
          {"scope", r.scope}};
}

Json family_json(const FamilyResult& f) {
  Json members = Json::array();
  for (const auto& m : f.members) {
    members.push_back({{"label", m.label},
                       {"tuple", entries_json(*m.tuple.ring(), m.tuple.entries())},
                       {"size", m.tuple.size()},
                       {"sign", sign_json(m.tuple.sign())},
                       {"verdict", to_string(m.verdict)}});
  }
  Json params = Json::object();
  for (const auto& [k, v] : f.spec.params) params[k] = v;
  return {{"family", f.spec.name}, {"params", std::move(params)}, {"ring", f.ring->expression()}, {"members", members}};
}

Json criteria_json(const CriteriaReport& r) {
  const Ring& ring = *r.ring;
  Json flags = Json::array();
  for (const auto& f : r.flags) {
    Json ws = Json::array();
    for (const auto& w : f.witnesses) {
      Json wj = Json::object();
      switch (f.criterion) {
        case Criterion::CharNotIn023:
          wj["characteristic"] = w.value;
          break;
        case Criterion::FiniteNotZ2Z3:
          wj["cardinality"] = w.value;
          break;
        case Criterion::HasNilpotent:
          wj["element"] = ring.format(*w.element);
          wj["exponent"] = w.exponent;
          break;
        case Criterion::Decomposable:
          wj["idempotent"] = ring.format(*w.element);
          break;
        case Criterion::ExtraUnit:
          wj["unit"] = ring.format(*w.element);
          wj["inverse"] = ring.format(*w.inverse);
          break;
      }
      ws.push_back(std::move(wj));
    }
    flags.push_back({{"flag", to_string(f.criterion)}, {"witnesses", std::move(ws)}});
  }
  Json j{{"ring", ring.expression()},
         {"subject", r.subject},
         {"flags", std::move(flags)},
         {"conclusion", to_string(r.conclusion)},
         {"reason", r.reason},
         {"characteristic", ring.characteristic()},
         {"scan",
          {{"units", scan_list_json(r.scan.units)},
           {"nilpotents", scan_list_json(r.scan.nilpotents)},
           {"idempotents", scan_list_json(r.scan.idempotents)}}}};
  j["unbounded_claim"] = r.unbounded_claim ? Json(*r.unbounded_claim) : Json(nullptr);
  return j;
}

}  // namespace quiddity
