#include "quiddity/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace quiddity {

namespace {

FamilyMember make_member(const RingPtr& ring, std::string label, Tuple entries, Verdict expected) {
  auto q = QuiddityTuple::verify(ring, entries);
  if (!q) throw std::logic_error(label + " = " + format_tuple(entries) + " is not a quiddity over " + ring->expression());
  const Verdict v = is_irreducible(*q).verdict;
  if (v != expected) {
    throw std::logic_error(label + " = " + format_tuple(entries) + " is " + to_string(v) + ", expected " +
                           to_string(expected));
  }
  return {std::move(label), std::move(*q), v};
}

std::vector<FamilyMember> small_family(const RingPtr& ring, const Element& p, const std::string& name) {
  const Ring& r = *ring;
  const Element one = r.one();
  const Element m1 = r.neg(one);
  const Element z = r.zero();
  const bool unit_entry = p.is_one() || p == m1;
  const Verdict four = unit_entry ? Verdict::Reducible : Verdict::Irreducible;
  std::vector<FamilyMember> out;
  auto push = [&](std::string label, Tuple t, Verdict v) {
    for (const auto& m : out) {
      if (m.tuple.entries() == t) return;
    }
    out.push_back(make_member(ring, std::move(label), std::move(t), v));
  };
  push("(1,1,1)", {one, one, one}, Verdict::Irreducible);
  push("(-1,-1,-1)", {m1, m1, m1}, Verdict::Irreducible);
  push("(0," + name + ",0,-" + name + ")", {z, p, z, r.neg(p)}, four);
  push("(" + name + ",0,-" + name + ",0)", {p, z, r.neg(p), z}, four);
  return out;
}

std::uint64_t parse_nat(const std::string& key, const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      text.size() > 9) {
    throw std::invalid_argument("parameter " + key + " must be a natural number, got '" + text + "'");
  }
  return std::stoull(text);
}

const std::string& require(const FamilySpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw std::invalid_argument("family " + spec.name + " needs parameter " + key);
  return it->second;
}

void allow_only(const FamilySpec& spec, std::initializer_list<std::string> keys) {
  for (const auto& [k, v] : spec.params) {
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
      throw std::invalid_argument("family " + spec.name + " has no parameter " + k);
    }
  }
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

constexpr std::size_t kMaxWitnesses = 8;

}  // namespace

std::vector<FamilyMember> family_irr_Z(const mpz_class& a) {
  const RingPtr z = Ring::integers();
  return small_family(z, z->from_int(a), "a");
}

std::vector<FamilyMember> family_irr_poly(const RingPtr& ring, const Element& p) {
  const bool ok = ring->kind() == RingKind::Polynomial &&
                  (ring->coefficient_ring()->kind() == RingKind::Integers ||
                   (ring->coefficient_ring()->kind() == RingKind::ModInt &&
                    (ring->coefficient_ring()->modulus_n() == 2 || ring->coefficient_ring()->modulus_n() == 3)));
  if (!ok) throw std::invalid_argument("family_irr_poly needs Z[X], Z/2[X] or Z/3[X], got " + ring->expression());
  ring->check_member(p);
  return small_family(ring, p, "P");
}

FamilyMember family_q_field(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("q_field needs n >= 2");
  const RingPtr q = Ring::rationals();
  const mpz_class m(static_cast<unsigned long>(n));
  const Element den = q->from_int(2 * m + 1);
  Tuple t{den, q->divide(q->from_int(m + 1), den), q->from_int(3)};
  for (std::uint64_t i = 0; i + 1 < n; ++i) t.push_back(q->from_int(2));
  t.push_back(q->divide(q->from_int(2 * m), den));
  return make_member(q, "q_field(" + std::to_string(n) + ")", std::move(t), Verdict::Irreducible);
}

RingPtr zeta8_ring() {
  static const RingPtr ring = Ring::parse("Z[X]/(X^4+1)");
  return ring;
}

FamilyMember family_zeta8(std::uint64_t l) {
  if (l < 1) throw std::invalid_argument("zeta8 needs l >= 1");
  const RingPtr ring = zeta8_ring();
  const Ring& r = *ring;
  const Element s = r.parse_element("X - X^3");
  const Element is = r.parse_element("X + X^3");
  const Element two_s = r.add(s, s);
  Tuple block;
  for (std::uint64_t i = 0; i < 2 * l + 1; ++i) block.push_back(i % 2 == 0 ? s : two_s);
  Tuple t{is, r.sub(s, is)};
  t.insert(t.end(), block.begin(), block.end());
  t.push_back(r.add(s, is));
  t.push_back(r.neg(is));
  t.push_back(r.sub(is, s));
  for (const auto& x : block) t.push_back(r.neg(x));
  t.push_back(r.neg(r.add(s, is)));
  if (t.size() != 4 * l + 8) throw std::logic_error("zeta8 tuple has the wrong size");
  return make_member(ring, "zeta8(" + std::to_string(l) + ")", std::move(t), Verdict::Irreducible);
}

FamilyResult generate_family(const FamilySpec& spec) {
  FamilyResult res{spec, nullptr, {}};
  if (spec.name == "irr_Z") {
    allow_only(spec, {"a"});
    res.ring = Ring::integers();
    res.members = family_irr_Z(res.ring->parse_element(require(spec, "a")).integer());
  } else if (spec.name == "irr_ZX") {
    allow_only(spec, {"P"});
    res.ring = Ring::parse("Z[X]");
    res.members = family_irr_poly(res.ring, res.ring->parse_element(require(spec, "P")));
  } else if (spec.name == "irr_ZkX") {
    allow_only(spec, {"k", "P"});
    const auto k = parse_nat("k", require(spec, "k"));
    if (k != 2 && k != 3) throw std::invalid_argument("irr_ZkX needs k = 2 or k = 3");
    res.ring = Ring::parse("Z/" + std::to_string(k) + "[X]");
    res.members = family_irr_poly(res.ring, res.ring->parse_element(require(spec, "P")));
  } else if (spec.name == "q_field") {
    allow_only(spec, {"n"});
    res.ring = Ring::rationals();
    res.members.push_back(family_q_field(parse_nat("n", require(spec, "n"))));
  } else if (spec.name == "zeta8") {
    allow_only(spec, {"l"});
    res.ring = zeta8_ring();
    res.members.push_back(family_zeta8(parse_nat("l", require(spec, "l"))));
  } else {
    throw std::invalid_argument("unknown family '" + spec.name + "' (irr_Z, irr_ZX, irr_ZkX, q_field, zeta8)");
  }
  return res;
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::CharNotIn023:
      return "char_not_in_023";
    case Criterion::HasNilpotent:
      return "has_nilpotent";
    case Criterion::Decomposable:
      return "decomposable";
    case Criterion::ExtraUnit:
      return "extra_unit";
    case Criterion::FiniteNotZ2Z3:
      return "finite_not_Z2_Z3";
  }
  return "?";
}

std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::PolynomialRingUnbounded:
      return "polynomial_ring_unbounded";
    case Conclusion::BoundedKnown:
      return "bounded_known";
    case Conclusion::Undecided:
      return "undecided";
  }
  return "?";
}

bool has_flag(const CriteriaReport& report, Criterion c) {
  return std::any_of(report.flags.begin(), report.flags.end(), [&](const auto& f) { return f.criterion == c; });
}

CertificateCheck verify_witness(const RingPtr& ring, Criterion c, const Witness& w) {
  const Ring& r = *ring;
  switch (c) {
    case Criterion::CharNotIn023: {
      const std::uint64_t ch = w.value;
      if (ch == 0 || ch == 2 || ch == 3) return {false, "characteristic is 0, 2 or 3"};
      if (!r.from_int(mpz_class(static_cast<unsigned long>(ch))).is_zero()) return {false, "value * 1 is not zero"};
      for (auto p : prime_factors(ch)) {
        if (r.from_int(mpz_class(static_cast<unsigned long>(ch / p))).is_zero()) {
          return {false, "a proper divisor already kills 1"};
        }
      }
      return {true, {}};
    }
    case Criterion::HasNilpotent: {
      if (!w.element || w.element->is_zero()) return {false, "missing or zero element"};
      if (w.exponent == 0 || !r.pow(*w.element, w.exponent).is_zero()) return {false, "power is not zero"};
      return {true, {}};
    }
    case Criterion::Decomposable: {
      if (!w.element) return {false, "missing element"};
      const Element& e = *w.element;
      if (e.is_zero() || e.is_one()) return {false, "idempotent is 0 or 1"};
      if (!r.equal(r.mul(e, e), e)) return {false, "e^2 != e"};
      return {true, {}};
    }
    case Criterion::ExtraUnit: {
      if (!w.element || !w.inverse) return {false, "missing unit or inverse"};
      const Element& u = *w.element;
      if (u.is_one() || r.equal(u, r.from_int(-1))) return {false, "unit is 1 or -1"};
      if (!r.mul(u, *w.inverse).is_one()) return {false, "u * inverse != 1"};
      return {true, {}};
    }
    case Criterion::FiniteNotZ2Z3: {
      if (!r.is_finite() || *r.cardinality() != w.value) return {false, "cardinality differs"};
      if (w.value == 2 || w.value == 3) return {false, "ring has 2 or 3 elements"};
      return {true, {}};
    }
  }
  return {false, "unknown criterion"};
}

CriteriaReport unboundedness_criteria(const RingPtr& ring) {
  const Ring& r = *ring;
  CriteriaReport rep;
  rep.ring = ring;
  rep.subject = r.expression() + "[X]";
  rep.scan = unit_and_nilpotent_scan(ring);
  const Element m1 = r.from_int(-1);

  const std::uint64_t ch = r.characteristic();
  if (ch != 0 && ch != 2 && ch != 3) rep.flags.push_back({Criterion::CharNotIn023, {Witness{{}, {}, 0, ch}}});

  CriterionFlag nil{Criterion::HasNilpotent, {}};
  for (const auto& n : rep.scan.nilpotents.items) {
    if (nil.witnesses.size() < kMaxWitnesses) nil.witnesses.push_back({n.element, {}, n.exponent, 0});
  }
  if (!nil.witnesses.empty()) rep.flags.push_back(std::move(nil));

  CriterionFlag dec{Criterion::Decomposable, {}};
  for (const auto& e : rep.scan.idempotents.items) {
    if (!e.is_zero() && !e.is_one() && dec.witnesses.size() < kMaxWitnesses) dec.witnesses.push_back({e, {}, 0, 0});
  }
  if (!dec.witnesses.empty()) rep.flags.push_back(std::move(dec));

  CriterionFlag unit{Criterion::ExtraUnit, {}};
  for (const auto& u : rep.scan.units.items) {
    if (u.unit.is_one() || r.equal(u.unit, m1)) continue;
    if (unit.witnesses.size() < kMaxWitnesses) unit.witnesses.push_back({u.unit, u.inverse, 0, 0});
  }
  if (!unit.witnesses.empty()) rep.flags.push_back(std::move(unit));

  const bool finite = r.is_finite();
  const std::uint64_t card = finite ? *r.cardinality() : 0;
  if (finite && card != 2 && card != 3) rep.flags.push_back({Criterion::FiniteNotZ2Z3, {Witness{{}, {}, 0, card}}});

  for (const auto& f : rep.flags) {
    for (const auto& w : f.witnesses) {
      const auto check = verify_witness(ring, f.criterion, w);
      if (!check.ok) throw std::logic_error("witness for " + to_string(f.criterion) + " fails: " + check.reason);
    }
  }

  if (!rep.flags.empty()) {
    rep.conclusion = Conclusion::PolynomialRingUnbounded;
    rep.reason = "flag " + to_string(rep.flags.front().criterion) + " holds with a verified witness";
    rep.unbounded_claim =
        "ell of " + rep.subject +
        " is +infinity: published result for rings that are finite other than Z/2 and Z/3, or have characteristic "
        "outside {0, 2, 3}, a nonzero nilpotent, a nontrivial idempotent, or a unit other than 1 and -1; "
        "quoted, not computed";
  } else if (finite) {
    rep.conclusion = Conclusion::BoundedKnown;
    rep.reason = "A has " + std::to_string(card) + " elements, so A = Z/" + std::to_string(card) + "; ell of " +
                 rep.subject + " is 4 by a published result";
  } else {
    rep.conclusion = Conclusion::Undecided;
    std::vector<std::string> open;
    if (rep.scan.units.status != ScanStatus::Complete) open.push_back("units " + to_string(rep.scan.units.status));
    if (rep.scan.nilpotents.status != ScanStatus::Complete) {
      open.push_back("nilpotents " + to_string(rep.scan.nilpotents.status));
    }
    if (rep.scan.idempotents.status != ScanStatus::Complete) {
      open.push_back("idempotents " + to_string(rep.scan.idempotents.status));
    }
    if (open.empty()) {
      rep.reason = "none of the criteria apply";
    } else {
      rep.reason = "no witness found and the structural scan is incomplete:";
      for (const auto& o : open) rep.reason += " " + o + ";";
      rep.reason.pop_back();
    }
  }
  return rep;
}

}  // namespace quiddity
