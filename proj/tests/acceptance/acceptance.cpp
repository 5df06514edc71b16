// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "quiddity/bounded_search.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/families.hpp"
#include "quiddity/irreducibility.hpp"
#include "quiddity/ring_map.hpp"
#include "support/generators.hpp"

using namespace quiddity;
using namespace quiddity::proptest;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failures; a criterion passes when none were recorded.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++count_;
  }
  void time_limit(const char* what, double seconds, double limit) {
    std::ostringstream s;
    s << what << " took " << seconds << "s (limit " << limit << "s)";
    require(seconds < limit, s.str());
    notes_.push_back(s.str());
  }
  void note(const std::string& n) { notes_.push_back(n); }
  bool ok() const { return count_ == 0; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n    failed: " + f;
    return s;
  }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
  std::size_t count_ = 0;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

template <class F>
double timed(F&& f) {
  const auto t0 = Clock::now();
  f();
  return seconds_since(t0);
}

std::set<std::string> canonical_set(const std::vector<QuiddityTuple>& qs) {
  std::set<std::string> s;
  for (const auto& q : qs) s.insert(format_tuple(q.entries()));
  return s;
}

std::vector<QuiddityTuple> all_quiddities(const RingPtr& r, std::size_t max_n) {
  std::vector<QuiddityTuple> out;
  const Enumerator e(r, max_n);
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& q : e.quiddities(n, false)) out.push_back(std::move(q));
  return out;
}

// ---- criteria ---------------------------------------------------------------

void ell_published(Check& c) {
  std::uint64_t z2 = 0, z6 = 0;
  c.time_limit("ell(Z/2)", timed([&] { z2 = compute_ell(Ring::parse("Z/2")).ell; }), 1.0);
  c.time_limit("ell(Z/6)", timed([&] { z6 = compute_ell(Ring::parse("Z/6")).ell; }), 600.0);
  c.require(z2 == 4, "ell(Z/2) = " + std::to_string(z2));
  c.require(z6 == 6, "ell(Z/6) = " + std::to_string(z6));
  c.require(ell_upper_bound(Ring::parse("Z/6")) == 14, "upper bound for Z/6 is 14");
}

void ell_sandwich(Check& c) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/2[t]/(t^2+t+1)", "Z/2*Z/2"}) {
    const auto rep = compute_ell(Ring::parse(expr));
    const std::uint64_t ch = rep.characteristic;
    const std::uint64_t lower = ch == 2 ? 4 : std::max<std::uint64_t>(4, ch);
    c.require(rep.lower_bound == lower, std::string(expr) + " lower bound");
    c.require(lower <= rep.ell && rep.ell <= rep.upper_bound,
              std::string(expr) + " ell " + std::to_string(rep.ell) + " outside [" + std::to_string(lower) + ", " +
                  std::to_string(rep.upper_bound) + "]");
    c.note(std::string(expr) + ": " + std::to_string(lower) + " <= " + std::to_string(rep.ell) +
           " <= " + std::to_string(rep.upper_bound));
  }
}

void oracle_equivalence(Check& c, bool segment_only) {
  std::size_t total = 0;
  const double secs = timed([&] {
    for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
      for (const auto& q : all_quiddities(Ring::parse(expr), 8)) {
        if (q.size() < 3) continue;
        ++total;
        std::optional<ReductionCertificate> fast;
        try {
          fast = find_reduction(q);  // asserts the segment criterion internally
        } catch (const std::logic_error& e) {
          c.require(false, std::string(expr) + " internal discrepancy: " + e.what());
          continue;
        }
        if (segment_only) {
          if (q.size() >= 4) c.require(fast.has_value() == segment_criterion(q.entries()), format_tuple(q.entries()));
          continue;
        }
        const auto slow = reduction_oracle(q);
        c.require(fast.has_value() == slow.has_value(), std::string(expr) + " " + format_tuple(q.entries()));
        if (fast) c.require(verify_certificate(*fast, q).ok, "certificate " + format_tuple(q.entries()));
      }
    }
  });
  c.note(std::to_string(total) + " quiddities of size 3..8");
  c.time_limit("exhaustive suite", secs, 300.0);
}

void q_field_family(Check& c) {
  const double secs = timed([&] {
    for (std::uint64_t n = 2; n <= 20; ++n) {
      const auto m = family_q_field(n);
      c.require(m.tuple.recheck() && m.tuple.size() == n + 3, "q_field(" + std::to_string(n) + ") quiddity");
      c.require(is_irreducible(m.tuple).verdict == Verdict::Irreducible, "q_field(" + std::to_string(n) + ") irreducible");
      if (n == 2) c.require(m.tuple.sign()->value == -1, "q_field(2) sign");
    }
  });
  c.time_limit("n = 2..20", secs, 1.0);
}

void zeta8_family(Check& c) {
  for (std::uint64_t l = 1; l <= 3; ++l) {
    const double secs = timed([&] {
      const auto m = family_zeta8(l);
      c.require(m.tuple.ring()->expression() == zeta8_ring()->expression(), "ring");
      c.require(m.tuple.size() == 4 * l + 8 && m.tuple.recheck(), "zeta8 quiddity l=" + std::to_string(l));
      c.require(is_irreducible(m.tuple).verdict == Verdict::Irreducible, "zeta8 irreducible l=" + std::to_string(l));
    });
    c.time_limit(("l=" + std::to_string(l)).c_str(), secs, 1.0);
  }
}

// Canonical classes of (0,P,0,-P) over the box with P not ±1, plus ±(1,1,1).
std::set<std::string> expected_classes(const RingPtr& r, const std::vector<Element>& box, std::size_t n) {
  std::set<std::string> out;
  if (n == 3) {
    out.insert(format_tuple(canonical_form(Tuple{r->one(), r->one(), r->one()}).sequence));
    out.insert(format_tuple(canonical_form(Tuple{-r->one(), -r->one(), -r->one()}).sequence));
  }
  if (n == 4)
    for (const auto& p : box)
      if (!p.is_one() && !(-p).is_one())
        out.insert(format_tuple(canonical_form(Tuple{r->zero(), p, r->zero(), -p}).sequence));
  return out;
}

void bounded_evidence(Check& c) {
  struct Run {
    const char* ring;
    SearchBox box;
  };
  for (const Run& run : {Run{"Z", {6, 3, 0}}, Run{"Z[X]", {6, 2, 2}}, Run{"Z/2[X]", {6, 1, 2}}, Run{"Z/3[X]", {6, 1, 2}}}) {
    const auto r = Ring::parse(run.ring);
    const auto box = box_elements(r, run.box);
    for (std::size_t n = 3; n <= 6; ++n) {
      BoundedSearchResult res;
      const double secs = timed([&] { res = bounded_search(r, n, run.box); });
      const std::string tag = std::string(run.ring) + " n=" + std::to_string(n);
      c.require(canonical_set(res.irreducibles) == expected_classes(r, box, n), tag + " list mismatch");
      c.time_limit(tag.c_str(), secs, 120.0);
    }
  }
}

void transport(Check& c) {
  auto z = Ring::integers();
  Rng rng(0xacc);
  std::vector<QuiddityTuple> samples;
  while (samples.size() < 50) {
    Tuple t;
    if (samples.size() < 2) {
      const Element u = samples.empty() ? z->one() : -z->one();
      t = {u, u, u};
    } else {
      const long a = uniform(rng, -1000, 1000);
      if (a == 1 || a == -1) continue;
      t = apply_transform(Tuple{z->zero(), z->from_int(a), z->zero(), z->from_int(-a)},
                          Transform{static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 1) == 1});
    }
    auto q = QuiddityTuple::verify(z, t);
    c.require(q && is_irreducible(*q).verdict == Verdict::Irreducible, "sample over Z");
    samples.push_back(*q);
  }
  for (const char* expr : {"Q", "Z[X]", "Z[X]/(X^2+1)"}) {
    const auto r = Ring::parse(expr);
    for (const auto& q : samples) {
      Tuple t;
      for (const auto& x : q.entries()) t.push_back(r->coerce(x));
      const auto lifted = QuiddityTuple::verify(r, t);
      c.require(lifted && is_irreducible(*lifted).verdict == Verdict::Irreducible, std::string(expr) + format_tuple(t));
    }
  }
  const auto z6 = Ring::parse("Z/6"), prod = Ring::parse("Z/2*Z/3");
  const auto f = RingMap::from_integers(z6, prod);
  std::size_t n_crt = 0;
  for (const auto& q : all_quiddities(z6, 6)) {
    const auto image = QuiddityTuple::verify(prod, f.apply(q.entries()));
    c.require(image && is_irreducible(q).verdict == is_irreducible(*image).verdict, "CRT " + format_tuple(q.entries()));
    ++n_crt;
  }
  c.note("50 samples over Z, " + std::to_string(n_crt) + " quiddities over Z/6");
}

void property_suites(Check& c) {
  Rng rng(0x5017e);
  const auto& rings = registered_rings();
  std::size_t det = 0, reversal = 0, lemma = 0, orbit = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto r = Ring::parse(rings[static_cast<std::size_t>(i) % rings.size()]);
    const auto t = random_tuple(r, rng, static_cast<std::size_t>(uniform(rng, 1, 8)));
    c.require(m_matrix(t).det().is_one(), "det " + format_tuple(t));
    ++det;
    Tuple rev(t.rbegin(), t.rend());
    c.require(continuant(*r, t) == continuant(*r, rev), "reversal " + format_tuple(t));
    ++reversal;
    const auto b = random_quiddity(r, rng, 2);
    const auto a = i % 2 ? random_quiddity(r, rng, 2) : random_tuple(r, rng, static_cast<std::size_t>(uniform(rng, 1, 5)));
    c.require(quiddity_sign(oplus(a, b)).has_value() == quiddity_sign(a).has_value(), "oplus " + format_tuple(a));
    ++lemma;
    const auto q = random_quiddity(r, rng);
    const auto s = quiddity_sign(q);
    for (const auto& [tr, seq] : dihedral_orbit(q)) c.require(quiddity_sign(seq) == s, "orbit " + format_tuple(q));
    ++orbit;
  }
  for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
    const auto r = Ring::parse(expr);
    for (std::size_t n = 1; n <= 6; ++n)
      for_each_word(r->elements(), n, [&](const Tuple& t) {
        const auto s = quiddity_sign(t);
        if (!s) return;
        for (const auto& [tr, seq] : dihedral_orbit(t)) c.require(quiddity_sign(seq) == s, "orbit exhaustive");
        ++orbit;
      });
    const Enumerator e(r, 8);
    for (std::size_t n = 1; n <= 8; ++n) {
      std::uint64_t dfs = 0;
      e.for_each_quiddity(n, false, [&](std::span<const ElemIndex>, QuidditySign) { ++dfs; });
      c.require(dfs == e.count_quiddities(n), std::string(expr) + " DP count n=" + std::to_string(n));
    }
  }
  for (const char* expr : {"Z/2", "Z/3"}) {
    const auto r = Ring::parse(expr);
    std::vector<Tuple> bs;
    for (std::size_t m = 2; m <= 5; ++m)
      for_each_word(r->elements(), m, [&](const Tuple& t) {
        if (quiddity_sign(t)) bs.push_back(t);
      });
    for (std::size_t n = 1; n <= 4; ++n)
      for_each_word(r->elements(), n, [&](const Tuple& a) {
        for (const auto& b : bs) c.require(quiddity_sign(oplus(a, b)).has_value() == quiddity_sign(a).has_value(), "oplus exhaustive");
        ++lemma;
      });
  }
  c.require(det >= 1000 && reversal >= 1000 && lemma >= 1000 && orbit >= 1000, "case counts");
  c.note("cases: det " + std::to_string(det) + ", reversal " + std::to_string(reversal) + ", oplus " +
         std::to_string(lemma) + ", orbit " + std::to_string(orbit));
}

void criteria_examples(Check& c) {
  auto flagged = [&](const char* expr, Criterion want, const std::function<bool(const Witness&, const RingPtr&)>& pick) {
    const auto r = Ring::parse(expr);
    const auto rep = unboundedness_criteria(r);
    bool found = false;
    for (const auto& f : rep.flags) {
      for (const auto& w : f.witnesses) c.require(verify_witness(r, f.criterion, w).ok, std::string(expr) + " witness");
      if (f.criterion == want)
        for (const auto& w : f.witnesses) found = found || pick(w, r);
    }
    c.require(found, std::string(expr) + " " + to_string(want));
    c.require(rep.conclusion == Conclusion::PolynomialRingUnbounded, std::string(expr) + " conclusion");
  };
  flagged("Z[Y]/(Y^2)", Criterion::HasNilpotent,
          [](const Witness& w, const RingPtr& r) { return *w.element == r->parse_element("Y") && w.exponent == 2; });
  flagged("Z[Y]/(Y^2+Y+1)", Criterion::ExtraUnit, [](const Witness& w, const RingPtr& r) {
    return *w.element == r->parse_element("-Y") && *w.inverse == r->parse_element("Y+1");
  });
  flagged("Z/4", Criterion::CharNotIn023, [](const Witness& w, const RingPtr&) { return w.value == 4; });
  flagged("Z*Z/2", Criterion::Decomposable,
          [](const Witness& w, const RingPtr& r) { return *w.element == r->pair(Ring::integers()->one(), Ring::parse("Z/2")->zero()); });
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {"ell(Z/2)=4 and ell(Z/6)=6", ell_published},
      {"bound sandwich on finite rings", ell_sandwich},
      {"find_reduction agrees with the brute-force oracle", [](Check& c) { oracle_equivalence(c, false); }},
      {"segment-continuant criterion agrees with the definition", [](Check& c) { oracle_equivalence(c, true); }},
      {"rational family n=2..20", q_field_family},
      {"(4l+8)-tuple family l=1..3", zeta8_family},
      {"bounded-box evidence over Z, Z[X], Z/2[X], Z/3[X]", bounded_evidence},
      {"subring and CRT transport", transport},
      {"property suites", property_suites},
      {"unboundedness criteria examples", criteria_examples},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    const auto t0 = Clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    std::printf("%s %2zu  %-58s %8.3fs", check.ok() ? "PASS" : "FAIL", i + 1, criteria[i].name, secs);
    std::cout << check.summary() << "\n";
    for (const auto& n : check.notes()) std::cout << "        " << n << "\n";
    std::cout.flush();
    failed += !check.ok();
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << "\n";
  return failed ? 1 : 0;
}
