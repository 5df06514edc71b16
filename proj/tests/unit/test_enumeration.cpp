#include <gtest/gtest.h>

#include <map>
#include <set>

#include "quiddity/bounded_search.hpp"
#include "quiddity/enumeration.hpp"
#include "quiddity/irreducibility.hpp"
#include "support/generators.hpp"

using namespace quiddity;
using namespace quiddity::proptest;

namespace {

std::vector<std::string> formatted(const std::vector<QuiddityTuple>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(format_tuple(q.entries()));
  return out;
}

// Brute force over every word: canonical forms of the irreducible quiddities.
std::set<std::string> brute_irreducibles(const RingPtr& r, const std::vector<Element>& elems, std::size_t n) {
  std::set<std::string> out;
  for_each_word(elems, n, [&](const Tuple& t) {
    const auto q = QuiddityTuple::verify(r, t);
    if (q && is_irreducible(*q).verdict == Verdict::Irreducible) out.insert(format_tuple(canonical_form(t).sequence));
  });
  return out;
}

std::set<std::string> as_set(const std::vector<QuiddityTuple>& qs) {
  const auto f = formatted(qs);
  return {f.begin(), f.end()};
}

const char* const kF4 = "Z/2[t]/(t^2+t+1)";

}  // namespace

TEST(Bounds, Sl2Orders) {
  EXPECT_EQ(sl2_order(Ring::parse("Z/2")), 6u);
  EXPECT_EQ(sl2_order(Ring::parse("Z/3")), 24u);
  EXPECT_EQ(sl2_order(Ring::parse("Z/6")), 144u);
  EXPECT_EQ(sl2_order(Ring::parse(kF4)), 60u);
  EXPECT_THROW(sl2_order(Ring::integers()), RingError);
}

TEST(Bounds, Sl2OrderMatchesFormula) {
  // |SL2(Z/N)| = N^3 prod_{p | N} (1 - 1/p^2)
  for (std::uint64_t n = 2; n <= 12; ++n) {
    std::uint64_t num = n * n * n, den = 1;
    for (std::uint64_t p = 2; p <= n; ++p)
      if (n % p == 0 && is_prime_u64(p)) {
        num *= p * p - 1;
        den *= p * p;
      }
    EXPECT_EQ(sl2_order(Ring::mod_int(n)), num / den) << n;
  }
}

TEST(Bounds, UpperAndLower) {
  EXPECT_EQ(ell_upper_bound(Ring::parse("Z/2")), 5u);
  EXPECT_EQ(ell_upper_bound(Ring::parse("Z/3")), 6u);
  EXPECT_EQ(ell_upper_bound(Ring::parse("Z/6")), 14u);
  EXPECT_EQ(ell_upper_bound(Ring::parse(kF4)), 17u);
  EXPECT_EQ(ell_lower_bound(Ring::parse("Z/2")), 4u);
  EXPECT_EQ(ell_lower_bound(Ring::parse("Z/3")), 4u);
  EXPECT_EQ(ell_lower_bound(Ring::parse("Z/5")), 5u);
  EXPECT_EQ(ell_lower_bound(Ring::parse("Z/6")), 6u);
  EXPECT_EQ(ell_lower_bound(Ring::parse(kF4)), 4u);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(formatted(enumerate_quiddities(Ring::parse("Z/3"), 3, false)),
            (std::vector<std::string>{"(1, 1, 1)", "(2, 2, 2)"}));
  EXPECT_EQ(formatted(enumerate_quiddities(Ring::parse("Z/2"), 2, false)), (std::vector<std::string>{"(0, 0)"}));
  for (const char* expr : {"Z/2", "Z/3", "Z/6", kF4}) EXPECT_TRUE(enumerate_quiddities(Ring::parse(expr), 1, false).empty());
  EXPECT_THROW(enumerate_quiddities(Ring::integers(), 3, false), RingError);
}

TEST(Enumerate, IrreducibleExamples) {
  EXPECT_TRUE(enumerate_irreducibles(Ring::parse("Z/2"), 5).empty());
  const auto z3 = formatted(enumerate_irreducibles(Ring::parse("Z/3"), 4));
  EXPECT_NE(std::find(z3.begin(), z3.end(), "(0, 0, 0, 0)"), z3.end());
  const auto z6 = formatted(enumerate_irreducibles(Ring::parse("Z/6"), 6));
  EXPECT_EQ(z6, (std::vector<std::string>{"(2, 2, 2, 2, 2, 2)", "(3, 3, 3, 3, 3, 3)", "(4, 4, 4, 4, 4, 4)"}));
  EXPECT_THROW(enumerate_irreducibles(Ring::parse("Z/3"), 2), std::invalid_argument);
}

TEST(Enumerate, EveryOutputVerifies) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", kF4, "Z/2*Z/2"}) {
    auto r = Ring::parse(expr);
    const Enumerator e(r, 8);
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& q : e.quiddities(n, false)) ASSERT_TRUE(q.recheck() && quiddity_sign(q.entries()) == q.sign());
    for (std::size_t n = 3; n <= 8; ++n)
      for (const auto& q : e.irreducibles(n)) {
        ASSERT_EQ(is_irreducible(q).verdict, Verdict::Irreducible);
        ASSERT_EQ(canonical_form(q.entries()).sequence, q.entries());
      }
  }
}

TEST(Enumerate, DpCrossCount) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
    auto r = Ring::parse(expr);
    const Enumerator e(r, 8);
    for (std::size_t n = 1; n <= 8; ++n) {
      std::uint64_t dfs = 0;
      e.for_each_quiddity(n, false, [&](std::span<const ElemIndex>, QuidditySign) { ++dfs; });
      EXPECT_EQ(dfs, e.count_quiddities(n)) << expr << " n=" << n;
      EXPECT_EQ(e.quiddities(n, false).size(), dfs);
    }
  }
  const Enumerator z3(Ring::parse("Z/3"), 8);
  const std::vector<std::uint64_t> frozen{0, 1, 2, 7, 20, 61, 182, 547};
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(z3.count_quiddities(n), frozen[n - 1]) << n;
}

TEST(Enumerate, RawCountMatchesWordScan) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
    auto r = Ring::parse(expr);
    const Enumerator e(r, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::uint64_t words = 0;
      for_each_word(r->elements(), n, [&](const Tuple& t) { words += quiddity_sign(t).has_value(); });
      EXPECT_EQ(words, e.count_quiddities(n));
    }
  }
}

TEST(Enumerate, PrunedMatchesUnpruned) {
  for (const char* expr : {"Z/2", "Z/3"}) {
    const Enumerator e(Ring::parse(expr), 7);
    for (std::size_t n = 1; n <= 7; ++n) {
      for (bool canonical : {false, true})
        EXPECT_EQ(formatted(e.quiddities(n, canonical, 1, Pruning::Full)),
                  formatted(e.quiddities(n, canonical, 1, Pruning::None)));
      if (n >= 3)
        EXPECT_EQ(formatted(e.irreducibles(n, 1, Pruning::Full)), formatted(e.irreducibles(n, 1, Pruning::None)));
    }
  }
}

TEST(Enumerate, IrreduciblesMatchBruteForce) {
  for (const char* expr : {"Z/4", "Z/5", "Z/6", kF4, "Z/2*Z/2"}) {
    auto r = Ring::parse(expr);
    const Enumerator e(r, 6);
    for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(as_set(e.irreducibles(n)), brute_irreducibles(r, r->elements(), n)) << expr;
  }
}

TEST(Enumerate, IrreduciblesMatchBruteForceNearEll) {
  for (const char* expr : {"Z/5", "Z/6", kF4, "Z/2*Z/2"}) {
    auto r = Ring::parse(expr);
    const Enumerator e(r, 7);
    for (std::size_t n = 6; n <= 7; ++n) EXPECT_EQ(as_set(e.irreducibles(n)), brute_irreducibles(r, r->elements(), n)) << expr;
  }
}

TEST(Enumerate, JobsDoNotChangeOutput) {
  for (const char* expr : {"Z/6", kF4}) {
    const Enumerator e(Ring::parse(expr), 10);
    for (std::size_t n : {6u, 9u}) {
      const auto one = formatted(e.irreducibles(n, 1));
      EXPECT_EQ(formatted(e.irreducibles(n, 3)), one);
      EXPECT_EQ(formatted(e.irreducibles(n, 8)), one);
    }
    EXPECT_EQ(formatted(e.quiddities(6, true, 4)), formatted(e.quiddities(6, true, 1)));
  }
}

TEST(Reachability, Table) {
  const Enumerator e(Ring::parse("Z/2"), 6);
  const auto& g = e.group();
  const auto& reach = e.reachability();
  for (GroupIndex i = 0; i < g.order(); ++i) EXPECT_EQ(reach.reachable(i, 0), g.is_pm_identity(i));
  const FiniteRing& f = e.ring();
  const GroupIndex s = g.index_of(SL2Group::Matrix{f.zero(), f.minus_one(), f.one(), f.zero()});
  // N(0)·S = S² = -Id, so S finishes in one step.
  EXPECT_TRUE(reach.reachable(s, 1));
  const GroupIndex t = g.index_of(SL2Group::Matrix{f.one(), f.one(), f.zero(), f.one()});
  EXPECT_FALSE(reach.reachable(t, 1));
}

TEST(Reachability, MatchesOneStepRecursion) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4", "Z/6", kF4}) {
    const Enumerator e(Ring::parse(expr), 8);
    const auto& g = e.group();
    const auto& reach = e.reachability();
    for (std::size_t r = 0; r < reach.max_steps(); ++r)
      for (GroupIndex i = 0; i < g.order(); ++i) {
        bool any = false;
        for (ElemIndex a = 0; a < e.ring().size(); ++a) any = any || reach.reachable(g.step(i, a), r);
        ASSERT_EQ(reach.reachable(i, r + 1), any) << expr;
      }
  }
}

TEST(Reachability, MonotoneInSteps) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", kF4, "Z/2*Z/2"}) {
    const Enumerator e(Ring::parse(expr), 12);
    const auto& reach = e.reachability();
    for (GroupIndex i = 0; i < e.group().order(); ++i)
      for (std::size_t r = 0; r + 2 <= reach.max_steps(); ++r)
        if (reach.reachable(i, r)) ASSERT_TRUE(reach.reachable(i, r + 2)) << expr;
  }
}

TEST(Ell, PublishedValues) {
  EXPECT_EQ(compute_ell(Ring::parse("Z/2")).ell, 4u);
  EXPECT_EQ(compute_ell(Ring::parse("Z/6")).ell, 6u);
  EXPECT_EQ(compute_ell(Ring::parse("Z/3")).ell, 4u);
}

TEST(Ell, SandwichAndFrozenCounts) {
  // Class counts by size, starting at 3, cross-checked against an independent
  // brute-force script; sizes not listed up to the bound are zero.
  const std::map<std::string, std::vector<std::size_t>> frozen{
      {"Z/2", {1, 1}},          {"Z/3", {2, 1}},    {"Z/4", {2, 3}},
      {"Z/5", {2, 2, 2, 3}},    {"Z/6", {2, 5, 0, 3}}, {kF4, {1, 3, 2, 1, 0, 1, 2}},
      {"Z/2*Z/2", {1, 4, 0, 2}}, {"Z/2*Z/3", {2, 5, 0, 3}}};
  const std::map<std::string, std::uint64_t> ells{{"Z/2", 4}, {"Z/3", 4}, {"Z/4", 4}, {"Z/5", 6},
                                                  {"Z/6", 6}, {kF4, 9},   {"Z/2*Z/2", 6}, {"Z/2*Z/3", 6}};
  for (const auto& [expr, counts] : frozen) {
    const auto rep = compute_ell(Ring::parse(expr));
    EXPECT_EQ(rep.ell, ells.at(expr)) << expr;
    EXPECT_LE(rep.lower_bound, rep.ell) << expr;
    EXPECT_LE(rep.ell, rep.upper_bound) << expr;
    EXPECT_EQ(rep.upper_bound, ell_upper_bound(rep.ring));
    ASSERT_EQ(rep.class_counts.size(), rep.upper_bound - 2) << expr;
    for (const auto& [n, c] : rep.class_counts) {
      const std::size_t want = n - 3 < counts.size() ? counts[n - 3] : 0;
      EXPECT_EQ(c, want) << expr << " n=" << n;
    }
    EXPECT_EQ(rep.irreducibles_by_size.rbegin()->first, rep.ell);
    EXPECT_FALSE(rep.irreducibles_by_size.rbegin()->second.empty());
    EXPECT_FALSE(rep.provenance.empty());
  }
}

TEST(Ell, ProductMatchesCyclic) {
  const auto a = compute_ell(Ring::parse("Z/6"));
  const auto b = compute_ell(Ring::parse("Z/2*Z/3"));
  EXPECT_EQ(a.ell, b.ell);
  EXPECT_EQ(a.class_counts, b.class_counts);
  EXPECT_EQ(a.sl2_order, b.sl2_order);
}

TEST(BoundedSearch, Integers) {
  auto z = Ring::integers();
  const SearchBox box{6, 3, 0};
  EXPECT_EQ(formatted(bounded_search(z, 3, box).irreducibles), (std::vector<std::string>{"(1, 1, 1)", "(-1, -1, -1)"}));
  EXPECT_EQ(formatted(bounded_search(z, 4, box).irreducibles),
            (std::vector<std::string>{"(0, 0, 0, 0)", "(0, 2, 0, -2)", "(0, 3, 0, -3)"}));
  EXPECT_TRUE(bounded_search(z, 5, box).irreducibles.empty());
  const auto six = bounded_search(z, 6, box);
  EXPECT_TRUE(six.irreducibles.empty());
  EXPECT_EQ(six.box_size, 7u);
  EXPECT_EQ(six.scope, "complete within box only");
}

TEST(BoundedSearch, PolynomialsOverZ2) {
  auto r = Ring::parse("Z/2[X]");
  const SearchBox box{6, 1, 2};
  const auto four = formatted(bounded_search(r, 4, box).irreducibles);
  std::set<std::string> want;
  for (const char* p : {"0", "X", "X+1", "X^2", "X^2+1", "X^2+X", "X^2+X+1"})
    want.insert(format_tuple(canonical_form(r->parse_tuple(std::string("0,") + p + ",0," + p)).sequence));
  EXPECT_EQ(std::set<std::string>(four.begin(), four.end()), want);
  EXPECT_EQ(four.size(), 7u);
  EXPECT_TRUE(bounded_search(r, 5, box).irreducibles.empty());
}

TEST(BoundedSearch, MatchesBruteForce) {
  auto z = Ring::integers();
  const SearchBox box{6, 2, 0};
  const auto elems = box_elements(z, box);
  for (std::size_t n = 3; n <= 5; ++n) EXPECT_EQ(as_set(bounded_search(z, n, box).irreducibles), brute_irreducibles(z, elems, n));
  auto z3x = Ring::parse("Z/3[X]");
  const SearchBox pbox{6, 1, 1};
  const auto pe = box_elements(z3x, pbox);
  EXPECT_EQ(pe.size(), 9u);
  for (std::size_t n = 3; n <= 5; ++n)
    EXPECT_EQ(as_set(bounded_search(z3x, n, pbox).irreducibles), brute_irreducibles(z3x, pe, n));
  auto q = Ring::rationals();
  const auto qe = box_elements(q, SearchBox{6, 2, 0});
  for (std::size_t n = 3; n <= 4; ++n)
    EXPECT_EQ(as_set(bounded_search(q, n, SearchBox{6, 2, 0}).irreducibles), brute_irreducibles(q, qe, n));
}

TEST(BoundedSearch, BudgetAndArguments) {
  auto zx = Ring::parse("Z[X]");
  const SearchBox box{6, 2, 2};
  try {
    bounded_search(zx, 6, box, 1000);
    FAIL() << "expected a refusal";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.candidates(), bounded_search_candidates(125, 6));
    EXPECT_EQ(e.budget(), 1000u);
  }
  EXPECT_THROW(bounded_search(zx, 2, box), std::invalid_argument);
  EXPECT_THROW(bounded_search(zx, 7, box), std::invalid_argument);
}
