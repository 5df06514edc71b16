#include <gtest/gtest.h>

#include "quiddity/irreducibility.hpp"
#include "quiddity/ring_map.hpp"
#include "support/generators.hpp"

using namespace quiddity;
using namespace quiddity::proptest;

namespace {

Tuple tup(const RingPtr& r, const std::string& text) { return r->parse_tuple(text); }

QuiddityTuple quid(const RingPtr& r, const std::string& text) {
  auto q = QuiddityTuple::verify(r, tup(r, text));
  if (!q) throw std::runtime_error("not a quiddity: " + text);
  return *q;
}

bool has_unit_entry(const Tuple& t) {
  return std::any_of(t.begin(), t.end(), [](const Element& x) { return x.is_one() || (-x).is_one(); });
}

// Every quiddity of size <= max_n over a finite ring.
std::vector<QuiddityTuple> all_quiddities(const RingPtr& r, std::size_t max_n) {
  std::vector<QuiddityTuple> out;
  const auto elems = r->elements();
  for (std::size_t n = 1; n <= max_n; ++n)
    for_each_word(elems, n, [&](const Tuple& t) {
      if (auto q = QuiddityTuple::verify(r, t)) out.push_back(*q);
    });
  return out;
}

}  // namespace

TEST(Junction, Examples) {
  auto z = Ring::integers();
  const auto one = junction_solve(m_matrix(tup(z, "1")));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].epsilon, -1);
  EXPECT_TRUE(one[0].b_first.is_one());
  EXPECT_TRUE(one[0].b_last.is_one());
  EXPECT_TRUE(junction_solve(m_matrix(tup(z, "0"))).empty());
  EXPECT_TRUE(junction_solve(m_matrix(tup(z, "5"))).empty());
  auto z4 = Ring::parse("Z/4");
  const auto four = junction_solve(m_matrix(tup(z4, "5")));
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].epsilon, -1);
}

TEST(Junction, CompletesToScalar) {
  Rng rng(31);
  for (const auto& expr : registered_rings()) {
    auto r = Ring::parse(expr);
    for (int i = 0; i < 60; ++i) {
      const auto mid = random_tuple(r, rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
      const Mat2 p = m_matrix(mid);
      for (const auto& s : junction_solve(p)) {
        const Mat2 full = n_matrix(s.b_last) * p * n_matrix(s.b_first);
        ASSERT_TRUE(full.is_scalar(r->from_int(s.epsilon))) << expr;
      }
    }
  }
}

TEST(Junction, RejectsNonUnimodular) {
  auto z = Ring::integers();
  const Mat2 bad{z->from_int(2), z->zero(), z->zero(), z->from_int(2)};
  EXPECT_THROW(junction_solve(bad), std::logic_error);
}

TEST(Reduction, Examples) {
  auto z = Ring::integers();
  const auto c = quid(z, "2,1,2,1");
  const auto cert = find_reduction(c);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->b, tup(z, "1,1,1"));
  EXPECT_EQ(cert->a, tup(z, "1,1,1"));
  EXPECT_EQ(cert->l, 3u);
  EXPECT_EQ(cert->m, 3u);
  EXPECT_TRUE(verify_certificate(*cert, c).ok);

  EXPECT_FALSE(find_reduction(quid(z, "0,5,0,-5")));
  EXPECT_FALSE(find_reduction(quid(z, "1,1,1")));

  // Both halves of this split are size-3 quiddities of opposite sign.
  const auto c2 = quid(z, "0,1,0,-1");
  const auto cert2 = find_reduction(c2);
  ASSERT_TRUE(cert2);
  EXPECT_TRUE(verify_certificate(*cert2, c2).ok);
  const std::set<std::string> halves{format_tuple(cert2->a), format_tuple(cert2->b)};
  EXPECT_EQ(halves, (std::set<std::string>{"(1, 1, 1)", "(-1, -1, -1)"}));
}

TEST(Reduction, RejectsUnverified) {
  auto z = Ring::integers();
  EXPECT_THROW(find_reduction(QuiddityTuple(z, tup(z, "2,1,2,1"))), RingError);
}

TEST(Verdict, Examples) {
  auto z = Ring::integers();
  EXPECT_EQ(is_irreducible(quid(z, "0,0")).verdict, Verdict::Excluded);
  EXPECT_EQ(is_irreducible(quid(Ring::parse("Z/5"), "0,0")).verdict, Verdict::Excluded);
  EXPECT_EQ(is_irreducible(quid(z, "1,1,1")).verdict, Verdict::Irreducible);
  EXPECT_EQ(is_irreducible(quid(Ring::parse("Z/3[X]"), "0, X, 0, -X")).verdict, Verdict::Irreducible);
  const auto red = is_irreducible(quid(z, "2,1,2,1"));
  EXPECT_EQ(red.verdict, Verdict::Reducible);
  EXPECT_TRUE(red.certificate);
  EXPECT_EQ(to_string(Verdict::Irreducible), "irreducible");
}

TEST(Certificate, TamperingIsDetected) {
  auto z = Ring::integers();
  const auto c = quid(z, "2,1,2,1");
  const auto cert = *find_reduction(c);
  auto bumped = cert;
  bumped.b[0] = bumped.b[0] + z->one();
  EXPECT_FALSE(verify_certificate(bumped, c).ok);
  auto short_b = cert;
  short_b.l = 2;
  const auto check = verify_certificate(short_b, c);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.reason.empty());
  auto wrong_sign = cert;
  wrong_sign.sign_a.value = -wrong_sign.sign_a.value;
  EXPECT_FALSE(verify_certificate(wrong_sign, c).ok);
  auto moved = cert;
  moved.transform.rotation = (moved.transform.rotation + 1) % 4;
  EXPECT_FALSE(verify_certificate(moved, c).ok);
}

TEST(Oracle, Examples) {
  auto f2 = Ring::parse("Z/2");
  EXPECT_TRUE(reduction_oracle(quid(f2, "0,1,0,1")));
  auto f3 = Ring::parse("Z/3");
  EXPECT_FALSE(reduction_oracle(quid(f3, "0,0,0,0")));
  EXPECT_THROW(reduction_oracle(quid(Ring::integers(), "2,1,2,1")), RingError);
}

TEST(Oracle, AgreesExhaustively) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
    auto r = Ring::parse(expr);
    std::size_t reducible = 0, irreducible = 0;
    for (const auto& q : all_quiddities(r, 8)) {
      if (q.size() < 3) continue;
      const auto fast = find_reduction(q);
      const auto slow = reduction_oracle(q);
      ASSERT_EQ(fast.has_value(), slow.has_value()) << expr << " " << format_tuple(q.entries());
      if (q.size() >= 4) ASSERT_EQ(fast.has_value(), segment_criterion(q.entries()));
      if (fast) {
        ASSERT_TRUE(verify_certificate(*fast, q).ok);
        ASSERT_TRUE(verify_certificate(*slow, q).ok);
        ++reducible;
      } else {
        ++irreducible;
      }
    }
    EXPECT_GT(reducible, 0u);
    EXPECT_GT(irreducible, 0u);
  }
}

TEST(Properties, ReversalEconomy) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4"}) {
    auto r = Ring::parse(expr);
    for (const auto& q : all_quiddities(r, 8)) {
      if (q.size() < 3) continue;
      ASSERT_EQ(find_reduction(q).has_value(), find_reduction(q, ScanMode::RotationsOnly).has_value());
    }
  }
  Rng rng(32);
  for (const auto& expr : registered_rings()) {
    auto r = Ring::parse(expr);
    for (int i = 0; i < 50; ++i) {
      const auto q = *QuiddityTuple::verify(r, random_quiddity(r, rng));
      if (q.size() < 3) continue;
      ASSERT_EQ(find_reduction(q).has_value(), find_reduction(q, ScanMode::RotationsOnly).has_value());
    }
  }
}

TEST(Properties, SoundnessOnRandomQuiddities) {
  Rng rng(33);
  int reducible = 0;
  for (const auto& expr : registered_rings()) {
    auto r = Ring::parse(expr);
    for (int i = 0; i < 60; ++i) {
      const auto q = *QuiddityTuple::verify(r, random_quiddity(r, rng));
      const auto v = is_irreducible(q);
      if (v.verdict == Verdict::Reducible) {
        ASSERT_TRUE(verify_certificate(*v.certificate, q).ok) << expr << " " << format_tuple(q.entries());
        ++reducible;
      }
    }
  }
  EXPECT_GT(reducible, 100);
}

TEST(Properties, SizeFourCharacterization) {
  for (const char* expr : {"Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/2*Z/2", "Z/2[t]/(t^2+t+1)"}) {
    auto r = Ring::parse(expr);
    for_each_word(r->elements(), 4, [&](const Tuple& t) {
      const auto q = QuiddityTuple::verify(r, t);
      if (!q) return;
      ASSERT_EQ(is_irreducible(*q).verdict == Verdict::Irreducible, !has_unit_entry(t)) << expr << format_tuple(t);
    });
  }
  Rng rng(34);
  int count = 0;
  for (const char* expr : {"Z", "Q", "Z[X]", "Z/2[X]", "Z/3[X]", "Z/5[X]", "Frac(Z/5[t])"}) {
    auto r = Ring::parse(expr);
    for (int i = 0; i < 150; ++i) {
      const Element x = i % 10 == 0 ? (i % 20 == 0 ? r->one() : -r->one()) : random_element(r, rng);
      Tuple t = uniform(rng, 0, 1) ? Tuple{r->zero(), x, r->zero(), -x} : Tuple{x, r->zero(), -x, r->zero()};
      if (uniform(rng, 0, 3) == 0) {
        // (u+1, u, ...) shapes: (1,1,1) glued with (1,1,1) and shifted entries.
        const Element u = uniform(rng, 0, 1) ? r->one() : -r->one();
        t = oplus(Tuple{u, u, u}, Tuple{u, u, u});
      }
      const auto q = QuiddityTuple::verify(r, t);
      ASSERT_TRUE(q);
      ASSERT_EQ(is_irreducible(*q).verdict == Verdict::Irreducible, !has_unit_entry(t)) << expr << format_tuple(t);
      ++count;
    }
  }
  EXPECT_GE(count, 1000);
}

TEST(Transport, SubringPreservesIrreducibility) {
  auto z = Ring::integers();
  Rng rng(35);
  std::vector<QuiddityTuple> samples;
  samples.push_back(quid(z, "1,1,1"));
  samples.push_back(quid(z, "-1,-1,-1"));
  while (samples.size() < 50) {
    long a = uniform(rng, -40, 40);
    if (a == 1 || a == -1) continue;
    Tuple t{z->zero(), z->from_int(a), z->zero(), z->from_int(-a)};
    t = apply_transform(t, Transform{static_cast<std::size_t>(uniform(rng, 0, 3)), uniform(rng, 0, 1) == 1});
    samples.push_back(*QuiddityTuple::verify(z, t));
  }
  for (const auto& q : samples) ASSERT_EQ(is_irreducible(q).verdict, Verdict::Irreducible);
  for (const char* expr : {"Q", "Z[X]", "Z[X]/(X^2+1)"}) {
    auto r = Ring::parse(expr);
    for (const auto& q : samples) {
      Tuple t;
      for (const auto& x : q.entries()) t.push_back(r->coerce(x));
      const auto lifted = QuiddityTuple::verify(r, t);
      ASSERT_TRUE(lifted) << expr;
      ASSERT_EQ(lifted->sign(), q.sign());
      ASSERT_EQ(is_irreducible(*lifted).verdict, Verdict::Irreducible) << expr << " " << format_tuple(t);
    }
  }
}

TEST(Transport, CrtPreservesVerdicts) {
  auto z6 = Ring::parse("Z/6");
  auto prod = Ring::parse("Z/2*Z/3");
  const auto f = RingMap::from_integers(z6, prod);
  std::size_t checked = 0;
  for (const auto& q : all_quiddities(z6, 6)) {
    const auto image = QuiddityTuple::verify(prod, f.apply(q.entries()));
    ASSERT_TRUE(image);
    ASSERT_EQ(is_irreducible(q).verdict, is_irreducible(*image).verdict) << format_tuple(q.entries());
    ++checked;
  }
  // Every quiddity over the product arises this way, since f is a bijection.
  std::size_t target = 0;
  for (const auto& q : all_quiddities(prod, 6)) {
    (void)q;
    ++target;
  }
  EXPECT_EQ(checked, target);
}
