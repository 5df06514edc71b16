#include "quiddity/quiddity.hpp"

#include <algorithm>

namespace quiddity {

namespace {

const Ring& single_ring(std::span<const Element> t) {
  if (t.empty()) throw RingError("empty tuple");
  const Ring& r = *t.front().ring();
  for (const auto& x : t) r.check_member(x);
  return r;
}

}  // namespace

Mat2 Mat2::identity(const Ring& ring) { return {ring.one(), ring.zero(), ring.zero(), ring.one()}; }

Element Mat2::det() const { return a11 * a22 - a12 * a21; }

Mat2 Mat2::operator*(const Mat2& m) const {
  return {a11 * m.a11 + a12 * m.a21, a11 * m.a12 + a12 * m.a22,
          a21 * m.a11 + a22 * m.a21, a21 * m.a12 + a22 * m.a22};
}

Mat2 Mat2::operator-() const { return {-a11, -a12, -a21, -a22}; }

Mat2 Mat2::adjugate() const { return {a22, -a12, -a21, a11}; }

bool Mat2::operator==(const Mat2& m) const {
  return a11 == m.a11 && a12 == m.a12 && a21 == m.a21 && a22 == m.a22;
}

bool Mat2::is_scalar(const Element& c) const {
  return a11 == c && a22 == c && a12.is_zero() && a21.is_zero();
}

std::size_t Mat2::hash() const noexcept {
  std::size_t h = a11.hash();
  for (const Element* e : {&a12, &a21, &a22}) h = h * 0x9E3779B97F4A7C15ULL ^ e->hash();
  return h;
}

Mat2 n_matrix(const Element& a) {
  const Ring& r = *a.ring();
  return {a, r.from_int(-1), r.one(), r.zero()};
}

Mat2 m_matrix(std::span<const Element> t) {
  const Ring& r = single_ring(t);
  Mat2 m = n_matrix(t.front());
  // Left-multiplying by N(a) = [[a, -1], [1, 0]] maps rows (u, v) to (a·u - v, u).
  for (std::size_t i = 1; i < t.size(); ++i) {
    const Element& a = t[i];
    Element top1 = r.sub(r.mul(a, m.a11), m.a21);
    Element top2 = r.sub(r.mul(a, m.a12), m.a22);
    m.a21 = std::move(m.a11);
    m.a22 = std::move(m.a12);
    m.a11 = std::move(top1);
    m.a12 = std::move(top2);
  }
  return m;
}

Element continuant(const Ring& ring, std::span<const Element> s) {
  Element prev = ring.one();   // K of the empty word
  if (s.empty()) return prev;
  Element cur = s.front();
  ring.check_member(cur);
  for (std::size_t j = 1; j < s.size(); ++j) {
    Element next = ring.sub(ring.mul(s[j], cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::optional<QuidditySign> quiddity_sign(std::span<const Element> t) {
  const Ring& r = single_ring(t);
  const Mat2 m = m_matrix(t);
  const bool char2 = r.equal(r.one(), r.from_int(-1));
  if (m.is_scalar(r.one())) return QuidditySign{1, char2};
  if (m.is_scalar(r.from_int(-1))) return QuidditySign{-1, false};
  return std::nullopt;
}

Tuple oplus(std::span<const Element> a, std::span<const Element> b) {
  if (a.empty() || b.empty()) throw RingError("oplus needs non-empty tuples");
  const Ring& r = single_ring(a);
  for (const auto& x : b) r.check_member(x);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  Tuple out;
  out.reserve(n + m - 2);
  if (n == 1) {
    // a_1 is both the first and last entry: it absorbs b_m and b_1.
    out.push_back(r.add(r.add(a[0], b[m - 1]), m == 1 ? r.zero() : b[0]));
  } else {
    out.push_back(r.add(a[0], b[m - 1]));
    for (std::size_t i = 1; i + 1 < n; ++i) out.push_back(a[i]);
    out.push_back(m == 1 ? a[n - 1] : r.add(a[n - 1], b[0]));
  }
  for (std::size_t j = 1; j + 1 < m; ++j) out.push_back(b[j]);
  out.resize(n + m - 2, r.zero());
  return out;
}

Tuple apply_transform(std::span<const Element> t, Transform tr) {
  const std::size_t n = t.size();
  Tuple out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + tr.rotation) % n;
    out.push_back(tr.reversed ? t[n - 1 - j] : t[j]);
  }
  return out;
}

std::vector<std::pair<Transform, Tuple>> dihedral_orbit(std::span<const Element> t) {
  std::vector<std::pair<Transform, Tuple>> out;
  out.reserve(2 * t.size());
  for (bool rev : {false, true}) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      const Transform tr{r, rev};
      out.emplace_back(tr, apply_transform(t, tr));
    }
  }
  return out;
}

bool equivalent(std::span<const Element> s, std::span<const Element> t) {
  if (s.size() != t.size()) return false;
  if (s.empty()) return true;
  const Ring& r = single_ring(s);
  for (const auto& x : t) r.check_member(x);
  for (const auto& [tr, d] : dihedral_orbit(s)) {
    if (std::equal(d.begin(), d.end(), t.begin())) return true;
  }
  return false;
}

std::strong_ordering compare_tuples(std::span<const Element> a, std::span<const Element> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i].ring()->compare(a[i], b[i]); c != 0) return c;
  }
  return a.size() <=> b.size();
}

CanonicalForm canonical_form(std::span<const Element> t) {
  if (t.empty()) return {{}, {}};
  const Ring& r = single_ring(t);
  const std::size_t n = t.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (const auto& x : t) keys.push_back(r.encode(x));
  auto key_at = [&](Transform tr, std::size_t i) -> const std::string& {
    const std::size_t j = (i + tr.rotation) % n;
    return keys[tr.reversed ? n - 1 - j : j];
  };
  Transform best{0, false};
  for (bool rev : {false, true}) {
    for (std::size_t rot = 0; rot < n; ++rot) {
      const Transform tr{rot, rev};
      for (std::size_t i = 0; i < n; ++i) {
        const int c = key_at(tr, i).compare(key_at(best, i));
        if (c < 0) {
          best = tr;
          break;
        }
        if (c > 0) break;
      }
    }
  }
  return {apply_transform(t, best), best};
}

std::string format_tuple(std::span<const Element> t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += t[i].to_string();
  }
  return out + ")";
}

QuiddityTuple::QuiddityTuple(RingPtr ring, Tuple entries) : ring_(std::move(ring)), entries_(std::move(entries)) {
  if (entries_.empty()) throw RingError("a quiddity tuple needs at least one entry");
  for (const auto& x : entries_) ring_->check_member(x);
}

std::optional<QuiddityTuple> QuiddityTuple::verify(RingPtr ring, Tuple entries) {
  QuiddityTuple t(std::move(ring), std::move(entries));
  t.sign_ = quiddity_sign(t.entries_);
  if (!t.sign_) return std::nullopt;
  return t;
}

bool QuiddityTuple::recheck() const { return sign_.has_value() && quiddity_sign(entries_) == sign_; }

}  // namespace quiddity
