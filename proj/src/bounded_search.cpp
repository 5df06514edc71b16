#include "quiddity/bounded_search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <unordered_map>

#include "quiddity/irreducibility.hpp"

namespace quiddity {

namespace {

using Index = std::uint32_t;

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

bool is_canonical(const std::vector<Index>& t) {
  const std::size_t n = t.size();
  for (int rev = 0; rev < 2; ++rev) {
    for (std::size_t rot = 0; rot < n; ++rot) {
      if (rev == 0 && rot == 0) continue;
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = (i + rot) % n;
        const Index d = rev ? t[n - 1 - k] : t[k];
        if (d < t[i]) return false;
        if (d > t[i]) break;
      }
    }
  }
  return true;
}

// Depth-first walk over words of a fixed length in the box, carrying
// N(w_k)···N(w_1) and cutting words with a segment of length <= width whose
// continuant is ±1.
class HalfWalk {
 public:
  using Visit = std::function<void(const std::vector<Index>&, const Mat2&)>;

  HalfWalk(const Ring& ring, const std::vector<Element>& box, std::size_t length, std::size_t width)
      : ring_(ring), box_(box), length_(length), width_(width), minus_one_(ring.from_int(-1)) {}

  void run(const Visit& visit) {
    word_.assign(length_, 0);
    mats_.assign(length_ + 1, Mat2::identity(ring_));
    cont_.assign(length_ * (width_ + 1), ring_.one());
    visit_ = &visit;
    descend(0);
  }

 private:
  bool pm1(const Element& x) const { return x.is_one() || x == minus_one_; }

  bool segments_ok(std::size_t j) {
    const Element& a = box_[word_[j]];
    auto at = [&](std::size_t row, std::size_t len) -> Element& { return cont_[row * (width_ + 1) + len]; };
    if (width_ == 0) return true;
    at(j, 1) = a;
    if (pm1(a)) return false;
    const std::size_t top = std::min(j + 1, width_);
    for (std::size_t len = 2; len <= top; ++len) {
      Element k = ring_.mul(a, at(j - 1, len - 1));
      k = ring_.sub(k, len == 2 ? ring_.one() : at(j - 2, len - 2));
      if (pm1(k)) return false;
      at(j, len) = std::move(k);
    }
    return true;
  }

  void descend(std::size_t j) {
    for (Index x = 0; x < box_.size(); ++x) {
      word_[j] = x;
      if (!segments_ok(j)) continue;
      const Mat2& m = mats_[j];
      const Element& a = box_[x];
      mats_[j + 1] = Mat2{ring_.sub(ring_.mul(a, m.a11), m.a21), ring_.sub(ring_.mul(a, m.a12), m.a22), m.a11, m.a12};
      if (j + 1 == length_) {
        (*visit_)(word_, mats_[j + 1]);
      } else {
        descend(j + 1);
      }
    }
  }

  const Ring& ring_;
  const std::vector<Element>& box_;
  std::size_t length_;
  std::size_t width_;
  Element minus_one_;
  std::vector<Index> word_;
  std::vector<Mat2> mats_;
  std::vector<Element> cont_;
  const Visit* visit_ = nullptr;
};

// Ring homomorphism into F_p, p = 2^61 - 1, sending each polynomial variable
// to a fixed pseudo-random point.  Equal elements have equal images, so
// filtering on images never loses a solution; every hit is re-checked exactly.
class Fingerprint {
 public:
  static constexpr std::uint64_t kP = (std::uint64_t{1} << 61) - 1;
  using Matrix = std::array<std::uint64_t, 4>;

  Fingerprint() {
    std::mt19937_64 gen(0x5eedULL);
    for (auto& x : points_) x = gen() % kP;
  }

  static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t s = a + b;
    return s >= kP ? s - kP : s;
  }
  static std::uint64_t neg(std::uint64_t a) { return a == 0 ? 0 : kP - a; }
  static std::uint64_t sub(std::uint64_t a, std::uint64_t b) { return add(a, neg(b)); }
  static std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t s = static_cast<std::uint64_t>(z & kP) + static_cast<std::uint64_t>(z >> 61);
    while (s >= kP) s -= kP;
    return s;
  }
  static std::uint64_t inv(std::uint64_t a) {
    std::uint64_t r = 1, e = kP - 2;
    for (; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  static std::size_t hash(const Matrix& m) {
    std::size_t h = m[0];
    for (int i = 1; i < 4; ++i) h = h * 0x9E3779B97F4A7C15ULL ^ m[i];
    return h;
  }

  std::optional<std::uint64_t> image(const Element& x, std::size_t depth = 0) const {
    const Ring& r = *x.ring();
    switch (r.kind()) {
      case RingKind::Integers: {
        mpz_class m;
        mpz_fdiv_r_ui(m.get_mpz_t(), x.integer().get_mpz_t(), kP);
        return m.get_ui();
      }
      case RingKind::Polynomial: {
        if (depth >= points_.size()) return std::nullopt;
        std::uint64_t acc = 0;
        const auto& c = x.parts();
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
          const auto v = image(*it, depth + 1);
          if (!v) return std::nullopt;
          acc = add(mul(acc, points_[depth]), *v);
        }
        return acc;
      }
      case RingKind::Fraction: {
        const auto num = image(x.parts()[0], depth);
        const auto den = image(x.parts()[1], depth);
        if (!num || !den || *den == 0) return std::nullopt;
        return mul(*num, inv(*den));
      }
      default:
        return std::nullopt;
    }
  }

 private:
  std::array<std::uint64_t, 8> points_{};
};

// HalfWalk on fingerprints.  A segment whose image is ±1 is cut only after
// its exact continuant is confirmed to be ±1.
class FastHalfWalk {
 public:
  using Visit = std::function<void(const std::vector<Index>&, const Fingerprint::Matrix&)>;

  FastHalfWalk(const Ring& ring, const std::vector<Element>& box, const std::vector<std::uint64_t>& images,
               std::size_t length, std::size_t width)
      : ring_(ring), box_(box), images_(images), length_(length), width_(width), minus_one_(ring.from_int(-1)) {}

  void run(const Visit& visit) {
    word_.assign(length_, 0);
    mats_.assign(length_ + 1, Fingerprint::Matrix{1, 0, 0, 1});
    cont_.assign(length_ * (width_ + 1), 1);
    visit_ = &visit;
    descend(0);
  }

 private:
  bool exact_pm1(std::size_t j, std::size_t len) const {
    Tuple seg;
    for (std::size_t i = j + 1 - len; i <= j; ++i) seg.push_back(box_[word_[i]]);
    const Element k = continuant(ring_, seg);
    return k.is_one() || k == minus_one_;
  }

  bool segments_ok(std::size_t j) {
    using F = Fingerprint;
    if (width_ == 0) return true;
    auto at = [&](std::size_t row, std::size_t len) -> std::uint64_t& { return cont_[row * (width_ + 1) + len]; };
    const std::uint64_t a = images_[word_[j]];
    const std::size_t top = std::min(j + 1, width_);
    for (std::size_t len = 1; len <= top; ++len) {
      const std::uint64_t k =
          len == 1 ? a : F::sub(F::mul(a, at(j - 1, len - 1)), len == 2 ? 1 : at(j - 2, len - 2));
      at(j, len) = k;
      if ((k == 1 || k == F::kP - 1) && exact_pm1(j, len)) return false;
    }
    return true;
  }

  void descend(std::size_t j) {
    using F = Fingerprint;
    for (Index x = 0; x < box_.size(); ++x) {
      word_[j] = x;
      if (!segments_ok(j)) continue;
      const auto& m = mats_[j];
      const std::uint64_t a = images_[x];
      mats_[j + 1] = {F::sub(F::mul(a, m[0]), m[2]), F::sub(F::mul(a, m[1]), m[3]), m[0], m[1]};
      if (j + 1 == length_) {
        (*visit_)(word_, mats_[j + 1]);
      } else {
        descend(j + 1);
      }
    }
  }

  const Ring& ring_;
  const std::vector<Element>& box_;
  const std::vector<std::uint64_t>& images_;
  std::size_t length_;
  std::size_t width_;
  Element minus_one_;
  std::vector<Index> word_;
  std::vector<Fingerprint::Matrix> mats_;
  std::vector<std::uint64_t> cont_;
  const Visit* visit_ = nullptr;
};

}  // namespace

BudgetExceeded::BudgetExceeded(std::uint64_t candidates, std::uint64_t budget)
    : std::runtime_error("search box needs " + std::to_string(candidates) + " candidates, budget is " +
                         std::to_string(budget)),
      candidates_(candidates),
      budget_(budget) {}

std::uint64_t bounded_search_candidates(std::size_t box_size, std::size_t n) {
  const std::size_t h = n / 2;
  const std::uint64_t l = saturating_pow(box_size, h);
  const std::uint64_t r = saturating_pow(box_size, n - h);
  return l > std::numeric_limits<std::uint64_t>::max() - r ? std::numeric_limits<std::uint64_t>::max() : l + r;
}

BoundedSearchResult bounded_search(const RingPtr& ring, std::size_t n, const SearchBox& box, std::uint64_t budget) {
  if (n < 3) throw std::invalid_argument("irreducible quiddities have size at least 3");
  if (n > box.max_size) throw std::invalid_argument("size exceeds the box's max_size");
  const Ring& r = *ring;
  const std::vector<Element> elems = box_elements(ring, box);
  BoundedSearchResult result;
  result.box_size = elems.size();
  result.candidates = bounded_search_candidates(elems.size(), n);
  if (result.candidates > budget) throw BudgetExceeded(result.candidates, budget);

  const std::size_t h = n / 2;
  const std::size_t width = n >= 4 ? n - 3 : 0;
  const bool char2 = r.equal(r.one(), r.from_int(-1));

  std::vector<std::uint64_t> images;
  if (r.characteristic() == 0) {
    const Fingerprint fp;
    for (const auto& x : elems) {
      const auto v = fp.image(x);
      if (!v) {
        images.clear();
        break;
      }
      images.push_back(*v);
    }
  }
  const bool fast = images.size() == elems.size();

  // Left halves indexed by the hash of the matrix a right half must equal.
  std::vector<Index> left_words;
  std::unordered_multimap<std::size_t, std::size_t> table;
  auto add_left = [&](const std::vector<Index>& w, std::size_t key, std::size_t negated_key) {
    const std::size_t id = left_words.size() / h;
    left_words.insert(left_words.end(), w.begin(), w.end());
    table.emplace(key, id);
    if (!char2 && negated_key != key) table.emplace(negated_key, id);
  };

  std::vector<std::vector<Index>> found;
  auto join = [&](const std::vector<Index>& w, std::size_t key) {
    auto [lo, hi] = table.equal_range(key);
    for (auto it = lo; it != hi; ++it) {
      std::vector<Index> t(left_words.begin() + static_cast<std::ptrdiff_t>(it->second * h),
                           left_words.begin() + static_cast<std::ptrdiff_t>((it->second + 1) * h));
      t.insert(t.end(), w.begin(), w.end());
      if (!is_canonical(t)) continue;
      Tuple entries;
      entries.reserve(n);
      for (Index i : t) entries.push_back(elems[i]);
      if (!quiddity_sign(entries)) continue;  // hash collision
      ++result.joins;
      if (segment_criterion(entries)) continue;
      found.push_back(std::move(t));
    }
  };

  if (fast) {
    using F = Fingerprint;
    FastHalfWalk(r, elems, images, h, width).run([&](const std::vector<Index>& w, const F::Matrix& m) {
      const F::Matrix adj{m[3], F::neg(m[1]), F::neg(m[2]), m[0]};
      const F::Matrix neg_adj{F::neg(adj[0]), F::neg(adj[1]), F::neg(adj[2]), F::neg(adj[3])};
      add_left(w, F::hash(adj), F::hash(neg_adj));
    });
    FastHalfWalk(r, elems, images, n - h, width).run(
        [&](const std::vector<Index>& w, const F::Matrix& m) { join(w, F::hash(m)); });
  } else {
    HalfWalk(r, elems, h, width).run([&](const std::vector<Index>& w, const Mat2& m) {
      const Mat2 adj = m.adjugate();
      add_left(w, adj.hash(), (-adj).hash());
    });
    HalfWalk(r, elems, n - h, width).run([&](const std::vector<Index>& w, const Mat2& m) { join(w, m.hash()); });
  }

  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const auto& t : found) {
    Tuple entries;
    for (Index i : t) entries.push_back(elems[i]);
    auto q = QuiddityTuple::verify(ring, std::move(entries));
    if (!q || is_irreducible(*q).verdict != Verdict::Irreducible) {
      throw std::logic_error("bounded search kept a tuple that fails the final check");
    }
    result.irreducibles.push_back(std::move(*q));
  }
  return result;
}

}  // namespace quiddity
