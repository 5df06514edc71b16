#include "quiddity/finite_ring.hpp"

#include <algorithm>
#include <limits>

namespace quiddity {

namespace {
constexpr GroupIndex kNone = std::numeric_limits<GroupIndex>::max();
}

FiniteRing::FiniteRing(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_->is_finite()) throw RingError(ring_->expression() + " is infinite");
  if (*ring_->cardinality() > kMaxSize) {
    throw RingError(ring_->expression() + " has " + std::to_string(*ring_->cardinality()) +
                    " elements; the enumeration core supports at most " + std::to_string(kMaxSize));
  }
  elements_ = ring_->elements();
  const std::size_t q = elements_.size();
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    neg_[i] = index_of(ring_->neg(elements_[i]));
    for (std::size_t j = 0; j < q; ++j) {
      add_[i * q + j] = index_of(ring_->add(elements_[i], elements_[j]));
      mul_[i * q + j] = index_of(ring_->mul(elements_[i], elements_[j]));
    }
  }
  zero_ = index_of(ring_->zero());
  one_ = index_of(ring_->one());
  minus_one_ = index_of(ring_->from_int(-1));
}

ElemIndex FiniteRing::index_of(const Element& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x, [&](const Element& a, const Element& b) {
    return ring_->compare(a, b) < 0;
  });
  if (it == elements_.end() || !(*it == x)) throw RingError("element not found: " + x.to_string());
  return static_cast<ElemIndex>(it - elements_.begin());
}

Tuple FiniteRing::to_elements(std::span<const ElemIndex> t) const {
  Tuple out;
  out.reserve(t.size());
  for (auto i : t) out.push_back(elements_[i]);
  return out;
}

SL2Group::SL2Group(const FiniteRing& ring) : ring_size_(ring.size()) {
  const std::size_t q = ring_size_;
  lookup_.assign(q * q * q * q, kNone);
  // A first row (a, b) extends to a determinant-one matrix only if it is
  // unimodular; skip the inner loops for rows that are not.
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      bool unimodular = false;
      for (std::size_t c = 0; c < q && !unimodular; ++c) {
        for (std::size_t d = 0; d < q && !unimodular; ++d) {
          unimodular = ring.sub(ring.mul(static_cast<ElemIndex>(a), static_cast<ElemIndex>(d)),
                                ring.mul(static_cast<ElemIndex>(b), static_cast<ElemIndex>(c))) == ring.one();
        }
      }
      if (!unimodular) continue;
      for (std::size_t c = 0; c < q; ++c) {
        for (std::size_t d = 0; d < q; ++d) {
          const auto ad = ring.mul(static_cast<ElemIndex>(a), static_cast<ElemIndex>(d));
          const auto bc = ring.mul(static_cast<ElemIndex>(b), static_cast<ElemIndex>(c));
          if (ring.sub(ad, bc) != ring.one()) continue;
          lookup_[((a * q + b) * q + c) * q + d] = static_cast<GroupIndex>(matrices_.size());
          matrices_.push_back({static_cast<ElemIndex>(a), static_cast<ElemIndex>(b), static_cast<ElemIndex>(c),
                               static_cast<ElemIndex>(d)});
        }
      }
    }
  }
  identity_ = index_of({ring.one(), ring.zero(), ring.zero(), ring.one()});
  minus_identity_ = index_of({ring.minus_one(), ring.zero(), ring.zero(), ring.minus_one()});
  step_.resize(matrices_.size() * q);
  for (GroupIndex g = 0; g < matrices_.size(); ++g) {
    const Matrix m = matrices_[g];
    for (std::size_t x = 0; x < q; ++x) {
      const auto a = static_cast<ElemIndex>(x);
      const Matrix next{ring.sub(ring.mul(a, m[0]), m[2]), ring.sub(ring.mul(a, m[1]), m[3]), m[0], m[1]};
      step_[static_cast<std::size_t>(g) * q + x] = index_of(next);
    }
  }
}

GroupIndex SL2Group::index_of(const Matrix& m) const {
  const std::size_t q = ring_size_;
  const GroupIndex g = lookup_[((m[0] * q + m[1]) * q + m[2]) * q + m[3]];
  if (g == kNone) throw RingError("matrix is not in SL2");
  return g;
}

ReachabilityTable::ReachabilityTable(const SL2Group& group, std::size_t max_steps) {
  const std::size_t order = group.order();
  rows_.assign(max_steps + 1, std::vector<std::uint8_t>(order, 0));
  rows_[0][group.identity()] = 1;
  rows_[0][group.minus_identity()] = 1;
  for (std::size_t r = 1; r <= max_steps; ++r) {
    for (GroupIndex g = 0; g < order; ++g) {
      for (std::size_t a = 0; a < group.ring_size(); ++a) {
        if (rows_[r - 1][group.step(g, static_cast<ElemIndex>(a))]) {
          rows_[r][g] = 1;
          break;
        }
      }
    }
  }
}

}  // namespace quiddity
