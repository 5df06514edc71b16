#include "quiddity/irreducibility.hpp"

#include <stdexcept>

namespace quiddity {

namespace {

bool is_plus_minus_one(const Ring& r, const Element& x) { return x.is_one() || r.equal(x, r.from_int(-1)); }

std::optional<ReductionCertificate> scan_rotations(const QuiddityTuple& c, ScanMode mode) {
  const Ring& r = *c.ring();
  const std::size_t n = c.size();
  for (bool rev : {false, true}) {
    if (rev && mode == ScanMode::RotationsOnly) break;
    for (std::size_t rot = 0; rot < n; ++rot) {
      const Transform tr{rot, rev};
      const Tuple d = apply_transform(c.entries(), tr);
      // P_k = M(d_{n-k}..d_{n-1}); growing k adds a factor on the right.
      Mat2 p = n_matrix(d[n - 1]);
      for (std::size_t k = 1; k + 3 <= n; ++k) {
        if (k > 1) p = p * n_matrix(d[n - k]);
        for (const auto& sol : junction_solve(p)) {
          const std::size_t l = k + 2;
          const std::size_t m = n - k;
          Tuple b;
          b.reserve(l);
          b.push_back(sol.b_first);
          b.insert(b.end(), d.begin() + static_cast<std::ptrdiff_t>(m), d.end());
          b.push_back(sol.b_last);
          Tuple a(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m));
          a.front() = r.sub(a.front(), sol.b_last);
          a.back() = r.sub(a.back(), sol.b_first);
          auto sign_b = quiddity_sign(b);
          auto sign_a = quiddity_sign(a);
          if (!sign_b || sign_b->value != sol.epsilon || !sign_a) {
            throw std::logic_error("junction solution failed to produce quiddities for " + format_tuple(c.entries()));
          }
          return ReductionCertificate{tr, l, m, std::move(a), std::move(b), *sign_a, *sign_b};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<JunctionSolution> junction_solve(const Mat2& p) {
  const Ring& r = *p.ring();
  if (!p.det().is_one()) throw std::logic_error("junction_solve: det P != 1");
  std::vector<JunctionSolution> out;
  const bool char2 = r.equal(r.one(), r.from_int(-1));
  for (int eps : {1, -1}) {
    if (char2 && eps == -1) break;
    const Element e = r.from_int(eps);
    if (!r.equal(p.a11, r.neg(e))) continue;
    out.push_back({eps, r.mul(e, p.a12), r.neg(r.mul(e, p.a21))});
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Irreducible:
      return "irreducible";
    case Verdict::Reducible:
      return "reducible";
    case Verdict::Excluded:
      return "excluded";
  }
  return "?";
}

bool segment_criterion(std::span<const Element> c) {
  const std::size_t n = c.size();
  if (n < 4) return false;
  const Ring& r = *c.front().ring();
  Tuple doubled(c.begin(), c.end());
  doubled.insert(doubled.end(), c.begin(), c.end());
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t k = 1; k + 3 <= n; ++k) {
      const auto seg = std::span<const Element>(doubled).subspan(start, k);
      if (is_plus_minus_one(r, continuant(r, seg))) return true;
    }
  }
  return false;
}

std::optional<ReductionCertificate> find_reduction(const QuiddityTuple& c, ScanMode mode) {
  if (!c.verified()) throw RingError("find_reduction needs a verified quiddity");
  if (c.size() <= 3) return std::nullopt;
  auto cert = scan_rotations(c, mode);
  if (cert.has_value() != segment_criterion(c.entries())) {
    throw std::logic_error("segment-continuant criterion disagrees with the reduction scan on " +
                           format_tuple(c.entries()));
  }
  return cert;
}

IrreducibilityResult is_irreducible(const QuiddityTuple& c) {
  if (!c.verified()) throw RingError("is_irreducible needs a verified quiddity");
  if (c.size() <= 2) return {Verdict::Excluded, std::nullopt};
  auto cert = find_reduction(c);
  if (cert) return {Verdict::Reducible, std::move(cert)};
  return {Verdict::Irreducible, std::nullopt};
}

CertificateCheck verify_certificate(const ReductionCertificate& cert, const QuiddityTuple& c) {
  const std::size_t n = c.size();
  if (cert.l < 3) return {false, "size of b below 3"};
  if (cert.m < 3) return {false, "size of a below 3"};
  if (cert.l + cert.m != n + 2) return {false, "sizes do not add up to n + 2"};
  if (cert.a.size() != cert.m || cert.b.size() != cert.l) return {false, "tuple lengths disagree with l, m"};
  if (cert.transform.rotation >= n) return {false, "rotation out of range"};
  for (const auto& x : cert.a) {
    if (!c.ring()->same_as(*x.ring())) return {false, "a has entries outside the ring"};
  }
  for (const auto& x : cert.b) {
    if (!c.ring()->same_as(*x.ring())) return {false, "b has entries outside the ring"};
  }
  const Tuple d = apply_transform(c.entries(), cert.transform);
  if (oplus(cert.a, cert.b) != d) return {false, "a ⊕ b differs from the representative"};
  const auto sb = quiddity_sign(cert.b);
  if (!sb) return {false, "b is not a quiddity"};
  if (*sb != cert.sign_b) return {false, "sign of b differs"};
  const auto sa = quiddity_sign(cert.a);
  if (!sa) return {false, "a is not a quiddity"};
  if (*sa != cert.sign_a) return {false, "sign of a differs"};
  return {true, {}};
}

std::optional<ReductionCertificate> reduction_oracle(const QuiddityTuple& c) {
  if (!c.ring()->is_finite()) throw RingError("reduction_oracle needs a finite ring");
  if (!c.verified()) throw RingError("reduction_oracle needs a verified quiddity");
  const std::size_t n = c.size();
  if (n <= 3) return std::nullopt;
  const Ring& r = *c.ring();
  const auto elems = r.elements();
  for (const auto& [tr, d] : dihedral_orbit(c.entries())) {
    for (std::size_t l = 3; l + 1 <= n; ++l) {
      const std::size_t m = n + 2 - l;
      std::optional<ReductionCertificate> by_sign[2];
      for (const auto& first : elems) {
        for (const auto& last : elems) {
          Tuple b{first};
          b.insert(b.end(), d.begin() + static_cast<std::ptrdiff_t>(m), d.end());
          b.push_back(last);
          const auto sb = quiddity_sign(b);
          if (!sb) continue;
          Tuple a(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(m));
          a.front() = r.sub(a.front(), last);
          a.back() = r.sub(a.back(), first);
          const auto sa = quiddity_sign(a);
          if (!sa) continue;
          auto& slot = by_sign[sb->value == 1 ? 0 : 1];
          if (!slot) slot = ReductionCertificate{tr, l, m, std::move(a), std::move(b), *sa, *sb};
        }
      }
      if (by_sign[0]) return by_sign[0];
      if (by_sign[1]) return by_sign[1];
    }
  }
  return std::nullopt;
}

}  // namespace quiddity
