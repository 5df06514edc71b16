#pragma once

/**
 * @file irreducibility.hpp
 * @brief Exact reducibility decision with checkable certificates.
 *
 * A quiddity c of size n >= 4 is reducible when some dihedral representative d
 * of c splits as d = a ⊕ b with a, b quiddities of sizes m, l >= 3.  The
 * interior (b_2..b_{l-1}) occupies the last k = l-2 entries of d.  Writing
 * P = M(b_2..b_{l-1}) = [[p, q], [r, s]], the condition N(b_l)·P·N(b_1) = ε·Id
 * holds exactly when p = -ε, with b_1 = ε·q and b_l = -ε·r.  So no search over
 * ring elements is needed: reducibility is a question about which cyclic
 * segments have continuant ±1.
 */

#include <optional>
#include <string>
#include <vector>

#include "quiddity/quiddity.hpp"

namespace quiddity {

struct JunctionSolution {
  int epsilon;  // sign of the completed b
  Element b_first;
  Element b_last;
};

/// Solutions in order ε = +1, ε = -1 (a single one in characteristic 2).
/// Throws std::logic_error when det P != 1.
std::vector<JunctionSolution> junction_solve(const Mat2& p);

struct ReductionCertificate {
  Transform transform;
  std::size_t l = 0;  // size of b
  std::size_t m = 0;  // size of a
  Tuple a;
  Tuple b;
  QuidditySign sign_a;
  QuidditySign sign_b;
  const Element& b_first() const { return b.front(); }
  const Element& b_last() const { return b.back(); }
};

enum class ScanMode {
  AllTransforms,  // the 2n dihedral representatives
  RotationsOnly,  // continuants are reversal invariant, so this finds the same verdicts
};

/// First certificate in scan order (representative, then k ascending, then ε),
/// or nothing.  Throws RingError on unverified input, and std::logic_error if
/// the result disagrees with the segment-continuant criterion.
std::optional<ReductionCertificate> find_reduction(const QuiddityTuple& c, ScanMode mode = ScanMode::AllTransforms);

enum class Verdict { Irreducible, Reducible, Excluded };

std::string to_string(Verdict v);

struct IrreducibilityResult {
  Verdict verdict;
  std::optional<ReductionCertificate> certificate;
};

/// Size <= 2 is excluded; otherwise irreducible iff no reduction exists.
IrreducibilityResult is_irreducible(const QuiddityTuple& c);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

CertificateCheck verify_certificate(const ReductionCertificate& cert, const QuiddityTuple& c);

/// Brute force straight from the definition: tries every (b_1, b_l) in A^2.
/// Finite rings only.  Independent of junction_solve.
std::optional<ReductionCertificate> reduction_oracle(const QuiddityTuple& c);

/// True iff some cyclic segment of length k in [1, n-3] has continuant ±1.
bool segment_criterion(std::span<const Element> c);

}  // namespace quiddity
