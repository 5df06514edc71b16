#pragma once

/**
 * @file families.hpp
 * @brief Explicit quiddity families and the polynomial-ring unboundedness detector.
 *
 * Every generator checks the quiddity equation and the expected irreducibility
 * verdict of what it returns, and throws std::logic_error on a mismatch.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiddity/irreducibility.hpp"
#include "quiddity/ring_scan.hpp"

namespace quiddity {

struct FamilyMember {
  std::string label;  // shape of the entry, e.g. "(0,a,0,-a)"
  QuiddityTuple tuple;
  Verdict verdict;
};

/// ±(1,1,1), (0,a,0,-a), (a,0,-a,0) over Z; the 4-tuples are irreducible iff a ∉ {±1}.
std::vector<FamilyMember> family_irr_Z(const mpz_class& a);

/// ±(1,1,1), (0,P,0,-P), (P,0,-P,0) over Z[X], (Z/2)[X] or (Z/3)[X]; the
/// 4-tuples are irreducible iff P ∉ {±1}.  Tuples that coincide in
/// characteristic 2 are listed once.
std::vector<FamilyMember> family_irr_poly(const RingPtr& ring, const Element& p);

/// (2n+1, (n+1)/(2n+1), 3, 2, ..., 2, 2n/(2n+1)) over Q with n-1 twos; n >= 2.
FamilyMember family_q_field(std::uint64_t n);

/// The (4l+8)-tuple over Z[X]/(X^4+1) built from s = X - X^3 and is = X + X^3; l >= 1.
FamilyMember family_zeta8(std::uint64_t l);

/// The ring Z[X]/(X^4+1) used by family_zeta8.
RingPtr zeta8_ring();

/// A family by name with textual parameters:
///   irr_Z a=<int> | irr_ZX P=<poly> | irr_ZkX k=2|3 P=<poly> | q_field n=<nat> | zeta8 l=<nat>
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
};

struct FamilyResult {
  FamilySpec spec;
  RingPtr ring;
  std::vector<FamilyMember> members;
};

/// Throws std::invalid_argument for unknown names or parameters out of domain,
/// ParseError for unparsable parameter values.
FamilyResult generate_family(const FamilySpec& spec);

enum class Criterion { CharNotIn023, HasNilpotent, Decomposable, ExtraUnit, FiniteNotZ2Z3 };

std::string to_string(Criterion c);

/// One checkable witness for a flag.  Which fields are set depends on the criterion.
struct Witness {
  std::optional<Element> element;  // nilpotent, idempotent or unit
  std::optional<Element> inverse;  // unit
  std::uint64_t exponent = 0;      // nilpotent: element^exponent = 0
  std::uint64_t value = 0;         // characteristic or cardinality
};

struct CriterionFlag {
  Criterion criterion;
  std::vector<Witness> witnesses;  // non-empty; the first is the representative
};

enum class Conclusion { PolynomialRingUnbounded, BoundedKnown, Undecided };

std::string to_string(Conclusion c);

/**
 * Flags on A that decide the behaviour of ℓ for A[X]; the report says nothing
 * about ℓ_A itself.  @c subject names the ring the conclusion is about.
 */
struct CriteriaReport {
  RingPtr ring;
  std::string subject;  // the polynomial ring the flags speak about, e.g. "Z/4[X]"
  std::vector<CriterionFlag> flags;
  Conclusion conclusion = Conclusion::Undecided;
  std::string reason;
  /// Set when the conclusion rests on a published result rather than a computation.
  std::optional<std::string> unbounded_claim;
  RingScan scan;
};

CriteriaReport unboundedness_criteria(const RingPtr& ring);

bool has_flag(const CriteriaReport& report, Criterion c);

/// Re-checks a witness with ring arithmetic alone.
CertificateCheck verify_witness(const RingPtr& ring, Criterion c, const Witness& w);

}  // namespace quiddity
