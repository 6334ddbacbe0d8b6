#pragma once

// Ideal-class and ring-class predicates. Every predicate returns a Verdict
// carrying a falsifying witness when it fails; the witness is re-checked
// against the raw definition (using independently computed radicals)
// before it is returned. Predicates with a known characterization compute
// both routes and throw InternalInconsistency if they disagree.

#include <cstddef>
#include <string>
#include <vector>

#include "qjlab/finring.hpp"

namespace qjlab::classify {

using finring::IdealSet;
using finring::RingRef;

struct Verdict {
  std::string predicate;
  bool holds = false;
  /// Empty iff holds. Pairs (a, b) for pair-scan predicates, a single
  /// element for element predicates, generators of the offending ideal
  /// for is_superfluous.
  std::vector<Elem> witness;
  /// "pair", "element", "ideal", or "improper" (1 lies in the ideal).
  std::string witness_kind;
  /// Number of tuples satisfying the predicate's hypothesis.
  std::size_t hypothesis_count = 0;
  /// Holds only because no tuple met the hypothesis.
  bool vacuous = false;

  explicit operator bool() const { return holds; }
};

using IdealVerdict = Verdict;

Verdict is_proper(const IdealSet& ideal);
Verdict is_prime(const IdealSet& ideal);
Verdict is_maximal(const IdealSet& ideal);
Verdict is_primary(const IdealSet& ideal);
Verdict is_quasi_primary(const IdealSet& ideal);
Verdict is_n_ideal(const IdealSet& ideal);
Verdict is_j_ideal(const IdealSet& ideal);
Verdict is_quasi_j_ideal(const IdealSet& ideal);
Verdict is_delta1_n_ideal(const IdealSet& ideal);
Verdict is_superfluous(const IdealSet& ideal);
Verdict is_regular_ideal(const IdealSet& ideal);

Verdict is_quasi_local(const RingRef& ring);
Verdict is_semiprimitive(const RingRef& ring);
Verdict is_field(const RingRef& ring);
Verdict is_reduced(const RingRef& ring);
Verdict is_domain(const RingRef& ring);
Verdict is_von_neumann_regular(const RingRef& ring);
Verdict is_presimplifiable(const RingRef& ring);
Verdict is_quasi_presimplifiable(const RingRef& ring);

/// Single routes, exposed so callers (and tests) can compare them.
namespace routes {
bool j_ideal_by_definition(const IdealSet& ideal);
/// I ⊆ J(R) and R/I presimplifiable.
bool j_ideal_by_quotient(const IdealSet& ideal);
/// √I is a J-ideal.
bool quasi_j_by_definition(const IdealSet& ideal);
/// ab ∈ I ⇒ a ∈ J(R) or b ∈ √I.
bool quasi_j_by_pairs(const IdealSet& ideal);
bool presimplifiable_by_definition(const RingRef& ring);
/// Z(R) ⊆ J(R)
bool presimplifiable_by_containment(const RingRef& ring);
bool quasi_presimplifiable_by_definition(const RingRef& ring);
/// NZ(R) ⊆ J(R)
bool quasi_presimplifiable_by_containment(const RingRef& ring);
}  // namespace routes

/// Names accepted by ideal_predicate / ring_predicate, in display order.
const std::vector<std::string>& ideal_predicate_names();
const std::vector<std::string>& ring_predicate_names();
/// Throws UnknownName.
Verdict ideal_predicate(const std::string& name, const IdealSet& ideal);
Verdict ring_predicate(const std::string& name, const RingRef& ring);

}  // namespace qjlab::classify
