#include "qjlab/classify.hpp"

#include <functional>
#include <map>

#include "qjlab/construct.hpp"
#include "qjlab/errors.hpp"

namespace qjlab::classify {

using finring::ElementSubset;
using finring::RingTable;

namespace {

// Raw membership tests, computed from the tables without the invariant cache.
bool raw_unit(const RingTable& r, Elem a) {
  for (Elem b = 0; b < r.order(); ++b) {
    if (r.mul(a, b) == r.one()) return true;
  }
  return false;
}

bool raw_in_jacobson(const RingTable& r, Elem a) {
  for (Elem x = 0; x < r.order(); ++x) {
    if (!raw_unit(r, r.sub(r.one(), r.mul(x, a)))) return false;
  }
  return true;
}

bool raw_in_radical(const RingTable& r, const ElemBits& ideal, Elem a) {
  return finring::some_power_in(r, a, ideal);
}

void require(bool ok, const std::string& predicate) {
  if (!ok) throw InternalInconsistency(predicate + ": witness failed re-validation");
}

void require_proper(const IdealSet& ideal, const char* predicate) {
  if (!ideal.is_proper()) {
    throw InvalidArgument(std::string(predicate) + " is only defined for proper ideals");
  }
}

Verdict improper(std::string name, const IdealSet& ideal) {
  Verdict v;
  v.predicate = std::move(name);
  v.holds = false;
  v.witness = {ideal.table().one()};
  v.witness_kind = "improper";
  return v;
}

// Scans (a, b) in lexicographic order; the witness is the first pair
// meeting `hyp` and failing `concl`.
template <class Hyp, class Concl>
Verdict pair_scan(std::string name, const RingTable& r, Hyp hyp, Concl concl) {
  Verdict v;
  v.predicate = std::move(name);
  bool found = false;
  for (Elem a = 0; a < r.order(); ++a) {
    for (Elem b = 0; b < r.order(); ++b) {
      if (!hyp(a, b)) continue;
      ++v.hypothesis_count;
      if (!found && !concl(a, b)) {
        v.witness = {a, b};
        found = true;
      }
    }
  }
  v.holds = !found;
  v.vacuous = v.hypothesis_count == 0;
  if (found) v.witness_kind = "pair";
  return v;
}

// First element failing `ok`, counting the elements that meet `hyp`.
template <class Hyp, class Ok>
Verdict element_scan(std::string name, const RingTable& r, Hyp hyp, Ok ok) {
  Verdict v;
  v.predicate = std::move(name);
  bool found = false;
  for (Elem a = 0; a < r.order(); ++a) {
    if (!hyp(a)) continue;
    ++v.hypothesis_count;
    if (!found && !ok(a)) {
      v.witness = {a};
      found = true;
    }
  }
  v.holds = !found;
  v.vacuous = v.hypothesis_count == 0;
  if (found) v.witness_kind = "element";
  return v;
}

Verdict prime_scan(std::string name, const RingTable& r, const ElemBits& p) {
  return pair_scan(
      std::move(name), r, [&](Elem a, Elem b) { return p.test(r.mul(a, b)); },
      [&](Elem a, Elem b) { return p.test(a) || p.test(b); });
}

bool presimplifiable_scan(const RingTable& r, const ElemBits& units, Verdict* out) {
  auto v = pair_scan(
      "presimplifiable", r, [&](Elem a, Elem b) { return r.mul(a, b) == a; },
      [&](Elem a, Elem b) { return a == r.zero() || units.test(b); });
  if (out) *out = v;
  return v.holds;
}

bool quasi_presimplifiable_scan(const RingTable& r, const ElemBits& units, const ElemBits& nil,
                                Verdict* out) {
  auto v = pair_scan(
      "quasi_presimplifiable", r, [&](Elem a, Elem b) { return r.mul(a, b) == a; },
      [&](Elem a, Elem b) { return nil.test(a) || units.test(b); });
  if (out) *out = v;
  return v.holds;
}

bool vnr_element(const RingTable& r, Elem a) {
  const Elem a2 = r.mul(a, a);
  for (Elem x = 0; x < r.order(); ++x) {
    if (r.mul(a2, x) == a) return true;
  }
  return false;
}

}  // namespace

namespace routes {

bool j_ideal_by_definition(const IdealSet& ideal) {
  const auto& r = ideal.table();
  const auto& jac = r.invariants().jacobson;
  return pair_scan(
             "j_ideal", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)); },
             [&](Elem a, Elem b) { return jac.test(a) || ideal.contains(b); })
      .holds;
}

bool j_ideal_by_quotient(const IdealSet& ideal) {
  if (!ideal.subset_of(finring::jacobson(ideal.ring()))) return false;
  return presimplifiable_by_containment(construct::quotient(ideal).ring);
}

bool quasi_j_by_definition(const IdealSet& ideal) {
  return j_ideal_by_definition(finring::radical(ideal));
}

bool quasi_j_by_pairs(const IdealSet& ideal) {
  const auto& r = ideal.table();
  const auto& jac = r.invariants().jacobson;
  const auto rad = finring::radical(ideal);
  return pair_scan(
             "quasi_j", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)); },
             [&](Elem a, Elem b) { return jac.test(a) || rad.contains(b); })
      .holds;
}

bool presimplifiable_by_definition(const RingRef& ring) {
  return presimplifiable_scan(*ring, ring->invariants().units, nullptr);
}

bool presimplifiable_by_containment(const RingRef& ring) {
  const auto& inv = ring->invariants();
  return (inv.zero_divisors & ~inv.jacobson).none();
}

bool quasi_presimplifiable_by_definition(const RingRef& ring) {
  const auto& inv = ring->invariants();
  return quasi_presimplifiable_scan(*ring, inv.units, inv.nilradical, nullptr);
}

bool quasi_presimplifiable_by_containment(const RingRef& ring) {
  const auto& inv = ring->invariants();
  return (inv.not_quasi_regular & ~inv.jacobson).none();
}

}  // namespace routes

Verdict is_proper(const IdealSet& ideal) {
  if (!ideal.is_proper()) return improper("proper", ideal);
  Verdict v;
  v.predicate = "proper";
  v.holds = true;
  return v;
}

Verdict is_prime(const IdealSet& ideal) {
  if (!ideal.is_proper()) return improper("prime", ideal);
  const auto& r = ideal.table();
  auto v = prime_scan("prime", r, ideal.bits());
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b), "prime");
  }
  return v;
}

Verdict is_maximal(const IdealSet& ideal) {
  if (!ideal.is_proper()) return improper("maximal", ideal);
  const auto& ring = ideal.ring();
  auto v = element_scan(
      "maximal", *ring, [&](Elem a) { return !ideal.contains(a); },
      [&](Elem a) { return !finring::ideal_sum(ideal, finring::principal(ring, a)).is_proper(); });
  if (!v.holds) {
    const auto bigger = finring::ideal_sum(ideal, finring::principal(ring, v.witness[0]));
    require(bigger.is_proper() && !ideal.contains(v.witness[0]), "maximal");
  }
  return v;
}

Verdict is_primary(const IdealSet& ideal) {
  require_proper(ideal, "primary");
  const auto& r = ideal.table();
  const auto rad = finring::radical(ideal);
  auto v = pair_scan(
      "primary", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)); },
      [&](Elem a, Elem b) { return ideal.contains(a) || rad.contains(b); });
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !ideal.contains(a) &&
                !raw_in_radical(r, ideal.bits(), b),
            "primary");
  }
  return v;
}

Verdict is_quasi_primary(const IdealSet& ideal) {
  require_proper(ideal, "quasi_primary");
  const auto& r = ideal.table();
  const auto rad = finring::radical(ideal);
  auto v = prime_scan("quasi_primary", r, rad.bits());
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(raw_in_radical(r, ideal.bits(), r.mul(a, b)) && !raw_in_radical(r, ideal.bits(), a) &&
                !raw_in_radical(r, ideal.bits(), b),
            "quasi_primary");
  }
  return v;
}

Verdict is_n_ideal(const IdealSet& ideal) {
  require_proper(ideal, "n_ideal");
  const auto& r = ideal.table();
  const auto& nil = r.invariants().nilradical;
  auto v = pair_scan(
      "n_ideal", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)) && !nil.test(a); },
      [&](Elem, Elem b) { return ideal.contains(b); });
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !finring::is_nilpotent(r, a) && !ideal.contains(b),
            "n_ideal");
  }
  return v;
}

Verdict is_j_ideal(const IdealSet& ideal) {
  require_proper(ideal, "j_ideal");
  const auto& r = ideal.table();
  const auto& jac = r.invariants().jacobson;
  auto v = pair_scan(
      "j_ideal", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)) && !jac.test(a); },
      [&](Elem, Elem b) { return ideal.contains(b); });
  if (v.holds != routes::j_ideal_by_quotient(ideal)) {
    throw InternalInconsistency("j_ideal: pair scan and quotient characterization disagree on " +
                                finring::describe(ideal) + " in " + r.label());
  }
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !raw_in_jacobson(r, a) && !ideal.contains(b),
            "j_ideal");
  }
  return v;
}

Verdict is_quasi_j_ideal(const IdealSet& ideal) {
  require_proper(ideal, "quasi_j");
  const auto& r = ideal.table();
  const auto& jac = r.invariants().jacobson;
  const auto rad = finring::radical(ideal);
  auto v = pair_scan(
      "quasi_j", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)) && !jac.test(a); },
      [&](Elem, Elem b) { return rad.contains(b); });
  if (v.holds != routes::quasi_j_by_definition(ideal)) {
    throw InternalInconsistency("quasi_j: definition and pair characterization disagree on " +
                                finring::describe(ideal) + " in " + r.label());
  }
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !raw_in_jacobson(r, a) &&
                !raw_in_radical(r, ideal.bits(), b),
            "quasi_j");
  }
  return v;
}

Verdict is_delta1_n_ideal(const IdealSet& ideal) {
  require_proper(ideal, "delta1_n");
  const auto& r = ideal.table();
  const auto& nil = r.invariants().nilradical;
  const auto rad = finring::radical(ideal);
  auto v = pair_scan(
      "delta1_n", r, [&](Elem a, Elem b) { return ideal.contains(r.mul(a, b)) && !nil.test(a); },
      [&](Elem, Elem b) { return rad.contains(b); });
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(ideal.contains(r.mul(a, b)) && !finring::is_nilpotent(r, a) &&
                !raw_in_radical(r, ideal.bits(), b),
            "delta1_n");
  }
  return v;
}

Verdict is_superfluous(const IdealSet& ideal) {
  const auto& ring = ideal.ring();
  Verdict v;
  v.predicate = "superfluous";
  bool found = false;
  for (const auto& k : finring::enumerate_ideals(ring)) {
    if (finring::ideal_sum(ideal, k).is_proper()) continue;
    ++v.hypothesis_count;
    if (!found && k.is_proper()) {
      v.witness = finring::generators(k);
      found = true;
    }
  }
  v.holds = !found;
  v.vacuous = v.hypothesis_count == 0;
  if (found) {
    v.witness_kind = "ideal";
    ElementSubset gens(ring, std::span<const Elem>(v.witness));
    const auto k = finring::ideal_generated(ring, gens);
    require(k.is_proper() && !finring::ideal_sum(ideal, k).is_proper(), "superfluous");
  }
  return v;
}

Verdict is_regular_ideal(const IdealSet& ideal) {
  if (!ideal.is_proper()) return improper("regular", ideal);
  const auto q = construct::quotient(ideal);
  const auto& r = ideal.table();
  auto v = element_scan(
      "regular", r, [](Elem) { return true; },
      [&](Elem a) { return vnr_element(*q.ring, q.projection(a)); });
  if (!v.holds) {
    // a + I = (a + I)^2 (x + I) fails for every x in R.
    const Elem a = v.witness[0];
    bool any = false;
    for (Elem x = 0; x < r.order() && !any; ++x) {
      any = ideal.contains(r.sub(r.mul(r.mul(a, a), x), a));
    }
    require(!any, "regular");
  }
  return v;
}

Verdict is_quasi_local(const RingRef& ring) {
  const auto& r = *ring;
  const auto& units = r.invariants().units;
  auto v = pair_scan(
      "quasi_local", r, [&](Elem a, Elem b) { return !units.test(a) && !units.test(b); },
      [&](Elem a, Elem b) { return !units.test(r.add(a, b)); });
  if (v.holds != (r.invariants().maximal.size() == 1)) {
    throw InternalInconsistency("quasi_local: non-unit closure and maximal-ideal count disagree");
  }
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(!raw_unit(r, a) && !raw_unit(r, b) && raw_unit(r, r.add(a, b)), "quasi_local");
  }
  return v;
}

Verdict is_semiprimitive(const RingRef& ring) {
  const auto& r = *ring;
  const auto& jac = r.invariants().jacobson;
  auto v = element_scan(
      "semiprimitive", r, [&](Elem a) { return a != r.zero(); },
      [&](Elem a) { return !jac.test(a); });
  if (!v.holds) require(raw_in_jacobson(r, v.witness[0]), "semiprimitive");
  return v;
}

Verdict is_field(const RingRef& ring) {
  const auto& r = *ring;
  const auto& units = r.invariants().units;
  auto v = element_scan(
      "field", r, [&](Elem a) { return a != r.zero(); }, [&](Elem a) { return units.test(a); });
  if (!v.holds) require(!raw_unit(r, v.witness[0]), "field");
  return v;
}

Verdict is_reduced(const RingRef& ring) {
  const auto& r = *ring;
  auto v = element_scan(
      "reduced", r, [&](Elem a) { return a != r.zero(); },
      [&](Elem a) { return !r.invariants().nilradical.test(a); });
  if (!v.holds) require(finring::is_nilpotent(r, v.witness[0]), "reduced");
  return v;
}

Verdict is_domain(const RingRef& ring) {
  const auto& r = *ring;
  auto v = pair_scan(
      "domain", r, [&](Elem a, Elem b) { return a != r.zero() && b != r.zero(); },
      [&](Elem a, Elem b) { return r.mul(a, b) != r.zero(); });
  if (!v.holds) require(r.mul(v.witness[0], v.witness[1]) == r.zero(), "domain");
  return v;
}

Verdict is_von_neumann_regular(const RingRef& ring) {
  const auto& r = *ring;
  auto v = element_scan(
      "von_neumann_regular", r, [](Elem) { return true; },
      [&](Elem a) { return vnr_element(r, a); });
  return v;
}

Verdict is_presimplifiable(const RingRef& ring) {
  const auto& r = *ring;
  Verdict v;
  presimplifiable_scan(r, r.invariants().units, &v);
  if (v.holds != routes::presimplifiable_by_containment(ring)) {
    throw InternalInconsistency("presimplifiable: definition and Z(R) ⊆ J(R) disagree on " +
                                r.label());
  }
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(r.mul(a, b) == a && a != r.zero() && !raw_unit(r, b), "presimplifiable");
  }
  return v;
}

Verdict is_quasi_presimplifiable(const RingRef& ring) {
  const auto& r = *ring;
  Verdict v;
  quasi_presimplifiable_scan(r, r.invariants().units, r.invariants().nilradical, &v);
  if (v.holds != routes::quasi_presimplifiable_by_containment(ring)) {
    throw InternalInconsistency("quasi_presimplifiable: definition and NZ(R) ⊆ J(R) disagree on " +
                                r.label());
  }
  if (!v.holds) {
    const Elem a = v.witness[0], b = v.witness[1];
    require(r.mul(a, b) == a && !finring::is_nilpotent(r, a) && !raw_unit(r, b),
            "quasi_presimplifiable");
  }
  return v;
}

namespace {

using IdealFn = Verdict (*)(const IdealSet&);
using RingFn = Verdict (*)(const RingRef&);

const std::vector<std::pair<std::string, IdealFn>>& ideal_table() {
  static const std::vector<std::pair<std::string, IdealFn>> table = {
      {"proper", is_proper},
      {"prime", is_prime},
      {"maximal", is_maximal},
      {"primary", is_primary},
      {"quasi_primary", is_quasi_primary},
      {"n_ideal", is_n_ideal},
      {"j_ideal", is_j_ideal},
      {"quasi_j", is_quasi_j_ideal},
      {"delta1_n", is_delta1_n_ideal},
      {"superfluous", is_superfluous},
      {"regular", is_regular_ideal},
  };
  return table;
}

const std::vector<std::pair<std::string, RingFn>>& ring_table() {
  static const std::vector<std::pair<std::string, RingFn>> table = {
      {"quasi_local", is_quasi_local},
      {"semiprimitive", is_semiprimitive},
      {"field", is_field},
      {"reduced", is_reduced},
      {"domain", is_domain},
      {"von_neumann_regular", is_von_neumann_regular},
      {"presimplifiable", is_presimplifiable},
      {"quasi_presimplifiable", is_quasi_presimplifiable},
  };
  return table;
}

template <class Table>
std::vector<std::string> names_of(const Table& table) {
  std::vector<std::string> out;
  for (const auto& [name, fn] : table) out.push_back(name);
  return out;
}

}  // namespace

const std::vector<std::string>& ideal_predicate_names() {
  static const auto names = names_of(ideal_table());
  return names;
}

const std::vector<std::string>& ring_predicate_names() {
  static const auto names = names_of(ring_table());
  return names;
}

Verdict ideal_predicate(const std::string& name, const IdealSet& ideal) {
  for (const auto& [n, fn] : ideal_table()) {
    if (n == name) return fn(ideal);
  }
  throw UnknownName("unknown ideal predicate: " + name);
}

Verdict ring_predicate(const std::string& name, const RingRef& ring) {
  for (const auto& [n, fn] : ring_table()) {
    if (n == name) return fn(ring);
  }
  throw UnknownName("unknown ring predicate: " + name);
}

}  // namespace qjlab::classify
