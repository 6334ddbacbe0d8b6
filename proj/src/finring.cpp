#include "qjlab/finring.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "qjlab/errors.hpp"

namespace qjlab {

std::vector<Elem> bits_members(const ElemBits& bits) {
  std::vector<Elem> out;
  out.reserve(bits.count());
  for (std::size_t i = bits._Find_first(); i < kMaxOrder; i = bits._Find_next(i)) {
    out.push_back(static_cast<Elem>(i));
  }
  return out;
}

bool canonical_less(const ElemBits& a, const ElemBits& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const ElemBits diff = a ^ b;
  if (diff.none()) return false;
  // Member lists agree below the first differing id; whoever owns it is smaller.
  return a.test(diff._Find_first());
}

}  // namespace qjlab

namespace qjlab::finring {

struct IdealFactory {
  static IdealSet make(RingRef ring, const ElemBits& bits) {
    return IdealSet(std::move(ring), bits);
  }
};

namespace {

using Table = std::span<const Elem>;

struct AxiomScan {
  std::size_t n;
  Table add;
  Table mul;
  Elem zero;
  Elem one;

  Elem a_(Elem x, Elem y) const { return add[x * n + y]; }
  Elem m_(Elem x, Elem y) const { return mul[x * n + y]; }

  // Checks that only involve pairs or single elements.
  std::optional<AxiomViolation> small() const {
    if (zero >= n || one >= n) return AxiomViolation{"identity out of range", {}};
    if (zero == one) return AxiomViolation{"one != zero", {zero}};
    for (std::size_t i = 0; i < n * n; ++i) {
      if (add[i] >= n || mul[i] >= n) {
        return AxiomViolation{"closure", {static_cast<Elem>(i / n), static_cast<Elem>(i % n)}};
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (a_(zero, x) != x) return AxiomViolation{"additive identity", {x}};
      if (m_(one, x) != x) return AxiomViolation{"multiplicative identity", {x}};
      bool has_inverse = false;
      for (Elem y = 0; y < n && !has_inverse; ++y) has_inverse = a_(x, y) == zero;
      if (!has_inverse) return AxiomViolation{"additive inverse", {x}};
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (a_(x, y) != a_(y, x)) return AxiomViolation{"additive commutativity", {x, y}};
        if (m_(x, y) != m_(y, x)) return AxiomViolation{"multiplicative commutativity", {x, y}};
      }
    }
    return std::nullopt;
  }

  // First triple-axiom failure with first coordinate x.
  std::optional<AxiomViolation> row(Elem x) const {
    for (Elem y = 0; y < n; ++y) {
      const Elem xy_add = a_(x, y);
      const Elem xy_mul = m_(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (a_(xy_add, z) != a_(x, a_(y, z))) {
          return AxiomViolation{"additive associativity", {x, y, z}};
        }
        if (m_(xy_mul, z) != m_(x, m_(y, z))) {
          return AxiomViolation{"multiplicative associativity", {x, y, z}};
        }
        if (m_(x, a_(y, z)) != a_(xy_mul, m_(x, z))) {
          return AxiomViolation{"distributivity", {x, y, z}};
        }
      }
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<AxiomViolation> check_axioms_serial(std::size_t order, Table add, Table mul,
                                                  Elem zero, Elem one) {
  if (add.size() != order * order || mul.size() != order * order) {
    return AxiomViolation{"table size", {}};
  }
  const AxiomScan scan{order, add, mul, zero, one};
  if (auto v = scan.small()) return v;
  for (std::size_t x = 0; x < order; ++x) {
    if (auto v = scan.row(static_cast<Elem>(x))) return v;
  }
  return std::nullopt;
}

std::optional<AxiomViolation> check_axioms(std::size_t order, Table add, Table mul, Elem zero,
                                           Elem one) {
  if (add.size() != order * order || mul.size() != order * order) {
    return AxiomViolation{"table size", {}};
  }
  const AxiomScan scan{order, add, mul, zero, one};
  if (auto v = scan.small()) return v;
  std::vector<std::optional<AxiomViolation>> rows(order);
  const auto n = static_cast<long>(order);
#pragma omp parallel for schedule(dynamic)
  for (long x = 0; x < n; ++x) {
    rows[static_cast<std::size_t>(x)] = scan.row(static_cast<Elem>(x));
  }
  for (auto& r : rows) {
    if (r) return r;
  }
  return std::nullopt;
}

RingRef RingTable::create(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
                          Elem zero, Elem one, std::string label,
                          std::vector<std::string> names) {
  if (order > kMaxOrder) {
    throw CapExceeded("ring order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(kMaxOrder));
  }
  if (order < 2) throw InvalidRing("a ring with one != zero has at least two elements");
  if (auto v = check_axioms(order, add, mul, zero, one)) {
    std::ostringstream msg;
    msg << "ring axiom violated (" << v->axiom << ")";
    if (!v->elements.empty()) {
      msg << " at";
      for (auto e : v->elements) msg << ' ' << e;
    }
    throw InvalidRing(msg.str());
  }
  if (!names.empty() && names.size() != order) {
    throw InvalidRing("element name list does not match the order");
  }

  auto ring = std::shared_ptr<RingTable>(new RingTable());
  ring->order_ = order;
  ring->add_ = std::move(add);
  ring->mul_ = std::move(mul);
  ring->zero_ = zero;
  ring->one_ = one;
  ring->label_ = std::move(label);
  ring->neg_.resize(order);
  for (Elem x = 0; x < order; ++x) {
    for (Elem y = 0; y < order; ++y) {
      if (ring->add(x, y) == zero) {
        ring->neg_[x] = y;
        break;
      }
    }
  }
  if (names.empty()) {
    names.reserve(order);
    for (std::size_t i = 0; i < order; ++i) names.push_back(std::to_string(i));
  }
  ring->names_ = std::move(names);
  return ring;
}

Elem RingTable::pow(Elem a, unsigned k) const {
  Elem result = one_;
  Elem base = a;
  while (k > 0) {
    if (k & 1U) result = mul(result, base);
    base = mul(base, base);
    k >>= 1U;
  }
  return result;
}

ElemBits RingTable::all() const {
  ElemBits b;
  for (std::size_t i = 0; i < order_; ++i) b.set(i);
  return b;
}

namespace {

ElemBits principal_bits(const RingTable& r, Elem a) {
  ElemBits out;
  for (Elem x = 0; x < r.order(); ++x) out.set(r.mul(x, a));
  return out;
}

// For ideals A and B, A + B = {a + b} is already an ideal.
ElemBits sum_bits(const RingTable& r, const ElemBits& a, const ElemBits& b) {
  ElemBits out;
  const auto bm = bits_members(b);
  for (std::size_t i = a._Find_first(); i < kMaxOrder; i = a._Find_next(i)) {
    for (auto y : bm) out.set(r.add(static_cast<Elem>(i), y));
  }
  return out;
}

// Smallest ideal containing `seed`: sum of the principal ideals.
ElemBits generated_bits(const RingTable& r, const ElemBits& seed) {
  ElemBits out;
  out.set(r.zero());
  ElemBits covered = out;
  for (std::size_t g = seed._Find_first(); g < kMaxOrder; g = seed._Find_next(g)) {
    if (covered.test(g)) continue;
    out = sum_bits(r, out, principal_bits(r, static_cast<Elem>(g)));
    covered = out;
  }
  return out;
}

std::vector<ElemBits> enumerate_bits(const RingTable& r) {
  std::vector<ElemBits> principals;
  std::unordered_set<ElemBits> seen;
  for (Elem a = 0; a < r.order(); ++a) {
    auto p = principal_bits(r, a);
    if (seen.insert(p).second) principals.push_back(p);
  }
  // Join-closure of the principal ideals under ideal sum.
  std::vector<ElemBits> all = principals;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& p : principals) {
      auto s = sum_bits(r, all[i], p);
      if (seen.insert(s).second) all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

bool prime_bits(const RingTable& r, const ElemBits& p) {
  if (p.test(r.one())) return false;
  for (Elem a = 0; a < r.order(); ++a) {
    if (p.test(a)) continue;
    for (Elem b = 0; b < r.order(); ++b) {
      if (!p.test(b) && p.test(r.mul(a, b))) return false;
    }
  }
  return true;
}

ElemBits units_bits(const RingTable& r) {
  ElemBits out;
  for (Elem a = 0; a < r.order(); ++a) {
    for (Elem b = 0; b < r.order(); ++b) {
      if (r.mul(a, b) == r.one()) {
        out.set(a);
        break;
      }
    }
  }
  return out;
}

ElemBits nilradical_bits(const RingTable& r) {
  ElemBits out;
  for (Elem a = 0; a < r.order(); ++a) {
    if (is_nilpotent(r, a)) out.set(a);
  }
  return out;
}

ElemBits jacobson_units_route(const RingTable& r, const ElemBits& units) {
  ElemBits out;
  for (Elem a = 0; a < r.order(); ++a) {
    bool in = true;
    for (Elem x = 0; x < r.order() && in; ++x) {
      in = units.test(r.sub(r.one(), r.mul(x, a)));
    }
    if (in) out.set(a);
  }
  return out;
}

ElemBits annihilator_witness_set(const RingTable& r, const ElemBits& allowed) {
  // {a : exists b in allowed with ab = 0}
  ElemBits out;
  for (Elem a = 0; a < r.order(); ++a) {
    for (Elem b = 0; b < r.order(); ++b) {
      if (allowed.test(b) && r.mul(a, b) == r.zero()) {
        out.set(a);
        break;
      }
    }
  }
  return out;
}

}  // namespace

const RingTable::Invariants& RingTable::invariants() const {
  std::call_once(invariants_once_, [this] {
    auto inv = std::make_unique<Invariants>();
    inv->units = units_bits(*this);
    inv->nilradical = nilradical_bits(*this);
    inv->ideals = enumerate_bits(*this);
    for (std::size_t i = 0; i < inv->ideals.size(); ++i) {
      const auto& cand = inv->ideals[i];
      if (cand.test(one_)) continue;
      if (prime_bits(*this, cand)) inv->prime.push_back(i);
      bool maximal = true;
      for (const auto& other : inv->ideals) {
        if (other != cand && !other.test(one_) && (cand & ~other).none()) {
          maximal = false;
          break;
        }
      }
      if (maximal) inv->maximal.push_back(i);
    }
    ElemBits jac = all();
    for (auto i : inv->maximal) jac &= inv->ideals[i];
    if (jac != jacobson_units_route(*this, inv->units)) {
      throw InternalInconsistency("Jacobson radical: maximal-ideal and unit routes disagree for " +
                                  label_);
    }
    inv->jacobson = jac;
    ElemBits nonzero = all();
    nonzero.reset(zero_);
    inv->zero_divisors = annihilator_witness_set(*this, nonzero);
    inv->not_quasi_regular = annihilator_witness_set(*this, all() & ~inv->nilradical);
    invariants_ = std::move(inv);
  });
  return *invariants_;
}

ElementSubset::ElementSubset(RingRef ring, ElemBits bits)
    : ring_(std::move(ring)), bits_(bits & ring_->all()) {}

ElementSubset::ElementSubset(RingRef ring, std::initializer_list<Elem> elems)
    : ElementSubset(std::move(ring), std::span<const Elem>(elems.begin(), elems.size())) {}

ElementSubset::ElementSubset(RingRef ring, std::span<const Elem> elems) : ring_(std::move(ring)) {
  for (auto e : elems) {
    if (e >= ring_->order()) throw InvalidArgument("element id out of range");
    bits_.set(e);
  }
}

bool ElementSubset::subset_of(const ElementSubset& other) const {
  if (ring_ != other.ring_) throw RingMismatch();
  return (bits_ & ~other.bits_).none();
}

bool is_ideal(const RingTable& r, const ElemBits& bits) {
  if (!bits.test(r.zero())) return false;
  if ((bits & ~r.all()).any()) return false;
  const auto m = bits_members(bits);
  for (auto a : m) {
    for (auto b : m) {
      if (!bits.test(r.add(a, b))) return false;
    }
    for (Elem x = 0; x < r.order(); ++x) {
      if (!bits.test(r.mul(x, a))) return false;
    }
  }
  return true;
}

IdealSet IdealSet::checked(RingRef ring, ElemBits bits) {
  if (!is_ideal(*ring, bits)) throw InvalidArgument("subset is not an ideal of " + ring->label());
  return IdealSet(std::move(ring), bits);
}

bool IdealSet::subset_of(const IdealSet& other) const {
  if (ring_ != other.ring_) throw RingMismatch();
  return (bits_ & ~other.bits_).none();
}

bool IdealSet::subset_of(const ElementSubset& other) const {
  if (ring_ != other.ring()) throw RingMismatch();
  return (bits_ & ~other.bits()).none();
}

bool is_nilpotent(const RingTable& r, Elem a) {
  ElemBits zero;
  zero.set(r.zero());
  return some_power_in(r, a, zero);
}

bool some_power_in(const RingTable& r, Elem a, const ElemBits& target) {
  ElemBits seen;
  Elem x = a;
  while (!seen.test(x)) {
    if (target.test(x)) return true;
    seen.set(x);
    x = r.mul(x, a);
  }
  return false;
}

ElementSubset units(const RingRef& ring) { return {ring, ring->invariants().units}; }

IdealSet nilradical(const RingRef& ring) {
  return IdealFactory::make(ring, ring->invariants().nilradical);
}

IdealSet jacobson(const RingRef& ring) {
  return IdealFactory::make(ring, ring->invariants().jacobson);
}

ElementSubset zero_divisors(const RingRef& ring) {
  return {ring, ring->invariants().zero_divisors};
}

ElementSubset not_quasi_regular(const RingRef& ring) {
  return {ring, ring->invariants().not_quasi_regular};
}

ElemBits jacobson_by_maximals(const RingRef& ring) {
  const auto ideals = enumerate_bits(*ring);
  ElemBits jac = ring->all();
  for (const auto& cand : ideals) {
    if (cand.test(ring->one())) continue;
    bool maximal = true;
    for (const auto& other : ideals) {
      if (other != cand && !other.test(ring->one()) && (cand & ~other).none()) {
        maximal = false;
        break;
      }
    }
    if (maximal) jac &= cand;
  }
  return jac;
}

ElemBits jacobson_by_units(const RingRef& ring) {
  return jacobson_units_route(*ring, units_bits(*ring));
}

IdealSet zero_ideal(const RingRef& ring) {
  ElemBits b;
  b.set(ring->zero());
  return IdealFactory::make(ring, b);
}

IdealSet unit_ideal(const RingRef& ring) { return IdealFactory::make(ring, ring->all()); }

IdealSet principal(const RingRef& ring, Elem a) {
  if (a >= ring->order()) throw InvalidArgument("element id out of range");
  return IdealFactory::make(ring, principal_bits(*ring, a));
}

IdealSet ideal_generated(const RingRef& ring, const ElementSubset& gens) {
  if (gens.ring() != ring) throw RingMismatch();
  return IdealFactory::make(ring, generated_bits(*ring, gens.bits()));
}

IdealSet ideal_generated(const RingRef& ring, std::initializer_list<Elem> gens) {
  return ideal_generated(ring, ElementSubset(ring, gens));
}

std::vector<IdealSet> enumerate_ideals(const RingRef& ring) {
  std::vector<IdealSet> out;
  for (const auto& b : ring->invariants().ideals) out.push_back(IdealFactory::make(ring, b));
  return out;
}

IdealSet radical(const IdealSet& ideal) {
  const auto& r = ideal.table();
  ElemBits out;
  for (Elem a = 0; a < r.order(); ++a) {
    if (some_power_in(r, a, ideal.bits())) out.set(a);
  }
  return IdealFactory::make(ideal.ring(), out);
}

IdealSet colon(const IdealSet& ideal, const ElementSubset& s) {
  if (ideal.ring() != s.ring()) throw RingMismatch();
  if (s.empty()) throw InvalidArgument("colon: S must be nonempty");
  const auto& r = ideal.table();
  const auto sm = s.members();
  ElemBits out;
  for (Elem x = 0; x < r.order(); ++x) {
    bool in = true;
    for (auto e : sm) {
      if (!ideal.contains(r.mul(x, e))) {
        in = false;
        break;
      }
    }
    if (in) out.set(x);
  }
  return IdealFactory::make(ideal.ring(), out);
}

IdealSet ideal_sum(const IdealSet& a, const IdealSet& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  return IdealFactory::make(a.ring(), sum_bits(a.table(), a.bits(), b.bits()));
}

IdealSet ideal_product(const IdealSet& a, const IdealSet& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  const auto& r = a.table();
  ElemBits products;
  const auto bm = b.members();
  for (auto x : a.members()) {
    for (auto y : bm) products.set(r.mul(x, y));
  }
  return IdealFactory::make(a.ring(), generated_bits(r, products));
}

IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b) {
  if (a.ring() != b.ring()) throw RingMismatch();
  return IdealFactory::make(a.ring(), a.bits() & b.bits());
}

IdealSet ideal_power(const IdealSet& ideal, unsigned n) {
  if (n == 0) throw InvalidArgument("ideal_power: exponent must be positive");
  IdealSet out = ideal;
  for (unsigned i = 1; i < n; ++i) out = ideal_product(out, ideal);
  return out;
}

std::vector<IdealSet> maximal_ideals(const RingRef& ring) {
  const auto& inv = ring->invariants();
  std::vector<IdealSet> out;
  for (auto i : inv.maximal) out.push_back(IdealFactory::make(ring, inv.ideals[i]));
  return out;
}

std::vector<IdealSet> prime_ideals(const RingRef& ring) {
  const auto& inv = ring->invariants();
  std::vector<IdealSet> out;
  for (auto i : inv.prime) out.push_back(IdealFactory::make(ring, inv.ideals[i]));
  return out;
}

IdealSet j_of_ideal(const IdealSet& ideal) {
  if (!ideal.is_proper()) throw InvalidArgument("J(I) is undefined for I = R");
  const auto& ring = ideal.ring();
  const auto& inv = ring->invariants();
  ElemBits out = ring->all();
  for (auto i : inv.maximal) {
    if ((ideal.bits() & ~inv.ideals[i]).none()) out &= inv.ideals[i];
  }
  return IdealFactory::make(ring, out);
}

bool is_zero_dimensional(const RingRef& ring) {
  const auto& inv = ring->invariants();
  return std::all_of(inv.prime.begin(), inv.prime.end(), [&](std::size_t p) {
    return std::find(inv.maximal.begin(), inv.maximal.end(), p) != inv.maximal.end();
  });
}

std::vector<Elem> generators(const IdealSet& ideal) {
  const auto& r = ideal.table();
  std::vector<Elem> gens;
  ElemBits covered;
  covered.set(r.zero());
  for (auto e : ideal.members()) {
    if (covered.test(e)) continue;
    gens.push_back(e);
    covered = sum_bits(r, covered, principal_bits(r, e));
    if (covered == ideal.bits()) break;
  }
  return gens;
}

std::string describe(const RingTable& ring, const ElemBits& bits) {
  std::string out = "{";
  bool first = true;
  for (auto e : bits_members(bits)) {
    if (!first) out += ", ";
    out += ring.name(e);
    first = false;
  }
  return out + "}";
}

std::string describe(const IdealSet& ideal) {
  const auto gens = generators(ideal);
  std::string out = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += ideal.table().name(gens[i]);
  }
  if (gens.empty()) out += ideal.table().name(ideal.table().zero());
  return out + ">";
}

}  // namespace qjlab::finring
