#pragma once

// Finite commutative unital rings given by explicit operation tables,
// together with the ring invariants and ideal arithmetic used everywhere
// else in the library.

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qjlab {

using Elem = std::uint16_t;

/// Largest ring order accepted by RingTable::create.
inline constexpr std::size_t kMaxOrder = 256;

using ElemBits = std::bitset<kMaxOrder>;

std::vector<Elem> bits_members(const ElemBits& bits);

/// Canonical order on subsets: by size, then lexicographically by sorted
/// member list.
bool canonical_less(const ElemBits& a, const ElemBits& b);

}  // namespace qjlab

namespace qjlab::finring {

struct AxiomViolation {
  std::string axiom;
  std::vector<Elem> elements;
};

/// Exhaustive axiom check over all pairs and triples. Returns the first
/// violation in (axiom, lexicographic tuple) order, or nothing.
std::optional<AxiomViolation> check_axioms_serial(std::size_t order,
                                                  std::span<const Elem> add,
                                                  std::span<const Elem> mul,
                                                  Elem zero, Elem one);

/// OpenMP version of check_axioms_serial; same result on every input.
std::optional<AxiomViolation> check_axioms(std::size_t order,
                                           std::span<const Elem> add,
                                           std::span<const Elem> mul,
                                           Elem zero, Elem one);

class RingTable;
using RingRef = std::shared_ptr<const RingTable>;

/// A finite commutative ring with identity, immutable after construction.
///
/// Element ids are 0..order-1. Construction validates every ring axiom
/// exhaustively and rejects orders above kMaxOrder. Derived invariants
/// (units, radicals, ideal lattice) are computed once on first use; the
/// cache is guarded by std::call_once so a RingRef can be shared across
/// threads.
class RingTable : public std::enable_shared_from_this<RingTable> {
 public:
  struct Invariants {
    ElemBits units;
    ElemBits nilradical;
    ElemBits jacobson;
    ElemBits zero_divisors;
    ElemBits not_quasi_regular;
    std::vector<ElemBits> ideals;  // canonical order
    std::vector<std::size_t> maximal;  // indices into ideals
    std::vector<std::size_t> prime;
  };

  static RingRef create(std::size_t order, std::vector<Elem> add,
                        std::vector<Elem> mul, Elem zero, Elem one,
                        std::string label, std::vector<std::string> names = {});

  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem pow(Elem a, unsigned k) const;

  const std::string& label() const { return label_; }
  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const { return names_; }
  std::span<const Elem> add_table() const { return add_; }
  std::span<const Elem> mul_table() const { return mul_; }

  /// Bits 0..order-1.
  ElemBits all() const;

  const Invariants& invariants() const;

 private:
  RingTable() = default;

  std::size_t order_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::string label_;
  std::vector<std::string> names_;

  mutable std::once_flag invariants_once_;
  mutable std::unique_ptr<Invariants> invariants_;
};

/// Arbitrary subset of a ring's elements.
class ElementSubset {
 public:
  ElementSubset(RingRef ring, ElemBits bits);
  ElementSubset(RingRef ring, std::initializer_list<Elem> elems);
  ElementSubset(RingRef ring, std::span<const Elem> elems);

  const RingRef& ring() const { return ring_; }
  const ElemBits& bits() const { return bits_; }
  bool contains(Elem e) const { return bits_.test(e); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<Elem> members() const { return bits_members(bits_); }
  bool subset_of(const ElementSubset& other) const;

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) {
    return a.ring_ == b.ring_ && a.bits_ == b.bits_;
  }

 private:
  RingRef ring_;
  ElemBits bits_;
};

/// A subset closed under addition and under multiplication by the ring.
/// The whole ring is representable; properness is a predicate.
class IdealSet {
 public:
  /// Validates closure; throws InvalidArgument if `bits` is not an ideal.
  static IdealSet checked(RingRef ring, ElemBits bits);

  const RingRef& ring() const { return ring_; }
  const RingTable& table() const { return *ring_; }
  const ElemBits& bits() const { return bits_; }
  bool contains(Elem e) const { return bits_.test(e); }
  std::size_t size() const { return bits_.count(); }
  std::vector<Elem> members() const { return bits_members(bits_); }
  bool is_proper() const { return !bits_.test(ring_->one()); }
  bool is_zero() const { return bits_.count() == 1; }
  bool subset_of(const IdealSet& other) const;
  bool subset_of(const ElementSubset& other) const;
  ElementSubset as_subset() const { return {ring_, bits_}; }

  friend bool operator==(const IdealSet& a, const IdealSet& b) {
    return a.ring_ == b.ring_ && a.bits_ == b.bits_;
  }

 private:
  friend struct IdealFactory;
  IdealSet(RingRef ring, ElemBits bits) : ring_(std::move(ring)), bits_(bits) {}

  RingRef ring_;
  ElemBits bits_;
};

/// Closure test used by IdealSet::checked.
bool is_ideal(const RingTable& ring, const ElemBits& bits);

// Ring invariants.
ElementSubset units(const RingRef& ring);
IdealSet nilradical(const RingRef& ring);
IdealSet jacobson(const RingRef& ring);
ElementSubset zero_divisors(const RingRef& ring);
ElementSubset not_quasi_regular(const RingRef& ring);

/// Intersection of the maximal ideals, computed without the cache.
ElemBits jacobson_by_maximals(const RingRef& ring);
/// {a : 1 - ra is a unit for every r}, computed without the cache.
ElemBits jacobson_by_units(const RingRef& ring);

bool is_nilpotent(const RingTable& ring, Elem a);
/// True iff some power a^k (k >= 1) lies in `target`.
bool some_power_in(const RingTable& ring, Elem a, const ElemBits& target);

// Ideal construction and arithmetic.
IdealSet zero_ideal(const RingRef& ring);
IdealSet unit_ideal(const RingRef& ring);
IdealSet principal(const RingRef& ring, Elem a);
IdealSet ideal_generated(const RingRef& ring, const ElementSubset& gens);
IdealSet ideal_generated(const RingRef& ring, std::initializer_list<Elem> gens);
std::vector<IdealSet> enumerate_ideals(const RingRef& ring);
IdealSet radical(const IdealSet& ideal);
/// (I : S) = {r : rS ⊆ I}. Throws InvalidArgument for empty S.
IdealSet colon(const IdealSet& ideal, const ElementSubset& s);
IdealSet ideal_sum(const IdealSet& a, const IdealSet& b);
IdealSet ideal_product(const IdealSet& a, const IdealSet& b);
IdealSet ideal_intersection(const IdealSet& a, const IdealSet& b);
/// I^n, n >= 1.
IdealSet ideal_power(const IdealSet& ideal, unsigned n);
std::vector<IdealSet> maximal_ideals(const RingRef& ring);
std::vector<IdealSet> prime_ideals(const RingRef& ring);
/// Intersection of the maximal ideals containing I; I must be proper.
IdealSet j_of_ideal(const IdealSet& ideal);
bool is_zero_dimensional(const RingRef& ring);

/// Smallest generating set found greedily in ascending id order.
std::vector<Elem> generators(const IdealSet& ideal);

/// Renders `{a, b, c}` using element names.
std::string describe(const RingTable& ring, const ElemBits& bits);
std::string describe(const IdealSet& ideal);

}  // namespace qjlab::finring
