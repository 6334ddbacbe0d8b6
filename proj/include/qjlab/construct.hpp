#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qjlab/finring.hpp"

namespace qjlab::construct {

using finring::ElementSubset;
using finring::IdealSet;
using finring::RingRef;
using finring::RingTable;

/// A unitary module over a finite ring, given by tables.
class FinModule {
 public:
  /// Validates the abelian-group and action laws exhaustively.
  static std::shared_ptr<const FinModule> create(RingRef ring, std::size_t order,
                                                 std::vector<Elem> add, std::vector<Elem> action,
                                                 Elem zero, std::string label,
                                                 std::vector<std::string> names = {});

  const RingRef& ring() const { return ring_; }
  std::size_t order() const { return order_; }
  Elem zero() const { return zero_; }
  Elem add(Elem m, Elem n) const { return add_[m * order_ + n]; }
  /// r·m
  Elem act(Elem r, Elem m) const { return action_[r * order_ + m]; }
  const std::string& label() const { return label_; }
  const std::string& name(Elem m) const { return names_[m]; }
  ElemBits all() const;

 private:
  FinModule() = default;

  RingRef ring_;
  std::size_t order_ = 0;
  std::vector<Elem> add_;
  std::vector<Elem> action_;
  Elem zero_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

using ModuleRef = std::shared_ptr<const FinModule>;

struct Submodule {
  ModuleRef module;
  ElemBits members;

  bool contains(Elem m) const { return members.test(m); }
  bool is_full() const { return members == module->all(); }
  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module == b.module && a.members == b.members;
  }
};

/// A ring homomorphism given by its element map. Creation checks that
/// addition, multiplication and the identity are preserved.
class RingHom {
 public:
  RingHom(RingRef source, RingRef target, std::vector<Elem> map);

  const RingRef& source() const { return source_; }
  const RingRef& target() const { return target_; }
  Elem operator()(Elem a) const { return map_[a]; }
  const std::vector<Elem>& map() const { return map_; }
  bool is_surjective() const;
  IdealSet kernel() const;

 private:
  RingRef source_;
  RingRef target_;
  std::vector<Elem> map_;
};

RingRef zmod(unsigned n);
RingRef product(const RingRef& a, const RingRef& b);

struct Quotient {
  RingRef ring;
  RingHom projection;
};
/// R/I with cosets numbered by their smallest representative.
Quotient quotient(const IdealSet& ideal);

/// F_p[x]/(f) for monic f given low-degree-first, p in {2,3,5}, deg f in {2,3}.
RingRef poly_quotient(unsigned p, const std::vector<unsigned>& coefficients);

ModuleRef module_self(const RingRef& ring);
ModuleRef module_zero(const RingRef& ring);
/// R/I as an R-module.
ModuleRef module_from_quotient(const IdealSet& ideal);
std::vector<Submodule> submodules(const ModuleRef& module);
Submodule full_submodule(const ModuleRef& module);
Submodule zero_submodule(const ModuleRef& module);

/// R(+)M with the pair id (r, m) stored as r * |M| + m.
struct Idealization {
  RingRef ring;
  RingRef base;
  ModuleRef module;

  Elem encode(Elem r, Elem m) const {
    return static_cast<Elem>(r * module->order() + m);
  }
  std::pair<Elem, Elem> decode(Elem e) const {
    return {static_cast<Elem>(e / module->order()), static_cast<Elem>(e % module->order())};
  }
};
Idealization idealization(const RingRef& base, const ModuleRef& module);

/// I(+)N; requires I·M ⊆ N.
IdealSet ideal_in_idealization(const Idealization& idl, const IdealSet& ideal,
                               const Submodule& sub);

struct Localization {
  RingRef ring;
  RingHom canonical;  // r -> r/1
};
/// S^-1 R. S must contain 1, exclude 0 and be multiplicatively closed.
Localization localize(const RingRef& ring, const ElementSubset& s);
/// {1, s, s^2, ...}
ElementSubset powers_of(const RingRef& ring, Elem s);

/// Image of an ideal under a surjective homomorphism.
IdealSet push_ideal(const RingHom& hom, const IdealSet& ideal);
IdealSet pull_ideal(const RingHom& hom, const IdealSet& ideal);

}  // namespace qjlab::construct
