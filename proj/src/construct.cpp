#include "qjlab/construct.hpp"

#include <algorithm>
#include <unordered_set>

#include "qjlab/errors.hpp"

namespace qjlab::construct {

namespace {

std::string paren(const std::string& label) { return "(" + label + ")"; }

std::string ideal_label(const IdealSet& ideal) { return finring::describe(ideal); }

void check_cap(std::size_t order, const char* what) {
  if (order > kMaxOrder) {
    throw CapExceeded(std::string(what) + ": order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(kMaxOrder));
  }
}

// Coset representative (smallest id) for each element of R modulo I.
std::vector<Elem> coset_reps(const IdealSet& ideal) {
  const auto& r = ideal.table();
  const auto members = ideal.members();
  std::vector<Elem> rep(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    Elem best = x;
    for (auto i : members) best = std::min(best, r.add(x, i));
    rep[x] = best;
  }
  return rep;
}

std::string poly_name(const std::vector<unsigned>& coeffs) {
  std::string out;
  for (std::size_t d = coeffs.size(); d-- > 0;) {
    const unsigned c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (d == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "x";
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

ModuleRef FinModule::create(RingRef ring, std::size_t order, std::vector<Elem> add,
                            std::vector<Elem> action, Elem zero, std::string label,
                            std::vector<std::string> names) {
  check_cap(order, "module");
  const auto n = order;
  const auto rn = ring->order();
  if (order == 0 || add.size() != n * n || action.size() != rn * n || zero >= n) {
    throw InvalidRing("module tables have the wrong shape");
  }
  if (std::any_of(add.begin(), add.end(), [n](Elem e) { return e >= n; }) ||
      std::any_of(action.begin(), action.end(), [n](Elem e) { return e >= n; })) {
    throw InvalidRing("module table entry out of range");
  }
  auto A = [&](Elem x, Elem y) { return add[x * n + y]; };
  auto S = [&](Elem r, Elem m) { return action[r * n + m]; };
  for (Elem x = 0; x < n; ++x) {
    if (A(zero, x) != x) throw InvalidRing("module: zero is not an identity");
    bool inv = false;
    for (Elem y = 0; y < n; ++y) {
      if (A(x, y) != A(y, x)) throw InvalidRing("module: addition not commutative");
      inv = inv || A(x, y) == zero;
      for (Elem z = 0; z < n; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z))) throw InvalidRing("module: addition not associative");
      }
    }
    if (!inv) throw InvalidRing("module: missing additive inverse");
    if (S(ring->one(), x) != x) throw InvalidRing("module: 1·m != m");
  }
  for (Elem r = 0; r < rn; ++r) {
    for (Elem s = 0; s < rn; ++s) {
      for (Elem m = 0; m < n; ++m) {
        if (S(ring->add(r, s), m) != A(S(r, m), S(s, m))) {
          throw InvalidRing("module: (r+s)m != rm+sm");
        }
        if (S(ring->mul(r, s), m) != S(r, S(s, m))) throw InvalidRing("module: (rs)m != r(sm)");
      }
    }
    for (Elem m = 0; m < n; ++m) {
      for (Elem k = 0; k < n; ++k) {
        if (S(r, A(m, k)) != A(S(r, m), S(r, k))) throw InvalidRing("module: r(m+n) != rm+rn");
      }
    }
  }
  auto mod = std::shared_ptr<FinModule>(new FinModule());
  mod->ring_ = std::move(ring);
  mod->order_ = order;
  mod->add_ = std::move(add);
  mod->action_ = std::move(action);
  mod->zero_ = zero;
  mod->label_ = std::move(label);
  if (names.empty()) {
    for (std::size_t i = 0; i < order; ++i) names.push_back(std::to_string(i));
  }
  if (names.size() != order) throw InvalidRing("module name list does not match the order");
  mod->names_ = std::move(names);
  return mod;
}

ElemBits FinModule::all() const {
  ElemBits b;
  for (std::size_t i = 0; i < order_; ++i) b.set(i);
  return b;
}

RingHom::RingHom(RingRef source, RingRef target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  const auto& s = *source_;
  const auto& t = *target_;
  if (map_.size() != s.order()) throw InvalidArgument("homomorphism map has the wrong length");
  for (auto e : map_) {
    if (e >= t.order()) throw InvalidArgument("homomorphism value out of range");
  }
  if (map_[s.one()] != t.one()) throw InvalidArgument("homomorphism does not preserve one");
  for (Elem a = 0; a < s.order(); ++a) {
    for (Elem b = 0; b < s.order(); ++b) {
      if (map_[s.add(a, b)] != t.add(map_[a], map_[b]) ||
          map_[s.mul(a, b)] != t.mul(map_[a], map_[b])) {
        throw InvalidArgument("map does not preserve the ring operations");
      }
    }
  }
}

bool RingHom::is_surjective() const {
  ElemBits hit;
  for (auto e : map_) hit.set(e);
  return hit == target_->all();
}

IdealSet RingHom::kernel() const {
  ElemBits k;
  for (Elem a = 0; a < source_->order(); ++a) {
    if (map_[a] == target_->zero()) k.set(a);
  }
  return IdealSet::checked(source_, k);
}

RingRef zmod(unsigned n) {
  if (n < 2 || n > kMaxOrder) {
    throw InvalidArgument("zmod: n must lie in [2, " + std::to_string(kMaxOrder) + "]");
  }
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return RingTable::create(n, std::move(add), std::move(mul), 0, 1, "Z " + std::to_string(n));
}

RingRef product(const RingRef& a, const RingRef& b) {
  const std::size_t na = a->order();
  const std::size_t nb = b->order();
  check_cap(na * nb, "product");
  const std::size_t n = na * nb;
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto x1 = static_cast<Elem>(x / nb);
    const auto x2 = static_cast<Elem>(x % nb);
    names[x] = "(" + a->name(x1) + "," + b->name(x2) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto y1 = static_cast<Elem>(y / nb);
      const auto y2 = static_cast<Elem>(y % nb);
      add[x * n + y] = static_cast<Elem>(a->add(x1, y1) * nb + b->add(x2, y2));
      mul[x * n + y] = static_cast<Elem>(a->mul(x1, y1) * nb + b->mul(x2, y2));
    }
  }
  const auto zero = static_cast<Elem>(a->zero() * nb + b->zero());
  const auto one = static_cast<Elem>(a->one() * nb + b->one());
  return RingTable::create(n, std::move(add), std::move(mul), zero, one,
                           "prod " + paren(a->label()) + " " + paren(b->label()),
                           std::move(names));
}

Quotient quotient(const IdealSet& ideal) {
  if (!ideal.is_proper()) throw InvalidArgument("quotient by the whole ring");
  const auto& r = ideal.table();
  const auto rep = coset_reps(ideal);
  std::vector<Elem> reps;
  std::vector<Elem> id_of(r.order(), 0);
  for (Elem x = 0; x < r.order(); ++x) {
    if (rep[x] == x) {
      id_of[x] = static_cast<Elem>(reps.size());
      reps.push_back(x);
    }
  }
  const std::size_t n = reps.size();
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("[" + r.name(reps[i]) + "]");
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = id_of[rep[r.add(reps[i], reps[j])]];
      mul[i * n + j] = id_of[rep[r.mul(reps[i], reps[j])]];
    }
  }
  auto ring = RingTable::create(n, std::move(add), std::move(mul), id_of[rep[r.zero()]],
                                id_of[rep[r.one()]],
                                "quot " + paren(r.label()) + " " + ideal_label(ideal),
                                std::move(names));
  std::vector<Elem> map(r.order());
  for (Elem x = 0; x < r.order(); ++x) map[x] = id_of[rep[x]];
  RingHom proj(ideal.ring(), ring, std::move(map));
  return Quotient{std::move(ring), std::move(proj)};
}

RingRef poly_quotient(unsigned p, const std::vector<unsigned>& coefficients) {
  if (p != 2 && p != 3 && p != 5) throw InvalidArgument("poly_quotient: p must be 2, 3 or 5");
  if (coefficients.size() < 3 || coefficients.size() > 4) {
    throw InvalidArgument("poly_quotient: degree must be 2 or 3");
  }
  if (coefficients.back() != 1) throw InvalidArgument("poly_quotient: f must be monic");
  for (auto c : coefficients) {
    if (c >= p) throw InvalidArgument("poly_quotient: coefficient out of range for F_p");
  }
  const std::size_t d = coefficients.size() - 1;
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= p;

  auto digits = [&](std::size_t id) {
    std::vector<unsigned> c(d);
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = static_cast<unsigned>(id % p);
      id /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<unsigned>& c) {
    std::size_t id = 0;
    for (std::size_t i = d; i-- > 0;) id = id * p + c[i];
    return static_cast<Elem>(id);
  };

  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto cx = digits(x);
    names[x] = poly_name(cx);
    for (std::size_t y = 0; y < n; ++y) {
      const auto cy = digits(y);
      std::vector<unsigned> s(d);
      for (std::size_t i = 0; i < d; ++i) s[i] = (cx[i] + cy[i]) % p;
      add[x * n + y] = encode(s);

      std::vector<unsigned> prod(2 * d - 1, 0);
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + cx[i] * cy[j]) % p;
      }
      // x^k = x^(k-d) * x^d and x^d = -(f_0 + ... + f_{d-1} x^{d-1}).
      for (std::size_t k = prod.size(); k-- > d;) {
        const unsigned c = prod[k];
        if (c == 0) continue;
        prod[k] = 0;
        for (std::size_t i = 0; i < d; ++i) {
          prod[k - d + i] = (prod[k - d + i] + c * (p - coefficients[i])) % p;
        }
      }
      prod.resize(d);
      mul[x * n + y] = encode(prod);
    }
  }
  std::vector<unsigned> one_c(d, 0);
  one_c[0] = 1;
  return RingTable::create(n, std::move(add), std::move(mul), 0, encode(one_c),
                           "polyq " + std::to_string(p) + " " + poly_name(coefficients),
                           std::move(names));
}

ModuleRef module_self(const RingRef& ring) {
  const auto add = ring->add_table();
  const auto mul = ring->mul_table();
  return FinModule::create(ring, ring->order(), {add.begin(), add.end()},
                           {mul.begin(), mul.end()}, ring->zero(), "selfmod", ring->names());
}

ModuleRef module_zero(const RingRef& ring) {
  return FinModule::create(ring, 1, {0}, std::vector<Elem>(ring->order(), 0), 0, "zeromod",
                           {"0"});
}

ModuleRef module_from_quotient(const IdealSet& ideal) {
  auto q = quotient(ideal);
  const auto& r = ideal.table();
  const auto& qr = *q.ring;
  const std::size_t n = qr.order();
  std::vector<Elem> add(qr.add_table().begin(), qr.add_table().end());
  std::vector<Elem> action(r.order() * n);
  for (Elem x = 0; x < r.order(); ++x) {
    for (Elem m = 0; m < n; ++m) action[x * n + m] = qr.mul(q.projection(x), m);
  }
  return FinModule::create(ideal.ring(), n, std::move(add), std::move(action), qr.zero(),
                           "quotmod " + ideal_label(ideal), qr.names());
}

std::vector<Submodule> submodules(const ModuleRef& module) {
  const auto& m = *module;
  const auto& r = *m.ring();
  auto sum = [&](const ElemBits& a, const ElemBits& b) {
    ElemBits out;
    const auto bm = bits_members(b);
    for (auto x : bits_members(a)) {
      for (auto y : bm) out.set(m.add(x, y));
    }
    return out;
  };
  std::vector<ElemBits> cyclic;
  std::unordered_set<ElemBits> seen;
  for (Elem x = 0; x < m.order(); ++x) {
    ElemBits c;
    for (Elem s = 0; s < r.order(); ++s) c.set(m.act(s, x));
    if (seen.insert(c).second) cyclic.push_back(c);
  }
  std::vector<ElemBits> all = cyclic;
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : cyclic) {
      auto s = sum(all[i], c);
      if (seen.insert(s).second) all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  std::vector<Submodule> out;
  out.reserve(all.size());
  for (const auto& b : all) out.push_back(Submodule{module, b});
  return out;
}

Submodule full_submodule(const ModuleRef& module) { return {module, module->all()}; }

Submodule zero_submodule(const ModuleRef& module) {
  ElemBits b;
  b.set(module->zero());
  return {module, b};
}

Idealization idealization(const RingRef& base, const ModuleRef& module) {
  if (module->ring() != base) throw RingMismatch();
  const std::size_t nr = base->order();
  const std::size_t nm = module->order();
  check_cap(nr * nm, "idealization");
  const std::size_t n = nr * nm;
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto r1 = static_cast<Elem>(x / nm);
    const auto m1 = static_cast<Elem>(x % nm);
    names[x] = "(" + base->name(r1) + "," + module->name(m1) + ")";
    for (std::size_t y = 0; y < n; ++y) {
      const auto r2 = static_cast<Elem>(y / nm);
      const auto m2 = static_cast<Elem>(y % nm);
      add[x * n + y] = static_cast<Elem>(base->add(r1, r2) * nm + module->add(m1, m2));
      // (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1)
      mul[x * n + y] = static_cast<Elem>(base->mul(r1, r2) * nm +
                                         module->add(module->act(r1, m2), module->act(r2, m1)));
    }
  }
  auto ring = RingTable::create(n, std::move(add), std::move(mul),
                                static_cast<Elem>(base->zero() * nm + module->zero()),
                                static_cast<Elem>(base->one() * nm + module->zero()),
                                "idl " + paren(base->label()) + " " + module->label(),
                                std::move(names));
  return Idealization{std::move(ring), base, module};
}

IdealSet ideal_in_idealization(const Idealization& idl, const IdealSet& ideal,
                               const Submodule& sub) {
  if (ideal.ring() != idl.base || sub.module != idl.module) throw RingMismatch();
  const auto& m = *idl.module;
  for (auto i : ideal.members()) {
    for (Elem x = 0; x < m.order(); ++x) {
      if (!sub.contains(m.act(i, x))) {
        throw InvalidArgument("I(+)N requires IM ⊆ N");
      }
    }
  }
  ElemBits bits;
  for (auto i : ideal.members()) {
    for (auto n : bits_members(sub.members)) bits.set(idl.encode(i, n));
  }
  return IdealSet::checked(idl.ring, bits);
}

ElementSubset powers_of(const RingRef& ring, Elem s) {
  ElemBits b;
  Elem x = ring->one();
  while (!b.test(x)) {
    b.set(x);
    x = ring->mul(x, s);
  }
  return {ring, b};
}

Localization localize(const RingRef& ring, const ElementSubset& s) {
  const auto& r = *ring;
  if (s.ring() != ring) throw RingMismatch();
  if (!s.contains(r.one()) || s.contains(r.zero())) {
    throw InvalidArgument("localize: S must contain 1 and exclude 0");
  }
  const auto sm = s.members();
  for (auto a : sm) {
    for (auto b : sm) {
      if (!s.contains(r.mul(a, b))) throw InvalidArgument("localize: S is not multiplicatively closed");
    }
  }
  // Denominators with 1 first so classes are numbered by (r, 1) where possible.
  std::vector<Elem> dens{r.one()};
  for (auto a : sm) {
    if (a != r.one()) dens.push_back(a);
  }
  const std::size_t k = dens.size();
  std::vector<std::size_t> den_index(r.order(), 0);
  for (std::size_t i = 0; i < k; ++i) den_index[dens[i]] = i;

  auto equivalent = [&](Elem a, Elem sa, Elem b, Elem sb) {
    const Elem diff = r.sub(r.mul(a, sb), r.mul(b, sa));
    return std::any_of(sm.begin(), sm.end(), [&](Elem t) { return r.mul(t, diff) == r.zero(); });
  };

  std::vector<std::pair<Elem, Elem>> reps;
  std::vector<Elem> class_of(r.order() * k);
  for (std::size_t si = 0; si < k; ++si) {
    for (Elem a = 0; a < r.order(); ++a) {
      std::size_t found = reps.size();
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (equivalent(a, dens[si], reps[c].first, reps[c].second)) {
          found = c;
          break;
        }
      }
      if (found == reps.size()) reps.emplace_back(a, dens[si]);
      class_of[a * k + si] = static_cast<Elem>(found);
    }
  }
  const std::size_t n = reps.size();
  auto cls = [&](Elem a, Elem den) { return class_of[a * k + den_index[den]]; };
  std::vector<Elem> add(n * n);
  std::vector<Elem> mul(n * n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, sa] = reps[i];
    names[i] = sa == r.one() ? r.name(a) : r.name(a) + "/" + r.name(sa);
    for (std::size_t j = 0; j < n; ++j) {
      const auto [b, sb] = reps[j];
      add[i * n + j] = cls(r.add(r.mul(a, sb), r.mul(b, sa)), r.mul(sa, sb));
      mul[i * n + j] = cls(r.mul(a, b), r.mul(sa, sb));
    }
  }
  std::string gen_label;
  const Elem g = sm.size() > 1 ? sm[0] == r.one() ? sm[1] : sm[0] : r.one();
  if (powers_of(ring, g) == s) {
    gen_label = r.name(g);
  } else {
    gen_label = finring::describe(r, s.bits());
  }
  auto loc = RingTable::create(n, std::move(add), std::move(mul), cls(r.zero(), r.one()),
                               cls(r.one(), r.one()),
                               "loc " + paren(r.label()) + " " + gen_label, std::move(names));
  std::vector<Elem> map(r.order());
  for (Elem a = 0; a < r.order(); ++a) map[a] = cls(a, r.one());
  RingHom canonical(ring, loc, std::move(map));
  return Localization{std::move(loc), std::move(canonical)};
}

IdealSet push_ideal(const RingHom& hom, const IdealSet& ideal) {
  if (ideal.ring() != hom.source()) throw RingMismatch();
  if (!hom.is_surjective()) throw InvalidArgument("push_ideal needs a surjective homomorphism");
  ElemBits image;
  for (auto a : ideal.members()) image.set(hom(a));
  if (!finring::is_ideal(*hom.target(), image)) {
    throw InternalInconsistency("image of an ideal under a surjection is not an ideal");
  }
  return IdealSet::checked(hom.target(), image);
}

IdealSet pull_ideal(const RingHom& hom, const IdealSet& ideal) {
  if (ideal.ring() != hom.target()) throw RingMismatch();
  ElemBits pre;
  for (Elem a = 0; a < hom.source()->order(); ++a) {
    if (ideal.contains(hom(a))) pre.set(a);
  }
  return IdealSet::checked(hom.source(), pre);
}

}  // namespace qjlab::construct
