#include "qjlab/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "qjlab/classify.hpp"
#include "qjlab/errors.hpp"
#include "qjlab/expr.hpp"

namespace qjlab::harness {

using finring::ElementSubset;
using finring::IdealSet;
using finring::RingTable;
using nlohmann::json;
namespace cl = qjlab::classify;

void Tally::merge(const Tally& other) {
  instances += other.instances;
  satisfied += other.satisfied;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string_view scope_name(Scope scope) {
  switch (scope) {
    case Scope::PerRing: return "per-ring";
    case Scope::PerIdeal: return "per-ideal";
    case Scope::PerIdealPair: return "per-ideal-pair";
    case Scope::PerHom: return "per-hom";
    case Scope::Symbolic: return "symbolic";
  }
  return {};
}

// ---------------------------------------------------------------- recipes

Recipe default_recipe() {
  Recipe r;
  r.zmod = Recipe::Range{2, 32};
  r.products_max = 8;
  r.poly_primes = {2, 3};
  r.idealizations_max = 6;
  r.idealization_quotients = true;
  r.localize_zmod_max = 12;
  r.localize_products_max = 4;
  r.symbolic = {"Z", "Z(2)", "Z(3)", "Z(+)Z", "Z(+)Z2", "Z(+)Z4"};
  return r;
}

namespace {

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> keys,
                         const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
      throw ParseError("unknown recipe key '" + it.key() + "' in " + where);
  }
}

}  // namespace

Recipe parse_recipe(const std::string& text) {
  Recipe r;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ParseError("recipe must be a JSON object");
    reject_unknown_keys(j, {"zmod", "products", "poly", "idealizations", "localizations", "rings",
                            "symbolic"},
                        "recipe");
    if (j.contains("zmod")) {
      const auto& z = j["zmod"];
      reject_unknown_keys(z, {"min", "max"}, "zmod");
      r.zmod = Recipe::Range{z.value("min", 2), z.at("max").get<int>()};
    }
    if (j.contains("products")) {
      reject_unknown_keys(j["products"], {"max"}, "products");
      r.products_max = j["products"].at("max").get<int>();
    }
    if (j.contains("poly")) {
      reject_unknown_keys(j["poly"], {"primes"}, "poly");
      r.poly_primes = j["poly"].at("primes").get<std::vector<unsigned>>();
    }
    if (j.contains("idealizations")) {
      const auto& i = j["idealizations"];
      reject_unknown_keys(i, {"max", "quotients"}, "idealizations");
      r.idealizations_max = i.at("max").get<int>();
      r.idealization_quotients = i.value("quotients", false);
    }
    if (j.contains("localizations")) {
      const auto& l = j["localizations"];
      reject_unknown_keys(l, {"zmod_max", "products_max"}, "localizations");
      if (l.contains("zmod_max")) r.localize_zmod_max = l["zmod_max"].get<int>();
      if (l.contains("products_max")) r.localize_products_max = l["products_max"].get<int>();
    }
    if (j.contains("rings")) r.rings = j["rings"].get<std::vector<std::string>>();
    if (j.contains("symbolic")) r.symbolic = j["symbolic"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad recipe: ") + e.what());
  }
  return r;
}

std::string recipe_json(const Recipe& r) {
  json j = json::object();
  if (r.zmod) j["zmod"] = {{"min", r.zmod->min}, {"max", r.zmod->max}};
  if (r.products_max) j["products"] = {{"max", *r.products_max}};
  if (!r.poly_primes.empty()) j["poly"] = {{"primes", r.poly_primes}};
  if (r.idealizations_max)
    j["idealizations"] = {{"max", *r.idealizations_max}, {"quotients", r.idealization_quotients}};
  if (r.localize_zmod_max || r.localize_products_max) {
    json l = json::object();
    if (r.localize_zmod_max) l["zmod_max"] = *r.localize_zmod_max;
    if (r.localize_products_max) l["products_max"] = *r.localize_products_max;
    j["localizations"] = l;
  }
  if (!r.rings.empty()) j["rings"] = r.rings;
  if (!r.symbolic.empty()) j["symbolic"] = r.symbolic;
  return j.dump(2);
}

// ---------------------------------------------------------------- catalog

namespace {

void cap(long value, long limit, const std::string& what) {
  if (value > limit)
    throw CapExceeded(what + " would need order " + std::to_string(value) + " > " +
                      std::to_string(limit));
}

// Monic quadratics x^2 + b x + c over F_p, low-degree-first.
std::vector<std::vector<unsigned>> monic_quadratics(unsigned p) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned b = 0; b < p; ++b)
    for (unsigned c = 0; c < p; ++c) out.push_back({c, b, 1});
  return out;
}

void add_localizations(const finring::RingRef& ring, std::vector<CatalogEntry>& out) {
  const auto& inv = ring->invariants();
  std::set<std::string> seen;
  for (Elem s = 0; s < ring->order(); ++s) {
    if (inv.units.test(s) || inv.nilradical.test(s)) continue;
    const auto S = construct::powers_of(ring, s);
    if (!seen.insert(S.bits().to_string()).second) continue;
    out.push_back({construct::localize(ring, S).ring, "localization", std::nullopt});
  }
}

}  // namespace

Catalog build_catalog(const Recipe& recipe) {
  const long limit = static_cast<long>(kMaxOrder);
  Catalog c;
  if (recipe.zmod) {
    cap(recipe.zmod->max, limit, "zmod");
    if (recipe.zmod->min < 2) throw InvalidArgument("zmod min must be >= 2");
    for (int n = recipe.zmod->min; n <= recipe.zmod->max; ++n)
      c.rings.push_back({construct::zmod(static_cast<unsigned>(n)), "zmod", std::nullopt});
  }
  if (recipe.products_max) {
    const int m = *recipe.products_max;
    cap(static_cast<long>(m) * m, limit, "products");
    for (int a = 2; a <= m; ++a)
      for (int b = 2; b <= m; ++b)
        c.rings.push_back({construct::product(construct::zmod(a), construct::zmod(b)), "product",
                           std::nullopt});
  }
  for (unsigned p : recipe.poly_primes) {
    if (p != 2 && p != 3 && p != 5) throw InvalidArgument("poly primes must be 2, 3 or 5");
    for (const auto& f : monic_quadratics(p))
      c.rings.push_back({construct::poly_quotient(p, f), "poly", std::nullopt});
  }
  if (recipe.idealizations_max) {
    const int m = *recipe.idealizations_max;
    cap(static_cast<long>(m) * m, limit, "idealizations");
    std::vector<CatalogEntry> idls;
    for (int n = 2; n <= m; ++n) {
      const auto base = construct::zmod(n);
      std::vector<construct::ModuleRef> modules = {construct::module_self(base)};
      for (const auto& I : finring::enumerate_ideals(base))
        if (I.is_proper() && !I.is_zero()) modules.push_back(construct::module_from_quotient(I));
      for (const auto& M : modules) {
        auto idl = construct::idealization(base, M);
        idls.push_back({idl.ring, "idealization", idl});
      }
    }
    c.rings.insert(c.rings.end(), idls.begin(), idls.end());
    if (recipe.idealization_quotients) {
      for (const auto& e : idls)
        for (const auto& I : finring::enumerate_ideals(e.ring))
          if (I.is_proper() && !I.is_zero())
            c.rings.push_back({construct::quotient(I).ring, "quotient", std::nullopt});
    }
  }
  if (recipe.localize_zmod_max) {
    cap(*recipe.localize_zmod_max, limit, "localizations");
    for (int n = 2; n <= *recipe.localize_zmod_max; ++n)
      add_localizations(construct::zmod(n), c.rings);
  }
  if (recipe.localize_products_max) {
    const int m = *recipe.localize_products_max;
    cap(static_cast<long>(m) * m, limit, "localizations");
    for (int a = 2; a <= m; ++a)
      for (int b = 2; b <= m; ++b)
        add_localizations(construct::product(construct::zmod(a), construct::zmod(b)), c.rings);
  }
  for (const auto& text : recipe.rings) {
    auto e = construct::parse_expression(text);
    if (e.ideal) throw ParseError("recipe rings must be ring expressions: '" + text + "'");
    c.rings.push_back({e.ring, e.idealization ? "idealization" : "expression", e.idealization});
  }
  for (const auto& name : recipe.symbolic) c.symbolic.push_back(zsym::parse_sym_ring(name));
  return c;
}

// ---------------------------------------------------------------- ring context

struct BitsHash {
  std::size_t operator()(const ElemBits& b) const { return std::hash<ElemBits>()(b); }
};

/// Per-ring data shared by all finite checks: the ideal lattice, radicals
/// and predicate values for every proper ideal. Built and used by one
/// thread at a time.
class RingContext {
 public:
  explicit RingContext(const CatalogEntry& e)
      : entry(e), ring(e.ring), R(*e.ring), label(e.ring->label()) {
    ideals = finring::enumerate_ideals(ring);
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      index_.emplace(ideals[i].bits(), i);
      if (ideals[i].is_proper()) proper.push_back(i);
    }
    J = finring::jacobson(ring).bits();
    N = finring::nilradical(ring).bits();
    facts.resize(ideals.size());
    for (auto i : proper) {
      const auto& I = ideals[i];
      auto& f = facts[i];
      f.rad = finring::radical(I).bits();
      f.quasi_j = cl::is_quasi_j_ideal(I).holds;
      f.j = cl::is_j_ideal(I).holds;
      f.n = cl::is_n_ideal(I).holds;
      f.delta1 = cl::is_delta1_n_ideal(I).holds;
      f.primary = cl::is_primary(I).holds;
      f.quasi_primary = cl::is_quasi_primary(I).holds;
      f.prime = cl::is_prime(I).holds;
      f.maximal = cl::is_maximal(I).holds;
      f.superfluous = cl::is_superfluous(I).holds;
      f.regular = cl::is_regular_ideal(I).holds;
    }
    quasi_local = cl::is_quasi_local(ring).holds;
  }

  std::size_t index_of(const IdealSet& I) const { return index_.at(I.bits()); }
  bool in_j(const ElemBits& b) const { return (b & ~J).none(); }
  std::string show(const IdealSet& I) const { return finring::describe(I); }
  std::string show(std::size_t i) const { return finring::describe(ideals[i]); }

  const construct::Quotient& quotient(std::size_t i) const {
    auto it = quotients_.find(i);
    if (it == quotients_.end()) it = quotients_.emplace(i, construct::quotient(ideals[i])).first;
    return it->second;
  }

  struct Facts {
    ElemBits rad;
    bool quasi_j = false, j = false, n = false, delta1 = false, primary = false,
         quasi_primary = false, prime = false, maximal = false, superfluous = false,
         regular = false;
  };

  const CatalogEntry& entry;
  finring::RingRef ring;
  const RingTable& R;
  std::string label;
  std::vector<IdealSet> ideals;
  std::vector<std::size_t> proper;
  std::vector<Facts> facts;
  ElemBits J, N;
  bool quasi_local = false;

 private:
  std::unordered_map<ElemBits, std::size_t, BitsHash> index_;
  mutable std::map<std::size_t, construct::Quotient> quotients_;
};

// ---------------------------------------------------------------- finite checks

namespace {

std::string flags(std::initializer_list<bool> values) {
  std::string out;
  int k = 1;
  for (bool v : values) {
    if (!out.empty()) out += " ";
    out += "(" + std::to_string(k++) + ")=" + (v ? "T" : "F");
  }
  return out;
}

bool all_equal(std::initializer_list<bool> values) {
  return std::all_of(values.begin(), values.end(), [&](bool v) { return v == *values.begin(); });
}

bool quasi_j_of(const IdealSet& I) { return I.is_proper() && cl::is_quasi_j_ideal(I).holds; }

void check_eq(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    const auto& rad = c.facts[i].rad;
    const bool c1 = cl::routes::quasi_j_by_definition(I);
    const bool c4 = cl::routes::quasi_j_by_pairs(I);
    bool c2 = true;
    for (Elem a = 0; a < c.R.order() && c2; ++a) {
      if (c.J.test(a)) continue;
      const auto colon = finring::colon(I, ElementSubset(c.ring, {a})).bits();
      for (const auto& K : c.ideals)
        if ((K.bits() & ~colon).none() && (K.bits() & ~rad).any()) {
          c2 = false;
          break;
        }
    }
    bool c3 = true;
    for (const auto& K : c.ideals) {
      if (c.in_j(K.bits())) continue;
      const auto colon = finring::colon(I, K.as_subset()).bits();
      for (const auto& L : c.ideals)
        if ((L.bits() & ~colon).none() && (L.bits() & ~rad).any()) c3 = false;
      if (!c3) break;
    }
    t.record(c1);
    if (!all_equal({c1, c2, c3, c4})) t.fail(c.label, "I=" + c.show(i) + " " + flags({c1, c2, c3, c4}));
  }
}

void check_c_eq(const RingContext& c, Tally& t) {
  for (const auto& L : c.ideals) {
    if (c.in_j(L.bits())) continue;
    std::vector<ElemBits> IL(c.ideals.size());
    for (std::size_t i = 0; i < c.ideals.size(); ++i)
      IL[i] = finring::ideal_product(c.ideals[i], L).bits();
    // (1)
    for (auto i : c.proper)
      for (auto k : c.proper) {
        const bool hyp = c.facts[i].quasi_j && c.facts[k].quasi_j && IL[i] == IL[k];
        t.record(hyp);
        if (hyp && c.facts[i].rad != c.facts[k].rad)
          t.fail(c.label, "(1) I=" + c.show(i) + " K=" + c.show(k) + " L=" + c.show(L));
      }
    // (2)
    for (std::size_t i = 0; i < c.ideals.size(); ++i) {
      const auto prod = IdealSet::checked(c.ring, IL[i]);
      const bool hyp = quasi_j_of(prod);
      t.record(hyp);
      if (hyp && finring::radical(prod).bits() != finring::radical(c.ideals[i]).bits())
        t.fail(c.label, "(2) I=" + c.show(i) + " L=" + c.show(L));
    }
  }
}

void check_ji(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    const auto JI = finring::j_of_ideal(I).bits();
    bool c2 = c.in_j(I.bits());
    for (Elem a = 0; a < c.R.order() && c2; ++a)
      for (Elem b = 0; b < c.R.order(); ++b)
        if (I.contains(c.R.mul(a, b)) && !JI.test(a) && !c.facts[i].rad.test(b)) {
          c2 = false;
          break;
        }
    const bool c1 = c.facts[i].quasi_j;
    t.record(c1);
    if (c1 != c2) t.fail(c.label, "I=" + c.show(i) + " " + flags({c1, c2}));
  }
}

void check_ql(const RingContext& c, Tally& t) {
  const auto& units = c.R.invariants().units;
  bool p_j = true, p_qj = true;
  for (Elem a = 0; a < c.R.order(); ++a) {
    if (units.test(a)) continue;
    const auto i = c.index_of(finring::principal(c.ring, a));
    p_j = p_j && c.facts[i].j;
    p_qj = p_qj && c.facts[i].quasi_j;
  }
  bool all_j = true, all_qj = true, max_qj = true;
  for (auto i : c.proper) {
    all_j = all_j && c.facts[i].j;
    all_qj = all_qj && c.facts[i].quasi_j;
    if (c.facts[i].maximal) max_qj = max_qj && c.facts[i].quasi_j;
  }
  const bool ql = c.quasi_local;
  t.record(ql);
  if (!all_equal({ql, p_j, all_j, all_qj, p_qj, max_qj}))
    t.fail(c.label, flags({ql, p_j, all_j, all_qj, p_qj, max_qj}));
}

void check_delta(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const auto& f = c.facts[i];
    const bool h1 = f.delta1;
    const bool h2 = f.primary && c.in_j(c.ideals[i].bits());
    t.record(h1 || h2);
    if ((h1 || h2) && !f.quasi_j)
      t.fail(c.label, "I=" + c.show(i) + (h1 ? " delta1-n" : " primary in J") + " but not quasi-J");
  }
}

void check_semi(const RingContext& c, Tally& t) {
  const bool semi = c.J.count() == 1;
  t.record(semi);
  if (!semi) return;
  const bool domain = cl::is_domain(c.ring).holds;
  std::vector<std::size_t> qj;
  for (auto i : c.proper)
    if (c.facts[i].quasi_j) qj.push_back(i);
  const bool only_zero = qj.size() == 1 && c.ideals[qj[0]].is_zero();
  if (domain != only_zero) t.fail(c.label, "(1) domain=" + std::string(domain ? "T" : "F"));
  if (!domain && !qj.empty()) t.fail(c.label, "(2) quasi J-ideal " + c.show(qj[0]));
}

// S ranges over singletons {s} and ideals K, both outside J(R).
std::vector<ElementSubset> subsets_outside_j(const RingContext& c) {
  std::vector<ElementSubset> out;
  for (Elem s = 0; s < c.R.order(); ++s)
    if (!c.J.test(s)) out.emplace_back(c.ring, std::initializer_list<Elem>{s});
  for (const auto& K : c.ideals)
    if (!c.in_j(K.bits()) && K.size() > 1) out.push_back(K.as_subset());
  return out;
}

void check_l1(const RingContext& c, Tally& t) {
  const auto sets = subsets_outside_j(c);
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    for (const auto& S : sets) {
      const bool hyp = c.facts[i].quasi_j;
      t.record(hyp);
      if (!hyp) continue;
      const auto lhs = finring::radical(finring::colon(I, S)).bits();
      const auto rhs = finring::colon(finring::radical(I), S).bits();
      if (lhs != rhs)
        t.fail(c.label, "I=" + c.show(i) + " S=" + finring::describe(c.R, S.bits()));
    }
  }
}

void check_l2(const RingContext& c, Tally& t) {
  const auto sets = subsets_outside_j(c);
  for (auto i : c.proper) {
    for (const auto& S : sets) {
      const bool hyp = c.facts[i].quasi_j;
      t.record(hyp);
      if (!hyp) continue;
      const auto col = finring::colon(c.ideals[i], S);
      if (!quasi_j_of(col))
        t.fail(c.label, "I=" + c.show(i) + " S=" + finring::describe(c.R, S.bits()) +
                            " (I:S)=" + c.show(col));
    }
  }
}

void check_max(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    bool maximal = c.facts[i].quasi_j;
    for (auto k : c.proper) {
      if (!maximal) break;
      if (k != i && c.facts[k].quasi_j && c.ideals[i].subset_of(c.ideals[k])) maximal = false;
    }
    t.record(maximal);
    if (maximal && !c.facts[i].j)
      t.fail(c.label, "maximal quasi J-ideal " + c.show(i) + " is not a J-ideal");
  }
}

void check_cj(const RingContext& c, Tally& t) {
  const auto i = c.index_of(IdealSet::checked(c.ring, c.J));
  const auto& f = c.facts[i];
  t.record(f.j);
  if (!all_equal({f.j, f.quasi_j, f.prime})) t.fail(c.label, flags({f.j, f.quasi_j, f.prime}));
}

// I = P^n for some prime P and n >= 1.
bool is_prime_power(const RingContext& c, const IdealSet& I) {
  for (const auto& P : finring::prime_ideals(c.ring)) {
    std::set<std::string> seen;
    IdealSet pw = P;
    while (seen.insert(pw.bits().to_string()).second) {
      if (pw == I) return true;
      pw = finring::ideal_product(pw, P);
    }
  }
  return false;
}

void check_zero(const RingContext& c, Tally& t) {
  const bool zero_dim = finring::is_zero_dimensional(c.ring);
  const auto maximals = finring::maximal_ideals(c.ring);
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    const bool hyp = zero_dim && c.in_j(I.bits());
    if (!hyp) {
      t.record(false);
      continue;
    }
    const auto& f = c.facts[i];
    const bool c1 = f.quasi_j;
    const bool c2 = f.quasi_primary;
    const bool c3 = is_prime_power(c, I);
    const bool c4 = maximals.size() == 1 && maximals[0].bits() == f.rad;
    t.record(c1);
    if (!all_equal({c1, c2, c3, c4})) t.fail(c.label, "I=" + c.show(i) + " " + flags({c1, c2, c3, c4}));
  }
}

void check_pir(const RingContext& c, Tally& t) {
  if (c.entry.family != "zmod") return;
  // "Prime element": p with <p> a prime ideal, p = 0 allowed.
  std::vector<Elem> primes;
  for (Elem p = 0; p < c.R.order(); ++p)
    if (c.J.test(p) && c.facts[c.index_of(finring::principal(c.ring, p))].prime) primes.push_back(p);
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    bool rhs = false;
    for (Elem p : primes) {
      std::set<Elem> seen;
      for (unsigned n = 1; !rhs; ++n) {
        const Elem pn = c.R.pow(p, n);
        if (!seen.insert(pn).second) break;
        rhs = finring::principal(c.ring, pn) == I;
      }
      if (rhs) break;
    }
    const bool lhs = c.facts[i].quasi_j;
    t.record(lhs);
    if (lhs != rhs) t.fail(c.label, "I=" + c.show(i) + " " + flags({lhs, rhs}));
  }
}

void check_sup(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    t.record(c.facts[i].quasi_j);
    if (c.facts[i].quasi_j && !c.facts[i].superfluous)
      t.fail(c.label, "quasi J-ideal " + c.show(i) + " is not superfluous");
  }
}

bool incomparable(const std::vector<ElemBits>& rads) {
  for (std::size_t a = 0; a < rads.size(); ++a)
    for (std::size_t b = 0; b < rads.size(); ++b)
      if (a != b && (rads[a] & ~rads[b]).none()) return false;
  return true;
}

// Shared body for the intersection and product propositions.
void check_combine(const RingContext& c, Tally& t, bool product) {
  auto combine = [&](const std::vector<std::size_t>& idx) {
    IdealSet acc = c.ideals[idx[0]];
    for (std::size_t k = 1; k < idx.size(); ++k)
      acc = product ? finring::ideal_product(acc, c.ideals[idx[k]])
                    : finring::ideal_intersection(acc, c.ideals[idx[k]]);
    return acc;
  };
  auto names = [&](const std::vector<std::size_t>& idx) {
    std::string out;
    for (auto i : idx) out += (out.empty() ? "" : " ") + c.show(i);
    return out;
  };
  std::vector<std::size_t> qj, qp;
  for (auto i : c.proper) {
    if (c.facts[i].quasi_j) qj.push_back(i);
    if (c.facts[i].quasi_primary) qp.push_back(i);
  }
  auto tuples = [](const std::vector<std::size_t>& pool, auto&& fn) {
    for (std::size_t a = 0; a < pool.size(); ++a)
      for (std::size_t b = a; b < pool.size(); ++b) {
        fn(std::vector<std::size_t>{pool[a], pool[b]});
        for (std::size_t d = b; d < pool.size(); ++d)
          fn(std::vector<std::size_t>{pool[a], pool[b], pool[d]});
      }
  };
  // (1) over all proper pairs; triples drawn from the quasi J-ideals.
  for (std::size_t a = 0; a < c.proper.size(); ++a)
    for (std::size_t b = a; b < c.proper.size(); ++b) {
      const std::vector<std::size_t> idx = {c.proper[a], c.proper[b]};
      const bool hyp = c.facts[idx[0]].quasi_j && c.facts[idx[1]].quasi_j;
      t.record(hyp);
      if (hyp && !quasi_j_of(combine(idx))) t.fail(c.label, "(1) " + names(idx));
    }
  tuples(qj, [&](const std::vector<std::size_t>& idx) {
    if (idx.size() != 3) return;
    t.record(true);
    if (!quasi_j_of(combine(idx))) t.fail(c.label, "(1) " + names(idx));
  });
  // (2) quasi primary ideals with pairwise incomparable radicals.
  tuples(qp, [&](const std::vector<std::size_t>& idx) {
    std::vector<ElemBits> rads;
    for (auto i : idx) rads.push_back(c.facts[i].rad);
    const bool hyp = incomparable(rads) && quasi_j_of(combine(idx));
    t.record(hyp);
    if (!hyp) return;
    for (auto i : idx)
      if (!c.facts[i].quasi_j) t.fail(c.label, "(2) " + names(idx) + ": " + c.show(i) + " not quasi-J");
  });
}

void check_int(const RingContext& c, Tally& t) { check_combine(c, t, false); }
void check_prod(const RingContext& c, Tally& t) { check_combine(c, t, true); }

void check_f(const RingContext& c, Tally& t) {
  for (auto k : c.proper) {
    const auto& K = c.ideals[k];
    const auto& q = c.quotient(k);
    // (1) Ker f = K ⊆ I1.
    for (auto i : c.proper) {
      if (!K.subset_of(c.ideals[i])) continue;
      const bool hyp = c.facts[i].quasi_j;
      t.record(hyp);
      if (hyp && !quasi_j_of(construct::push_ideal(q.projection, c.ideals[i])))
        t.fail(c.label, "(1) K=" + c.show(k) + " I=" + c.show(i));
    }
    // (2) Ker f ⊆ J(R).
    const bool ker_in_j = c.in_j(K.bits());
    for (const auto& I2 : finring::enumerate_ideals(q.ring)) {
      if (!I2.is_proper()) continue;
      const bool hyp = ker_in_j && cl::is_quasi_j_ideal(I2).holds;
      t.record(hyp);
      if (hyp && !quasi_j_of(construct::pull_ideal(q.projection, I2)))
        t.fail(c.label, "(2) K=" + c.show(k) + " I2=" + finring::describe(I2));
    }
  }
}

// Z_I(R) = {r : rs ∈ I for some s ∉ I}
ElemBits z_of(const RingTable& R, const ElemBits& I) {
  ElemBits out;
  for (Elem r = 0; r < R.order(); ++r)
    for (Elem s = 0; s < R.order(); ++s)
      if (!I.test(s) && I.test(R.mul(r, s))) {
        out.set(r);
        break;
      }
  return out;
}

void check_s(const RingContext& c, Tally& t) {
  const auto& inv = c.R.invariants();
  const ElemBits zj = z_of(c.R, c.J);
  std::set<std::string> seen;
  for (Elem s = 0; s < c.R.order(); ++s) {
    if (inv.nilradical.test(s)) continue;
    const auto S = construct::powers_of(c.ring, s);
    if (!seen.insert(S.bits().to_string()).second) continue;
    const auto loc = construct::localize(c.ring, S);
    const auto sj = construct::push_ideal(loc.canonical, finring::jacobson(c.ring));
    const bool base = sj == finring::jacobson(loc.ring);
    const std::string where = " S=" + finring::describe(c.R, S.bits());
    for (auto i : c.proper) {
      const auto& I = c.ideals[i];
      const auto SI = construct::push_ideal(loc.canonical, I);
      // (1)
      const bool h1 = base && (I.bits() & S.bits()).none() && c.facts[i].quasi_j;
      t.record(h1);
      if (h1 && !quasi_j_of(SI)) t.fail(c.label, "(1) I=" + c.show(i) + where);
      // (2)
      const bool h2 = base && quasi_j_of(SI) && (S.bits() & z_of(c.R, I.bits())).none() &&
                      (S.bits() & zj).none();
      t.record(h2);
      if (h2 && !c.facts[i].quasi_j) t.fail(c.label, "(2) I=" + c.show(i) + where);
    }
  }
}

void check_r(const RingContext& c, Tally& t) {
  if (c.label.rfind("prod ", 0) != 0) return;
  for (auto i : c.proper) {
    t.record(true);
    if (c.facts[i].quasi_j) t.fail(c.label, "quasi J-ideal " + c.show(i) + " in a product");
  }
}

void check_pide(const RingContext& c, Tally& t) {
  if (!c.entry.idealization) return;
  const auto& idl = *c.entry.idealization;
  const auto full = construct::full_submodule(idl.module);
  for (const auto& I : finring::enumerate_ideals(idl.base)) {
    if (!I.is_proper()) continue;
    const bool rhs = cl::is_quasi_j_ideal(I).holds;
    const bool lhs = quasi_j_of(construct::ideal_in_idealization(idl, I, full));
    t.record(rhs);
    if (lhs != rhs) t.fail(c.label, "I=" + finring::describe(I) + " " + flags({lhs, rhs}));
  }
}

void check_q1(const RingContext& c, Tally& t) {
  const bool def = cl::routes::quasi_presimplifiable_by_definition(c.ring);
  const bool chr = cl::routes::quasi_presimplifiable_by_containment(c.ring);
  t.record(def);
  if (def != chr) t.fail(c.label, flags({def, chr}));
}

void check_pslash(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const auto& f = c.facts[i];
    const bool in_j = c.in_j(c.ideals[i].bits());
    const auto& Q = c.quotient(i).ring;
    const bool r1 = in_j && cl::is_presimplifiable(Q).holds;
    const bool r2 = in_j && cl::is_quasi_presimplifiable(Q).holds;
    t.record(f.j || f.quasi_j);
    if (f.j != r1) t.fail(c.label, "(1) I=" + c.show(i) + " " + flags({f.j, r1}));
    if (f.quasi_j != r2) t.fail(c.label, "(2) I=" + c.show(i) + " " + flags({f.quasi_j, r2}));
  }
}

void check_c0(const RingContext& c, Tally& t) {
  const auto zero = c.index_of(finring::zero_ideal(c.ring));
  const bool pre = cl::is_presimplifiable(c.ring).holds;
  const bool qpre = cl::is_quasi_presimplifiable(c.ring).holds;
  t.record(pre || qpre);
  if (pre != c.facts[zero].j) t.fail(c.label, "presimplifiable vs 0 J-ideal " + flags({pre, c.facts[zero].j}));
  if (qpre != c.facts[zero].quasi_j)
    t.fail(c.label, "quasi presimplifiable vs 0 quasi J-ideal " + flags({qpre, c.facts[zero].quasi_j}));
}

void check_vnr(const RingContext& c, Tally& t) {
  const bool hyp = cl::is_quasi_presimplifiable(c.ring).holds && cl::is_von_neumann_regular(c.ring).holds;
  t.record(hyp);
  if (hyp && !cl::is_field(c.ring).holds) t.fail(c.label, "not a field");
}

void check_reg(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const bool hyp = c.facts[i].regular && c.facts[i].quasi_j;
    t.record(hyp);
    if (hyp && !c.facts[i].maximal) t.fail(c.label, "I=" + c.show(i) + " not maximal");
  }
}

// Kernel and oracle checks.

void check_axioms(const RingContext& c, Tally& t) {
  const auto par = finring::check_axioms(c.R.order(), c.R.add_table(), c.R.mul_table(), c.R.zero(), c.R.one());
  const auto ser =
      finring::check_axioms_serial(c.R.order(), c.R.add_table(), c.R.mul_table(), c.R.zero(), c.R.one());
  t.record(true);
  if (par) t.fail(c.label, "axiom " + par->axiom + " fails");
  if (par.has_value() != ser.has_value()) t.fail(c.label, "serial and parallel axiom checks disagree");
}

void check_routes(const RingContext& c, Tally& t) {
  for (auto i : c.proper) {
    const auto& I = c.ideals[i];
    const bool j1 = cl::routes::j_ideal_by_definition(I), j2 = cl::routes::j_ideal_by_quotient(I);
    const bool q1 = cl::routes::quasi_j_by_definition(I), q2 = cl::routes::quasi_j_by_pairs(I);
    t.record(true);
    if (j1 != j2) t.fail(c.label, "j-ideal routes disagree on " + c.show(i));
    if (q1 != q2) t.fail(c.label, "quasi-J routes disagree on " + c.show(i));
  }
  const bool p1 = cl::routes::presimplifiable_by_definition(c.ring);
  const bool p2 = cl::routes::presimplifiable_by_containment(c.ring);
  const bool s1 = cl::routes::quasi_presimplifiable_by_definition(c.ring);
  const bool s2 = cl::routes::quasi_presimplifiable_by_containment(c.ring);
  t.record(true);
  if (p1 != p2) t.fail(c.label, "presimplifiable routes disagree");
  if (s1 != s2) t.fail(c.label, "quasi presimplifiable routes disagree");
}

void check_nil_jac(const RingContext& c, Tally& t) {
  t.record(true);
  if (c.N != c.J) t.fail(c.label, "nilradical != jacobson");
}

void check_exists_ql(const RingContext& c, Tally& t) {
  const bool any = std::any_of(c.proper.begin(), c.proper.end(), [&](auto i) { return c.facts[i].quasi_j; });
  t.record(c.quasi_local);
  if (any != c.quasi_local) t.fail(c.label, "has quasi J-ideal=" + std::string(any ? "T" : "F"));
}

void check_idl_j(const RingContext& c, Tally& t) {
  if (!c.entry.idealization) return;
  const auto& idl = *c.entry.idealization;
  const auto expected = construct::ideal_in_idealization(idl, finring::jacobson(idl.base),
                                                         construct::full_submodule(idl.module));
  t.record(true);
  if (expected.bits() != c.J) t.fail(c.label, "J(R(+)M) != J(R)(+)M");
}

void check_idl_rad(const RingContext& c, Tally& t) {
  if (!c.entry.idealization) return;
  const auto& idl = *c.entry.idealization;
  const auto full = construct::full_submodule(idl.module);
  const auto subs = construct::submodules(idl.module);
  for (const auto& I : finring::enumerate_ideals(idl.base)) {
    for (const auto& N : subs) {
      bool homogeneous = true;
      for (auto r : I.members())
        for (Elem m = 0; m < idl.module->order(); ++m)
          if (!N.contains(idl.module->act(r, m))) homogeneous = false;
      if (!homogeneous) continue;
      t.record(true);
      const auto IN = construct::ideal_in_idealization(idl, I, N);
      const auto expected = construct::ideal_in_idealization(idl, finring::radical(I), full);
      if (finring::radical(IN) != expected)
        t.fail(c.label, "sqrt(" + finring::describe(IN) + ") != sqrt(I)(+)M");
    }
  }
}

// ---------------------------------------------------------------- symbolic checks

using zsym::Engine;
using zsym::SymRing;

void sym_rules(const SymRing& R, const Engine& E, Tally& t) {
  const int bound = E.options().bound;
  for (const auto& I : zsym::candidate_ideals(R)) {
    for (const auto& p : zsym::sym_ideal_predicates()) {
      const auto v = E.classify(R, I, p);
      const bool by_rule = !v.rule_id.empty();
      t.record(by_rule);
      const std::string what = zsym::format_ideal(R, I) + " " + p;
      if (v.status == zsym::Status::ProvenByRule && !E.search(R, I, p, bound).holds())
        t.fail(R.name(), what + ": rule proven, search refutes");
      if (v.status == zsym::Status::RefutedWithWitness && !E.witness_refutes(R, I, p, v.witness))
        t.fail(R.name(), what + ": witness does not re-validate");
    }
  }
  for (const auto& p : zsym::sym_ring_predicates()) {
    const auto v = E.ring_classify(R, p);
    t.record(!v.rule_id.empty());
    if (v.status == zsym::Status::ProvenByRule && !E.ring_search(R, p, bound).holds())
      t.fail(R.name(), p + ": rule proven, search refutes");
    if (v.status == zsym::Status::RefutedWithWitness && !E.ring_witness_refutes(R, p, v.witness))
      t.fail(R.name(), p + ": witness does not re-validate");
  }
}

void sym_l1(const SymRing& R, const Engine& E, Tally& t) {
  std::vector<zsym::SymElem> elems;
  switch (R.family) {
    case zsym::Family::Integers:
      for (std::int64_t s = 1; s <= 12; ++s) elems.push_back({s, 0});
      break;
    case zsym::Family::Local:
      for (std::int64_t s = 1; s <= 12; ++s)
        if (s % R.param != 0) elems.push_back({s, 1});
      break;
    default:
      for (std::int64_t s = 1; s <= 6; ++s) elems.push_back({s, 0});
  }
  for (const auto& I : zsym::candidate_ideals(R)) {
    const bool qj = E.classify(R, I, "quasi_j").holds();
    for (const auto& s : elems) {
      if (contains(R, E.jacobson(R), s)) continue;
      t.record(qj);
      if (!qj) continue;
      const auto lhs = E.radical(R, E.colon(R, I, s));
      const auto rhs = E.colon(R, E.radical(R, I), s);
      if (!(lhs == rhs))
        t.fail(R.name(), "I=" + zsym::format_ideal(R, I) + " s=" + zsym::format_elem(R, s));
    }
  }
}

void sym_pide(const SymRing& R, const Engine& E, Tally& t) {
  if (!R.is_idealization()) return;
  const auto Z = SymRing::integers();
  for (std::int64_t a : {0, 2, 3, 4, 5, 6, 12}) {
    const bool rhs = E.classify(Z, zsym::z_ideal(a), "quasi_j").holds();
    const bool lhs = E.classify(R, zsym::idl_ideal(R, a, 1), "quasi_j").holds();
    t.record(rhs);
    if (lhs != rhs) t.fail(R.name(), "a=" + std::to_string(a) + " " + flags({lhs, rhs}));
  }
}

void sym_semi(const SymRing& R, const Engine& E, Tally& t) {
  if (R.family != zsym::Family::Integers) return;
  for (const auto& I : zsym::candidate_ideals(R)) {
    const bool qj = E.classify(R, I, "quasi_j").holds();
    t.record(true);
    if (qj != (I.gen == 0)) t.fail(R.name(), zsym::format_ideal(R, I));
  }
}

void sym_ql(const SymRing& R, const Engine& E, Tally& t) {
  const bool ql = E.ring_classify(R, "quasi_local").holds();
  for (const auto& I : zsym::candidate_ideals(R)) {
    const bool j = E.classify(R, I, "j_ideal").holds();
    const bool qj = E.classify(R, I, "quasi_j").holds();
    t.record(ql);
    if (ql && !(j && qj)) t.fail(R.name(), zsym::format_ideal(R, I) + " in a quasi-local ring");
  }
}

void sym_homogeneous(const SymRing& R, const Engine&, Tally& t) {
  if (!R.is_idealization()) return;
  for (const auto& I : zsym::candidate_ideals(R)) {
    t.record(true);
    // a·M ⊆ N iff the module element a·1 lies in N.
    if (!contains(R, I, {0, I.gen})) t.fail(R.name(), zsym::format_ideal(R, I));
  }
  t.record(true);
  bool rejected = false;
  try {
    zsym::idl_ideal(R, 1, 0);  // Z (+) 0 is never an ideal
  } catch (const InvalidArgument&) {
    rejected = true;
  }
  if (!rejected) t.fail(R.name(), "non-homogeneous Z(+)0 accepted");
}

std::vector<TheoremCheck> make_registry() {
  auto fin = [](std::string id, std::string summary, Scope scope,
                void (*fn)(const RingContext&, Tally&)) {
    TheoremCheck c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.scope = scope;
    c.finite = fn;
    return c;
  };
  auto sym = [](std::string id, std::string summary,
                void (*fn)(const SymRing&, const Engine&, Tally&)) {
    TheoremCheck c;
    c.id = std::move(id);
    c.summary = std::move(summary);
    c.scope = Scope::Symbolic;
    c.symbolic = fn;
    return c;
  };
  return {
      fin("T-EQ", "quasi-J iff aK ⊆ I, KL ⊆ I and ab ∈ I forms hold", Scope::PerIdeal, check_eq),
      fin("C-EQ", "L ⊄ J(R): IL = KL gives √I = √K; IL quasi-J gives √(IL) = √I",
          Scope::PerIdealPair, check_c_eq),
      fin("T-JI", "quasi-J iff I ⊆ J(R) and ab ∈ I gives a ∈ J(I) or b ∈ √I", Scope::PerIdeal,
          check_ji),
      fin("T-QL", "quasi-local iff every proper (principal / maximal) ideal is (quasi) J",
          Scope::PerRing, check_ql),
      fin("T-DELTA", "delta1-n-ideals and primary ideals inside J(R) are quasi-J", Scope::PerIdeal,
          check_delta),
      fin("T-SEMI", "semiprimitive: domain iff 0 is the only quasi J-ideal; else none",
          Scope::PerRing, check_semi),
      fin("T-L1", "quasi-J and S ⊄ J(R): √(I:S) = (√I:S)", Scope::PerIdealPair, check_l1),
      fin("T-L2", "quasi-J and S ⊄ J(R): (I:S) is quasi-J", Scope::PerIdealPair, check_l2),
      fin("T-MAX", "a maximal quasi J-ideal is a J-ideal", Scope::PerIdeal, check_max),
      fin("C-J", "J(R) is J iff quasi-J iff prime", Scope::PerRing, check_cj),
      fin("T-ZERO", "zero-dimensional, I ⊆ J(R): quasi-J iff quasi primary iff I = P^n iff (R, √I) local",
          Scope::PerIdeal, check_zero),
      fin("C-PIR", "Z_n: quasi-J iff I = p^n R for a prime element p ∈ J(R)", Scope::PerIdeal,
          check_pir),
      fin("T-SUP", "quasi J-ideals are superfluous", Scope::PerIdeal, check_sup),
      fin("T-INT", "intersections of quasi J-ideals; converse for incomparable quasi primaries",
          Scope::PerIdealPair, check_int),
      fin("T-PROD", "products of quasi J-ideals; converse for incomparable quasi primaries",
          Scope::PerIdealPair, check_prod),
      fin("T-F", "quasi-J under quotient projections and their preimages", Scope::PerHom, check_f),
      fin("T-S", "quasi-J under localization when J(S^-1 R) = S^-1 J(R)", Scope::PerHom, check_s),
      fin("T-R", "product rings have no quasi J-ideals", Scope::PerRing, check_r),
      fin("T-PIDE", "I(+)M quasi-J in R(+)M iff I quasi-J in R", Scope::PerIdeal, check_pide),
      fin("T-Q1", "quasi presimplifiable iff NZ(R) ⊆ J(R)", Scope::PerRing, check_q1),
      fin("T-P/", "J (quasi-J) iff I ⊆ J(R) and R/I (quasi) presimplifiable", Scope::PerIdeal,
          check_pslash),
      fin("C-0", "(quasi) presimplifiable iff 0 is a (quasi) J-ideal", Scope::PerRing, check_c0),
      fin("T-VNR", "quasi presimplifiable von Neumann regular rings are fields", Scope::PerRing,
          check_vnr),
      fin("T-REG", "regular quasi J-ideals are maximal", Scope::PerIdeal, check_reg),
      fin("AX-RING", "tables satisfy every ring axiom (serial and parallel scans agree)",
          Scope::PerRing, check_axioms),
      fin("ORACLE-ROUTES", "definition and characterization routes agree", Scope::PerIdeal,
          check_routes),
      fin("META-NJ", "finite rings: nilradical = jacobson", Scope::PerRing, check_nil_jac),
      fin("META-QL", "finite rings: a quasi J-ideal exists iff quasi-local", Scope::PerRing,
          check_exists_ql),
      fin("IDL-J", "J(R(+)M) = J(R)(+)M", Scope::PerRing, check_idl_j),
      fin("IDL-RAD", "√(I(+)N) = √I(+)M", Scope::PerIdealPair, check_idl_rad),
      sym("SYM-RULES", "rule verdicts agree with bounded search; witnesses re-validate", sym_rules),
      sym("SYM-L1", "√(I:s) = (√I:s) for symbolic quasi J-ideals", sym_l1),
      sym("SYM-PIDE", "aZ(+)M quasi-J iff aZ quasi-J", sym_pide),
      sym("SYM-SEMI", "Z: only <0> is a quasi J-ideal", sym_semi),
      sym("SYM-QL", "quasi-local symbolic rings: proper ideals are J-ideals", sym_ql),
      sym("SYM-HOMOG", "idealization ideals satisfy a·M ⊆ N", sym_homogeneous),
  };
}

}  // namespace

const std::vector<TheoremCheck>& registry() {
  static const std::vector<TheoremCheck> r = make_registry();
  return r;
}

const std::vector<std::pair<std::string, std::string>>& out_of_scope() {
  static const std::vector<std::pair<std::string, std::string>> r = {
      {"power-series", "√(I[|x|]) and I[|x|] quasi-J need Noetherian R[|x|], an infinite ring"},
      {"polynomial", "R[x] quasi presimplifiable and I[x] quasi-J involve infinite R[x] and Hilbert rings"},
      {"direct-limits", "directed systems of rings are not finite objects"},
      {"example-eC", "C(R)_M is not computable here"},
  };
  return r;
}

std::vector<std::string> resolve_ids(const std::vector<std::string>& ids) {
  std::vector<std::string> out;
  for (const auto& id : ids) {
    const auto& reg = registry();
    if (std::none_of(reg.begin(), reg.end(), [&](const TheoremCheck& c) { return c.id == id; }))
      throw UnknownName("unknown theorem id '" + id + "'");
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  }
  return out;
}

// ---------------------------------------------------------------- runner

std::size_t Report::failure_count() const {
  std::size_t n = 0;
  for (const auto& r : results) n += r.tally.failures.size();
  return n;
}

const CheckResult* Report::find(const std::string& id) const {
  for (const auto& r : results)
    if (r.id == id) return &r;
  return nullptr;
}

namespace {

std::vector<const TheoremCheck*> selected(const std::vector<std::string>& ids) {
  std::vector<const TheoremCheck*> out;
  const auto wanted = resolve_ids(ids);
  for (const auto& c : registry())
    if (wanted.empty() || std::find(wanted.begin(), wanted.end(), c.id) != wanted.end())
      out.push_back(&c);
  return out;
}

// Runs every selected finite check on one ring; exceptions become failures.
std::vector<Tally> run_entry(const CatalogEntry& entry, const std::vector<const TheoremCheck*>& checks) {
  std::vector<Tally> out(checks.size());
  std::optional<RingContext> ctx;
  std::string setup_error;
  try {
    ctx.emplace(entry);
  } catch (const std::exception& e) {
    setup_error = e.what();
  }
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (!checks[k]->finite) continue;
    if (!ctx) {
      out[k].fail(entry.ring->label(), "error: " + setup_error);
      continue;
    }
    try {
      checks[k]->finite(*ctx, out[k]);
    } catch (const std::exception& e) {
      out[k].fail(entry.ring->label(), std::string("error: ") + e.what());
    }
  }
  return out;
}

std::vector<Tally> run_symbolic(const SymRing& ring, const Engine& engine,
                                const std::vector<const TheoremCheck*>& checks) {
  std::vector<Tally> out(checks.size());
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (!checks[k]->symbolic) continue;
    try {
      checks[k]->symbolic(ring, engine, out[k]);
    } catch (const std::exception& e) {
      out[k].fail(ring.name(), std::string("error: ") + e.what());
    }
  }
  return out;
}

Report run_impl(const Catalog& catalog, const std::vector<std::string>& ids,
                const RunOptions& options, bool parallel) {
  const auto start = std::chrono::steady_clock::now();
  const auto checks = selected(ids);
  const Engine engine(zsym::EngineOptions{options.symbolic_bound, ""});
  const std::size_t n = catalog.rings.size();
  const std::size_t m = catalog.symbolic.size();
  std::vector<std::vector<Tally>> parts(n + m);

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n + m; ++i)
      parts[i] = i < n ? run_entry(catalog.rings[i], checks)
                       : run_symbolic(catalog.symbolic[i - n], engine, checks);
  } else {
    for (std::size_t i = 0; i < n + m; ++i)
      parts[i] = i < n ? run_entry(catalog.rings[i], checks)
                       : run_symbolic(catalog.symbolic[i - n], engine, checks);
  }

  Report report;
  report.finite_rings = n;
  report.symbolic_rings = m;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    CheckResult r;
    r.id = checks[k]->id;
    r.summary = checks[k]->summary;
    r.scope = checks[k]->scope;
    for (const auto& p : parts) r.tally.merge(p[k]);
    std::sort(r.tally.failures.begin(), r.tally.failures.end());
    report.results.push_back(std::move(r));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Report run(const Catalog& catalog, const std::vector<std::string>& ids, const RunOptions& options) {
  return run_impl(catalog, ids, options, true);
}

Report run_serial(const Catalog& catalog, const std::vector<std::string>& ids,
                  const RunOptions& options) {
  return run_impl(catalog, ids, options, false);
}

std::string report_json(const Report& report) {
  json checks = json::array();
  for (const auto& r : report.results) {
    json failures = json::array();
    for (const auto& f : r.tally.failures) failures.push_back({{"ring", f.ring}, {"detail", f.detail}});
    checks.push_back({{"id", r.id},
                      {"summary", r.summary},
                      {"scope", std::string(scope_name(r.scope))},
                      {"instances", r.tally.instances},
                      {"satisfied", r.tally.satisfied},
                      {"vacuous", r.vacuous()},
                      {"failures", failures}});
  }
  json oos = json::array();
  for (const auto& [id, why] : out_of_scope()) oos.push_back({{"id", id}, {"reason", why}});
  json j{{"finite_rings", report.finite_rings},
         {"symbolic_rings", report.symbolic_rings},
         {"checks", checks},
         {"failure_count", report.failure_count()},
         {"out_of_scope", oos}};
  return j.dump();
}

std::string report_text(const Report& report) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof line, "%-14s %10s %10s %10s %8s\n", "check", "instances", "satisfied",
                "vacuous", "failures");
  os << line;
  for (const auto& r : report.results) {
    std::snprintf(line, sizeof line, "%-14s %10zu %10zu %10zu %8zu\n", r.id.c_str(),
                  r.tally.instances, r.tally.satisfied, r.vacuous(), r.tally.failures.size());
    os << line;
  }
  for (const auto& r : report.results)
    for (const auto& f : r.tally.failures) os << "FAIL " << r.id << " [" << f.ring << "] " << f.detail << "\n";
  os << "rings: " << report.finite_rings << " finite, " << report.symbolic_rings << " symbolic\n";
  os << "out of scope:";
  for (const auto& [id, why] : out_of_scope()) os << " " << id;
  os << "\n";
  os << "failures: " << report.failure_count() << "\n";
  return os.str();
}

// ---------------------------------------------------------------- search

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {"quasiJ_not_J", "quasi_presimpl_not_presimpl",
                                               "nil_ne_jac", "quasiJ_not_quasi_local"};
  return ids;
}

namespace {

std::optional<Found> search_finite(const std::string& prop, const Catalog& catalog) {
  for (const auto& e : catalog.rings) {
    const auto& ring = e.ring;
    const std::string label = ring->label();
    if (prop == "quasi_presimpl_not_presimpl") {
      const auto pre = cl::is_presimplifiable(ring);
      if (cl::is_quasi_presimplifiable(ring).holds && !pre.holds)
        return Found{label, "", "witness " + finring::describe(*ring, [&] {
                                  ElemBits b;
                                  for (auto w : pre.witness) b.set(w);
                                  return b;
                                }())};
      continue;
    }
    if (prop == "nil_ne_jac") {
      if (finring::nilradical(ring) != finring::jacobson(ring)) return Found{label, "", "N != J"};
      continue;
    }
    bool any_qj = false;
    for (const auto& I : finring::enumerate_ideals(ring)) {
      if (!I.is_proper()) continue;
      if (!cl::is_quasi_j_ideal(I).holds) continue;
      any_qj = true;
      if (prop == "quasiJ_not_J") {
        const auto j = cl::is_j_ideal(I);
        if (!j.holds) {
          std::string w;
          for (auto x : j.witness) w += (w.empty() ? "" : ", ") + ring->name(x);
          return Found{label, finring::describe(I), "witness (" + w + ")"};
        }
      }
    }
    if (prop == "quasiJ_not_quasi_local" && any_qj && !cl::is_quasi_local(ring).holds)
      return Found{label, "", "has a quasi J-ideal"};
  }
  return std::nullopt;
}

std::string show_witness(const SymRing& R, const std::vector<zsym::SymElem>& w) {
  std::string out;
  for (const auto& x : w) out += (out.empty() ? "" : ", ") + zsym::format_elem(R, x);
  return "witness (" + out + ")";
}

std::optional<Found> search_symbolic(const std::string& prop, const Catalog& catalog, const Engine& E) {
  for (const auto& R : catalog.symbolic) {
    if (prop == "quasi_presimpl_not_presimpl") {
      const auto pre = E.ring_classify(R, "presimplifiable");
      if (E.ring_classify(R, "quasi_presimplifiable").holds() && !pre.holds())
        return Found{R.name(), "", show_witness(R, pre.witness)};
      continue;
    }
    if (prop == "nil_ne_jac") {
      if (!(E.nilradical(R) == E.jacobson(R))) return Found{R.name(), "", "N != J"};
      continue;
    }
    bool any_qj = false;
    for (const auto& I : zsym::candidate_ideals(R)) {
      if (!E.classify(R, I, "quasi_j").holds()) continue;
      any_qj = true;
      if (prop == "quasiJ_not_J") {
        const auto j = E.classify(R, I, "j_ideal");
        if (!j.holds()) return Found{R.name(), zsym::format_ideal(R, I), show_witness(R, j.witness)};
      }
    }
    if (prop == "quasiJ_not_quasi_local" && any_qj && !E.ring_classify(R, "quasi_local").holds())
      return Found{R.name(), "", "has a quasi J-ideal"};
  }
  return std::nullopt;
}

}  // namespace

std::optional<Found> search_counterexample(const std::string& property, const Catalog& catalog,
                                           Part part, const Engine& engine) {
  const auto& ids = property_ids();
  if (std::find(ids.begin(), ids.end(), property) == ids.end())
    throw UnknownName("unknown property '" + property + "'");
  return part == Part::Finite ? search_finite(property, catalog)
                              : search_symbolic(property, catalog, engine);
}

std::size_t ReplayReport::passed() const {
  return static_cast<std::size_t>(std::count_if(replays.begin(), replays.end(),
                                                [](const auto& r) { return r.passed(); }));
}

ReplayReport replay_examples(const Engine& engine, const std::vector<std::string>& ids) {
  if (ids.empty()) throw InvalidArgument("no examples registered");
  ReplayReport out;
  for (const auto& id : ids) out.replays.push_back(zsym::replay_example(id, engine));
  return out;
}

}  // namespace qjlab::harness
