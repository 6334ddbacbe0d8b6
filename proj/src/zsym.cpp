#include "qjlab/zsym.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

#include "qjlab/errors.hpp"

namespace qjlab::zsym {

// ---------------------------------------------------------------- integers

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

bool is_prime64(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

namespace {

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

// p-adic valuation of a nonzero integer.
int valuation(std::int64_t n, std::int64_t p) {
  n = std::llabs(n);
  int v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t powmod(std::int64_t a, unsigned e, std::int64_t m) {
  std::int64_t result = 1 % m;
  a = mod(a, m);
  while (e != 0) {
    if (e & 1u) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1u;
  }
  return result;
}

std::int64_t ipow(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Two smallest primes different from p.
std::pair<std::int64_t, std::int64_t> two_other_primes(std::int64_t p) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = 2; out.size() < 2; ++q)
    if (is_prime64(q) && q != p) out.push_back(q);
  return {out[0], out[1]};
}

// Exponent used for raw radical membership: x ∈ √I iff x^kRadicalPower ∈ I
// for every ideal whose generators stay below 2^63.
constexpr unsigned kRadicalPower = 64;

}  // namespace

std::int64_t squarefree_kernel(std::int64_t n) {
  n = std::llabs(n);
  if (n <= 1) return n;
  std::int64_t r = 1;
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      r *= q;
      while (n % q == 0) n /= q;
    }
  }
  return n > 1 ? r * n : r;
}

// ---------------------------------------------------------------- rings

SymRing SymRing::local(std::int64_t p) {
  if (!is_prime64(p)) throw InvalidArgument("Z_(p) needs a prime p, got " + std::to_string(p));
  return {Family::Local, p};
}

SymRing SymRing::idealization(std::int64_t k) {
  if (k < 2) throw InvalidArgument("Z(+)Z_k needs k >= 2, got " + std::to_string(k));
  return {Family::Idealization, k};
}

std::string SymRing::name() const {
  switch (family) {
    case Family::Integers: return "Z";
    case Family::Local: return "Z(" + std::to_string(param) + ")";
    case Family::Idealization: return "Z(+)Z" + std::to_string(param);
    case Family::IdealizationZ: return "Z(+)Z";
  }
  return {};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + std::string(what) + ": '" + std::string(s) + "'");
  return v;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

SymRing parse_sym_ring(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "Z") return SymRing::integers();
  for (std::string_view sep : {"(+)", "plus"}) {
    const std::string head = "Z" + std::string(sep) + "Z";
    if (starts_with(s, head)) {
      std::string_view rest = s.substr(head.size());
      if (rest.empty()) return SymRing::idealization_z();
      try {
        return SymRing::idealization(parse_int(rest, "modulus"));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    }
  }
  for (std::string_view open : {"Z(", "Z_("}) {
    if (starts_with(s, open) && s.back() == ')') {
      std::string_view inner = s.substr(open.size(), s.size() - open.size() - 1);
      try {
        return SymRing::local(parse_int(inner, "prime"));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what());
      }
    }
  }
  throw ParseError("unknown symbolic ring '" + std::string(s) +
                   "' (expected Z, Z(p), ZplusZ or ZplusZk)");
}

// ---------------------------------------------------------------- ideals

SymIdeal z_ideal(std::int64_t n) { return {std::llabs(n), 0, false}; }

SymIdeal local_ideal(std::int64_t exponent) {
  if (exponent < 0) throw InvalidArgument("negative exponent");
  return {exponent, 0, false};
}

SymIdeal local_zero() { return {0, 0, true}; }

SymIdeal idl_ideal(const SymRing& ring, std::int64_t a, std::int64_t module_gen) {
  if (!ring.is_idealization()) throw InvalidArgument(ring.name() + " is not an idealization");
  a = std::llabs(a);
  std::int64_t d = std::llabs(module_gen);
  if (ring.family == Family::Idealization) {
    const std::int64_t k = ring.param;
    d = gcd64(d, k);  // gcd(0, k) = k, the zero submodule
    if (gcd64(a, k) % d != 0)
      throw InvalidArgument("a*M is not contained in N: " + std::to_string(a) + " vs submodule " +
                            std::to_string(d) + "Z" + std::to_string(k));
  } else {
    if (d == 0 ? a != 0 : a % d != 0)
      throw InvalidArgument("a*M is not contained in N: " + std::to_string(a) + " vs submodule " +
                            std::to_string(d) + "Z");
  }
  return {a, d, false};
}

SymIdeal canonical(const SymRing& ring, const SymIdeal& ideal) {
  switch (ring.family) {
    case Family::Integers: return z_ideal(ideal.gen);
    case Family::Local: return ideal.zero ? local_zero() : local_ideal(ideal.gen);
    default: return idl_ideal(ring, ideal.gen, ideal.module_gen);
  }
}

SymElem normalize(const SymRing& ring, SymElem x) {
  switch (ring.family) {
    case Family::Integers: return {x.first, 0};
    case Family::Local: {
      if (x.second == 0) throw InvalidArgument("zero denominator");
      if (x.second < 0) {
        x.first = -x.first;
        x.second = -x.second;
      }
      const std::int64_t g = gcd64(x.first, x.second);
      x.first /= g;
      x.second /= g;
      if (x.second % ring.param == 0)
        throw InvalidArgument("denominator divisible by " + std::to_string(ring.param));
      return x;
    }
    case Family::Idealization: return {x.first, mod(x.second, ring.param)};
    case Family::IdealizationZ: return x;
  }
  return x;
}

bool is_proper(const SymRing& ring, const SymIdeal& ideal) {
  switch (ring.family) {
    case Family::Integers: return ideal.gen != 1;
    case Family::Local: return ideal.zero || ideal.gen >= 1;
    default: return ideal.gen != 1;
  }
}

namespace {

bool module_contains(const SymRing& ring, std::int64_t d, std::int64_t m) {
  if (ring.family == Family::IdealizationZ) return d == 0 ? m == 0 : m % d == 0;
  return mod(m, d) == 0;  // d divides k
}

bool divides_or_zero(std::int64_t g, std::int64_t x) { return g == 0 ? x == 0 : x % g == 0; }

}  // namespace

bool contains(const SymRing& ring, const SymIdeal& ideal, const SymElem& x) {
  switch (ring.family) {
    case Family::Integers: return divides_or_zero(ideal.gen, x.first);
    case Family::Local:
      if (x.first == 0) return true;
      if (ideal.zero) return false;
      return valuation(x.first, ring.param) >= ideal.gen;
    default:
      return divides_or_zero(ideal.gen, x.first) && module_contains(ring, ideal.module_gen, x.second);
  }
}

SymElem add(const SymRing& ring, const SymElem& x, const SymElem& y) {
  switch (ring.family) {
    case Family::Integers: return {x.first + y.first, 0};
    case Family::Local:
      return normalize(ring, {x.first * y.second + y.first * x.second, x.second * y.second});
    default: return normalize(ring, {x.first + y.first, x.second + y.second});
  }
}

SymElem mul(const SymRing& ring, const SymElem& x, const SymElem& y) {
  switch (ring.family) {
    case Family::Integers: return {x.first * y.first, 0};
    case Family::Local: return normalize(ring, {x.first * y.first, x.second * y.second});
    default:
      return normalize(ring, {x.first * y.first, x.first * y.second + y.first * x.second});
  }
}

std::string format_elem(const SymRing& ring, const SymElem& x) {
  switch (ring.family) {
    case Family::Integers: return std::to_string(x.first);
    case Family::Local:
      if (x.second == 1) return std::to_string(x.first);
      return std::to_string(x.first) + "/" + std::to_string(x.second);
    default: return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")";
  }
}

std::string format_ideal(const SymRing& ring, const SymIdeal& ideal) {
  switch (ring.family) {
    case Family::Integers: return "<" + std::to_string(ideal.gen) + ">";
    case Family::Local: {
      if (ideal.zero) return "0";
      if (ideal.gen == 0) return "<1>";
      if (ideal.gen == 1) return "<" + std::to_string(ring.param) + ">";
      return "<" + std::to_string(ring.param) + "^" + std::to_string(ideal.gen) + ">";
    }
    default: break;
  }
  std::string out;
  if (ideal.gen == 0) out = "0";
  else if (ideal.gen == 1) out = "Z";
  else out = std::to_string(ideal.gen) + "Z";
  out += "(+)";
  if (ring.family == Family::IdealizationZ) {
    if (ideal.module_gen == 0) out += "0";
    else if (ideal.module_gen == 1) out += "Z";
    else out += std::to_string(ideal.module_gen) + "Z";
  } else {
    const std::string zk = "Z" + std::to_string(ring.param);
    if (ideal.module_gen == ring.param) out += "0";
    else if (ideal.module_gen == 1) out += zk;
    else out += std::to_string(ideal.module_gen) + zk;
  }
  return out;
}

namespace {

// "0", "Z", "Zk", "aZ", "aZk", "a" -> generator (Z means 1).
std::int64_t parse_component(std::string_view s, const std::string& zsuffix) {
  s = trim(s);
  if (s.empty()) throw ParseError("empty ideal component");
  if (s == "Z" || s == zsuffix) return 1;
  for (const std::string& tail : {zsuffix, std::string("Z")}) {
    if (s.size() > tail.size() && s.substr(s.size() - tail.size()) == tail)
      return parse_int(s.substr(0, s.size() - tail.size()), "ideal generator");
  }
  return parse_int(s, "ideal generator");
}

}  // namespace

SymIdeal parse_sym_ideal(const SymRing& ring, std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') s = trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw ParseError("empty ideal");
  try {
    switch (ring.family) {
      case Family::Integers: return z_ideal(parse_int(s, "ideal generator"));
      case Family::Local: {
        if (s == "0") return local_zero();
        if (auto caret = s.find('^'); caret != std::string_view::npos) {
          if (parse_int(s.substr(0, caret), "prime") != ring.param)
            throw ParseError("base must be " + std::to_string(ring.param));
          return local_ideal(parse_int(s.substr(caret + 1), "exponent"));
        }
        std::int64_t n = std::llabs(parse_int(s, "ideal generator"));
        const int v = valuation(n, ring.param);
        // Other prime factors are units in Z_(p).
        return local_ideal(v);
      }
      default: break;
    }
    std::string_view first, second;
    if (auto pos = s.find("(+)"); pos != std::string_view::npos) {
      first = s.substr(0, pos);
      second = s.substr(pos + 3);
    } else if (auto comma = s.find(','); comma != std::string_view::npos) {
      first = s.substr(0, comma);
      second = s.substr(comma + 1);
    } else {
      throw ParseError("idealization ideal needs 'a,dZ' or 'aZ(+)N', got '" + std::string(s) + "'");
    }
    const std::string zk = ring.family == Family::Idealization ? "Z" + std::to_string(ring.param) : "Z";
    const std::int64_t a = parse_component(first, zk);
    std::int64_t d = parse_component(second, zk);
    return idl_ideal(ring, a, d);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

SymElem parse_sym_elem(const SymRing& ring, std::string_view text) {
  std::string_view s = trim(text);
  try {
    switch (ring.family) {
      case Family::Integers: return {parse_int(s, "element"), 0};
      case Family::Local: {
        if (auto slash = s.find('/'); slash != std::string_view::npos)
          return normalize(ring, {parse_int(s.substr(0, slash), "numerator"),
                                  parse_int(s.substr(slash + 1), "denominator")});
        return {parse_int(s, "element"), 1};
      }
      default: {
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
        auto comma = s.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected a pair (a,m)");
        return normalize(ring, {parse_int(s.substr(0, comma), "element"),
                                parse_int(s.substr(comma + 1), "element")});
      }
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::ProvenByRule: return "proven_by_rule";
    case Status::RefutedWithWitness: return "refuted_with_witness";
    case Status::UnfalsifiedUpToBound: return "unfalsified_up_to_bound";
  }
  return {};
}

// ---------------------------------------------------------------- raw facts
//
// Ground truth used by bounded search and witness re-validation. These never
// consult the (possibly mutated) rule layer.

namespace {

bool raw_unit(const SymRing& ring, const SymElem& x) {
  switch (ring.family) {
    case Family::Integers: return x.first == 1 || x.first == -1;
    case Family::Local: return x.first % ring.param != 0;
    default: return x.first == 1 || x.first == -1;
  }
}

bool raw_in_jacobson(const SymRing& ring, const SymElem& x) {
  switch (ring.family) {
    case Family::Integers: return x.first == 0;
    case Family::Local: return x.first % ring.param == 0;
    default: return x.first == 0;
  }
}

bool raw_is_zero(const SymRing& ring, const SymElem& x) {
  (void)ring;
  return x.first == 0 && (ring.is_idealization() ? x.second == 0 : true);
}

// x^kRadicalPower ∈ I, computed with modular reduction.
bool raw_in_radical(const SymRing& ring, const SymIdeal& ideal, const SymElem& x) {
  switch (ring.family) {
    case Family::Integers:
      if (ideal.gen == 0) return x.first == 0;
      return powmod(x.first, kRadicalPower, ideal.gen) == 0;
    case Family::Local:
      if (x.first == 0) return true;
      if (ideal.zero) return false;
      return static_cast<std::int64_t>(valuation(x.first, ring.param)) * kRadicalPower >= ideal.gen;
    default: break;
  }
  // (a,m)^K = (a^K, K a^(K-1) m)
  const std::int64_t a = x.first, m = x.second;
  const bool first_ok =
      ideal.gen == 0 ? a == 0 : powmod(a, kRadicalPower, ideal.gen) == 0;
  if (!first_ok) return false;
  const std::int64_t d = ideal.module_gen;
  if (ring.family == Family::IdealizationZ && d == 0) return a == 0 || m == 0;
  const std::int64_t second =
      mulmod(mulmod(kRadicalPower % d, powmod(a, kRadicalPower - 1, d), d), mod(m, d), d);
  return second == 0;
}

bool raw_nilpotent(const SymRing& ring, const SymElem& x) {
  if (ring.is_idealization()) return x.first == 0;
  return x.first == 0;
}

// Pair or element predicate over a box.
struct ElemFacts {
  bool in_ideal = false;
  bool in_radical = false;
  bool in_jacobson = false;
  bool in_nil = false;
  bool unit = false;
  bool zero = false;
};

enum class Shape { Pair, Single };

struct Predicate {
  Shape shape = Shape::Pair;
  // For pairs: hypothesis(a, b) and violation(a, b) given facts and ab / a+b.
  std::function<bool(const ElemFacts&, const ElemFacts&, const SymElem&, const SymElem&)> hypothesis;
  std::function<bool(const ElemFacts&, const ElemFacts&, const SymElem&, const SymElem&)> violation;
  // Rows whose first element can never meet the hypothesis are skipped.
  std::function<bool(const ElemFacts&)> row_possible = [](const ElemFacts&) { return true; };
};

struct Context {
  const SymRing& ring;
  const SymIdeal* ideal;  // null for ring predicates
};

ElemFacts facts_of(const Context& ctx, const SymElem& x) {
  ElemFacts f;
  if (ctx.ideal) {
    f.in_ideal = contains(ctx.ring, *ctx.ideal, x);
    f.in_radical = raw_in_radical(ctx.ring, *ctx.ideal, x);
  }
  f.in_jacobson = raw_in_jacobson(ctx.ring, x);
  f.in_nil = raw_nilpotent(ctx.ring, x);
  f.unit = raw_unit(ctx.ring, x);
  f.zero = raw_is_zero(ctx.ring, x);
  return f;
}

Predicate ideal_predicate_spec(const Context& ctx, const std::string& name) {
  const SymRing& R = ctx.ring;
  const SymIdeal& I = *ctx.ideal;
  auto in_i = [&R, &I](const SymElem& ab) { return contains(R, I, ab); };
  auto in_rad = [&R, &I](const SymElem& ab) { return raw_in_radical(R, I, ab); };
  Predicate p;
  // a and b are elements, ab is their product.
  if (name == "j_ideal" || name == "quasi_j") {
    const bool quasi = name == "quasi_j";
    p.row_possible = [](const ElemFacts& a) { return !a.in_jacobson; };
    p.hypothesis = [in_i](const ElemFacts& a, const ElemFacts&, const SymElem& ab, const SymElem&) {
      return !a.in_jacobson && in_i(ab);
    };
    p.violation = [quasi](const ElemFacts&, const ElemFacts& b, const SymElem&, const SymElem&) {
      return quasi ? !b.in_radical : !b.in_ideal;
    };
  } else if (name == "n_ideal" || name == "delta1_n") {
    const bool delta = name == "delta1_n";
    p.row_possible = [](const ElemFacts& a) { return !a.in_nil; };
    p.hypothesis = [in_i](const ElemFacts& a, const ElemFacts&, const SymElem& ab, const SymElem&) {
      return !a.in_nil && in_i(ab);
    };
    p.violation = [delta](const ElemFacts&, const ElemFacts& b, const SymElem&, const SymElem&) {
      return delta ? !b.in_radical : !b.in_ideal;
    };
  } else if (name == "prime" || name == "primary") {
    const bool primary = name == "primary";
    p.hypothesis = [in_i](const ElemFacts&, const ElemFacts&, const SymElem& ab, const SymElem&) {
      return in_i(ab);
    };
    p.violation = [primary](const ElemFacts& a, const ElemFacts& b, const SymElem&, const SymElem&) {
      return !a.in_ideal && (primary ? !b.in_radical : !b.in_ideal);
    };
  } else if (name == "quasi_primary") {
    p.hypothesis = [in_rad](const ElemFacts&, const ElemFacts&, const SymElem& ab, const SymElem&) {
      return in_rad(ab);
    };
    p.violation = [](const ElemFacts& a, const ElemFacts& b, const SymElem&, const SymElem&) {
      return !a.in_radical && !b.in_radical;
    };
  } else {
    throw UnknownName("unknown symbolic ideal predicate '" + name + "'");
  }
  return p;
}

Predicate ring_predicate_spec(const Context& ctx, const std::string& name) {
  (void)ctx;
  Predicate p;
  // Pair predicates receive ab and a+b; "same" compares ab with a.
  if (name == "presimplifiable" || name == "quasi_presimplifiable") {
    const bool quasi = name == "quasi_presimplifiable";
    // a = ab with a nonzero (resp. non-nilpotent) forces b to be a unit.
    p.row_possible = [quasi](const ElemFacts& a) { return quasi ? !a.in_nil : !a.zero; };
    p.hypothesis = [quasi](const ElemFacts& a, const ElemFacts&, const SymElem&, const SymElem&) {
      return quasi ? !a.in_nil : !a.zero;
    };
    p.violation = [](const ElemFacts&, const ElemFacts& b, const SymElem&, const SymElem&) {
      return !b.unit;
    };
  } else if (name == "quasi_local") {
    p.row_possible = [](const ElemFacts& a) { return !a.unit; };
    p.hypothesis = [](const ElemFacts& a, const ElemFacts& b, const SymElem&, const SymElem&) {
      return !a.unit && !b.unit;
    };
    p.violation = {};  // needs the sum; handled in scan
  } else if (name == "domain") {
    p.row_possible = [](const ElemFacts& a) { return !a.zero; };
    p.hypothesis = [](const ElemFacts& a, const ElemFacts& b, const SymElem&, const SymElem&) {
      return !a.zero && !b.zero;
    };
    p.violation = {};  // needs the product's zero-ness; handled in scan
  } else if (name == "semiprimitive" || name == "reduced") {
    const bool semi = name == "semiprimitive";
    p.shape = Shape::Single;
    p.hypothesis = [](const ElemFacts& a, const ElemFacts&, const SymElem&, const SymElem&) {
      return !a.zero;
    };
    p.violation = [semi](const ElemFacts& a, const ElemFacts&, const SymElem&, const SymElem&) {
      return semi ? a.in_jacobson : a.in_nil;
    };
  } else {
    throw UnknownName("unknown symbolic ring predicate '" + name + "'");
  }
  return p;
}

struct RowOutcome {
  std::size_t hypotheses = 0;
  std::optional<std::size_t> hit;  // column of the first violation
};

struct ScanResult {
  std::size_t hypotheses = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Evaluates one pair (a, b) of a ring or ideal predicate: {hypothesis, violation}.
std::pair<bool, bool> eval_pair(const Context& ctx, const std::string& name, const Predicate& p,
                                const SymElem& a, const ElemFacts& fa, const SymElem& b,
                                const ElemFacts& fb) {
  const SymElem ab = mul(ctx.ring, a, b);
  if (!ctx.ideal && (name == "presimplifiable" || name == "quasi_presimplifiable")) {
    const bool hyp = ab == a && p.hypothesis(fa, fb, ab, ab);
    return {hyp, hyp && p.violation(fa, fb, ab, ab)};
  }
  if (!ctx.ideal && name == "quasi_local") {
    const bool hyp = p.hypothesis(fa, fb, ab, ab);
    return {hyp, hyp && raw_unit(ctx.ring, add(ctx.ring, a, b))};
  }
  if (!ctx.ideal && name == "domain") {
    const bool hyp = p.hypothesis(fa, fb, ab, ab);
    return {hyp, hyp && raw_is_zero(ctx.ring, ab)};
  }
  const bool hyp = p.hypothesis(fa, fb, ab, ab);
  return {hyp, hyp && p.violation(fa, fb, ab, ab)};
}

ScanResult scan(const Context& ctx, const std::string& name, const Predicate& p,
                const std::vector<SymElem>& box, bool parallel) {
  std::vector<ElemFacts> facts(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) facts[i] = facts_of(ctx, box[i]);

  auto row = [&](std::size_t i) {
    RowOutcome out;
    if (p.shape == Shape::Single) {
      auto [hyp, bad] = eval_pair(ctx, name, p, box[i], facts[i], box[i], facts[i]);
      out.hypotheses = hyp ? 1 : 0;
      if (bad) out.hit = i;
      return out;
    }
    if (!p.row_possible(facts[i])) return out;
    for (std::size_t j = 0; j < box.size(); ++j) {
      auto [hyp, bad] = eval_pair(ctx, name, p, box[i], facts[i], box[j], facts[j]);
      if (hyp) ++out.hypotheses;
      if (bad) {
        out.hit = j;
        break;
      }
    }
    return out;
  };

  const std::size_t n = box.size();
  std::vector<RowOutcome> rows(n);
  if (parallel) {
    std::atomic<std::size_t> best{n};
#pragma omp parallel for schedule(dynamic, 4)
    for (std::size_t i = 0; i < n; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      rows[i] = row(i);
      if (rows[i].hit) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = row(i);
      if (rows[i].hit) break;
    }
  }

  ScanResult result;
  for (std::size_t i = 0; i < n; ++i) {
    result.hypotheses += rows[i].hypotheses;
    if (rows[i].hit) {
      if (p.shape == Shape::Single) result.witness = std::make_pair(i, i);
      else result.witness = std::make_pair(i, *rows[i].hit);
      break;
    }
  }
  return result;
}

const std::vector<std::string> kIdealPredicates = {"j_ideal", "quasi_j", "n_ideal", "delta1_n",
                                                   "prime", "primary", "quasi_primary"};
const std::vector<std::string> kRingPredicates = {"presimplifiable", "quasi_presimplifiable",
                                                  "quasi_local", "semiprimitive", "reduced",
                                                  "domain"};

void require_known(const std::vector<std::string>& names, const std::string& name,
                   std::string_view kind) {
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw UnknownName("unknown symbolic " + std::string(kind) + " predicate '" + name + "'");
}

BoundedVerdict to_verdict(const std::string& predicate, const ScanResult& r,
                          const std::vector<SymElem>& box, Shape shape, int bound) {
  BoundedVerdict v;
  v.predicate = predicate;
  v.bound = bound;
  v.hypothesis_count = r.hypotheses;
  if (r.witness) {
    v.status = Status::RefutedWithWitness;
    v.witness.push_back(box[r.witness->first]);
    if (shape == Shape::Pair) v.witness.push_back(box[r.witness->second]);
  } else {
    v.status = Status::UnfalsifiedUpToBound;
  }
  return v;
}

BoundedVerdict proven(const std::string& predicate, std::string rule, std::string why) {
  BoundedVerdict v;
  v.predicate = predicate;
  v.status = Status::ProvenByRule;
  v.rule_id = std::move(rule);
  v.justification = std::move(why);
  return v;
}

BoundedVerdict refuted(const std::string& predicate, std::string rule, std::string why,
                       std::vector<SymElem> witness) {
  BoundedVerdict v;
  v.predicate = predicate;
  v.status = Status::RefutedWithWitness;
  v.rule_id = std::move(rule);
  v.justification = std::move(why);
  v.witness = std::move(witness);
  return v;
}

}  // namespace

const std::vector<std::string>& sym_ideal_predicates() { return kIdealPredicates; }
const std::vector<std::string>& sym_ring_predicates() { return kRingPredicates; }

const std::vector<std::string>& mutation_ids() {
  static const std::vector<std::string> ids = {"Z.radical", "Idl.jacobson", "Idl.j-ideal",
                                               "Local.delta1", "Idl.presimplifiable"};
  return ids;
}

// ---------------------------------------------------------------- boxes

namespace {

// 0, 1, -1, 2, -2, ...
std::int64_t zigzag(std::int64_t v) { return v > 0 ? 2 * v - 1 : -2 * v; }

}  // namespace

std::vector<SymElem> box_elements(const SymRing& ring, int bound) {
  if (bound < 1) throw InvalidArgument("search bound must be positive");
  const std::int64_t B = bound;
  std::vector<SymElem> out;
  switch (ring.family) {
    case Family::Integers:
      for (std::int64_t a = -B; a <= B; ++a) out.push_back({a, 0});
      break;
    case Family::Local:
      for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t d = 1; d <= B; ++d)
          if (d % ring.param != 0 && gcd64(a, d) == 1) out.push_back({a, d});
      break;
    case Family::Idealization:
      for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t m = 0; m < ring.param; ++m) out.push_back({a, m});
      break;
    case Family::IdealizationZ:
      for (std::int64_t a = -B; a <= B; ++a)
        for (std::int64_t m = -B; m <= B; ++m) out.push_back({a, m});
      break;
  }
  const bool local = ring.family == Family::Local;
  auto height = [local](const SymElem& x) {
    return std::max(std::llabs(x.first), local ? x.second : std::llabs(x.second));
  };
  auto second_key = [local](const SymElem& x) { return local ? x.second : zigzag(x.second); };
  std::sort(out.begin(), out.end(), [&](const SymElem& x, const SymElem& y) {
    return std::tuple(height(x), zigzag(x.first), second_key(x)) <
           std::tuple(height(y), zigzag(y.first), second_key(y));
  });
  return out;
}

std::vector<SymIdeal> candidate_ideals(const SymRing& ring) {
  std::vector<SymIdeal> out;
  switch (ring.family) {
    case Family::Integers:
      out.push_back(z_ideal(0));
      for (std::int64_t n = 2; n <= 12; ++n) out.push_back(z_ideal(n));
      break;
    case Family::Local:
      out.push_back(local_zero());
      for (std::int64_t e = 1; e <= 3; ++e) out.push_back(local_ideal(e));
      break;
    case Family::Idealization: {
      const std::int64_t k = ring.param;
      std::vector<std::int64_t> gens = {k};
      for (std::int64_t d = 1; d < k; ++d)
        if (k % d == 0) gens.push_back(d);
      for (std::int64_t a : {0, 2, 3, 4, 5, 6})
        for (std::int64_t d : gens)
          if (gcd64(a, k) % d == 0) out.push_back(idl_ideal(ring, a, d));
      break;
    }
    case Family::IdealizationZ:
      for (std::int64_t a : {0, 2, 3, 4, 5, 6})
        for (std::int64_t d = 0; d <= 6; ++d)
          if (d == 0 ? a == 0 : a % d == 0) out.push_back(idl_ideal(ring, a, d));
      break;
  }
  return out;
}

// ---------------------------------------------------------------- engine

Engine::Engine(EngineOptions options) : options_(std::move(options)) {
  if (options_.bound < 1) throw InvalidArgument("search bound must be positive");
  if (!options_.mutation.empty()) {
    const auto& ids = mutation_ids();
    if (std::find(ids.begin(), ids.end(), options_.mutation) == ids.end())
      throw UnknownName("unknown mutation '" + options_.mutation + "'");
  }
}

SymIdeal Engine::radical(const SymRing& ring, const SymIdeal& ideal) const {
  const SymIdeal I = canonical(ring, ideal);
  switch (ring.family) {
    case Family::Integers:
      if (mutated("Z.radical")) return I;
      return z_ideal(squarefree_kernel(I.gen));
    case Family::Local:
      if (I.zero) return I;
      return local_ideal(std::min<std::int64_t>(I.gen, 1));
    default: return idl_ideal(ring, squarefree_kernel(I.gen), 1);
  }
}

SymIdeal Engine::colon(const SymRing& ring, const SymIdeal& ideal, const SymElem& s) const {
  const SymIdeal I = canonical(ring, ideal);
  const SymElem x = normalize(ring, s);
  switch (ring.family) {
    case Family::Integers:
      if (x.first == 0) return z_ideal(1);
      return z_ideal(I.gen / gcd64(I.gen, x.first));
    case Family::Local: {
      if (x.first == 0) return local_ideal(0);
      if (I.zero) return I;
      const std::int64_t v = valuation(x.first, ring.param);
      return local_ideal(std::max<std::int64_t>(I.gen - v, 0));
    }
    default: break;
  }
  if (x.second != 0)
    throw InvalidArgument("colon by " + format_elem(ring, x) +
                          " is not representable in homogeneous form");
  const std::int64_t s0 = std::llabs(x.first);
  if (s0 == 0) return idl_ideal(ring, 1, 1);
  const std::int64_t a = I.gen / gcd64(I.gen, s0);
  std::int64_t d;
  if (ring.family == Family::IdealizationZ) d = I.module_gen == 0 ? 0 : I.module_gen / gcd64(I.module_gen, s0);
  else d = I.module_gen / gcd64(I.module_gen, s0);
  return idl_ideal(ring, a, d);
}

SymIdeal Engine::product(const SymRing& ring, const SymIdeal& x, const SymIdeal& y) const {
  const SymIdeal I = canonical(ring, x);
  const SymIdeal K = canonical(ring, y);
  switch (ring.family) {
    case Family::Integers: return z_ideal(I.gen * K.gen);
    case Family::Local:
      if (I.zero || K.zero) return local_zero();
      return local_ideal(I.gen + K.gen);
    default: break;
  }
  // Generated by (ab,0), (0, a d'), (0, b d).
  const std::int64_t ab = I.gen * K.gen;
  std::int64_t d = std::gcd(std::gcd(ab, I.gen * K.module_gen), K.gen * I.module_gen);
  if (ring.family == Family::Idealization) d = std::gcd(d, ring.param);
  return idl_ideal(ring, ab, d);
}

SymIdeal Engine::jacobson(const SymRing& ring) const {
  switch (ring.family) {
    case Family::Integers: return z_ideal(0);
    case Family::Local: return local_ideal(1);
    default:
      if (mutated("Idl.jacobson")) return idl_ideal(ring, 0, 0);
      return idl_ideal(ring, 0, 1);
  }
}

SymIdeal Engine::nilradical(const SymRing& ring) const {
  switch (ring.family) {
    case Family::Integers: return z_ideal(0);
    case Family::Local: return local_zero();
    default: return idl_ideal(ring, 0, 1);
  }
}

bool Engine::units_contains(const SymRing& ring, const SymElem& x) const {
  return raw_unit(ring, normalize(ring, x));
}

std::optional<BoundedVerdict> Engine::ideal_rule(const SymRing& ring, const SymIdeal& I,
                                                 const std::string& pred) const {
  const SymIdeal rad = radical(ring, I);
  switch (ring.family) {
    case Family::Integers: {
      const std::int64_t n = I.gen;
      if (pred == "j_ideal" || pred == "quasi_j" || pred == "n_ideal" || pred == "delta1_n") {
        const std::string why = "J(Z) = N(Z) = 0 in the domain Z; only <0> qualifies";
        if (n == 0) return proven(pred, "Z.semiprimitive-domain", why);
        return refuted(pred, "Z.semiprimitive-domain", why + ", n*1 lands in <n>",
                       {{n, 0}, {1, 0}});
      }
      if (pred == "prime") {
        const std::string why = "<n> is prime iff n = 0 or n is prime";
        if (n == 0 || is_prime64(n)) return proven(pred, "Z.prime", why);
        const std::int64_t q = smallest_prime_factor(n);
        return refuted(pred, "Z.prime", why, {{q, 0}, {n / q, 0}});
      }
      if (pred == "quasi_primary") {
        const std::string why = "sqrt<n> = <rad n> is prime iff n = 0 or n is a prime power";
        const std::int64_t r = rad.gen;
        if (r == 0 || is_prime64(r)) return proven(pred, "Z.quasi-primary", why);
        const std::int64_t q = smallest_prime_factor(r);
        return refuted(pred, "Z.quasi-primary", why, {{q, 0}, {r / q, 0}});
      }
      return std::nullopt;
    }
    case Family::Local: {
      const std::int64_t p = ring.param;
      if (pred == "j_ideal" || pred == "quasi_j")
        return proven(pred, "Local.quasi-local",
                      "Z_(p) is quasi-local, so every proper ideal is a J-ideal");
      if (pred == "n_ideal" || pred == "delta1_n") {
        const std::string why =
            "N(Z_(p)) = 0; p^e/q * q/r lies in <p^e> with q/r a unit, so only 0 qualifies";
        if (I.zero || (pred == "delta1_n" && mutated("Local.delta1")))
          return proven(pred, "Local.domain-nil", why);
        const auto [q, r] = two_other_primes(p);
        const std::int64_t pe = ipow(p, I.gen);
        return refuted(pred, "Local.domain-nil", why, {{pe, q}, {q, r}});
      }
      if (pred == "prime") {
        const std::string why = "the primes of Z_(p) are 0 and <p>";
        if (I.zero || I.gen == 1) return proven(pred, "Local.prime", why);
        return refuted(pred, "Local.prime", why, {{p, 1}, {ipow(p, I.gen - 1), 1}});
      }
      if (pred == "quasi_primary")
        return proven(pred, "Local.quasi-primary",
                      "every ideal of Z_(p) has radical 0 or <p>, both prime");
      return std::nullopt;
    }
    default: break;
  }

  const std::int64_t a = I.gen;
  const bool full_module = I.module_gen == 1;
  const bool zero_module = ring.family == Family::IdealizationZ ? I.module_gen == 0
                                                                : I.module_gen == ring.param;
  if (pred == "quasi_j" || pred == "delta1_n") {
    const std::string why =
        "sqrt(aZ(+)N) = sqrt(aZ)(+)M and N(R) = J(R) = 0(+)M; it qualifies iff a = 0";
    if (rad.gen == 0) return proven(pred, "Idl.radical-part", why);
    return refuted(pred, "Idl.radical-part", why, {{a, 0}, {1, 0}});
  }
  if (pred == "j_ideal" || pred == "n_ideal") {
    const std::string why =
        "J(R) = N(R) = 0(+)M; a J-ideal needs a = 0 and N closed under division by nonzero "
        "integers";
    if (a != 0) return refuted(pred, "Idl.j-ideal", why, {{a, 0}, {1, 0}});
    if (full_module || (zero_module && ring.family == Family::IdealizationZ) ||
        mutated("Idl.j-ideal"))
      return proven(pred, "Idl.j-ideal", why);
    const std::int64_t d = I.module_gen;
    return refuted(pred, "Idl.j-ideal", why, {{d, 0}, {0, 1}});
  }
  if (pred == "prime") {
    const std::string why = "aZ(+)N is prime iff N = M and aZ is prime in Z";
    if (!full_module) return refuted(pred, "Idl.prime", why, {{0, 1}, {0, 1}});
    if (a == 0 || is_prime64(a)) return proven(pred, "Idl.prime", why);
    const std::int64_t q = smallest_prime_factor(a);
    return refuted(pred, "Idl.prime", why, {{q, 0}, {a / q, 0}});
  }
  if (pred == "quasi_primary") {
    const std::string why = "sqrt(aZ(+)N) = sqrt(aZ)(+)M is prime iff a = 0 or a is a prime power";
    const std::int64_t r = rad.gen;
    if (r == 0 || is_prime64(r)) return proven(pred, "Idl.quasi-primary", why);
    const std::int64_t q = smallest_prime_factor(r);
    return refuted(pred, "Idl.quasi-primary", why, {{q, 0}, {r / q, 0}});
  }
  return std::nullopt;
}

std::optional<BoundedVerdict> Engine::ring_rule(const SymRing& ring, const std::string& pred) const {
  const bool idl = ring.is_idealization();
  if (pred == "quasi_presimplifiable")
    return proven(pred, "Ring.nz-in-j", "every zero-divisor that is not nilpotent lies in J(R)");
  if (pred == "presimplifiable") {
    const std::string why = "Z(R) is contained in J(R) unless Z_k torsion gives (0,1) = (0,1)(1+k,1)";
    if (ring.family == Family::Idealization && !mutated("Idl.presimplifiable"))
      return refuted(pred, "Ring.zero-divisors", why, {{0, 1}, {1 + ring.param, 1}});
    return proven(pred, "Ring.zero-divisors", why);
  }
  if (pred == "quasi_local") {
    const std::string why = "Z_(p) has the single maximal ideal <p>; 3 + (-2) = 1 elsewhere";
    if (ring.family == Family::Local) return proven(pred, "Ring.maximal-ideals", why);
    if (idl) return refuted(pred, "Ring.maximal-ideals", why, {{3, 0}, {-2, 0}});
    return refuted(pred, "Ring.maximal-ideals", why, {{3, 0}, {-2, 0}});
  }
  if (pred == "semiprimitive") {
    const std::string why = "J(Z) = 0; J(Z_(p)) = <p>; J(Z(+)M) = 0(+)M";
    if (ring.family == Family::Integers) return proven(pred, "Ring.jacobson", why);
    if (ring.family == Family::Local) return refuted(pred, "Ring.jacobson", why, {{ring.param, 1}});
    return refuted(pred, "Ring.jacobson", why, {{0, 1}});
  }
  if (pred == "reduced" || pred == "domain") {
    const std::string why = "Z and Z_(p) are domains; (0,1)^2 = 0 in an idealization";
    if (!idl) return proven(pred, "Ring.domain", why);
    if (pred == "reduced") return refuted(pred, "Ring.domain", why, {{0, 1}});
    return refuted(pred, "Ring.domain", why, {{0, 1}, {0, 1}});
  }
  return std::nullopt;
}

BoundedVerdict Engine::classify(const SymRing& ring, const SymIdeal& ideal,
                                const std::string& predicate) const {
  require_known(kIdealPredicates, predicate, "ideal");
  const SymIdeal I = canonical(ring, ideal);
  if (!is_proper(ring, I)) throw InvalidArgument(format_ideal(ring, I) + " is not proper");
  if (auto v = ideal_rule(ring, I, predicate)) {
    if (ring.family == Family::Local && v->status == Status::RefutedWithWitness)
      for (auto& w : v->witness) w = normalize(ring, w);
    return *v;
  }
  return search(ring, I, predicate, options_.bound);
}

BoundedVerdict Engine::ring_classify(const SymRing& ring, const std::string& predicate) const {
  require_known(kRingPredicates, predicate, "ring");
  if (auto v = ring_rule(ring, predicate)) {
    for (auto& w : v->witness) w = normalize(ring, w);
    return *v;
  }
  return ring_search(ring, predicate, options_.bound);
}

BoundedVerdict Engine::search(const SymRing& ring, const SymIdeal& ideal,
                              const std::string& predicate, int bound) const {
  require_known(kIdealPredicates, predicate, "ideal");
  const SymIdeal I = canonical(ring, ideal);
  if (!is_proper(ring, I)) throw InvalidArgument(format_ideal(ring, I) + " is not proper");
  const Context ctx{ring, &I};
  const Predicate p = ideal_predicate_spec(ctx, predicate);
  const auto box = box_elements(ring, bound);
  return to_verdict(predicate, scan(ctx, predicate, p, box, true), box, p.shape, bound);
}

BoundedVerdict Engine::search_serial(const SymRing& ring, const SymIdeal& ideal,
                                     const std::string& predicate, int bound) const {
  require_known(kIdealPredicates, predicate, "ideal");
  const SymIdeal I = canonical(ring, ideal);
  if (!is_proper(ring, I)) throw InvalidArgument(format_ideal(ring, I) + " is not proper");
  const Context ctx{ring, &I};
  const Predicate p = ideal_predicate_spec(ctx, predicate);
  const auto box = box_elements(ring, bound);
  return to_verdict(predicate, scan(ctx, predicate, p, box, false), box, p.shape, bound);
}

BoundedVerdict Engine::ring_search(const SymRing& ring, const std::string& predicate,
                                   int bound) const {
  require_known(kRingPredicates, predicate, "ring");
  const Context ctx{ring, nullptr};
  const Predicate p = ring_predicate_spec(ctx, predicate);
  const auto box = box_elements(ring, bound);
  return to_verdict(predicate, scan(ctx, predicate, p, box, true), box, p.shape, bound);
}

bool Engine::witness_refutes(const SymRing& ring, const SymIdeal& ideal,
                             const std::string& predicate,
                             const std::vector<SymElem>& witness) const {
  require_known(kIdealPredicates, predicate, "ideal");
  if (witness.size() != 2) return false;
  const SymIdeal I = canonical(ring, ideal);
  const Context ctx{ring, &I};
  const Predicate p = ideal_predicate_spec(ctx, predicate);
  const SymElem a = normalize(ring, witness[0]);
  const SymElem b = normalize(ring, witness[1]);
  return eval_pair(ctx, predicate, p, a, facts_of(ctx, a), b, facts_of(ctx, b)).second;
}

bool Engine::ring_witness_refutes(const SymRing& ring, const std::string& predicate,
                                  const std::vector<SymElem>& witness) const {
  require_known(kRingPredicates, predicate, "ring");
  const Context ctx{ring, nullptr};
  const Predicate p = ring_predicate_spec(ctx, predicate);
  const std::size_t arity = p.shape == Shape::Pair ? 2 : 1;
  if (witness.size() != arity) return false;
  const SymElem a = normalize(ring, witness[0]);
  const SymElem b = normalize(ring, witness[arity - 1]);
  return eval_pair(ctx, predicate, p, a, facts_of(ctx, a), b, facts_of(ctx, b)).second;
}

// ---------------------------------------------------------------- replay

bool WitnessReplay::passed() const {
  return !steps.empty() &&
         std::all_of(steps.begin(), steps.end(), [](const ReplayStep& s) { return s.ok; });
}

const std::vector<std::string>& example_ids() {
  static const std::vector<std::string> ids = {"example2", "example_exp", "example_edelta",
                                               "colon_example", "product_counterexample"};
  return ids;
}

namespace {

class Transcript {
 public:
  explicit Transcript(std::string id) { replay_.id = std::move(id); }

  void step(std::string description, bool ok) {
    replay_.steps.push_back({std::move(description), ok});
  }

  // Runs a step whose evaluation may throw; a throw fails the step.
  template <class F>
  void guarded(std::string description, F&& f) {
    bool ok = false;
    try {
      ok = f();
    } catch (const std::exception& e) {
      description += " (error: " + std::string(e.what()) + ")";
    }
    step(std::move(description), ok);
  }

  WitnessReplay take() { return std::move(replay_); }

 private:
  WitnessReplay replay_;
};

bool refuted_with(const BoundedVerdict& v, const std::vector<SymElem>& expected) {
  return v.status == Status::RefutedWithWitness && v.witness == expected;
}

WitnessReplay replay_example2(const Engine& E) {
  Transcript t("example2");
  const SymRing R = SymRing::idealization_z();
  const SymIdeal I = idl_ideal(R, 0, 2);
  const SymIdeal full = idl_ideal(R, 0, 1);
  t.guarded("J(Z(+)Z) = J(Z)(+)Z = 0(+)Z", [&] { return E.jacobson(R) == full; });
  t.guarded("sqrt(0(+)2Z) = sqrt(0)(+)Z = 0(+)Z", [&] { return E.radical(R, I) == full; });
  t.guarded("0(+)Z = J(R) is a J-ideal",
            [&] { return E.classify(R, full, "j_ideal").status == Status::ProvenByRule; });
  t.guarded("0(+)2Z is a quasi J-ideal", [&] { return E.classify(R, I, "quasi_j").holds(); });
  const SymElem a{2, 0}, b{0, 1};
  t.guarded("(2,0)*(0,1) = (0,2)", [&] { return mul(R, a, b) == SymElem{0, 2}; });
  t.guarded("(0,2) in 0(+)2Z", [&] { return contains(R, I, {0, 2}); });
  t.guarded("(2,0) not in J(R)", [&] { return !contains(R, E.jacobson(R), a); });
  t.guarded("(0,1) not in 0(+)2Z", [&] { return !contains(R, I, b); });
  t.guarded("0(+)2Z is not a J-ideal, witness ((2,0),(0,1))", [&] {
    const auto v = E.classify(R, I, "j_ideal");
    return refuted_with(v, {a, b}) && E.witness_refutes(R, I, "j_ideal", v.witness);
  });
  return t.take();
}

WitnessReplay replay_example_exp(const Engine& E) {
  Transcript t("example_exp");
  const SymRing R = SymRing::idealization(2);
  const SymElem a{0, 1}, b{3, 1};
  t.guarded("N(Z(+)Z2) = N(Z)(+)Z2 = 0(+)Z2",
            [&] { return E.nilradical(R) == idl_ideal(R, 0, 1); });
  t.guarded("U(Z(+)Z2) = U(Z)(+)Z2: (1,1) and (-1,0) are units, (3,1) is not", [&] {
    return E.units_contains(R, {1, 1}) && E.units_contains(R, {-1, 0}) && !E.units_contains(R, b);
  });
  t.guarded("Z(+)Z2 is quasi presimplifiable",
            [&] { return E.ring_classify(R, "quasi_presimplifiable").holds(); });
  t.guarded("(0,1)*(3,1) = (0,1)", [&] { return mul(R, a, b) == a; });
  t.guarded("(0,1) and (3,1) are nonzero and not units", [&] {
    return a != SymElem{0, 0} && b != SymElem{0, 0} && !E.units_contains(R, a) &&
           !E.units_contains(R, b);
  });
  t.guarded("Z(+)Z2 is not presimplifiable, witness ((0,1),(3,1))", [&] {
    const auto v = E.ring_classify(R, "presimplifiable");
    return refuted_with(v, {a, b}) && E.ring_witness_refutes(R, "presimplifiable", v.witness);
  });
  return t.take();
}

WitnessReplay replay_example_edelta(const Engine& E) {
  Transcript t("example_edelta");
  const SymRing R = SymRing::local(2);
  const SymIdeal I = local_ideal(1);
  const SymElem a{2, 3}, b{3, 5};
  t.guarded("Z(2) is quasi-local",
            [&] { return E.ring_classify(R, "quasi_local").status == Status::ProvenByRule; });
  t.guarded("J(Z(2)) = <2> and N(Z(2)) = 0",
            [&] { return E.jacobson(R) == I && E.nilradical(R) == local_zero(); });
  t.guarded("<2> is a quasi J-ideal", [&] { return E.classify(R, I, "quasi_j").holds(); });
  t.guarded("2/3 * 3/5 = 6/15 = 2/5", [&] {
    return mul(R, a, b) == normalize(R, {6, 15}) && mul(R, a, b) == SymElem{2, 5};
  });
  t.guarded("2/5 in <2>", [&] { return contains(R, I, {2, 5}); });
  t.guarded("2/3 not in N(Z(2))", [&] { return !contains(R, E.nilradical(R), a); });
  t.guarded("3/5 not in sqrt<2> = <2>",
            [&] { return E.radical(R, I) == I && !contains(R, E.radical(R, I), b); });
  t.guarded("<2> is not a delta1-n-ideal, witness (2/3, 3/5)", [&] {
    const auto v = E.classify(R, I, "delta1_n");
    return refuted_with(v, {a, b}) && E.witness_refutes(R, I, "delta1_n", v.witness);
  });
  return t.take();
}

WitnessReplay replay_colon(const Engine& E) {
  Transcript t("colon_example");
  const SymRing R = SymRing::integers();
  const SymIdeal I = z_ideal(12);
  const SymElem s{2, 0};
  t.guarded("(<12> : 2) = <6>", [&] { return E.colon(R, I, s) == z_ideal(6); });
  t.guarded("sqrt(<12> : 2) = sqrt<6> = <6>",
            [&] { return E.radical(R, E.colon(R, I, s)) == z_ideal(6); });
  t.guarded("sqrt<12> = <6>", [&] { return E.radical(R, I) == z_ideal(6); });
  t.guarded("(sqrt<12> : 2) = <3>", [&] { return E.colon(R, E.radical(R, I), s) == z_ideal(3); });
  t.guarded("<6> != <3>: the inclusion sqrt(I:S) in (sqrt I:S) is strict", [&] {
    return E.radical(R, E.colon(R, I, s)) != E.colon(R, E.radical(R, I), s);
  });
  t.guarded("<12> is not a quasi J-ideal of Z",
            [&] { return !E.classify(R, I, "quasi_j").holds(); });
  return t.take();
}

WitnessReplay replay_product(const Engine& E) {
  Transcript t("product_counterexample");
  const SymRing R = SymRing::idealization(2);
  const SymIdeal I = idl_ideal(R, 0, 1);
  const SymIdeal zero = idl_ideal(R, 0, 0);
  const SymElem a{2, 0}, b{0, 1};
  t.guarded("0(+)Z2 is a J-ideal", [&] { return E.classify(R, I, "j_ideal").holds(); });
  t.guarded("(0(+)Z2)(0(+)Z2) = 0(+)0", [&] { return E.product(R, I, I) == zero; });
  t.guarded("(2,0)*(0,1) = (0,0)", [&] { return mul(R, a, b) == SymElem{0, 0}; });
  t.guarded("(2,0) not in J(Z)(+)Z2 = J(Z(+)Z2)",
            [&] { return E.jacobson(R) == I && !contains(R, E.jacobson(R), a); });
  t.guarded("(0,1) != (0,0)", [&] { return !contains(R, zero, b); });
  t.guarded("0(+)0 is not a J-ideal, witness ((2,0),(0,1))", [&] {
    const auto v = E.classify(R, zero, "j_ideal");
    return refuted_with(v, {a, b}) && E.witness_refutes(R, zero, "j_ideal", v.witness);
  });
  return t.take();
}

}  // namespace

WitnessReplay replay_example(const std::string& id, const Engine& engine) {
  if (id == "example2") return replay_example2(engine);
  if (id == "example_exp") return replay_example_exp(engine);
  if (id == "example_edelta") return replay_example_edelta(engine);
  if (id == "colon_example") return replay_colon(engine);
  if (id == "product_counterexample") return replay_product(engine);
  throw UnknownName("unknown example '" + id + "'");
}

bool check_example_witness(const std::string& id, const Engine& engine) {
  return replay_example(id, engine).passed();
}

}  // namespace qjlab::zsym
