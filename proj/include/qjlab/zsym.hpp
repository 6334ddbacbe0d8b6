#pragma once

// Symbolic backend for four infinite families: the integers Z, the local
// rings Z_(p), and the idealizations Z(+)Z_k and Z(+)Z. Ideals are kept in
// canonical form; predicates are decided by a closed set of named rules and
// fall back to exhaustive search over a coordinate box when no rule applies.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qjlab::zsym {

enum class Family { Integers, Local, Idealization, IdealizationZ };

/// Z, Z_(p) (param = p), Z(+)Z_k (param = k), or Z(+)Z.
struct SymRing {
  Family family = Family::Integers;
  std::int64_t param = 0;

  static SymRing integers() { return {Family::Integers, 0}; }
  static SymRing local(std::int64_t p);
  static SymRing idealization(std::int64_t k);
  static SymRing idealization_z() { return {Family::IdealizationZ, 0}; }

  bool is_idealization() const {
    return family == Family::Idealization || family == Family::IdealizationZ;
  }
  /// "Z", "Z(2)", "Z(+)Z2", "Z(+)Z"
  std::string name() const;

  friend bool operator==(const SymRing&, const SymRing&) = default;
};

/// Accepts "Z", "Z(p)", "Z(+)Zk", "ZplusZk", "Z(+)Z", "ZplusZ".
SymRing parse_sym_ring(std::string_view text);

/// Element of a symbolic ring.
///   Z:            value = first
///   Z_(p):        first / second, reduced, second > 0 and prime to p
///   idealization: the pair (first, second); second reduced mod k for Z(+)Z_k
struct SymElem {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend bool operator==(const SymElem&, const SymElem&) = default;
};

/// Canonical ideal.
///   Z:            <gen>, gen >= 0
///   Z_(p):        <p^gen>, gen >= 0, or the zero ideal when zero is set
///   idealization: gen·Z (+) N with N generated by module_gen. For Z(+)Z_k
///                 module_gen is a divisor of k (k itself is the zero
///                 submodule); for Z(+)Z it is >= 0 (0 is the zero submodule).
struct SymIdeal {
  std::int64_t gen = 0;
  std::int64_t module_gen = 0;
  bool zero = false;

  friend bool operator==(const SymIdeal&, const SymIdeal&) = default;
};

SymIdeal z_ideal(std::int64_t n);
SymIdeal local_ideal(std::int64_t exponent);
SymIdeal local_zero();
/// Validates a·M ⊆ N and canonicalizes.
SymIdeal idl_ideal(const SymRing& ring, std::int64_t a, std::int64_t module_gen);

/// Canonical form of any ideal; throws InvalidArgument on a non-representable one.
SymIdeal canonical(const SymRing& ring, const SymIdeal& ideal);
SymElem normalize(const SymRing& ring, SymElem x);

bool is_proper(const SymRing& ring, const SymIdeal& ideal);
bool contains(const SymRing& ring, const SymIdeal& ideal, const SymElem& x);
SymElem add(const SymRing& ring, const SymElem& x, const SymElem& y);
SymElem mul(const SymRing& ring, const SymElem& x, const SymElem& y);

std::string format_elem(const SymRing& ring, const SymElem& x);
std::string format_ideal(const SymRing& ring, const SymIdeal& ideal);
/// Z: "12" or "<12>". Z_(p): "0", "p^e" or "<p^e>". Idealizations: "a,dZ", "a,d", "0,Z", "0,0".
SymIdeal parse_sym_ideal(const SymRing& ring, std::string_view text);
/// "5", "2/3", "(a,m)"
SymElem parse_sym_elem(const SymRing& ring, std::string_view text);

enum class Status { ProvenByRule, RefutedWithWitness, UnfalsifiedUpToBound };
std::string_view status_name(Status s);

struct BoundedVerdict {
  std::string predicate;
  Status status = Status::UnfalsifiedUpToBound;
  std::string rule_id;        // set when a rule decided the verdict
  std::string justification;  // one line, set with rule_id
  int bound = 0;              // set when the verdict came from search
  std::vector<SymElem> witness;
  std::size_t hypothesis_count = 0;  // search only

  bool holds() const { return status != Status::RefutedWithWitness; }
};

/// Rule ids that a mutation run may corrupt.
const std::vector<std::string>& mutation_ids();

struct EngineOptions {
  int bound = 50;
  /// Empty, or one of mutation_ids(): deliberately corrupts that rule.
  std::string mutation;
};

/// Names accepted by Engine::classify and Engine::ring_classify.
const std::vector<std::string>& sym_ideal_predicates();
const std::vector<std::string>& sym_ring_predicates();

class Engine {
 public:
  explicit Engine(EngineOptions options = {});

  const EngineOptions& options() const { return options_; }

  SymIdeal radical(const SymRing& ring, const SymIdeal& ideal) const;
  /// (I : s). Idealizations support s = (s0, 0) only; other elements throw
  /// InvalidArgument since the colon need not be homogeneous.
  SymIdeal colon(const SymRing& ring, const SymIdeal& ideal, const SymElem& s) const;
  SymIdeal product(const SymRing& ring, const SymIdeal& a, const SymIdeal& b) const;
  SymIdeal jacobson(const SymRing& ring) const;
  SymIdeal nilradical(const SymRing& ring) const;
  bool units_contains(const SymRing& ring, const SymElem& x) const;

  /// Rules first, bounded search otherwise. I must be proper.
  BoundedVerdict classify(const SymRing& ring, const SymIdeal& ideal,
                          const std::string& predicate) const;
  BoundedVerdict ring_classify(const SymRing& ring, const std::string& predicate) const;

  /// Bounded search only (OpenMP over the first coordinate).
  BoundedVerdict search(const SymRing& ring, const SymIdeal& ideal, const std::string& predicate,
                        int bound) const;
  BoundedVerdict ring_search(const SymRing& ring, const std::string& predicate, int bound) const;
  /// Serial reference for search; identical results.
  BoundedVerdict search_serial(const SymRing& ring, const SymIdeal& ideal,
                               const std::string& predicate, int bound) const;

  /// Re-checks a refuting witness against the raw predicate.
  bool witness_refutes(const SymRing& ring, const SymIdeal& ideal, const std::string& predicate,
                       const std::vector<SymElem>& witness) const;
  bool ring_witness_refutes(const SymRing& ring, const std::string& predicate,
                            const std::vector<SymElem>& witness) const;

 private:
  bool mutated(std::string_view id) const { return options_.mutation == id; }
  std::optional<BoundedVerdict> ideal_rule(const SymRing& ring, const SymIdeal& ideal,
                                           const std::string& predicate) const;
  std::optional<BoundedVerdict> ring_rule(const SymRing& ring,
                                          const std::string& predicate) const;

  EngineOptions options_;
};

/// Elements of the coordinate box |coords| <= bound, ordered by height and
/// then by 0, 1, -1, 2, -2, ... on each coordinate.
std::vector<SymElem> box_elements(const SymRing& ring, int bound);

/// Candidate ideals used by sweeps: small generators in canonical order.
std::vector<SymIdeal> candidate_ideals(const SymRing& ring);

// Replay of the worked examples.
struct ReplayStep {
  std::string description;
  bool ok = false;
};

struct WitnessReplay {
  std::string id;
  std::vector<ReplayStep> steps;
  bool passed() const;
};

/// example2, example_exp, example_edelta, colon_example, product_counterexample
const std::vector<std::string>& example_ids();
/// Throws UnknownName for an unregistered id.
WitnessReplay replay_example(const std::string& id, const Engine& engine);
bool check_example_witness(const std::string& id, const Engine& engine = Engine());

// Integer helpers shared with tests.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Product of the distinct prime factors; rad(0) = 0, rad(1) = 1.
std::int64_t squarefree_kernel(std::int64_t n);
bool is_prime64(std::int64_t n);

}  // namespace qjlab::zsym
