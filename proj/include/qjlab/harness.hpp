#pragma once

// Theorem registry and catalog runner. Each registered check evaluates a
// claim on every catalog member it applies to and records instance counts
// and any failures; the report serializes deterministically.

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <tuple>
#include <string>
#include <vector>

#include "qjlab/construct.hpp"
#include "qjlab/zsym.hpp"

namespace qjlab::harness {

/// Families and bounds for build_catalog. A missing family is disabled;
/// default_recipe() enables all of them.
struct Recipe {
  struct Range {
    int min = 2;
    int max = 0;
  };
  std::optional<Range> zmod;
  std::optional<int> products_max;       // Z_a x Z_b, 2 <= a, b <= max
  std::vector<unsigned> poly_primes;      // monic quadratics over F_p
  std::optional<int> idealizations_max;   // Z_n (+) M, n <= max
  bool idealization_quotients = false;    // R/I for each idealization R
  std::optional<int> localize_zmod_max;   // single-generator S^-1 Z_n
  std::optional<int> localize_products_max;
  std::vector<std::string> rings;         // extra construction expressions
  std::vector<std::string> symbolic;      // symbolic ring names
};

Recipe default_recipe();
/// JSON recipe text; throws ParseError.
Recipe parse_recipe(const std::string& text);
std::string recipe_json(const Recipe& recipe);

struct CatalogEntry {
  finring::RingRef ring;
  /// zmod, product, poly, idealization, quotient, localization, expression
  std::string family;
  std::optional<construct::Idealization> idealization;
};

struct Catalog {
  std::vector<CatalogEntry> rings;
  std::vector<zsym::SymRing> symbolic;
};

/// Throws CapExceeded / InvalidArgument / ParseError for bad recipes.
Catalog build_catalog(const Recipe& recipe);

enum class Scope { PerRing, PerIdeal, PerIdealPair, PerHom, Symbolic };
std::string_view scope_name(Scope scope);

struct Failure {
  std::string ring;
  std::string detail;
  friend bool operator<(const Failure& a, const Failure& b) {
    return std::tie(a.ring, a.detail) < std::tie(b.ring, b.detail);
  }
  friend bool operator==(const Failure&, const Failure&) = default;
};

/// Counts for one check. An instance is one evaluation (a ring, an ideal,
/// a pair, ...); it is "satisfied" when the check's hypothesis holds and
/// "vacuous" otherwise.
struct Tally {
  std::size_t instances = 0;
  std::size_t satisfied = 0;
  std::vector<Failure> failures;

  void record(bool hypothesis) {
    ++instances;
    if (hypothesis) ++satisfied;
  }
  void fail(std::string ring, std::string detail) {
    failures.push_back({std::move(ring), std::move(detail)});
  }
  void merge(const Tally& other);
};

struct RunOptions {
  /// Bound for symbolic searches inside checks.
  int symbolic_bound = 12;
};

class RingContext;

struct TheoremCheck {
  std::string id;
  std::string summary;
  Scope scope = Scope::PerRing;
  /// Finite checks; unset for symbolic ones.
  std::function<void(const RingContext&, Tally&)> finite;
  std::function<void(const zsym::SymRing&, const zsym::Engine&, Tally&)> symbolic;
};

const std::vector<TheoremCheck>& registry();
/// Checks left out on purpose, with the reason.
const std::vector<std::pair<std::string, std::string>>& out_of_scope();
/// Throws UnknownName for an id not in the registry.
std::vector<std::string> resolve_ids(const std::vector<std::string>& ids);

struct CheckResult {
  std::string id;
  std::string summary;
  Scope scope = Scope::PerRing;
  Tally tally;
  std::size_t vacuous() const { return tally.instances - tally.satisfied; }
};

struct Report {
  std::size_t finite_rings = 0;
  std::size_t symbolic_rings = 0;
  std::vector<CheckResult> results;
  /// Not serialized, so reports stay byte-identical between runs.
  double wall_seconds = 0;

  std::size_t failure_count() const;
  bool ok() const { return failure_count() == 0; }
  const CheckResult* find(const std::string& id) const;
};

/// Parallel over catalog members. `ids` empty means the whole registry.
Report run(const Catalog& catalog, const std::vector<std::string>& ids = {},
           const RunOptions& options = {});
/// Serial reference for run; identical reports.
Report run_serial(const Catalog& catalog, const std::vector<std::string>& ids = {},
                  const RunOptions& options = {});

std::string report_json(const Report& report);
std::string report_text(const Report& report);

// Negative-space search.
struct Found {
  std::string ring;
  std::string ideal;  // empty for ring-level properties
  std::string detail;
};

enum class Part { Finite, Symbolic };

/// quasiJ_not_J, quasi_presimpl_not_presimpl, nil_ne_jac, quasiJ_not_quasi_local
const std::vector<std::string>& property_ids();
/// First counterexample in catalog order; throws UnknownName.
std::optional<Found> search_counterexample(const std::string& property, const Catalog& catalog,
                                           Part part, const zsym::Engine& engine = zsym::Engine());

struct ReplayReport {
  std::vector<zsym::WitnessReplay> replays;
  std::size_t passed() const;
  bool ok() const { return passed() == replays.size(); }
};

/// Replays every id; throws InvalidArgument when `ids` is empty.
ReplayReport replay_examples(const zsym::Engine& engine,
                             const std::vector<std::string>& ids = zsym::example_ids());

}  // namespace qjlab::harness
