#include "qjlab/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qjlab/classify.hpp"
#include "qjlab/errors.hpp"
#include "qjlab/expr.hpp"
#include "qjlab/harness.hpp"
#include "qjlab/serialize.hpp"

namespace qjlab::cli {

namespace {

using finring::IdealSet;
using finring::RingRef;
using nlohmann::json;

enum class Format { Table, Record };

struct Options {
  Format format = Format::Table;
  int bound = 50;
  std::string recipe;
  std::vector<std::string> only;
  bool all = false;
  bool sym = false;
  std::string mutate;
  std::string expr;
  std::vector<std::string> rest;
};

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

const char* yes(bool b) { return b ? "true" : "false"; }

std::string witness_names(const finring::RingTable& R, const std::vector<Elem>& w) {
  std::vector<std::string> names;
  for (auto x : w) names.push_back(R.name(x));
  return names.empty() ? "-" : "(" + join(names, ", ") + ")";
}

std::string sym_witness(const zsym::SymRing& R, const std::vector<zsym::SymElem>& w) {
  std::vector<std::string> names;
  for (const auto& x : w) names.push_back(zsym::format_elem(R, x));
  return names.empty() ? "-" : "(" + join(names, ", ") + ")";
}

zsym::Engine engine_for(const Options& o) {
  if (!o.mutate.empty()) {
    const auto& ids = zsym::mutation_ids();
    if (std::find(ids.begin(), ids.end(), o.mutate) == ids.end())
      throw UnknownName("unknown mutation '" + o.mutate + "'");
  }
  if (o.bound < 1) throw InvalidArgument("--bound must be positive");
  return zsym::Engine(zsym::EngineOptions{o.bound, o.mutate});
}

harness::Recipe recipe_for(const Options& o) {
  if (o.recipe.empty()) return harness::default_recipe();
  std::ifstream in(o.recipe);
  if (!in) throw ParseError("cannot read recipe '" + o.recipe + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return harness::parse_recipe(ss.str());
}

// ---------------------------------------------------------------- info

int cmd_info(const Options& o, std::ostream& out) {
  const auto e = construct::parse_expression(o.expr);
  if (e.ideal) throw ParseError("info takes a ring expression");
  const auto& R = *e.ring;
  const auto& inv = R.invariants();
  const auto N = finring::nilradical(e.ring);
  const auto J = finring::jacobson(e.ring);
  std::vector<std::string> maximal;
  for (const auto& M : finring::maximal_ideals(e.ring)) maximal.push_back(finring::describe(M));
  std::optional<bool> idl_j;
  if (e.idealization) {
    const auto& idl = *e.idealization;
    idl_j = construct::ideal_in_idealization(idl, finring::jacobson(idl.base),
                                             construct::full_submodule(idl.module)) == J;
  }
  if (o.format == Format::Record) {
    json j{{"kind", "ring"},
           {"label", R.label()},
           {"order", R.order()},
           {"units", finring::describe(R, inv.units)},
           {"nilradical", finring::describe(N)},
           {"jacobson", finring::describe(J)},
           {"zero_divisors", finring::describe(R, inv.zero_divisors)},
           {"not_quasi_regular", finring::describe(R, inv.not_quasi_regular)},
           {"maximal", maximal}};
    json flags = json::object();
    for (const auto& p : classify::ring_predicate_names())
      flags[p] = classify::ring_predicate(p, e.ring).holds;
    j["flags"] = flags;
    if (idl_j) j["jacobson_is_J_base_plus_M"] = *idl_j;
    out << j.dump() << "\n";
    return kOk;
  }
  out << "ring   " << R.label() << "\n";
  out << "order  " << R.order() << "\n";
  out << "U      " << finring::describe(R, inv.units) << "\n";
  out << "N      " << finring::describe(N) << "\n";
  out << "J      " << finring::describe(J) << "\n";
  if (idl_j) out << "J = J(R)(+)M: " << yes(*idl_j) << "\n";
  out << "Z      " << finring::describe(R, inv.zero_divisors) << "\n";
  out << "NZ     " << finring::describe(R, inv.not_quasi_regular) << "\n";
  out << "max    " << join(maximal) << "\n";
  for (const auto& p : classify::ring_predicate_names())
    out << std::left << std::setw(22) << p << yes(classify::ring_predicate(p, e.ring).holds) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- classify

int cmd_classify_sym(const Options& o, std::ostream& out) {
  const auto R = zsym::parse_sym_ring(o.expr);
  const auto I = zsym::parse_sym_ideal(R, join(o.rest));
  if (!zsym::is_proper(R, I)) throw InvalidArgument("ideal is not proper");
  const auto E = engine_for(o);
  for (const auto& p : zsym::sym_ideal_predicates()) {
    const auto v = E.classify(R, I, p);
    if (o.format == Format::Record) {
      out << serialize::sym_verdict_record(v, R, I).dump() << "\n";
      continue;
    }
    out << std::left << std::setw(15) << p << std::setw(7) << yes(v.holds()) << std::setw(26)
        << zsym::status_name(v.status)
        << (v.rule_id.empty() ? "B=" + std::to_string(v.bound) : v.rule_id) << "  "
        << sym_witness(R, v.witness) << "\n";
  }
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  if (o.sym) return cmd_classify_sym(o, out);
  const auto e = construct::parse_expression(o.expr);
  if (e.ideal) throw ParseError("classify takes the ring and the generators separately");
  const auto I = construct::parse_ideal(e.ring, join(o.rest));
  if (!I.is_proper()) throw InvalidArgument("ideal " + finring::describe(I) + " is not proper");
  for (const auto& p : classify::ideal_predicate_names()) {
    const auto v = classify::ideal_predicate(p, I);
    if (o.format == Format::Record) {
      out << serialize::verdict_record(v, *e.ring, &I).dump() << "\n";
      continue;
    }
    out << std::left << std::setw(15) << p << std::setw(7) << yes(v.holds)
        << witness_names(*e.ring, v.witness) << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- ideals

int cmd_ideals(const Options& o, std::ostream& out) {
  static const std::vector<std::string> cols = {"prime", "maximal", "j_ideal", "quasi_j", "n_ideal"};
  if (o.sym) {
    const auto R = zsym::parse_sym_ring(o.expr);
    const auto E = engine_for(o);
    for (const auto& I : zsym::candidate_ideals(R)) {
      json row{{"ideal", zsym::format_ideal(R, I)}};
      for (const auto& p : {"prime", "j_ideal", "quasi_j"}) row[p] = E.classify(R, I, p).holds();
      if (o.format == Format::Record) {
        out << row.dump() << "\n";
      } else {
        out << std::left << std::setw(12) << zsym::format_ideal(R, I);
        for (const auto& p : {"prime", "j_ideal", "quasi_j"})
          out << " " << p << "=" << (row[p].get<bool>() ? "T" : "F");
        out << "\n";
      }
    }
    return kOk;
  }
  const auto ring = construct::parse_ring(o.expr);
  for (const auto& I : finring::enumerate_ideals(ring)) {
    if (o.format == Format::Record) {
      json row = serialize::ideal_record(I);
      row["proper"] = I.is_proper();
      if (I.is_proper())
        for (const auto& p : cols) row[p] = classify::ideal_predicate(p, I).holds;
      out << row.dump() << "\n";
      continue;
    }
    out << std::left << std::setw(20) << finring::describe(I) << " |I|=" << std::setw(4) << I.size();
    if (!I.is_proper()) {
      out << " (whole ring)\n";
      continue;
    }
    for (const auto& p : cols) out << " " << p << "=" << (classify::ideal_predicate(p, I).holds ? "T" : "F");
    out << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- verify / search / example

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.all && !o.only.empty()) throw InvalidArgument("--all and --only are exclusive");
  const auto ids = harness::resolve_ids(o.only);
  const auto catalog = harness::build_catalog(recipe_for(o));
  harness::RunOptions ro;
  ro.symbolic_bound = std::min(o.bound, ro.symbolic_bound);
  const auto report = harness::run(catalog, ids, ro);
  out << (o.format == Format::Record ? harness::report_json(report) + "\n" : harness::report_text(report));
  return report.ok() ? kOk : kFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto catalog = harness::build_catalog(recipe_for(o));
  const auto part = o.sym ? harness::Part::Symbolic : harness::Part::Finite;
  const auto found = harness::search_counterexample(o.expr, catalog, part, engine_for(o));
  if (o.format == Format::Record) {
    json j{{"property", o.expr}, {"part", o.sym ? "symbolic" : "finite"}, {"found", nullptr}};
    if (found) j["found"] = {{"ring", found->ring}, {"ideal", found->ideal}, {"detail", found->detail}};
    out << j.dump() << "\n";
  } else if (found) {
    out << "found " << found->ring << (found->ideal.empty() ? "" : " " + found->ideal) << " "
        << found->detail << "\n";
  } else {
    out << "none\n";
  }
  return kOk;
}

int cmd_example(const Options& o, std::ostream& out) {
  std::vector<std::string> ids;
  if (o.all) ids = zsym::example_ids();
  else if (!o.expr.empty()) ids = {o.expr};
  else throw InvalidArgument("example needs an id or --all");
  const auto report = harness::replay_examples(engine_for(o), ids);
  for (const auto& r : report.replays) {
    if (o.format == Format::Record) {
      json steps = json::array();
      for (const auto& s : r.steps) steps.push_back({{"step", s.description}, {"ok", s.ok}});
      out << json{{"id", r.id}, {"steps", steps}, {"passed", r.passed()}}.dump() << "\n";
      continue;
    }
    out << "== " << r.id << "\n";
    for (const auto& s : r.steps) out << (s.ok ? "  ok    " : "  FAIL  ") << s.description << "\n";
    out << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.ok() ? kOk : kFailed;
}

void apply_thread_env() {
  if (const char* t = std::getenv("QJLAB_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(t, &end, 10);
    if (end != t && *end == '\0' && n > 0) omp_set_num_threads(static_cast<int>(n));
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  apply_thread_env();
  Options o;
  CLI::App app{"qjlab: quasi J-ideals in finite and symbolic commutative rings"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "table or record")
      ->check(CLI::IsMember({"table", "record"}))
      ->capture_default_str();

  auto* info = app.add_subcommand("info", "summarize a ring");
  info->add_option("expr", o.expr, "construction expression")->required();

  auto* cls = app.add_subcommand("classify", "evaluate every predicate on an ideal");
  cls->add_option("expr", o.expr, "construction expression or symbolic ring")->required();
  cls->add_option("gens", o.rest, "ideal generators")->required();
  cls->add_flag("--sym", o.sym, "symbolic ring (Z, Z(p), ZplusZ, ZplusZk)");
  cls->add_option("--bound", o.bound, "search bound for symbolic fallbacks");
  cls->add_option("--mutate", o.mutate, "corrupt one decision rule");

  auto* ids = app.add_subcommand("ideals", "list ideals with their main flags");
  ids->add_option("expr", o.expr, "construction expression or symbolic ring")->required();
  ids->add_flag("--sym", o.sym, "symbolic ring");
  ids->add_option("--bound", o.bound, "search bound");

  auto* ver = app.add_subcommand("verify", "run the theorem suite");
  ver->add_flag("--all", o.all, "every registered check (default)");
  ver->add_option("--only", o.only, "comma-separated check ids")->delimiter(',');
  ver->add_option("--recipe", o.recipe, "catalog recipe (JSON)");
  ver->add_option("--bound", o.bound, "symbolic search bound (capped at 12)");

  auto* sea = app.add_subcommand("search", "first counterexample to a property");
  sea->add_option("property", o.expr, join(harness::property_ids(), ", "))->required();
  sea->add_flag("--sym", o.sym, "search the symbolic catalog");
  sea->add_option("--recipe", o.recipe, "catalog recipe (JSON)");
  sea->add_option("--bound", o.bound, "search bound");

  auto* ex = app.add_subcommand("example", "replay a registered example");
  ex->add_option("id", o.expr, join(zsym::example_ids(), ", "));
  ex->add_flag("--all", o.all, "replay every example");
  ex->add_option("--mutate", o.mutate, "corrupt one decision rule");

  for (auto* sub : {info, cls, ids, ver, sea, ex})
    sub->add_option("--format", format, "table or record")->check(CLI::IsMember({"table", "record"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  o.format = format == "record" ? Format::Record : Format::Table;

  try {
    if (*info) return cmd_info(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*ids) return cmd_ideals(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*sea) return cmd_search(o, out);
    if (*ex) return cmd_example(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace qjlab::cli
