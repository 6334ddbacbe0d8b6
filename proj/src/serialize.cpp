#include "qjlab/serialize.hpp"

#include <algorithm>

#include "qjlab/errors.hpp"

namespace qjlab::serialize {

using finring::IdealSet;
using finring::RingRef;
using finring::RingTable;

json ring_record(const RingTable& ring) {
  const auto add = ring.add_table();
  const auto mul = ring.mul_table();
  return json{{"label", ring.label()},
              {"order", ring.order()},
              {"zero", ring.zero()},
              {"one", ring.one()},
              {"add", std::vector<Elem>(add.begin(), add.end())},
              {"mul", std::vector<Elem>(mul.begin(), mul.end())},
              {"names", ring.names()}};
}

RingRef ring_from_record(const json& record) {
  try {
    return RingTable::create(record.at("order").get<std::size_t>(),
                             record.at("add").get<std::vector<Elem>>(),
                             record.at("mul").get<std::vector<Elem>>(),
                             record.at("zero").get<Elem>(), record.at("one").get<Elem>(),
                             record.at("label").get<std::string>(),
                             record.value("names", std::vector<std::string>{}));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ring record: ") + e.what());
  }
}

json ideal_record(const IdealSet& ideal) {
  return json{{"ring", ideal.table().label()},
              {"members", ideal.members()},
              {"generators", finring::describe(ideal)}};
}

IdealSet ideal_from_record(const json& record, const RingRef& ring) {
  try {
    if (record.at("ring").get<std::string>() != ring->label()) throw RingMismatch();
    ElemBits bits;
    for (auto e : record.at("members").get<std::vector<Elem>>()) {
      if (e >= ring->order()) throw ParseError("ideal member out of range");
      bits.set(e);
    }
    return IdealSet::checked(ring, bits);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ideal record: ") + e.what());
  }
}

json verdict_record(const classify::Verdict& verdict, const RingTable& ring,
                    const IdealSet* ideal) {
  std::vector<std::string> witness;
  for (auto e : verdict.witness) witness.push_back(ring.name(e));
  return json{{"predicate", verdict.predicate},
              {"ring", ring.label()},
              {"ideal", ideal ? json(finring::describe(*ideal)) : json(nullptr)},
              {"holds", verdict.holds},
              {"witness", witness},
              {"witness_kind", verdict.witness_kind},
              {"vacuous", verdict.vacuous},
              {"hypothesis_count", verdict.hypothesis_count}};
}

classify::Verdict verdict_from_record(const json& record, const RingTable& ring) {
  try {
    classify::Verdict v;
    v.predicate = record.at("predicate").get<std::string>();
    v.holds = record.at("holds").get<bool>();
    v.witness_kind = record.at("witness_kind").get<std::string>();
    v.vacuous = record.at("vacuous").get<bool>();
    v.hypothesis_count = record.at("hypothesis_count").get<std::size_t>();
    const auto& names = ring.names();
    for (const auto& w : record.at("witness").get<std::vector<std::string>>()) {
      auto it = std::find(names.begin(), names.end(), w);
      if (it == names.end()) throw ParseError("unknown witness element '" + w + "'");
      v.witness.push_back(static_cast<Elem>(it - names.begin()));
    }
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad verdict record: ") + e.what());
  }
}

json sym_verdict_record(const zsym::BoundedVerdict& verdict, const zsym::SymRing& ring,
                        const std::optional<zsym::SymIdeal>& ideal) {
  std::vector<std::string> witness;
  for (const auto& w : verdict.witness) witness.push_back(zsym::format_elem(ring, w));
  json out{{"predicate", verdict.predicate},
           {"ring", ring.name()},
           {"ideal", ideal ? json(zsym::format_ideal(ring, *ideal)) : json(nullptr)},
           {"status", std::string(zsym::status_name(verdict.status))},
           {"holds", verdict.holds()},
           {"witness", witness}};
  if (verdict.rule_id.empty()) {
    out["bound"] = verdict.bound;
    out["hypothesis_count"] = verdict.hypothesis_count;
  } else {
    out["rule_id"] = verdict.rule_id;
    out["justification"] = verdict.justification;
  }
  return out;
}

zsym::BoundedVerdict sym_verdict_from_record(const json& record, const zsym::SymRing& ring) {
  try {
    zsym::BoundedVerdict v;
    v.predicate = record.at("predicate").get<std::string>();
    const auto status = record.at("status").get<std::string>();
    if (status == "proven_by_rule") v.status = zsym::Status::ProvenByRule;
    else if (status == "refuted_with_witness") v.status = zsym::Status::RefutedWithWitness;
    else if (status == "unfalsified_up_to_bound") v.status = zsym::Status::UnfalsifiedUpToBound;
    else throw ParseError("unknown status '" + status + "'");
    v.rule_id = record.value("rule_id", std::string());
    v.justification = record.value("justification", std::string());
    v.bound = record.value("bound", 0);
    v.hypothesis_count = record.value("hypothesis_count", std::size_t{0});
    for (const auto& w : record.at("witness").get<std::vector<std::string>>())
      v.witness.push_back(zsym::parse_sym_elem(ring, w));
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad symbolic verdict record: ") + e.what());
  }
}

}  // namespace qjlab::serialize
