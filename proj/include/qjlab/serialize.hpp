#pragma once

// Canonical JSON records. Objects use sorted keys and compact dumps, so the
// same value always serializes to the same bytes.

#include <optional>

#include "json.hpp"

#include "qjlab/classify.hpp"
#include "qjlab/zsym.hpp"

namespace qjlab::serialize {

using nlohmann::json;

json ring_record(const finring::RingTable& ring);
/// Rebuilds (and re-validates) a ring from ring_record output.
finring::RingRef ring_from_record(const json& record);

json ideal_record(const finring::IdealSet& ideal);
finring::IdealSet ideal_from_record(const json& record, const finring::RingRef& ring);

/// {predicate, ring, ideal, holds, witness, witness_kind, vacuous, hypothesis_count}.
/// `ideal` is null for ring predicates; witnesses are element names.
json verdict_record(const classify::Verdict& verdict, const finring::RingTable& ring,
                    const finring::IdealSet* ideal = nullptr);
classify::Verdict verdict_from_record(const json& record, const finring::RingTable& ring);

json sym_verdict_record(const zsym::BoundedVerdict& verdict, const zsym::SymRing& ring,
                        const std::optional<zsym::SymIdeal>& ideal);
zsym::BoundedVerdict sym_verdict_from_record(const json& record, const zsym::SymRing& ring);

}  // namespace qjlab::serialize
