#pragma once

#include <json.hpp>

#include "ramsey3/analysis.hpp"
#include "ramsey3/bounds.hpp"
#include "ramsey3/classifier.hpp"
#include "ramsey3/colorings.hpp"
#include "ramsey3/hypergraph.hpp"

namespace ramsey3 {

nlohmann::json to_json(const Hypergraph3& g);
nlohmann::json to_json(const ColorLabel& label);
nlohmann::json to_json(const Partition3& parts);
nlohmann::json to_json(const OrderedPartition& blocks);

// Nested {kind, witness, children} certificate tree; null for an empty
// certificate.
nlohmann::json cert_json(const CertPtr& cert);

// {regime, min_ell (null when infinite), bounds_note, flags, certificate}.
nlohmann::json verdict_json(const Verdict& verdict);

nlohmann::json mono_json(const MonoCopy& copy);
nlohmann::json audit_json(const AuditReport& report);
nlohmann::json arrows_json(const ArrowsResult& result);

}  // namespace ramsey3
