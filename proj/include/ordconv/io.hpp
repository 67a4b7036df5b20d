#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "ordconv/extremality.hpp"
#include "ordconv/harness.hpp"
#include "ordconv/points.hpp"
#include "ordconv/representation.hpp"

namespace ordconv {

/// {"labels":[...], "leq_pairs":[[i,j],...]}; loading closes the relation
/// reflexively and transitively.
nlohmann::json qoset_to_json(const Qoset& q);
Qoset qoset_from_json(const nlohmann::json& j);

nlohmann::json op_to_json(const PreclosureOp& op);
/// Rebuilds an operator from its descriptor; builtins and order convolutions
/// need the carrier qoset.
PreclosureOp op_from_json(const nlohmann::json& j, const std::optional<Qoset>& base);

/// Hasse diagram of the condensation, one node per ~-class.
std::string to_dot(const Qoset& q);

nlohmann::json point_report_to_json(const Qoset& q, const PointReport& r);
nlohmann::json extremality_to_json(const Qoset& q, const ExtremalityReport& r);
nlohmann::json rep_witness_to_json(const Qoset& q, const RepWitness& r);
nlohmann::json rep3_to_json(const Qoset& q, const RepresentationResult& r);
nlohmann::json factor_to_json(const FactorResult& r);
nlohmann::json laws_to_json(const std::vector<LawReport>& reports);

std::string subset_to_string(const Qoset& q, Subset a);

}  // namespace ordconv
