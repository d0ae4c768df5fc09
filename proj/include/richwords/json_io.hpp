#pragma once

// JSON shapes shared by the CLI and the result cache.

#include "json.hpp"
#include "richwords/construction.hpp"
#include "richwords/extension.hpp"
#include "richwords/phi_search.hpp"
#include "richwords/richness.hpp"

namespace richwords {

/// {"word","rich","first_failure","lps_per_prefix":[[s,e],...]}
nlohmann::json to_json(const RichnessCertificate& cert, const Alphabet& alphabet);

/// {"base","omega","path","branch_letters"}; omega is null past the budget.
nlohmann::json to_json(const ExtensionTrace& trace, const Alphabet& alphabet);

/// {"n","q","g_len","h_len","hbar_len","bound","rich","unique_extension","bound_ok","ratio"}
nlohmann::json to_json(const ConstructionReport& report, const ConstructionVerdicts& verdicts);

/// {"n","q","phi","witnesses","enumerated","wall_time_s"}
nlohmann::json to_json(const PhiResult& result);
PhiResult phi_result_from_json(const nlohmann::json& j);

}  // namespace richwords
