#include "richwords/json_io.hpp"

namespace richwords {

using nlohmann::json;

json to_json(const RichnessCertificate& cert, const Alphabet& alphabet) {
  json spans = json::array();
  for (const auto& p : cert.per_prefix) spans.push_back({p.lps_start, p.lps_end});
  return json{{"word", alphabet.format(cert.word)},
              {"rich", cert.rich},
              {"first_failure", cert.first_failure ? json(*cert.first_failure) : json(nullptr)},
              {"lps_per_prefix", std::move(spans)}};
}

json to_json(const ExtensionTrace& trace, const Alphabet& alphabet) {
  json branch = json::array();
  if (trace.branch_witness) {
    branch.push_back(std::string(1, alphabet.symbol(trace.branch_witness->first)));
    branch.push_back(std::string(1, alphabet.symbol(trace.branch_witness->second)));
  }
  return json{{"base", alphabet.format(trace.base)},
              {"omega", trace.omega ? json(*trace.omega) : json(nullptr)},
              {"path", alphabet.format(trace.path())},
              {"branch_letters", std::move(branch)}};
}

json to_json(const ConstructionReport& report, const ConstructionVerdicts& verdicts) {
  return json{{"n", report.n},
              {"q", report.alphabet.size()},
              {"g_len", report.g_n.size()},
              {"h_len", report.h_n.size()},
              {"hbar_len", report.h_bar.size()},
              {"bound", report.bound},
              {"rich", verdicts.rich},
              {"unique_extension", verdicts.unique_extension},
              {"bound_ok", verdicts.bound_ok},
              {"ratio", verdicts.ratio}};
}

json to_json(const PhiResult& result) {
  return json{{"n", result.n},
              {"q", result.q},
              {"phi", result.phi},
              {"witnesses", result.witnesses},
              {"enumerated", result.enumerated},
              {"wall_time_s", result.wall_time_s}};
}

PhiResult phi_result_from_json(const json& j) {
  PhiResult r;
  r.n = j.at("n").get<std::size_t>();
  r.q = j.at("q").get<std::size_t>();
  r.phi = j.at("phi").get<std::size_t>();
  r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
  r.enumerated = j.at("enumerated").get<std::size_t>();
  r.wall_time_s = j.at("wall_time_s").get<double>();
  return r;
}

}  // namespace richwords
