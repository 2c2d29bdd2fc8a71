#ifndef LCLAB_REPORT_HPP
#define LCLAB_REPORT_HPP

#include <json.hpp>

#include "lclab/perturb.hpp"

namespace lclab {

using Json = nlohmann::json;

// Canonical serialization: nlohmann objects keep keys sorted, integers stay
// integers and INFINITE is encoded as the string "inf".

Json toJson(std::optional<long long> v);
Json toJson(const Ring& R, const std::vector<Polynomial>& gens);
Json toJson(const Ring& R, const InvariantTable& t);
Json toJson(const Ring& R, const TrialResult& t);
Json toJson(const Ring& R, const ExperimentReport& rep, bool withTiming);

std::string canonicalDump(const Json& j);

}  // namespace lclab

#endif
