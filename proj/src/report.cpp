#include "lclab/report.hpp"

namespace lclab {

Json toJson(std::optional<long long> v) {
    if (!v) return "inf";
    return *v;
}

Json toJson(const Ring& R, const std::vector<Polynomial>& gens) {
    Json a = Json::array();
    for (const Polynomial& g : gens) a.push_back(polyToString(R, g));
    return a;
}

static Json optIntToJson(std::optional<int> v) {
    if (!v) return "inf";
    return *v;
}

Json toJson(const Ring& R, const InvariantTable& t) {
    Json j;
    j["dim"] = t.dim;
    j["depth"] = t.depthV;
    j["cm"] = t.cm;
    j["gcm"] = t.gcm;
    j["f"] = optIntToJson(t.f);
    j["betti"] = t.betti;
    j["hf_prefix"] = t.hf.prefix(std::max<int32_t>(8, t.hf.stabilizationDegree()));
    j["hf_numerator"] = t.hf.numerator();
    Json lens = Json::array(), ells = Json::array(), anns = Json::array();
    for (const auto& l : t.lengths) lens.push_back(toJson(l));
    for (const auto& e : t.ells) ells.push_back(toJson(e));
    for (const auto& a : t.anns) anns.push_back(toJson(R, a));
    j["lengths"] = lens;
    j["ells"] = ells;
    j["ann"] = anns;
    Json serre;
    for (const auto& [n, ok] : t.serre) serre[std::to_string(n)] = ok;
    j["serre"] = serre;
    return j;
}

Json toJson(const Ring& R, const TrialResult& t) {
    Json j;
    j["label"] = t.label;
    j["J"] = toJson(R, t.jgens);
    j["congruent"] = t.congruent;
    j["hf_gate"] = t.hfGate;
    j["depth"] = Json{{"I", t.tableI.depthV}, {"J", t.tableJ.depthV}};
    j["table_I"] = toJson(R, t.tableI);
    j["table_J"] = toJson(R, t.tableJ);
    Json verdicts;
    for (const auto& [k, v] : t.verdicts) verdicts[k] = verdictName(v);
    j["verdicts"] = verdicts;
    return j;
}

Json toJson(const Ring& R, const ExperimentReport& rep, bool withTiming) {
    Json j;
    Json spec;
    spec["name"] = rep.spec.name;
    spec["base"] = toJson(R, rep.spec.base);
    spec["N"] = rep.spec.level;
    spec["D"] = rep.spec.degreeCap;
    spec["trials"] = rep.spec.trials;
    spec["seed"] = rep.spec.seed;
    spec["sparsity"] = rep.spec.sparsity;
    j["spec"] = spec;
    Json opt;
    opt["p"] = rep.options.p;
    opt["equidimensional"] = rep.options.equidimensional;
    opt["serre"] = rep.options.serreNs;
    j["options"] = opt;
    Json trials = Json::array();
    for (const TrialResult& t : rep.trials) trials.push_back(toJson(R, t));
    j["trials"] = trials;
    j["aggregate"] = Json{{"gate_pass", rep.gatePassCount},
                          {"gate_fail", rep.gateFailCount},
                          {"violations", rep.violationCount}};
    j["engine"] = rep.engineVersion;
    if (withTiming) j["wall_clock_ms"] = rep.wallMs;
    return j;
}

std::string canonicalDump(const Json& j) {
    return j.dump(2) + "\n";
}

}  // namespace lclab
