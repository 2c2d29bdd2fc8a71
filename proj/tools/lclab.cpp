// Command-line front end: session checking, invariant tables, perturbation
// experiments, and the built-in depth-drop example preset.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "lclab/report.hpp"
#include "lclab/session.hpp"

using namespace lclab;

namespace {

int loadSession(const std::string& path, ParseResult& out) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    out = parseSession(ss.str());
    if (!out.ok()) {
        for (const Diagnostic& d : out.diagnostics)
            std::cerr << path << ":" << d.line << ":" << d.col << ": error: "
                      << d.message << "\n";
        return 1;
    }
    if (!out.ast.ring) {
        std::cerr << path << ":1:1: error: ring not declared\n";
        return 1;
    }
    return 0;
}

void emit(const Json& j, const std::string& outPath, bool withTimestamp) {
    Json doc = j;
    if (withTimestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        doc["timestamp"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(now).count();
    }
    std::string text = canonicalDump(doc);
    if (outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(outPath);
        os << text;
    }
}

long long param(const SessionCommand& c, const std::string& key, long long dflt) {
    auto it = c.params.find(key);
    return it == c.params.end() ? dflt : it->second;
}

int cmdInvariants(const ParseResult& pr, const std::string& outPath,
                  bool withTimestamp) {
    const Ring& R = *pr.ast.ring;
    std::vector<std::pair<std::string, const std::vector<Polynomial>*>> targets;
    for (const SessionCommand& c : pr.ast.commands)
        if (c.verb == "invariants") targets.push_back({c.target, pr.ast.findIdeal(c.target)});
    if (targets.empty())
        for (const auto& [name, gens] : pr.ast.ideals) targets.push_back({name, &gens});

    Json ideals;
    for (const auto& [name, gens] : targets) {
        CohomologyAnalysis a(R, *gens);
        InvariantTable t = invariantTable(a, defaultP(a), {1, 2});
        ideals[name] = toJson(R, t);
    }
    emit(Json{{"ideals", ideals}}, outPath, withTimestamp);
    return 0;
}

int cmdPerturb(const ParseResult& pr, const std::string& outPath, bool withTimestamp,
               long long seedOverride, long long trialsOverride) {
    const Ring& R = *pr.ast.ring;
    Json experiments = Json::array();
    bool anyViolation = false;
    bool ranAny = false;
    for (const SessionCommand& c : pr.ast.commands) {
        if (c.verb != "perturb") continue;
        ranAny = true;
        const std::vector<Polynomial>* gens = pr.ast.findIdeal(c.target);
        CohomologyAnalysis a(R, *gens);

        TrialOptions opt;
        opt.p = static_cast<int>(param(c, "p", defaultP(a)));
        opt.equidimensional = param(c, "equidim", 0) != 0;

        PerturbationSpec spec;
        spec.name = c.target;
        spec.base = *gens;
        spec.level = static_cast<int32_t>(param(c, "N", estimateN(a, opt.p)));
        spec.degreeCap = static_cast<int32_t>(param(c, "D", spec.level + 2));
        spec.trials = static_cast<int>(
            trialsOverride >= 0 ? trialsOverride : param(c, "trials", 20));
        spec.seed = static_cast<uint64_t>(
            seedOverride >= 0 ? seedOverride : param(c, "seed", 0));
        spec.sparsity = static_cast<int>(param(c, "sparsity", 3));
        opt.level = spec.level;

        ExperimentReport rep = runExperiment(R, spec, opt);
        if (rep.violationCount > 0) anyViolation = true;
        experiments.push_back(toJson(R, rep, withTimestamp));
    }
    if (!ranAny) {
        std::cerr << "error: session has no 'cmd perturb' entries\n";
        return 1;
    }
    emit(Json{{"experiments", experiments}}, outPath, withTimestamp);
    return anyViolation ? 2 : 0;
}

int cmdPaperExample(int N, const std::string& outPath, bool withTimestamp) {
    Ring R(32003, {"x", "y", "z"});
    std::vector<Polynomial> I = {parsePolynomial(R, "x^2"), parsePolynomial(R, "y")};
    std::vector<Polynomial> J = {parsePolynomial(R, "x^2"), parsePolynomial(R, "x*y"),
                                 parsePolynomial(R, "y - z^" + std::to_string(N))};

    CohomologyAnalysis aI(R, I);
    TrialOptions opt;
    opt.p = 0;
    opt.level = N;
    opt.equidimensional = true;
    TrialResult tr = runTrial(R, aI, J, opt, "adversarial-paper-example");

    FreeModule amb{1, {}};
    ModuleOrder O{&R, amb, -1};
    Polynomial witness = parsePolynomial(R, "x*z^" + std::to_string(N));
    StandardBasis starJ = stdBasis(R, O, initialModuleStar(R, amb, idealToVecs(J)));
    StandardBasis starI = stdBasis(R, O, initialModuleStar(R, amb, idealToVecs(I)));
    bool inJstar = isMemberIdeal(R, witness, starJ);
    bool inIstar = isMemberIdeal(R, witness, starI);

    StandardBasis BJ = stdBasisIdeal(R, J);
    Polynomial x = parsePolynomial(R, "x");
    bool xInJ = isMemberIdeal(R, x, BJ);
    bool xmInJ = true;
    ModuleOrder Oring{&R, FreeModule{1, {}}, -1};
    for (const Monomial& m : monomialsOfDegree(R, N)) {
        Polynomial f = mulTermP(R, R.field().one(), m, x);
        if (!isMemberIdeal(R, f, BJ)) {
            xmInJ = false;
            break;
        }
    }

    CohomologyAnalysis aJ(R, J);
    std::optional<long long> h0 = aJ.lcLength(0);

    std::cout << "paper example at N=" << N << "\n";
    std::cout << "  congruent mod m^" << N << ": " << (tr.congruent ? "yes" : "no")
              << "\n";
    std::cout << "  same Hilbert function: " << (tr.hfGate ? "yes" : "no") << "\n";
    std::cout << "  x*z^" << N << " in star(J): " << (inJstar ? "yes" : "no")
              << ", in star(I): " << (inIstar ? "yes" : "no") << "\n";
    std::cout << "  depth(R/I) = " << tr.tableI.depthV
              << ", depth(R/J) = " << tr.tableJ.depthV << "\n";
    std::cout << "  len H^0(R/J) = " << (h0 ? std::to_string(*h0) : "inf")
              << "  (witness: x not in J: " << (xInJ ? "no" : "yes")
              << ", x*m^N in J: " << (xmInJ ? "yes" : "no") << ")\n";

    Json j;
    j["N"] = N;
    j["trial"] = toJson(R, tr);
    j["witness"] = Json{{"monomial", polyToString(R, witness)},
                        {"in_star_J", inJstar},
                        {"in_star_I", inIstar},
                        {"x_in_J", xInJ},
                        {"x_m_N_in_J", xmInJ},
                        {"h0_length", toJson(h0)}};
    emit(j, outPath, withTimestamp);
    (void)Oring;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local cohomology perturbation lab"};
    app.require_subcommand(1);

    std::string file, outPath;
    bool noTimestamp = false;
    long long seedOverride = -1, trialsOverride = -1;
    int exampleN = 5;

    CLI::App* check = app.add_subcommand("check", "parse a session file");
    check->add_option("file", file)->required();

    CLI::App* inv = app.add_subcommand("invariants", "per-ideal invariant tables");
    inv->add_option("file", file)->required();
    inv->add_option("--out", outPath);
    inv->add_flag("--no-timestamp", noTimestamp);

    CLI::App* pert = app.add_subcommand("perturb", "run perturbation experiments");
    pert->add_option("file", file)->required();
    pert->add_option("--out", outPath);
    pert->add_option("--seed", seedOverride);
    pert->add_option("--trials", trialsOverride);
    pert->add_flag("--no-timestamp", noTimestamp);

    CLI::App* pex = app.add_subcommand("paper-example", "depth-drop example preset");
    pex->add_option("N", exampleN)->check(CLI::Range(3, 40));
    pex->add_option("--out", outPath);
    pex->add_flag("--no-timestamp", noTimestamp);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed() || inv->parsed() || pert->parsed()) {
            ParseResult pr;
            int rc = loadSession(file, pr);
            if (rc) return rc;
            if (check->parsed()) return 0;
            if (inv->parsed()) return cmdInvariants(pr, outPath, !noTimestamp);
            return cmdPerturb(pr, outPath, !noTimestamp, seedOverride, trialsOverride);
        }
        return cmdPaperExample(exampleN, outPath, !noTimestamp);
    } catch (const EngineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
