#include "lclab/perturb.hpp"

#include <algorithm>
#include <chrono>

namespace lclab {

Monomial unrankMonomial(int nvars, int32_t deg, long long index) {
    Monomial m = Monomial::one(nvars);
    int32_t left = deg;
    for (int v = 0; v < nvars - 1; ++v) {
        for (int32_t k = left; k >= 0; --k) {
            long long block = countMonomials(nvars - v - 1, left - k);
            if (index < block) {
                m.e[v] = k;
                left -= k;
                break;
            }
            index -= block;
        }
    }
    m.e[nvars - 1] = left;
    m.deg = deg;
    return m;
}

Monomial randomMonomial(const Ring& R, Rng& rng, int32_t degLo, int32_t degHi) {
    int32_t deg = degLo + static_cast<int32_t>(rng.below(degHi - degLo + 1));
    long long total = countMonomials(R.nvars(), deg);
    return unrankMonomial(R.nvars(), deg, static_cast<long long>(rng.below(total)));
}

Polynomial randomEpsilon(const Ring& R, Rng& rng, int32_t degLo, int32_t degHi,
                         int terms) {
    std::vector<PTerm> acc;
    for (int t = 0; t < terms; ++t) {
        Monomial m = randomMonomial(R, rng, degLo, degHi);
        Fp c = R.field().make(static_cast<long long>(rng.below(R.field().modulus())));
        acc.push_back({m, c});
    }
    return normalizePoly(R, std::move(acc));
}

std::vector<Polynomial> genPerturbation(const Ring& R, const PerturbationSpec& spec,
                                        uint64_t trial) {
    spec.validate();
    Rng rng = Rng::forTrial(spec.seed, trial);
    std::vector<Polynomial> J;
    J.reserve(spec.base.size());
    for (const Polynomial& f : spec.base) {
        Polynomial eps =
            randomEpsilon(R, rng, spec.level, spec.degreeCap, spec.sparsity);
        J.push_back(addP(R, f, eps));
    }
    return J;
}

std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::Violation: return "VIOLATION";
    }
    return "?";
}

InvariantTable invariantTable(CohomologyAnalysis& a, int p,
                              const std::vector<int>& serreNs) {
    InvariantTable T;
    T.hf = a.hf();
    T.dim = a.dimRI();
    T.depthV = a.depth();
    T.cm = a.isCohenMacaulay();
    T.gcm = a.isGeneralizedCM();
    T.f = a.fInvariant();
    T.betti = a.resolution().ranks;
    for (int i = 0; i <= a.dimRI(); ++i) {
        T.lengths.push_back(a.lcLength(i));
        T.ells.push_back(a.ell(i));
        T.anns.push_back(a.lcAnnihilator(i));
    }
    for (int n : serreNs) T.serre[n] = a.serreCondition(n);
    bool finiteUpToP = true;
    for (int i = 0; i <= p && finiteUpToP; ++i)
        if (i >= static_cast<int>(T.lengths.size()) || !T.lengths[i]) finiteUpToP = false;
    if (finiteUpToP && p >= 0) T.fp = a.fingerprint(p);
    return T;
}

TrialResult runTrial(const Ring& R, CohomologyAnalysis& aI,
                     const std::vector<Polynomial>& J, const TrialOptions& opt,
                     const std::string& label) {
    TrialResult res;
    res.label = label;
    res.jgens = J;
    res.congruent = congruentModPower(R, aI.gens(), J, opt.level);
    res.hfGate = hfEqual(R, aI.gens(), J);

    CohomologyAnalysis aJ(R, J);
    res.tableI = invariantTable(aI, opt.p, opt.serreNs);
    res.tableJ = invariantTable(aJ, opt.p, opt.serreNs);

    const bool gate = res.congruent && res.hfGate;
    auto verdict = [&](bool applicable, bool ok) {
        if (!gate || !applicable) return Verdict::Vacuous;
        return ok ? Verdict::Holds : Verdict::Violation;
    };
    const InvariantTable& TI = res.tableI;
    const InvariantTable& TJ = res.tableJ;

    // length comparison: >= where H^i(R/I) is finite, = where H^{i-1} also is
    bool ineqApplicable = false, ineqOk = true;
    bool eqApplicable = false, eqOk = true;
    bool annApplicable = false, annOk = true;
    for (int i = 0; i <= TI.dim && i < static_cast<int>(TI.lengths.size()); ++i) {
        if (!TI.lengths[i]) continue;
        ineqApplicable = true;
        std::optional<long long> lj =
            i < static_cast<int>(TJ.lengths.size()) ? TJ.lengths[i] : std::nullopt;
        if (!lj || *TI.lengths[i] < *lj) ineqOk = false;
        bool prevFinite = (i == 0) || (TI.lengths[i - 1].has_value());
        if (prevFinite) {
            eqApplicable = annApplicable = true;
            if (!lj || *TI.lengths[i] != *lj) eqOk = false;
            if (gate) {
                bool same = i < static_cast<int>(TJ.anns.size()) &&
                            sameIdeal(R, TI.anns[i], TJ.anns[i]);
                if (!same) annOk = false;
            }
        }
    }
    res.verdicts["length_ineq"] = verdict(ineqApplicable, ineqOk);
    res.verdicts["length_eq"] = verdict(eqApplicable, eqOk);
    res.verdicts["ann_eq"] = verdict(annApplicable, annOk);

    bool fpApplicable = TI.fp.has_value();
    bool fpOk = fpApplicable && TJ.fp.has_value() &&
                (!gate || fingerprintEqual(R, *TI.fp, *TJ.fp));
    res.verdicts["fingerprint"] = verdict(fpApplicable, fpOk);

    res.verdicts["depth_eq"] = verdict(true, TI.depthV == TJ.depthV);
    res.verdicts["cm_preserved"] = verdict(TI.cm, TJ.cm);
    res.verdicts["gcm_preserved"] = verdict(TI.gcm, TJ.gcm);
    // f-invariant transfer, nullopt meaning +infinity
    bool fOk = !TI.f ? !TJ.f : (!TJ.f || *TI.f <= *TJ.f);
    res.verdicts["f_ineq"] = verdict(true, fOk);

    for (int n : opt.serreNs) {
        std::string key = "serre_" + std::to_string(n);
        bool applicable = opt.equidimensional && TI.serre.count(n) && TI.serre.at(n);
        bool ok = applicable && TJ.serre.count(n) && TJ.serre.at(n);
        res.verdicts[key] = verdict(applicable, ok);
    }
    return res;
}

int32_t estimateN(CohomologyAnalysis& a, int p) {
    const Ring& R = a.ring();
    long long maxEll = 0;
    for (int i = 0; i <= p; ++i) {
        std::optional<long long> e = a.ell(i);
        if (!e) throw PreconditionError("estimateN needs finite ell up to p");
        maxEll = std::max(maxEll, *e);
    }
    const FreeComplex& C = a.resolution();
    const DualComplex& D = a.dual();
    int32_t arIm = 0, arImDual = 0, arKerDual = 0;
    for (int j = 1; j <= C.length(); ++j) {
        arIm = std::max(arIm, artinRees(R, FreeModule{C.ranks[j - 1], {}},
                                        C.maps[j - 1].cols));
        arImDual = std::max(arImDual, artinRees(R, FreeModule{D.ranks[j], {}},
                                                D.maps[j - 1].cols));
        arKerDual = std::max(arKerDual, artinRees(R, FreeModule{D.ranks[j - 1], {}},
                                                  a.kernelGens(j - 1)));
    }
    return static_cast<int32_t>(1 + maxEll + arIm + arImDual + arKerDual);
}

int defaultP(const CohomologyAnalysis& a) {
    return std::max(0, a.dimRI() - 1);
}

ExperimentReport runExperiment(
    const Ring& R, const PerturbationSpec& spec, const TrialOptions& opt,
    const std::vector<std::pair<std::string, std::vector<Polynomial>>>& injections) {
    spec.validate();
    auto t0 = std::chrono::steady_clock::now();
    ExperimentReport rep;
    rep.spec = spec;
    rep.options = opt;
    rep.engineVersion = kEngineVersion;

    CohomologyAnalysis aI(R, spec.base);
    for (int t = 0; t < spec.trials; ++t) {
        std::vector<Polynomial> J = genPerturbation(R, spec, t);
        rep.trials.push_back(runTrial(R, aI, J, opt, "random-" + std::to_string(t)));
    }
    for (const auto& [label, J] : injections)
        rep.trials.push_back(runTrial(R, aI, J, opt, label));

    for (const TrialResult& tr : rep.trials) {
        if (tr.congruent && tr.hfGate)
            ++rep.gatePassCount;
        else
            ++rep.gateFailCount;
        if (tr.anyViolation()) ++rep.violationCount;
    }
    rep.wallMs = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

bool isFilterRegularSequence(const Ring& R, const std::vector<Polynomial>& fs) {
    if (fs.empty()) throw PreconditionError("empty sequence");
    FreeModule amb{1, {}};
    ModuleOrder O{&R, amb, -1};
    std::vector<Polynomial> prev;
    for (const Polynomial& f : fs) {
        std::vector<Polynomial> colon =
            colonIdeal(R, amb, idealToVecs(prev), {polyToVec(f, 1, 0)});
        // ((prev) : f)/(prev) must be m-torsion: its initial-module Hilbert
        // function has to be eventually zero
        StandardBasis Bp = stdBasisIdeal(R, prev);
        StandardBasis Bc = stdBasisIdeal(R, colon);
        HilbertData smPrev = hilbertFunction(R, leadingModule(R, O, Bp));
        HilbertData smColon = hilbertFunction(R, leadingModule(R, O, Bc));
        if (!(smPrev - smColon).finiteLength()) return false;
        prev.push_back(f);
    }
    return true;
}

}  // namespace lclab
