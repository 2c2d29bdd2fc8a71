#ifndef LCLAB_PERTURB_HPP
#define LCLAB_PERTURB_HPP

#include <cstdint>
#include <map>
#include <string>

#include "lclab/cohomology.hpp"

namespace lclab {

// Deterministic 64-bit generator (splitmix64); the experiment stream is a
// pure function of (seed, trial), independent of scheduling.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t s) : state(s) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    static Rng forTrial(uint64_t seed, uint64_t trial) {
        return Rng(seed ^ (0x9e3779b97f4a7c15ULL * (trial + 1)));
    }
};

Monomial unrankMonomial(int nvars, int32_t deg, long long index);
Monomial randomMonomial(const Ring& R, Rng& rng, int32_t degLo, int32_t degHi);
Polynomial randomEpsilon(const Ring& R, Rng& rng, int32_t degLo, int32_t degHi,
                         int terms);

struct PerturbationSpec {
    std::string name;
    std::vector<Polynomial> base;  // generators of I
    int32_t level = 1;             // N: epsilons live in m^N
    int32_t degreeCap = 1;         // D: epsilon support degrees in [N, D]
    int trials = 1;
    uint64_t seed = 0;
    int sparsity = 3;  // terms per epsilon

    void validate() const {
        if (level < 1 || degreeCap < level || trials < 1 || sparsity < 1)
            throw PreconditionError("invalid perturbation spec");
    }
};

// J = (f_i + eps_i) with deterministic random eps_i supported in degrees
// [N, D]; congruent to I at level N by construction.
std::vector<Polynomial> genPerturbation(const Ring& R, const PerturbationSpec& spec,
                                        uint64_t trial);

enum class Verdict { Holds, Vacuous, Violation };

std::string verdictName(Verdict v);

// Everything the theorem battery reads off one quotient ring.
struct InvariantTable {
    HilbertData hf;
    int dim = 0;
    int depthV = 0;
    bool cm = false;
    bool gcm = false;
    std::optional<int> f;
    std::vector<int> betti;
    std::vector<std::optional<long long>> lengths;  // index i = 0..dim
    std::vector<std::optional<long long>> ells;
    std::vector<std::vector<Polynomial>> anns;
    std::map<int, bool> serre;
    std::optional<CohomologyFingerprint> fp;
};

InvariantTable invariantTable(CohomologyAnalysis& a, int p,
                              const std::vector<int>& serreNs);

struct TrialResult {
    std::string label;
    std::vector<Polynomial> jgens;
    bool congruent = false;
    bool hfGate = false;
    InvariantTable tableI;
    InvariantTable tableJ;
    std::map<std::string, Verdict> verdicts;

    bool anyViolation() const {
        for (const auto& [k, v] : verdicts)
            if (v == Verdict::Violation) return true;
        return false;
    }
};

struct TrialOptions {
    int p = 0;
    int32_t level = 1;  // congruence level to check
    std::vector<int> serreNs = {1};
    bool equidimensional = false;  // caller-asserted, enables the Serre transfer
};

TrialResult runTrial(const Ring& R, CohomologyAnalysis& aI,
                     const std::vector<Polynomial>& J, const TrialOptions& opt,
                     const std::string& label = "");

// Heuristic sufficiency bound for the congruence level, assembled from the
// quantities the comparison arguments consume: the ell invariants and the
// Artin-Rees numbers of the images and kernels along the resolution and its
// dual. Reported as a heuristic, not a certified constant.
int32_t estimateN(CohomologyAnalysis& a, int p);

int defaultP(const CohomologyAnalysis& a);

struct ExperimentReport {
    PerturbationSpec spec;
    TrialOptions options;
    std::vector<TrialResult> trials;
    int gatePassCount = 0;
    int gateFailCount = 0;
    int violationCount = 0;
    std::string engineVersion;
    long long wallMs = 0;
};

ExperimentReport runExperiment(
    const Ring& R, const PerturbationSpec& spec, const TrialOptions& opt,
    const std::vector<std::pair<std::string, std::vector<Polynomial>>>& injections = {});

bool isFilterRegularSequence(const Ring& R, const std::vector<Polynomial>& fs);

constexpr const char* kEngineVersion = "lclab 0.1.0";

}  // namespace lclab

#endif
