#include <doctest.h>

#include "lclab/report.hpp"
#include "test_util.hpp"

using namespace lctest;

TEST_CASE("perturbation generation is deterministic and congruent") {
    Ring R = ring3();
    PerturbationSpec spec;
    spec.base = ideal(R, {"x^2", "y"});
    spec.level = 5;
    spec.degreeCap = 7;
    spec.trials = 4;
    spec.seed = 42;

    for (uint64_t t = 0; t < 3; ++t) {
        std::vector<Polynomial> J1 = genPerturbation(R, spec, t);
        std::vector<Polynomial> J2 = genPerturbation(R, spec, t);
        REQUIRE(J1.size() == J2.size());
        for (size_t i = 0; i < J1.size(); ++i) CHECK(equalP(J1[i], J2[i]));
        CHECK(congruentModPower(R, spec.base, J1, spec.level));
        // epsilon support stays inside the configured window
        for (size_t i = 0; i < J1.size(); ++i) {
            Polynomial eps = subP(R, J1[i], spec.base[i]);
            if (eps.isZero()) continue;
            CHECK(eps.ord() >= spec.level);
            CHECK(eps.maxdeg() <= spec.degreeCap);
        }
    }
    // different trials give different epsilons almost surely
    std::vector<Polynomial> Ja = genPerturbation(R, spec, 0);
    std::vector<Polynomial> Jb = genPerturbation(R, spec, 1);
    bool allEqual = true;
    for (size_t i = 0; i < Ja.size(); ++i) allEqual &= equalP(Ja[i], Jb[i]);
    CHECK(!allEqual);
}

TEST_CASE("trial against the ideal itself holds everywhere") {
    Ring R = ring3();
    std::vector<Polynomial> I = ideal(R, {"x^2", "y"});
    CohomologyAnalysis a(R, I);
    TrialOptions opt;
    opt.p = 0;
    opt.level = 5;
    opt.equidimensional = true;
    TrialResult tr = runTrial(R, a, I, opt, "identity");
    CHECK(tr.congruent);
    CHECK(tr.hfGate);
    CHECK(!tr.anyViolation());
    for (const auto& [key, v] : tr.verdicts) CHECK(v != Verdict::Violation);
    CHECK(tr.verdicts.at("depth_eq") == Verdict::Holds);
    CHECK(tr.verdicts.at("cm_preserved") == Verdict::Holds);
    CHECK(tr.verdicts.at("length_eq") == Verdict::Holds);
    CHECK(tr.verdicts.at("ann_eq") == Verdict::Holds);
    CHECK(tr.verdicts.at("fingerprint") == Verdict::Holds);
    CHECK(tr.verdicts.at("serre_1") == Verdict::Holds);
}

TEST_CASE("gate necessity: the depth-drop example fails the gate, not the engine") {
    Ring R = ring3();
    std::vector<Polynomial> I = ideal(R, {"x^2", "y"});
    std::vector<Polynomial> J5 = ideal(R, {"x^2", "x*y", "y - z^5"});
    CohomologyAnalysis a(R, I);
    TrialOptions opt;
    opt.p = 0;
    opt.level = 5;
    TrialResult tr = runTrial(R, a, J5, opt, "adversarial");
    CHECK(tr.congruent);
    CHECK(!tr.hfGate);  // the example breaks the Hilbert function
    CHECK(tr.tableI.depthV == 1);
    CHECK(tr.tableJ.depthV == 0);  // and the depth drops
    CHECK(!tr.anyViolation());     // hypotheses unmet: everything is vacuous
    for (const auto& [key, v] : tr.verdicts) CHECK(v == Verdict::Vacuous);
}

TEST_CASE("estimate of the sufficient congruence level") {
    Ring R = ring3();
    // the zero ideal: every quantity in the bound vanishes
    CohomologyAnalysis z(R, {});
    CHECK(estimateN(z, 0) == 1);

    CohomologyAnalysis a(R, ideal(R, {"x^2", "y"}));
    int32_t n1 = estimateN(a, 0);
    CHECK(n1 >= 3);
    CHECK(n1 <= 30);

    Ring R2 = ring2();
    CohomologyAnalysis b(R2, ideal(R2, {"x^2", "x*y", "y^2"}));
    int32_t n2 = estimateN(b, 0);
    CHECK(n2 > 0);

    Ring R4 = ring4();
    CohomologyAnalysis c(R4, ideal(R4, {"x*z", "x*w", "y*z", "y*w"}));
    int32_t n3 = estimateN(c, 1);
    CHECK(n3 > 0);
    // infinite ell below p is rejected
    CohomologyAnalysis d(R, ideal(R, {"x*z", "y*z"}));
    CHECK_THROWS_AS(estimateN(d, 1), PreconditionError);
}

TEST_CASE("experiment report aggregates and is deterministic") {
    Ring R = ring3();
    PerturbationSpec spec;
    spec.name = "ci";
    spec.base = ideal(R, {"x^2", "y"});
    spec.level = 6;
    spec.degreeCap = 7;
    spec.trials = 3;
    spec.seed = 7;
    TrialOptions opt;
    opt.p = 0;
    opt.level = spec.level;
    opt.equidimensional = true;

    ExperimentReport r1 = runExperiment(R, spec, opt);
    ExperimentReport r2 = runExperiment(R, spec, opt);
    CHECK(r1.trials.size() == 3);
    CHECK(r1.gatePassCount + r1.gateFailCount == 3);
    CHECK(r1.violationCount == 0);
    Json j1 = toJson(R, r1, false);
    Json j2 = toJson(R, r2, false);
    CHECK(canonicalDump(j1) == canonicalDump(j2));

    // injected adversarial trials are appended and counted
    std::vector<std::pair<std::string, std::vector<Polynomial>>> inj = {
        {"paper", ideal(R, {"x^2", "x*y", "y - z^6"})}};
    ExperimentReport r3 = runExperiment(R, spec, opt, inj);
    CHECK(r3.trials.size() == 4);
    CHECK(r3.trials.back().label == "paper");
    CHECK(!r3.trials.back().hfGate);
    CHECK(r3.gateFailCount >= 1);
}

TEST_CASE("filter-regular sequences") {
    Ring R = ring3();
    CHECK(isFilterRegularSequence(R, ideal(R, {"x", "y"})));
    CHECK(!isFilterRegularSequence(R, ideal(R, {"x", "x"})));
    Ring R4 = ring4();
    CHECK(!isFilterRegularSequence(R4, ideal(R4, {"x*z", "x*w"})));
    CHECK(isFilterRegularSequence(R, ideal(R, {"x^2", "y"})));
    Ring R2 = ring2();
    CHECK(isFilterRegularSequence(R2, ideal(R2, {"x^2 - y^3"})));
    // m-primary ideals make every later element filter-regular
    CHECK(isFilterRegularSequence(R2, ideal(R2, {"x", "y", "x + y"})));
    CHECK_THROWS_AS(isFilterRegularSequence(R, {}), PreconditionError);
}

TEST_CASE("random gate-passing trials satisfy the battery on a small run") {
    Ring R = ring3();
    std::vector<Polynomial> I = ideal(R, {"x^2", "y"});
    CohomologyAnalysis a(R, I);
    int32_t N = estimateN(a, 0);
    PerturbationSpec spec;
    spec.name = "ci-smoke";
    spec.base = I;
    spec.level = N;
    spec.degreeCap = N + 2;
    spec.trials = 5;
    spec.seed = 42;
    TrialOptions opt;
    opt.p = 0;
    opt.level = N;
    opt.equidimensional = true;
    ExperimentReport rep = runExperiment(R, spec, opt);
    CHECK(rep.violationCount == 0);
    // a filter-regular base ideal passes the gate at the estimated level
    CHECK(rep.gatePassCount == 5);
    for (const TrialResult& tr : rep.trials) {
        CHECK(tr.verdicts.at("depth_eq") == Verdict::Holds);
        CHECK(tr.verdicts.at("cm_preserved") == Verdict::Holds);
        CHECK(tr.verdicts.at("length_eq") == Verdict::Holds);
        CHECK(tr.verdicts.at("ann_eq") == Verdict::Holds);
    }
}
