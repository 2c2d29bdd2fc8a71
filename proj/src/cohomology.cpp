#include "lclab/cohomology.hpp"

#include <algorithm>

namespace lclab {

DualComplex dualize(const Ring& R, const FreeComplex& C) {
    if (!composeCheck(R, C))
        throw PreconditionError("dualize requires a complex");
    DualComplex D;
    D.ranks = C.ranks;
    D.maps.reserve(C.maps.size());
    for (const PolyMatrix& M : C.maps) D.maps.push_back(transposeMatrix(R, M));
    return D;
}

bool composeCheckDual(const Ring& R, const DualComplex& D) {
    for (int k = 0; k + 1 < D.length(); ++k)
        for (const VectorElement& col : D.maps[k].cols)
            if (!applyMatrix(R, D.maps[k + 1], col).isZero()) return false;
    return true;
}

ModulePresentation extModule(const Ring& R, int i, const FreeComplex& C) {
    const int d = R.nvars();
    if (i < 0 || i > d) throw PreconditionError("cohomological index out of range");
    DualComplex D = dualize(R, C);
    const int n = d - i;
    const int len = D.length();
    ModulePresentation P;
    if (n > len) return P;  // ambient is the zero module
    P.rank = D.ranks[n];
    if (n == len) {
        for (int j = 0; j < P.rank; ++j) P.kerGens.push_back(basisVec(R, P.rank, j));
    } else {
        P.kerGens = syzygies(R, FreeModule{D.ranks[n + 1], {}}, D.maps[n].cols);
    }
    if (n >= 1) P.imGens = D.maps[n - 1].cols;
    return P;
}

CohomologyAnalysis::CohomologyAnalysis(const Ring& R, std::vector<Polynomial> gens)
    : R_(&R), gens_(std::move(gens)) {
    StandardBasis B = stdBasisIdeal(R, gens_);
    if (isUnitIdeal(B)) throw PreconditionError("analysis requires a proper ideal");
    ModuleOrder O{&R, B.mod, -1};
    hf_ = hilbertFunction(R, leadingModule(R, O, B));
    std::optional<int> dm = hf_.dim();
    dim_ = dm ? *dm : 0;
    res_ = freeResolution(R, gens_);
    dual_ = dualize(R, res_);
}

CohomologyAnalysis::Level& CohomologyAnalysis::level(int n) {
    auto it = levels_.find(n);
    if (it != levels_.end() && it->second.ready) return it->second;
    Level& L = levels_[n];
    const int len = dual_.length();
    const int d = R_->nvars();
    (void)d;
    if (n > len || n < 0) {
        L.ker = {};
        L.starHF = HilbertData(R_->nvars(), {});
    } else {
        const int rank = dual_.ranks[n];
        if (n == len) {
            L.ker.clear();
            for (int j = 0; j < rank; ++j) L.ker.push_back(basisVec(*R_, rank, j));
        } else {
            L.ker = syzygies(*R_, FreeModule{dual_.ranks[n + 1], {}},
                              dual_.maps[n].cols);
        }
        FreeModule amb{rank, {}};
        ModuleOrder O{R_, amb, -1};
        std::vector<VectorElement> im;
        if (n >= 1) im = dual_.maps[n - 1].cols;
        StandardBasis BK = stdBasis(*R_, O, L.ker);
        StandardBasis BD = stdBasis(*R_, O, im);
        HilbertData smK = hilbertFunction(*R_, leadingModule(*R_, O, BK));
        HilbertData smD = hilbertFunction(*R_, leadingModule(*R_, O, BD));
        // HF of the initial module of ker/im is the difference of the two
        // standard-monomial counts
        L.starHF = smD - smK;
    }
    L.ready = true;
    return L;
}

const std::vector<VectorElement>& CohomologyAnalysis::kernelGens(int n) {
    return level(n).ker;
}

const HilbertData& CohomologyAnalysis::extStarHF(int i) {
    return level(R_->nvars() - i).starHF;
}

bool CohomologyAnalysis::extIsZero(int i) {
    return extStarHF(i).isZeroModule();
}

std::optional<int> CohomologyAnalysis::extStarDim(int i) {
    return extStarHF(i).dim();
}

std::optional<long long> CohomologyAnalysis::lcLength(int i) {
    return extStarHF(i).finiteLength();
}

const std::vector<Polynomial>& CohomologyAnalysis::lcAnnihilator(int i) {
    auto it = ann_.find(i);
    if (it != ann_.end()) return it->second;
    const int n = R_->nvars() - i;
    Level& L = level(n);
    std::vector<Polynomial> a;
    if (n > dual_.length() || L.starHF.isZeroModule()) {
        a = {polyConst(*R_, 1)};  // Ann(0) = S
    } else {
        std::vector<VectorElement> im;
        if (n >= 1) im = dual_.maps[n - 1].cols;
        a = colonIdeal(*R_, FreeModule{dual_.ranks[n], {}}, im, L.ker);
    }
    return ann_.emplace(i, std::move(a)).first->second;
}

std::optional<long long> CohomologyAnalysis::ell(int i) {
    const std::vector<Polynomial>& a = lcAnnihilator(i);
    HilbertData h = hilbertOfIdeal(*R_, a);
    if (h.finiteLength())
        return static_cast<long long>(h.lastNonzeroDegree()) + 1;
    return std::nullopt;  // annihilator is not m-primary
}

int CohomologyAnalysis::depth() {
    if (depth_) return *depth_;
    const int d = R_->nvars();
    int i = std::max(0, d - dual_.length());
    for (; i <= d; ++i)
        if (!extIsZero(i)) break;
    depth_ = i;
    return i;
}

std::optional<int> CohomologyAnalysis::fInvariant() {
    for (int i = 0; i <= dim_; ++i)
        if (!lcLength(i)) return i;
    return std::nullopt;
}

bool CohomologyAnalysis::isCohenMacaulay() {
    return depth() == dim_;
}

bool CohomologyAnalysis::isGeneralizedCM() {
    for (int i = 0; i < dim_; ++i)
        if (!lcLength(i)) return false;
    return true;
}

bool CohomologyAnalysis::quasiBuchsbaumProxy() {
    if (!isGeneralizedCM())
        throw PreconditionError("quasi-Buchsbaum proxy needs a generalized CM quotient");
    for (int i = 0; i < dim_; ++i) {
        StandardBasis B = stdBasisIdeal(*R_, lcAnnihilator(i));
        for (int v = 0; v < R_->nvars(); ++v) {
            Polynomial x = polyTerm(*R_, R_->field().one(), R_->var(v));
            if (!isMemberIdeal(*R_, x, B)) return false;
        }
    }
    return true;
}

bool CohomologyAnalysis::serreCondition(int n) {
    if (n < 0) throw PreconditionError("Serre condition index must be non-negative");
    for (int i = 0; i < dim_; ++i) {
        std::optional<int> ds = extStarDim(i);
        if (!ds) continue;  // zero module
        if (*ds > i - n) return false;
    }
    return true;
}

CohomologyFingerprint CohomologyAnalysis::fingerprint(int p) {
    CohomologyFingerprint fp;
    for (int i = 0; i <= p; ++i) {
        if (!lcLength(i))
            throw PreconditionError("fingerprint requires finite lengths up to p");
        FingerprintEntry e;
        e.length = lcLength(i);
        e.annihilator = lcAnnihilator(i);
        e.ell = ell(i);
        e.starHF = extStarHF(i);
        fp.perIndex.push_back(std::move(e));
    }
    return fp;
}

std::optional<long long> lcLength(const Ring& R, int i, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).lcLength(i);
}

std::vector<Polynomial> lcAnnihilator(const Ring& R, int i,
                                      const std::vector<Polynomial>& I) {
    CohomologyAnalysis a(R, I);
    return a.lcAnnihilator(i);
}

std::optional<long long> ellI(const Ring& R, int i, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).ell(i);
}

int depth(const Ring& R, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).depth();
}

std::optional<int> fInvariant(const Ring& R, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).fInvariant();
}

bool isCohenMacaulay(const Ring& R, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).isCohenMacaulay();
}

bool isGeneralizedCM(const Ring& R, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).isGeneralizedCM();
}

bool quasiBuchsbaumProxy(const Ring& R, const std::vector<Polynomial>& I) {
    return CohomologyAnalysis(R, I).quasiBuchsbaumProxy();
}

bool serreCondition(const Ring& R, const std::vector<Polynomial>& I, int n) {
    return CohomologyAnalysis(R, I).serreCondition(n);
}

CohomologyFingerprint fingerprint(const Ring& R, const std::vector<Polynomial>& I, int p) {
    return CohomologyAnalysis(R, I).fingerprint(p);
}

bool fingerprintEqual(const Ring& R, const CohomologyFingerprint& a,
                      const CohomologyFingerprint& b) {
    if (a.perIndex.size() != b.perIndex.size()) return false;
    for (size_t i = 0; i < a.perIndex.size(); ++i) {
        const FingerprintEntry& x = a.perIndex[i];
        const FingerprintEntry& y = b.perIndex[i];
        if (x.length != y.length || x.ell != y.ell || x.starHF != y.starHF) return false;
        // annihilators compared as localized ideals, not as generator lists
        if (!sameIdeal(R, x.annihilator, y.annihilator)) return false;
    }
    return true;
}

}  // namespace lclab
