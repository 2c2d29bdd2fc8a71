#ifndef LCLAB_COHOMOLOGY_HPP
#define LCLAB_COHOMOLOGY_HPP

#include <map>
#include <optional>

#include "lclab/resolution.hpp"

namespace lclab {

// Transposed resolution assembled as a cochain complex P_0 -> P_1 -> ... ;
// maps[k] is the matrix of P_k -> P_{k+1}.
struct DualComplex {
    std::vector<int> ranks;
    std::vector<PolyMatrix> maps;

    int length() const { return static_cast<int>(maps.size()); }
};

DualComplex dualize(const Ring& R, const FreeComplex& C);
bool composeCheckDual(const Ring& R, const DualComplex& D);

// Subquotient ker(g_{n+1})/im(g_n) of P_n presenting the Matlis dual of the
// i-th local cohomology module, n = nvars - i.
struct ModulePresentation {
    int rank = 0;
    std::vector<VectorElement> kerGens;
    std::vector<VectorElement> imGens;
};

ModulePresentation extModule(const Ring& R, int i, const FreeComplex& C);

// Iso-invariants of one local cohomology module: length, annihilator, the
// smallest power of m killing it, and the Hilbert function of the initial
// module of the presenting subquotient.
struct FingerprintEntry {
    std::optional<long long> length;
    std::vector<Polynomial> annihilator;
    std::optional<long long> ell;
    HilbertData starHF;
};

struct CohomologyFingerprint {
    std::vector<FingerprintEntry> perIndex;  // i = 0..p
};

// All invariants of R/I that the perturbation experiments compare, computed
// once per ideal from a minimal free resolution and its dual.
class CohomologyAnalysis {
  public:
    CohomologyAnalysis(const Ring& R, std::vector<Polynomial> gens);

    const Ring& ring() const { return *R_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const HilbertData& hf() const { return hf_; }
    int dimRI() const { return dim_; }
    const FreeComplex& resolution() const { return res_; }
    const DualComplex& dual() const { return dual_; }

    bool extIsZero(int i);
    const HilbertData& extStarHF(int i);
    std::optional<int> extStarDim(int i);  // nullopt for the zero module
    std::optional<long long> lcLength(int i);
    const std::vector<Polynomial>& lcAnnihilator(int i);
    std::optional<long long> ell(int i);

    int depth();
    std::optional<int> fInvariant();  // nullopt = all finitely generated
    bool isCohenMacaulay();
    bool isGeneralizedCM();
    bool quasiBuchsbaumProxy();
    bool serreCondition(int n);
    CohomologyFingerprint fingerprint(int p);

    // kernel generators of P_n -> P_{n+1}, cached per level
    const std::vector<VectorElement>& kernelGens(int n);

  private:
    struct Level {
        bool ready = false;
        std::vector<VectorElement> ker;
        HilbertData starHF;
    };
    Level& level(int n);

    const Ring* R_;
    std::vector<Polynomial> gens_;
    HilbertData hf_;
    int dim_ = 0;
    FreeComplex res_;
    DualComplex dual_;
    std::map<int, Level> levels_;
    std::map<int, std::vector<Polynomial>> ann_;
    std::optional<int> depth_;
};

// One-shot wrappers for the operations above.
std::optional<long long> lcLength(const Ring& R, int i, const std::vector<Polynomial>& I);
std::vector<Polynomial> lcAnnihilator(const Ring& R, int i,
                                      const std::vector<Polynomial>& I);
std::optional<long long> ellI(const Ring& R, int i, const std::vector<Polynomial>& I);
int depth(const Ring& R, const std::vector<Polynomial>& I);
std::optional<int> fInvariant(const Ring& R, const std::vector<Polynomial>& I);
bool isCohenMacaulay(const Ring& R, const std::vector<Polynomial>& I);
bool isGeneralizedCM(const Ring& R, const std::vector<Polynomial>& I);
bool quasiBuchsbaumProxy(const Ring& R, const std::vector<Polynomial>& I);
bool serreCondition(const Ring& R, const std::vector<Polynomial>& I, int n);
CohomologyFingerprint fingerprint(const Ring& R, const std::vector<Polynomial>& I, int p);

bool fingerprintEqual(const Ring& R, const CohomologyFingerprint& a,
                      const CohomologyFingerprint& b);

}  // namespace lclab

#endif
