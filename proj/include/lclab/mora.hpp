#ifndef LCLAB_MORA_HPP
#define LCLAB_MORA_HPP

#include <vector>

#include "lclab/poly.hpp"

namespace lclab {

// Generating set whose leading terms generate the leading module under the
// local ordering. "reduced" means no generator's leading term divides
// another's, leading coefficients are 1, and the order is canonical.
struct StandardBasis {
    FreeModule mod;
    std::vector<VectorElement> gens;
    bool reduced = false;
};

// Minimal monomial generators of a leading module, per free-module component.
struct LeadingModule {
    int rank = 1;
    std::vector<std::vector<Monomial>> byComp;

    bool contains(const Monomial& m, int comp) const {
        for (const Monomial& g : byComp[comp])
            if (dividesMono(g, m)) return true;
        return false;
    }
    size_t totalGens() const {
        size_t n = 0;
        for (const auto& c : byComp) n += c.size();
        return n;
    }
};

// Mora reduction result. The tracked unit u has constant term 1 and satisfies
// u*f - r in <G> as a polynomial combination, so f and u^{-1} r agree in the
// localized module generated by G. With combination tracking the full
// division transcript comes back too: r = unit*f + sum combo[j]*G[j].
struct MoraResult {
    VectorElement r;
    Polynomial unit;
    std::vector<Polynomial> combo;
};

MoraResult weakNormalForm(const Ring& R, const ModuleOrder& O, const VectorElement& f,
                          const std::vector<VectorElement>& G, bool trackUnit = false,
                          size_t stepBudget = 0,  // 0 = default generous cap
                          bool trackCombination = false);

StandardBasis stdBasis(const Ring& R, const ModuleOrder& O,
                       std::vector<VectorElement> gens);
StandardBasis stdBasisIdeal(const Ring& R, const std::vector<Polynomial>& gens);

bool isUnitIdeal(const StandardBasis& B);

LeadingModule leadingModule(const Ring& R, const ModuleOrder& O, const StandardBasis& B);

// Homogeneous generators of the initial module N* of <gens> inside the
// associated graded module of the ambient free module: initial forms of a
// standard basis, pruned to a minimal homogeneous generating set.
std::vector<VectorElement> initialModuleStar(const Ring& R, const FreeModule& F,
                                             const std::vector<VectorElement>& gens);

// Generators of the kernel of the map S^s -> F sending e_j to cols[j],
// computed from a standard basis under a component-elimination ordering.
std::vector<VectorElement> syzygies(const Ring& R, const FreeModule& F,
                                    const std::vector<VectorElement>& cols);

// Generators of the ideal quotient (<sub> : <targets>) inside the ambient F.
std::vector<Polynomial> colonIdeal(const Ring& R, const FreeModule& F,
                                   const std::vector<VectorElement>& sub,
                                   const std::vector<VectorElement>& targets);

bool isMember(const Ring& R, const ModuleOrder& O, const VectorElement& f,
              const StandardBasis& B);
bool isMemberIdeal(const Ring& R, const Polynomial& f, const StandardBasis& B);

// Decides I + m^N = J + m^N by reducing generators of each side modulo a
// standard basis of the other with every computation truncated below degree N.
bool congruentModPower(const Ring& R, const std::vector<Polynomial>& I,
                       const std::vector<Polynomial>& J, int32_t N);

// Prune to a subset that still generates over the localization; the result is
// a minimal generating set by Nakayama.
std::vector<Polynomial> minimalIdealGens(const Ring& R, std::vector<Polynomial> gens);
std::vector<VectorElement> minimalSubmoduleGens(const Ring& R, const FreeModule& F,
                                                std::vector<VectorElement> gens);

std::vector<VectorElement> idealToVecs(const std::vector<Polynomial>& gens);

// Equality of localized ideals by mutual membership.
bool sameIdeal(const Ring& R, const std::vector<Polynomial>& A,
               const std::vector<Polynomial>& B);

}  // namespace lclab

#endif
