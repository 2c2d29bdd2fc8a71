#ifndef LCLAB_POLY_HPP
#define LCLAB_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lclab/ring.hpp"

namespace lclab {

constexpr int32_t kInfDegree = std::numeric_limits<int32_t>::max();

struct PTerm {
    Monomial m;
    Fp c;
};

// Sparse polynomial, terms strictly descending in the ring ordering. Under a
// local ordering that means degrees ascend along the list: the leading term
// sits at the front and is the term of lowest total degree.
struct Polynomial {
    std::vector<PTerm> t;

    bool isZero() const { return t.empty(); }
    const PTerm& lt() const { return t.front(); }
    int32_t ord() const { return t.empty() ? kInfDegree : t.front().m.deg; }
    int32_t maxdeg() const { return t.empty() ? -1 : t.back().m.deg; }
};

// Ambient free module: rank plus optional per-component degree shifts.
// An empty shift list means all shifts are zero.
struct FreeModule {
    int rank = 1;
    std::vector<int32_t> shifts;

    int32_t shift(int c) const { return shifts.empty() ? 0 : shifts[c]; }
};

struct VTerm {
    Monomial m;
    int32_t comp = 0;
    Fp c;
};

// Element of a free module, flat term list sorted strictly descending in the
// module ordering.
struct VectorElement {
    int32_t rank = 1;
    std::vector<VTerm> t;

    bool isZero() const { return t.empty(); }
    const VTerm& lt() const { return t.front(); }
};

// Module ordering: weighted degree first (lower wins), ring tie-break on the
// monomials, then lower component. When elimBlock >= 0 any term in a
// component < elimBlock beats any term in a component >= elimBlock; syzygy
// computations use that to read kernels off a standard basis.
//
// When homogVar >= 0 the ordering is the Lazard homogenization of the above:
// total weight decides first with HIGHER weight winning (which makes the
// ordering global, so classical Buchberger terminates), ties fall back to the
// base ordering on the non-homogenizing variables.
struct ModuleOrder {
    const Ring* ring = nullptr;
    FreeModule mod;
    int elimBlock = -1;
    int homogVar = -1;

    Cmp cmp(const VTerm& a, const VTerm& b) const {
        int32_t wa = a.m.deg + mod.shift(a.comp);
        int32_t wb = b.m.deg + mod.shift(b.comp);
        if (homogVar >= 0) {
            if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
        }
        if (elimBlock >= 0) {
            bool ea = a.comp < elimBlock, eb = b.comp < elimBlock;
            if (ea != eb) return ea ? Cmp::GT : Cmp::LT;
        }
        int32_t xa = wa, xb = wb;
        if (homogVar >= 0) {
            xa -= a.m.e[homogVar];
            xb -= b.m.e[homogVar];
        }
        if (xa != xb) return xa < xb ? Cmp::GT : Cmp::LT;
        for (int i = ring->nvars() - 1; i >= 0; --i) {
            if (i == homogVar) continue;
            if (a.m.e[i] != b.m.e[i]) return a.m.e[i] < b.m.e[i] ? Cmp::GT : Cmp::LT;
        }
        if (a.comp != b.comp) return a.comp < b.comp ? Cmp::GT : Cmp::LT;
        return Cmp::EQ;
    }

    bool gt(const VTerm& a, const VTerm& b) const { return cmp(a, b) == Cmp::GT; }

    int32_t weightedDeg(const VTerm& a) const { return a.m.deg + mod.shift(a.comp); }
};

// ---- scalar polynomial operations ----

Polynomial normalizePoly(const Ring& R, std::vector<PTerm> terms);
Polynomial polyConst(const Ring& R, long long c);
Polynomial polyTerm(const Ring& R, Fp c, const Monomial& m);
Polynomial addP(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial subP(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial negP(const Ring& R, const Polynomial& a);
Polynomial mulP(const Ring& R, const Polynomial& a, const Polynomial& b);
Polynomial scaleP(const Ring& R, Fp c, const Polynomial& a);
Polynomial mulTermP(const Ring& R, Fp c, const Monomial& m, const Polynomial& a);
bool equalP(const Polynomial& a, const Polynomial& b);

// Homogeneous part of lowest total degree; undefined for 0.
Polynomial initialForm(const Ring& R, const Polynomial& f);

// Drops every term of total degree >= N, so the result represents f modulo
// the N-th power of the maximal ideal.
Polynomial truncateModPower(const Ring& R, const Polynomial& f, int32_t N);

std::string polyToString(const Ring& R, const Polynomial& f);

Cmp cmpMonomials(const Ring& R, const Monomial& a, const Monomial& b);

// ---- free-module element operations ----

VectorElement normalizeVec(const ModuleOrder& O, int rank, std::vector<VTerm> terms);
VectorElement vecZero(int rank);
VectorElement polyToVec(const Polynomial& p, int rank, int comp);
VectorElement basisVec(const Ring& R, int rank, int comp);
Polynomial vecComponent(const Ring& R, const VectorElement& v, int comp);
VectorElement addV(const ModuleOrder& O, const VectorElement& a, const VectorElement& b);
VectorElement subV(const ModuleOrder& O, const VectorElement& a, const VectorElement& b);
VectorElement scaleV(const Ring& R, Fp c, const VectorElement& a);
// a + c * m * b  (the reduction step)
VectorElement axpyV(const ModuleOrder& O, const VectorElement& a, Fp c,
                    const Monomial& m, const VectorElement& b);
VectorElement mulTermV(const Ring& R, const ModuleOrder& O, Fp c, const Monomial& m,
                       const VectorElement& a);
VectorElement mulPolyVec(const Ring& R, const ModuleOrder& O, const Polynomial& p,
                         const VectorElement& v);
bool equalV(const VectorElement& a, const VectorElement& b);

int32_t ordV(const ModuleOrder& O, const VectorElement& v);     // weighted order
int32_t maxdegV(const ModuleOrder& O, const VectorElement& v);  // weighted top degree
int32_t ecartV(const ModuleOrder& O, const VectorElement& v);

// Weighted-degree-ord homogeneous part of lowest degree; undefined for 0.
VectorElement initialFormV(const ModuleOrder& O, const VectorElement& v);
VectorElement truncateModPowerV(const ModuleOrder& O, const VectorElement& v, int32_t N);
bool isHomogeneousV(const ModuleOrder& O, const VectorElement& v);

std::string vecToString(const Ring& R, const VectorElement& v);

// All monomials of the given total degree, in descending ring order.
std::vector<Monomial> monomialsOfDegree(const Ring& R, int32_t deg);
long long countMonomials(int nvars, int32_t deg);

}  // namespace lclab

#endif
