#include "lclab/poly.hpp"

#include <algorithm>

namespace lclab {

Cmp cmpMonomials(const Ring& R, const Monomial& a, const Monomial& b) {
    return R.cmpMono(a, b);
}

static void checkSameRing(const Ring& R, const Polynomial& a, const Polynomial& b) {
    if ((!a.isZero() && a.lt().m.nvars != R.nvars()) ||
        (!b.isZero() && b.lt().m.nvars != R.nvars()))
        throw StructuralError("operands belong to different rings");
}

Polynomial normalizePoly(const Ring& R, std::vector<PTerm> terms) {
    for (const PTerm& t : terms)
        if (t.m.nvars != R.nvars())
            throw StructuralError("polynomial term does not match ring");
    std::sort(terms.begin(), terms.end(), [&](const PTerm& x, const PTerm& y) {
        return R.cmpMono(x.m, y.m) == Cmp::GT;
    });
    Polynomial out;
    out.t.reserve(terms.size());
    for (const PTerm& t : terms) {
        if (!out.t.empty() && out.t.back().m == t.m) {
            out.t.back().c = R.field().add(out.t.back().c, t.c);
            if (out.t.back().c.isZero()) out.t.pop_back();
        } else if (!t.c.isZero()) {
            out.t.push_back(t);
        }
    }
    return out;
}

Polynomial polyConst(const Ring& R, long long c) {
    Fp v = R.field().make(c);
    Polynomial p;
    if (!v.isZero()) p.t.push_back({R.one(), v});
    return p;
}

Polynomial polyTerm(const Ring& R, Fp c, const Monomial& m) {
    (void)R;
    Polynomial p;
    if (!c.isZero()) p.t.push_back({m, c});
    return p;
}

// Merge two descending term lists, combining equal monomials.
static Polynomial mergeP(const Ring& R, const Polynomial& a, const Polynomial& b,
                         Fp bScale) {
    Polynomial out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    const PrimeField& F = R.field();
    while (i < a.t.size() && j < b.t.size()) {
        Cmp c = R.cmpMono(a.t[i].m, b.t[j].m);
        if (c == Cmp::GT) {
            out.t.push_back(a.t[i++]);
        } else if (c == Cmp::LT) {
            out.t.push_back({b.t[j].m, F.mul(bScale, b.t[j].c)});
            ++j;
        } else {
            Fp s = F.add(a.t[i].c, F.mul(bScale, b.t[j].c));
            if (!s.isZero()) out.t.push_back({a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) out.t.push_back({b.t[j].m, F.mul(bScale, b.t[j].c)});
    return out;
}

Polynomial addP(const Ring& R, const Polynomial& a, const Polynomial& b) {
    checkSameRing(R, a, b);
    return mergeP(R, a, b, R.field().one());
}

Polynomial subP(const Ring& R, const Polynomial& a, const Polynomial& b) {
    checkSameRing(R, a, b);
    return mergeP(R, a, b, R.field().make(-1));
}

Polynomial negP(const Ring& R, const Polynomial& a) {
    return scaleP(R, R.field().make(-1), a);
}

Polynomial scaleP(const Ring& R, Fp c, const Polynomial& a) {
    Polynomial out;
    if (c.isZero()) return out;
    out.t.reserve(a.t.size());
    for (const PTerm& t : a.t) out.t.push_back({t.m, R.field().mul(c, t.c)});
    return out;
}

Polynomial mulTermP(const Ring& R, Fp c, const Monomial& m, const Polynomial& a) {
    Polynomial out;
    if (c.isZero()) return out;
    out.t.reserve(a.t.size());
    for (const PTerm& t : a.t)
        out.t.push_back({mulMono(t.m, m), R.field().mul(c, t.c)});
    return out;  // multiplying by a monomial preserves the ordering
}

Polynomial mulP(const Ring& R, const Polynomial& a, const Polynomial& b) {
    checkSameRing(R, a, b);
    std::vector<PTerm> acc;
    acc.reserve(a.t.size() * b.t.size());
    for (const PTerm& ta : a.t)
        for (const PTerm& tb : b.t)
            acc.push_back({mulMono(ta.m, tb.m), R.field().mul(ta.c, tb.c)});
    return normalizePoly(R, std::move(acc));
}

bool equalP(const Polynomial& a, const Polynomial& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].m != b.t[i].m || a.t[i].c != b.t[i].c) return false;
    return true;
}

Polynomial initialForm(const Ring& R, const Polynomial& f) {
    if (f.isZero()) throw UndefinedInputError("initial form of the zero polynomial");
    Polynomial out;
    int32_t d = f.ord();
    for (const PTerm& t : f.t) {
        if (t.m.deg != d) break;  // degrees ascend along the list
        out.t.push_back(t);
    }
    (void)R;
    return out;
}

Polynomial truncateModPower(const Ring& R, const Polynomial& f, int32_t N) {
    (void)R;
    Polynomial out;
    for (const PTerm& t : f.t) {
        if (t.m.deg >= N) break;
        out.t.push_back(t);
    }
    return out;
}

std::string polyToString(const Ring& R, const Polynomial& f) {
    if (f.isZero()) return "0";
    std::string s;
    uint32_t p = R.field().modulus();
    for (const PTerm& t : f.t) {
        // balanced print: residues above p/2 shown negative
        long long c = t.c.v;
        if (c > p / 2) c -= p;
        bool neg = c < 0;
        long long a = neg ? -c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a != 1 || t.m.isOne()) {
            s += std::to_string(a);
            if (!t.m.isOne()) s += "*";
        }
        if (!t.m.isOne()) s += R.monoToString(t.m);
    }
    return s;
}

// ---- vectors ----

VectorElement vecZero(int rank) {
    VectorElement v;
    v.rank = rank;
    return v;
}

VectorElement polyToVec(const Polynomial& p, int rank, int comp) {
    VectorElement v;
    v.rank = rank;
    v.t.reserve(p.t.size());
    for (const PTerm& t : p.t) v.t.push_back({t.m, comp, t.c});
    return v;
}

VectorElement basisVec(const Ring& R, int rank, int comp) {
    VectorElement v;
    v.rank = rank;
    v.t.push_back({R.one(), comp, R.field().one()});
    return v;
}

Polynomial vecComponent(const Ring& R, const VectorElement& v, int comp) {
    std::vector<PTerm> acc;
    for (const VTerm& t : v.t)
        if (t.comp == comp) acc.push_back({t.m, t.c});
    return normalizePoly(R, std::move(acc));
}

VectorElement normalizeVec(const ModuleOrder& O, int rank, std::vector<VTerm> terms) {
    for (const VTerm& t : terms)
        if (t.comp < 0 || t.comp >= rank)
            throw StructuralError("vector component out of range");
    std::sort(terms.begin(), terms.end(),
              [&](const VTerm& x, const VTerm& y) { return O.gt(x, y); });
    VectorElement out;
    out.rank = rank;
    out.t.reserve(terms.size());
    const PrimeField& F = O.ring->field();
    for (const VTerm& t : terms) {
        if (!out.t.empty() && out.t.back().m == t.m && out.t.back().comp == t.comp) {
            out.t.back().c = F.add(out.t.back().c, t.c);
            if (out.t.back().c.isZero()) out.t.pop_back();
        } else if (!t.c.isZero()) {
            out.t.push_back(t);
        }
    }
    return out;
}

static VectorElement mergeV(const ModuleOrder& O, const VectorElement& a,
                            const VectorElement& b, Fp bScale, const Monomial* bMono) {
    if (a.rank != b.rank) throw StructuralError("free-module rank mismatch");
    const PrimeField& F = O.ring->field();
    VectorElement out;
    out.rank = a.rank;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    auto bTerm = [&](size_t k) {
        VTerm t = b.t[k];
        if (bMono) t.m = mulMono(t.m, *bMono);
        t.c = F.mul(bScale, t.c);
        return t;
    };
    VTerm tb;
    bool tbValid = false;
    while (i < a.t.size() && j < b.t.size()) {
        if (!tbValid) {
            tb = bTerm(j);
            tbValid = true;
        }
        Cmp c = O.cmp(a.t[i], tb);
        if (c == Cmp::GT) {
            out.t.push_back(a.t[i++]);
        } else if (c == Cmp::LT) {
            out.t.push_back(tb);
            ++j;
            tbValid = false;
        } else {
            Fp s = F.add(a.t[i].c, tb.c);
            if (!s.isZero()) out.t.push_back({a.t[i].m, a.t[i].comp, s});
            ++i;
            ++j;
            tbValid = false;
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) out.t.push_back(bTerm(j));
    return out;
}

VectorElement addV(const ModuleOrder& O, const VectorElement& a, const VectorElement& b) {
    return mergeV(O, a, b, O.ring->field().one(), nullptr);
}

VectorElement subV(const ModuleOrder& O, const VectorElement& a, const VectorElement& b) {
    return mergeV(O, a, b, O.ring->field().make(-1), nullptr);
}

VectorElement axpyV(const ModuleOrder& O, const VectorElement& a, Fp c,
                    const Monomial& m, const VectorElement& b) {
    if (c.isZero()) return a;
    return mergeV(O, a, b, c, &m);
}

VectorElement scaleV(const Ring& R, Fp c, const VectorElement& a) {
    VectorElement out;
    out.rank = a.rank;
    if (c.isZero()) return out;
    out.t.reserve(a.t.size());
    for (const VTerm& t : a.t) out.t.push_back({t.m, t.comp, R.field().mul(c, t.c)});
    return out;
}

VectorElement mulTermV(const Ring& R, const ModuleOrder& O, Fp c, const Monomial& m,
                       const VectorElement& a) {
    (void)O;
    VectorElement out;
    out.rank = a.rank;
    if (c.isZero()) return out;
    out.t.reserve(a.t.size());
    for (const VTerm& t : a.t)
        out.t.push_back({mulMono(t.m, m), t.comp, R.field().mul(c, t.c)});
    return out;
}

VectorElement mulPolyVec(const Ring& R, const ModuleOrder& O, const Polynomial& p,
                         const VectorElement& v) {
    std::vector<VTerm> acc;
    acc.reserve(p.t.size() * v.t.size());
    for (const PTerm& tp : p.t)
        for (const VTerm& tv : v.t)
            acc.push_back({mulMono(tp.m, tv.m), tv.comp, R.field().mul(tp.c, tv.c)});
    return normalizeVec(O, v.rank, std::move(acc));
}

bool equalV(const VectorElement& a, const VectorElement& b) {
    if (a.rank != b.rank || a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].m != b.t[i].m || a.t[i].comp != b.t[i].comp || a.t[i].c != b.t[i].c)
            return false;
    return true;
}

int32_t ordV(const ModuleOrder& O, const VectorElement& v) {
    if (v.isZero()) return kInfDegree;
    int32_t best = kInfDegree;
    for (const VTerm& t : v.t) best = std::min(best, O.weightedDeg(t));
    return best;
}

int32_t maxdegV(const ModuleOrder& O, const VectorElement& v) {
    int32_t best = -1;
    for (const VTerm& t : v.t) best = std::max(best, O.weightedDeg(t));
    return best;
}

int32_t ecartV(const ModuleOrder& O, const VectorElement& v) {
    if (v.isZero()) return 0;
    return maxdegV(O, v) - O.weightedDeg(v.lt());
}

VectorElement initialFormV(const ModuleOrder& O, const VectorElement& v) {
    if (v.isZero()) throw UndefinedInputError("initial form of the zero vector");
    int32_t d = ordV(O, v);
    VectorElement out;
    out.rank = v.rank;
    for (const VTerm& t : v.t)
        if (O.weightedDeg(t) == d) out.t.push_back(t);
    return out;
}

VectorElement truncateModPowerV(const ModuleOrder& O, const VectorElement& v, int32_t N) {
    VectorElement out;
    out.rank = v.rank;
    for (const VTerm& t : v.t)
        if (O.weightedDeg(t) < N) out.t.push_back(t);
    return out;
}

bool isHomogeneousV(const ModuleOrder& O, const VectorElement& v) {
    if (v.isZero()) return true;
    int32_t d = O.weightedDeg(v.t.front());
    for (const VTerm& t : v.t)
        if (O.weightedDeg(t) != d) return false;
    return true;
}

std::string vecToString(const Ring& R, const VectorElement& v) {
    if (v.isZero()) return "0";
    std::string s = "(";
    for (int c = 0; c < v.rank; ++c) {
        if (c) s += ", ";
        s += polyToString(R, vecComponent(R, v, c));
    }
    return s + ")";
}

static void genMonomials(const Ring& R, int var, int32_t left, Monomial cur,
                         std::vector<Monomial>& out) {
    if (var == R.nvars() - 1) {
        cur.e[var] = left;
        cur.deg += left;
        out.push_back(cur);
        return;
    }
    for (int32_t k = left; k >= 0; --k) {
        Monomial next = cur;
        next.e[var] = k;
        next.deg += k;
        genMonomials(R, var + 1, left - k, next, out);
    }
}

std::vector<Monomial> monomialsOfDegree(const Ring& R, int32_t deg) {
    std::vector<Monomial> out;
    if (deg < 0) return out;
    genMonomials(R, 0, deg, R.one(), out);
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return R.monoGT(a, b);
    });
    return out;
}

long long countMonomials(int nvars, int32_t deg) {
    if (deg < 0) return 0;
    // C(deg + nvars - 1, nvars - 1)
    long long r = 1;
    for (int i = 1; i <= nvars - 1; ++i) r = r * (deg + i) / i;
    return r;
}

}  // namespace lclab
