#include "lclab/mora.hpp"

#include <algorithm>

namespace lclab {

namespace {

constexpr size_t kStepCap = 4'000'000;

struct Reducer {
    VectorElement v;
    Polynomial unit;  // contribution of f; zero for members of G
    std::vector<Polynomial> combo;
    int32_t ecart;
};

bool ltDivides(const VTerm& g, const VTerm& h) {
    return g.comp == h.comp && dividesMono(g.m, h.m);
}

}  // namespace

// Mora's weak normal form with ecart-minimal reducer selection. When the best
// reducer has larger ecart than the current remainder, the remainder itself
// joins the reducer pool; that reuse is what makes reduction terminate under
// a local ordering.
MoraResult weakNormalForm(const Ring& R, const ModuleOrder& O, const VectorElement& f,
                          const std::vector<VectorElement>& G, bool trackUnit,
                          size_t stepBudget, bool trackCombination) {
    const PrimeField& F = R.field();
    if (stepBudget == 0) stepBudget = kStepCap;
    if (trackCombination) trackUnit = true;
    MoraResult res;
    res.unit = polyConst(R, 1);
    if (trackCombination) res.combo.assign(G.size(), Polynomial{});
    if (f.isZero()) {
        res.r = vecZero(f.rank);
        return res;
    }

    std::vector<Reducer> pool;
    pool.reserve(G.size() + 8);
    for (size_t j = 0; j < G.size(); ++j) {
        if (G[j].isZero()) continue;
        Reducer red{G[j], Polynomial{}, {}, ecartV(O, G[j])};
        if (trackCombination) {
            red.combo.assign(G.size(), Polynomial{});
            red.combo[j] = polyConst(R, 1);
        }
        pool.push_back(std::move(red));
    }

    VectorElement h = f;
    Polynomial uh = res.unit;
    std::vector<Polynomial> ch = res.combo;
    size_t steps = 0;
    while (!h.isZero()) {
        if (++steps > stepBudget) throw LimitError("weak normal form exceeded step cap");
        int best = -1;
        int32_t hEcart = ecartV(O, h);
        for (size_t i = 0; i < pool.size(); ++i) {
            if (!ltDivides(pool[i].v.lt(), h.lt())) continue;
            if (best < 0 || pool[i].ecart < pool[best].ecart) best = static_cast<int>(i);
        }
        if (best < 0) break;
        if (pool[best].ecart > hEcart) pool.push_back({h, uh, ch, hEcart});
        const Reducer& red = pool[best];
        Fp c = F.neg(F.div(h.lt().c, red.v.lt().c));
        Monomial m = quotMono(h.lt().m, red.v.lt().m);
        h = axpyV(O, h, c, m, red.v);
        if (trackUnit) uh = addP(R, uh, mulTermP(R, c, m, red.unit));
        if (trackCombination)
            for (size_t j = 0; j < ch.size(); ++j)
                ch[j] = addP(R, ch[j], mulTermP(R, c, m, red.combo[j]));
    }
    res.r = std::move(h);
    res.unit = std::move(uh);
    res.combo = std::move(ch);
    return res;
}

static VectorElement makeMonic(const Ring& R, const VectorElement& v) {
    if (v.isZero()) return v;
    return scaleV(R, R.field().inv(v.lt().c), v);
}

// ---- standard bases via Lazard homogenization ----
//
// A direct Buchberger loop over a local ordering needs Mora reductions, and
// those can wander through enormous degrees before the stored remainders calm
// them down. Instead we homogenize the generators with one extra variable,
// run classical Buchberger under the induced global ordering (terminating,
// degree-by-degree), and dehomogenize: the result is a standard basis for the
// local ordering.

namespace {

Ring homogRing(const Ring& R) {
    std::vector<std::string> names = R.varNames();
    names.push_back("@h");
    return Ring(R.field().modulus(), std::move(names));
}

// classical head normal form under a global ordering
VectorElement headReduceGlobal(const Ring& Rh, const ModuleOrder& Oh,
                               const VectorElement& f,
                               const std::vector<VectorElement>& T) {
    const PrimeField& F = Rh.field();
    VectorElement h = f;
    size_t steps = 0;
    while (!h.isZero()) {
        if (++steps > kStepCap) throw LimitError("reduction exceeded step cap");
        bool hit = false;
        for (const VectorElement& g : T) {
            if (g.isZero() || !ltDivides(g.lt(), h.lt())) continue;
            Fp c = F.neg(F.div(h.lt().c, g.lt().c));
            Monomial m = quotMono(h.lt().m, g.lt().m);
            h = axpyV(Oh, h, c, m, g);
            hit = true;
            break;
        }
        if (!hit) break;
    }
    return h;
}

// reduce the tail as well; terminates under a global ordering
VectorElement tailReduceGlobal(const Ring& Rh, const ModuleOrder& Oh,
                               VectorElement h, const std::vector<VectorElement>& T) {
    const PrimeField& F = Rh.field();
    size_t steps = 0;
    size_t pos = 1;
    while (pos < h.t.size()) {
        if (++steps > kStepCap) throw LimitError("tail reduction exceeded step cap");
        bool hit = false;
        for (const VectorElement& g : T) {
            if (g.isZero() || !ltDivides(g.lt(), h.t[pos])) continue;
            Fp c = F.neg(F.div(h.t[pos].c, g.lt().c));
            Monomial m = quotMono(h.t[pos].m, g.lt().m);
            h = axpyV(Oh, h, c, m, g);
            hit = true;
            break;
        }
        if (!hit) ++pos;
    }
    return h;
}

// divide out the largest power of the homogenizing variable; every element
// between the homogenized module and its saturation dehomogenizes to the same
// standard basis
VectorElement divideOutHomogVar(VectorElement v, int hv) {
    if (v.isZero()) return v;
    int32_t k = std::numeric_limits<int32_t>::max();
    for (const VTerm& t : v.t) k = std::min(k, t.m.e[hv]);
    if (k <= 0) return v;
    for (VTerm& t : v.t) {
        t.m.e[hv] -= k;
        t.m.deg -= k;
    }
    return v;  // uniform weight drop keeps the term order
}

}  // namespace

namespace {

StandardBasis unitBasis(const Ring& R, const FreeModule& mod) {
    StandardBasis B;
    B.mod = mod;
    B.gens = {polyToVec(polyConst(R, 1), 1, 0)};
    B.reduced = true;
    return B;
}

// shared postprocessing: keep only generators whose leading terms are needed,
// normalize and order canonically
StandardBasis finalizeBasis(const Ring& R, const ModuleOrder& O,
                            std::vector<VectorElement> T) {
    StandardBasis B;
    B.mod = O.mod;
    if (O.mod.rank == 1) {
        for (const VectorElement& g : T)
            if (!g.isZero() && g.lt().m.isOne()) return unitBasis(R, O.mod);
    }
    std::vector<bool> drop(T.size(), false);
    for (size_t i = 0; i < T.size(); ++i) {
        for (size_t j = 0; j < T.size(); ++j) {
            if (i == j || drop[j] || T[i].isZero()) continue;
            if (T[j].isZero() || !ltDivides(T[j].lt(), T[i].lt())) continue;
            bool mutual = ltDivides(T[i].lt(), T[j].lt());
            if (!mutual || j < i) {
                drop[i] = true;
                break;
            }
        }
    }
    for (size_t i = 0; i < T.size(); ++i)
        if (!drop[i] && !T[i].isZero()) B.gens.push_back(makeMonic(R, T[i]));
    std::sort(B.gens.begin(), B.gens.end(), [&](const VectorElement& a,
                                                const VectorElement& b) {
        return O.cmp(a.lt(), b.lt()) == Cmp::GT;
    });
    B.reduced = true;
    return B;
}

// Direct Mora pair loop. Fast on ideal-shaped input where the ecart strategy
// behaves; throws LimitError when any single reduction exceeds its budget so
// the caller can switch strategies.
StandardBasis stdBasisMora(const Ring& R, const ModuleOrder& O,
                           const std::vector<VectorElement>& input) {
    constexpr size_t kWnfBudget = 10000;
    constexpr size_t kPairCap = 100000;

    std::vector<VectorElement> T = input;
    struct Pair {
        size_t i, j;
        int32_t weight;
    };
    std::vector<Pair> pairs;
    auto pushPairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (T[i].lt().comp != T[j].lt().comp) continue;
            Monomial u = lcmMono(T[i].lt().m, T[j].lt().m);
            if (O.mod.rank == 1 && u.deg == T[i].lt().m.deg + T[j].lt().m.deg)
                continue;  // product criterion (ideal case)
            pairs.push_back({i, j, u.deg + O.mod.shift(T[i].lt().comp)});
        }
    };
    for (size_t j = 0; j < T.size(); ++j) pushPairs(j);

    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > kPairCap) throw LimitError("pair cap");
        size_t pick = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].weight < pairs[pick].weight) pick = k;
        Pair pr = pairs[pick];
        pairs[pick] = pairs.back();
        pairs.pop_back();

        const VectorElement &f = T[pr.i], &g = T[pr.j];
        Monomial u = lcmMono(f.lt().m, g.lt().m);
        VectorElement s =
            subV(O, mulTermV(R, O, R.field().one(), quotMono(u, f.lt().m), f),
                 mulTermV(R, O, R.field().one(), quotMono(u, g.lt().m), g));
        VectorElement r = weakNormalForm(R, O, s, T, false, kWnfBudget).r;
        if (r.isZero()) continue;
        if (O.mod.rank == 1 && r.lt().m.isOne()) return unitBasis(R, O.mod);
        T.push_back(makeMonic(R, r));
        pushPairs(T.size() - 1);
    }
    return finalizeBasis(R, O, std::move(T));
}

// Lazard homogenization: Buchberger under the induced global ordering with
// the homogenizing variable divided out of every new element, then
// dehomogenize. Terminating regardless of input shape.
StandardBasis stdBasisLazard(const Ring& R, const ModuleOrder& O,
                             const std::vector<VectorElement>& input) {
    Ring Rh = homogRing(R);
    const int hv = R.nvars();
    ModuleOrder Oh{&Rh, O.mod, O.elimBlock, hv};

    // homogenize each generator to constant weighted degree
    std::vector<VectorElement> T;
    T.reserve(input.size());
    for (const VectorElement& g : input) {
        int32_t W = maxdegV(O, g);
        std::vector<VTerm> terms;
        terms.reserve(g.t.size());
        for (const VTerm& t : g.t) {
            Monomial m = Monomial::one(Rh.nvars());
            for (int i = 0; i < R.nvars(); ++i) m.e[i] = t.m.e[i];
            m.e[hv] = W - (t.m.deg + O.mod.shift(t.comp));
            m.deg = t.m.deg + m.e[hv];
            terms.push_back({m, t.comp, t.c});
        }
        T.push_back(makeMonic(Rh, normalizeVec(Oh, O.mod.rank, std::move(terms))));
    }

    struct Pair {
        size_t i, j;
        int32_t weight;
    };
    std::vector<Pair> pairs;
    auto pushPairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (T[i].lt().comp != T[j].lt().comp) continue;
            Monomial u = lcmMono(T[i].lt().m, T[j].lt().m);
            if (O.mod.rank == 1 && u.deg == T[i].lt().m.deg + T[j].lt().m.deg)
                continue;  // product criterion (ideal case, global order)
            pairs.push_back({i, j, u.deg + O.mod.shift(T[i].lt().comp)});
        }
    };
    for (size_t j = 0; j < T.size(); ++j) pushPairs(j);

    size_t processed = 0;
    while (!pairs.empty()) {
        if (++processed > kStepCap) throw LimitError("standard basis exceeded pair cap");
        size_t pick = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (pairs[k].weight < pairs[pick].weight) pick = k;
        Pair pr = pairs[pick];
        pairs[pick] = pairs.back();
        pairs.pop_back();

        const VectorElement &f = T[pr.i], &g = T[pr.j];
        Monomial u = lcmMono(f.lt().m, g.lt().m);
        VectorElement s =
            subV(Oh, mulTermV(Rh, Oh, Rh.field().one(), quotMono(u, f.lt().m), f),
                 mulTermV(Rh, Oh, Rh.field().one(), quotMono(u, g.lt().m), g));
        VectorElement r = headReduceGlobal(Rh, Oh, s, T);
        if (r.isZero()) continue;
        r = divideOutHomogVar(std::move(r), hv);
        r = headReduceGlobal(Rh, Oh, r, T);
        while (!r.isZero()) {
            VectorElement rr = divideOutHomogVar(r, hv);
            if (equalV(rr, r)) break;
            r = headReduceGlobal(Rh, Oh, std::move(rr), T);
        }
        if (r.isZero()) continue;
        r = tailReduceGlobal(Rh, Oh, std::move(r), T);
        r = divideOutHomogVar(std::move(r), hv);
        T.push_back(makeMonic(Rh, r));
        pushPairs(T.size() - 1);
    }

    // dehomogenize (set the extra variable to 1) back into the base ring
    std::vector<VectorElement> D;
    D.reserve(T.size());
    for (const VectorElement& g : T) {
        std::vector<VTerm> terms;
        terms.reserve(g.t.size());
        for (const VTerm& t : g.t) {
            Monomial m = Monomial::one(R.nvars());
            int32_t d = 0;
            for (int i = 0; i < R.nvars(); ++i) {
                m.e[i] = t.m.e[i];
                d += t.m.e[i];
            }
            m.deg = d;
            terms.push_back({m, t.comp, t.c});
        }
        D.push_back(normalizeVec(O, O.mod.rank, std::move(terms)));
    }
    return finalizeBasis(R, O, std::move(D));
}

}  // namespace

StandardBasis stdBasis(const Ring& R, const ModuleOrder& O,
                       std::vector<VectorElement> gens) {
    std::vector<VectorElement> input;
    for (VectorElement& g : gens) {
        if (g.isZero()) continue;
        input.push_back(makeMonic(R, g));
    }
    if (O.mod.rank == 1) {
        for (const VectorElement& g : input)
            if (g.lt().m.isOne()) return unitBasis(R, O.mod);
    }
    if (input.empty()) {
        StandardBasis B;
        B.mod = O.mod;
        B.reduced = true;
        return B;
    }
    // the Mora loop wins on ideal-shaped input, the homogenized Buchberger on
    // syzygy-shaped input; try the first with a budget and fall back
    try {
        return stdBasisMora(R, O, input);
    } catch (const LimitError&) {
        return stdBasisLazard(R, O, input);
    }
}

StandardBasis stdBasisIdeal(const Ring& R, const std::vector<Polynomial>& gens) {
    ModuleOrder O{&R, FreeModule{1, {}}, -1};
    return stdBasis(R, O, idealToVecs(gens));
}

bool isUnitIdeal(const StandardBasis& B) {
    if (B.mod.rank != 1) return false;
    for (const VectorElement& g : B.gens)
        if (!g.isZero() && g.lt().m.isOne()) return true;
    return false;
}

LeadingModule leadingModule(const Ring& R, const ModuleOrder& O, const StandardBasis& B) {
    (void)R;
    if (!B.reduced) throw PreconditionError("leading module requires a reduced basis");
    LeadingModule L;
    L.rank = B.mod.rank;
    L.byComp.assign(B.mod.rank, {});
    for (const VectorElement& g : B.gens)
        L.byComp[g.lt().comp].push_back(g.lt().m);
    // defensive divisibility prune; a reduced basis is already minimal here
    for (auto& ms : L.byComp) {
        std::vector<Monomial> kept;
        for (size_t i = 0; i < ms.size(); ++i) {
            bool red = false;
            for (size_t j = 0; j < ms.size() && !red; ++j)
                if (i != j && dividesMono(ms[j], ms[i]) &&
                    (!dividesMono(ms[i], ms[j]) || j < i))
                    red = true;
            if (!red) kept.push_back(ms[i]);
        }
        std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) {
            return O.ring->monoGT(a, b);
        });
        ms = std::move(kept);
    }
    return L;
}

// Membership in the localized module. The Mora reduction decides almost every
// input quickly; when it wanders past its budget we fall back to an exact
// criterion that always terminates: f lies in <G> iff (<G> : f) contains a
// unit, and the colon goes through the homogenized syzygy computation.
bool isMember(const Ring& R, const ModuleOrder& O, const VectorElement& f,
              const StandardBasis& B) {
    if (f.isZero()) return true;
    if (B.gens.empty()) return false;
    constexpr size_t kQuickBudget = 20000;
    try {
        return weakNormalForm(R, O, f, B.gens, false, kQuickBudget).r.isZero();
    } catch (const LimitError&) {
        std::vector<Polynomial> colon = colonIdeal(R, B.mod, B.gens, {f});
        StandardBasis C = stdBasisIdeal(R, colon);
        return isUnitIdeal(C);
    }
}

bool isMemberIdeal(const Ring& R, const Polynomial& f, const StandardBasis& B) {
    ModuleOrder O{&R, B.mod, -1};
    return isMember(R, O, polyToVec(f, 1, 0), B);
}

std::vector<VectorElement> idealToVecs(const std::vector<Polynomial>& gens) {
    std::vector<VectorElement> out;
    out.reserve(gens.size());
    for (const Polynomial& g : gens) out.push_back(polyToVec(g, 1, 0));
    return out;
}

std::vector<VectorElement> initialModuleStar(const Ring& R, const FreeModule& F,
                                             const std::vector<VectorElement>& gens) {
    ModuleOrder O{&R, F, -1};
    StandardBasis B = stdBasis(R, O, gens);
    if (B.gens.empty()) return {};

    std::vector<VectorElement> forms;
    forms.reserve(B.gens.size());
    for (const VectorElement& g : B.gens) forms.push_back(initialFormV(O, g));
    std::sort(forms.begin(), forms.end(), [&](const VectorElement& a,
                                              const VectorElement& b) {
        int32_t da = ordV(O, a), db = ordV(O, b);
        if (da != db) return da < db;
        return O.cmp(a.lt(), b.lt()) == Cmp::GT;
    });

    // graded Nakayama: ascending by degree, keep what the kept ones miss
    std::vector<VectorElement> kept;
    for (const VectorElement& v : forms) {
        if (kept.empty()) {
            kept.push_back(v);
            continue;
        }
        StandardBasis K = stdBasis(R, O, kept);
        if (!isMember(R, O, v, K)) kept.push_back(v);
    }
    return kept;
}

// Kernel via a standard basis of the graph module: elements (cols[j], e_j) in
// F + S^s under an ordering in which the F block dominates. Basis elements
// whose F part vanished are exactly the syzygies.
std::vector<VectorElement> syzygies(const Ring& R, const FreeModule& F,
                                    const std::vector<VectorElement>& cols) {
    const int r = F.rank;
    const int s = static_cast<int>(cols.size());
    if (s == 0) return {};

    FreeModule aug;
    aug.rank = r + s;
    aug.shifts.assign(r + s, 0);
    for (int c = 0; c < r; ++c) aug.shifts[c] = F.shift(c);
    ModuleOrder Oin{&R, F, -1};
    for (int j = 0; j < s; ++j) {
        int32_t o = ordV(Oin, cols[j]);
        aug.shifts[r + j] = (o == kInfDegree) ? 0 : o;
    }
    ModuleOrder O{&R, aug, r};

    std::vector<VectorElement> graph;
    graph.reserve(s);
    for (int j = 0; j < s; ++j) {
        if (!cols[j].isZero() && cols[j].rank != r)
            throw StructuralError("syzygy column rank mismatch");
        std::vector<VTerm> terms;
        for (const VTerm& t : cols[j].t) terms.push_back(t);
        terms.push_back({R.one(), r + j, R.field().one()});
        graph.push_back(normalizeVec(O, r + s, std::move(terms)));
    }

    StandardBasis B = stdBasis(R, O, std::move(graph));
    std::vector<VectorElement> out;
    for (const VectorElement& g : B.gens) {
        bool pure = true;
        for (const VTerm& t : g.t)
            if (t.comp < r) {
                pure = false;
                break;
            }
        if (!pure) continue;
        VectorElement z;
        z.rank = s;
        z.t.reserve(g.t.size());
        for (const VTerm& t : g.t) z.t.push_back({t.m, t.comp - r, t.c});
        ModuleOrder Oz{&R, FreeModule{s, {}}, -1};
        out.push_back(normalizeVec(Oz, s, std::move(z.t)));
    }
    return out;
}

std::vector<Polynomial> colonIdeal(const Ring& R, const FreeModule& F,
                                   const std::vector<VectorElement>& sub,
                                   const std::vector<VectorElement>& targets) {
    std::vector<VectorElement> K;
    for (const VectorElement& t : targets)
        if (!t.isZero()) K.push_back(t);
    if (K.empty()) return {polyConst(R, 1)};

    const int r = F.rank;
    const int s = static_cast<int>(K.size());
    FreeModule big{r * s, {}};
    ModuleOrder Obig{&R, big, -1};

    auto intoBlock = [&](const VectorElement& v, int block) {
        std::vector<VTerm> terms;
        terms.reserve(v.t.size());
        for (const VTerm& t : v.t) terms.push_back({t.m, t.comp + block * r, t.c});
        return normalizeVec(Obig, big.rank, std::move(terms));
    };

    std::vector<VectorElement> cols;
    VectorElement stacked = vecZero(big.rank);
    {
        std::vector<VTerm> terms;
        for (int j = 0; j < s; ++j)
            for (const VTerm& t : K[j].t) terms.push_back({t.m, t.comp + j * r, t.c});
        stacked = normalizeVec(Obig, big.rank, std::move(terms));
    }
    cols.push_back(stacked);
    for (const VectorElement& d : sub) {
        if (d.isZero()) continue;
        for (int j = 0; j < s; ++j) cols.push_back(intoBlock(d, j));
    }

    std::vector<VectorElement> syz = syzygies(R, big, cols);
    std::vector<Polynomial> gens;
    for (const VectorElement& z : syz) {
        Polynomial a = vecComponent(R, z, 0);
        if (!a.isZero()) gens.push_back(a);
    }
    StandardBasis B = stdBasisIdeal(R, gens);
    std::vector<Polynomial> out;
    for (const VectorElement& g : B.gens) out.push_back(vecComponent(R, g, 0));
    return out;
}

// Membership in <B> + m^N decided by head reductions carried out in the
// truncation below degree N; every leading term of a member is reducible
// there, so the loop runs over a finite monomial set.
static bool memberModPower(const Ring& R, const StandardBasis& B, const Polynomial& f,
                           int32_t N) {
    ModuleOrder O{&R, B.mod, -1};
    VectorElement h = polyToVec(truncateModPower(R, f, N), 1, 0);
    size_t steps = 0;
    while (!h.isZero()) {
        if (++steps > kStepCap) throw LimitError("truncated reduction exceeded step cap");
        bool reduced = false;
        for (const VectorElement& g : B.gens) {
            if (g.isZero() || !dividesMono(g.lt().m, h.lt().m)) continue;
            Fp c = R.field().neg(R.field().div(h.lt().c, g.lt().c));
            Monomial m = quotMono(h.lt().m, g.lt().m);
            h = truncateModPowerV(O, axpyV(O, h, c, m, g), N);
            reduced = true;
            break;
        }
        if (!reduced) return false;
    }
    return true;
}

bool congruentModPower(const Ring& R, const std::vector<Polynomial>& I,
                       const std::vector<Polynomial>& J, int32_t N) {
    if (N < 0) throw PreconditionError("congruence level must be non-negative");
    if (N == 0) return true;
    StandardBasis BI = stdBasisIdeal(R, I);
    StandardBasis BJ = stdBasisIdeal(R, J);
    for (const Polynomial& f : I)
        if (!memberModPower(R, BJ, f, N)) return false;
    for (const Polynomial& g : J)
        if (!memberModPower(R, BI, g, N)) return false;
    return true;
}

std::vector<VectorElement> minimalSubmoduleGens(const Ring& R, const FreeModule& F,
                                                std::vector<VectorElement> gens) {
    ModuleOrder O{&R, F, -1};
    std::vector<VectorElement> kept;
    for (VectorElement& g : gens)
        if (!g.isZero()) kept.push_back(std::move(g));

    // an element is redundant iff it lies in the localized span of the others
    for (size_t i = 0; i < kept.size();) {
        std::vector<VectorElement> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (others.empty()) break;
        StandardBasis B = stdBasis(R, O, others);
        if (isMember(R, O, kept[i], B))
            kept.erase(kept.begin() + static_cast<long>(i));
        else
            ++i;
    }
    return kept;
}

std::vector<Polynomial> minimalIdealGens(const Ring& R, std::vector<Polynomial> gens) {
    FreeModule F{1, {}};
    std::vector<VectorElement> vs = minimalSubmoduleGens(R, F, idealToVecs(gens));
    std::vector<Polynomial> out;
    out.reserve(vs.size());
    for (const VectorElement& v : vs) out.push_back(vecComponent(R, v, 0));
    return out;
}

bool sameIdeal(const Ring& R, const std::vector<Polynomial>& A,
               const std::vector<Polynomial>& B) {
    StandardBasis BA = stdBasisIdeal(R, A);
    StandardBasis BB = stdBasisIdeal(R, B);
    for (const Polynomial& a : A)
        if (!isMemberIdeal(R, a, BB)) return false;
    for (const Polynomial& b : B)
        if (!isMemberIdeal(R, b, BA)) return false;
    return true;
}

}  // namespace lclab
