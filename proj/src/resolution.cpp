#include "lclab/resolution.hpp"

namespace lclab {

PolyMatrix transposeMatrix(const Ring& R, const PolyMatrix& M) {
    PolyMatrix T;
    T.dstRank = M.srcRank();
    T.cols.assign(M.dstRank, vecZero(M.srcRank()));
    ModuleOrder O{&R, FreeModule{M.srcRank(), {}}, -1};
    for (int j = 0; j < M.srcRank(); ++j) {
        for (const VTerm& t : M.cols[j].t) {
            T.cols[t.comp].t.push_back({t.m, j, t.c});
        }
    }
    for (VectorElement& c : T.cols) c = normalizeVec(O, M.srcRank(), std::move(c.t));
    return T;
}

VectorElement applyMatrix(const Ring& R, const PolyMatrix& M, const VectorElement& v) {
    ModuleOrder O{&R, FreeModule{M.dstRank, {}}, -1};
    VectorElement out = vecZero(M.dstRank);
    for (int j = 0; j < M.srcRank(); ++j) {
        Polynomial c = vecComponent(R, v, j);
        if (c.isZero()) continue;
        out = addV(O, out, mulPolyVec(R, O, c, M.cols[j]));
    }
    return out;
}

FreeComplex freeResolution(const Ring& R, const std::vector<Polynomial>& igens) {
    StandardBasis B = stdBasisIdeal(R, igens);
    if (isUnitIdeal(B))
        throw PreconditionError("cannot resolve the unit ideal");

    FreeComplex C;
    C.ranks.push_back(1);
    C.shifts.push_back({0});

    std::vector<Polynomial> mins = minimalIdealGens(R, igens);
    if (mins.empty()) return C;  // zero ideal: S resolves itself

    FreeModule amb{1, {}};
    std::vector<VectorElement> cols = idealToVecs(mins);
    while (!cols.empty()) {
        PolyMatrix M;
        M.dstRank = amb.rank;
        M.cols = cols;
        C.maps.push_back(M);
        C.ranks.push_back(M.srcRank());
        std::vector<int32_t> sh;
        ModuleOrder O{&R, amb, -1};
        for (const VectorElement& c : cols) sh.push_back(ordV(O, c));
        C.shifts.push_back(sh);

        if (C.length() > R.nvars())
            throw LimitError("resolution exceeded the global dimension bound");

        std::vector<VectorElement> syz = syzygies(R, amb, cols);
        amb = FreeModule{M.srcRank(), {}};
        cols = minimalSubmoduleGens(R, amb, std::move(syz));
    }
    return C;
}

std::vector<int> bettiNumbers(const Ring& R, const FreeComplex& C) {
    if (!isMinimalComplex(R, C))
        throw PreconditionError("Betti numbers require a minimal complex");
    return C.ranks;
}

bool composeCheck(const Ring& R, const FreeComplex& C) {
    for (int k = 0; k + 1 < C.length(); ++k) {
        for (const VectorElement& col : C.maps[k + 1].cols) {
            if (!applyMatrix(R, C.maps[k], col).isZero()) return false;
        }
    }
    return true;
}

bool isMinimalComplex(const Ring& R, const FreeComplex& C) {
    (void)R;
    for (const PolyMatrix& M : C.maps)
        for (const VectorElement& col : M.cols)
            for (const VTerm& t : col.t)
                if (t.m.isOne()) return false;
    return true;
}

}  // namespace lclab
