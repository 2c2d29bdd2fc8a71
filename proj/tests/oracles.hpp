#ifndef LCLAB_TEST_ORACLES_HPP
#define LCLAB_TEST_ORACLES_HPP

// Brute-force reference computations used by the test suites. Everything here
// is plain linear algebra over the prime field, independent of the standard
// basis engine it checks.

#include <map>

#include "test_util.hpp"

namespace lcoracle {

using namespace lclab;

// dense row reduction over the prime field; returns the rank
inline int rankOf(const Ring& R, std::vector<std::vector<Fp>>& rows, int ncols) {
    const PrimeField& F = R.field();
    int rank = 0;
    for (int col = 0; col < ncols && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].isZero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Fp inv = F.inv(rows[rank][col]);
        for (int c = col; c < ncols; ++c) rows[rank][c] = F.mul(inv, rows[rank][c]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].isZero()) continue;
            Fp s = rows[r][col];
            for (int c = col; c < ncols; ++c)
                rows[r][c] = F.sub(rows[r][c], F.mul(s, rows[rank][c]));
        }
        ++rank;
    }
    return rank;
}

// basis of all monomial vectors (comp, monomial) of weighted degree <= cap
struct TruncBasis {
    std::map<std::pair<int, std::vector<int32_t>>, int> index;
    std::vector<std::pair<int, Monomial>> list;
    int degreeOf(int i) const { return list[i].second.deg; }
};

inline TruncBasis truncBasis(const Ring& R, int rank, int32_t cap) {
    TruncBasis B;
    for (int c = 0; c < rank; ++c) {
        for (int32_t d = 0; d <= cap; ++d) {
            for (const Monomial& m : monomialsOfDegree(R, d)) {
                std::vector<int32_t> key(m.e.begin(), m.e.begin() + R.nvars());
                B.index[{c, key}] = static_cast<int>(B.list.size());
                B.list.push_back({c, m});
            }
        }
    }
    return B;
}

inline std::vector<Fp> vecRow(const Ring& R, const TruncBasis& B,
                              const VectorElement& v, int32_t cap) {
    std::vector<Fp> row(B.list.size(), Fp{0});
    for (const VTerm& t : v.t) {
        if (t.m.deg > cap) continue;
        std::vector<int32_t> key(t.m.e.begin(), t.m.e.begin() + R.nvars());
        row[B.index.at({t.comp, key})] = t.c;
    }
    return row;
}

// all truncated monomial multiples of the generators: a spanning set of the
// image of <gens> in F/m^{cap+1}F
inline std::vector<std::vector<Fp>> truncatedMultiples(
    const Ring& R, const std::vector<VectorElement>& gens, int rank,
    const TruncBasis& B, int32_t cap) {
    ModuleOrder O{&R, FreeModule{rank, {}}, -1};
    std::vector<std::vector<Fp>> rows;
    for (const VectorElement& g : gens) {
        if (g.isZero()) continue;
        int32_t o = ordV(O, g);
        for (int32_t d = 0; d + o <= cap; ++d) {
            for (const Monomial& m : monomialsOfDegree(R, d)) {
                VectorElement gm = mulTermV(R, O, R.field().one(), m, g);
                rows.push_back(vecRow(R, B, gm, cap));
            }
        }
    }
    return rows;
}

// dim_k of F / (<gens> + m^{n}F), F free of the given rank
inline long long dimTruncQuotient(const Ring& R, const std::vector<VectorElement>& gens,
                                  int rank, int32_t n) {
    if (n <= 0) return 0;
    int32_t cap = n - 1;
    TruncBasis B = truncBasis(R, rank, cap);
    std::vector<std::vector<Fp>> rows = truncatedMultiples(R, gens, rank, B, cap);
    long long total = static_cast<long long>(B.list.size());
    if (rows.empty()) return total;
    return total - rankOf(R, rows, static_cast<int>(B.list.size()));
}

// Hilbert function of R/I at degree n via dimension differences of truncations
inline long long hfOracle(const Ring& R, const std::vector<Polynomial>& I, int32_t n) {
    std::vector<VectorElement> gens = idealToVecs(I);
    return dimTruncQuotient(R, gens, 1, n + 1) - dimTruncQuotient(R, gens, 1, n);
}

// dim of degree-n part of the initial module of <N> inside gr(F), computed by
// column elimination: rank of the image of N in F/m^{n+1}F relative to the
// columns of degree < n
inline long long starHFOracle(const Ring& R, const std::vector<VectorElement>& gens,
                              int rank, int32_t n) {
    TruncBasis B = truncBasis(R, rank, n);
    std::vector<std::vector<Fp>> rows = truncatedMultiples(R, gens, rank, B, n);
    if (rows.empty()) return 0;
    // reorder columns: degree < n first, then degree exactly n
    std::vector<int> order;
    for (size_t i = 0; i < B.list.size(); ++i)
        if (B.degreeOf(static_cast<int>(i)) < n) order.push_back(static_cast<int>(i));
    size_t lowCount = order.size();
    for (size_t i = 0; i < B.list.size(); ++i)
        if (B.degreeOf(static_cast<int>(i)) == n) order.push_back(static_cast<int>(i));
    std::vector<std::vector<Fp>> perm(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        perm[r].resize(order.size());
        for (size_t c = 0; c < order.size(); ++c) perm[r][c] = rows[r][order[c]];
    }
    auto copyLow = perm;
    for (auto& row : copyLow) row.resize(lowCount);
    int rankFull = rankOf(R, perm, static_cast<int>(order.size()));
    int rankLow = rankOf(R, copyLow, static_cast<int>(lowCount));
    return rankFull - rankLow;
}

// dim of degree-n part of the initial module of the quotient (N/L) inside
// gr(F/L): dim(W_N cap (D_n + W_L)) - dim W_L with everything in F/m^{n+1}F
inline long long starQuotientHFOracle(const Ring& R,
                                      const std::vector<VectorElement>& ngens,
                                      const std::vector<VectorElement>& lgens,
                                      int rank, int32_t n) {
    TruncBasis B = truncBasis(R, rank, n);
    std::vector<std::vector<Fp>> WN = truncatedMultiples(R, ngens, rank, B, n);
    std::vector<std::vector<Fp>> WL = truncatedMultiples(R, lgens, rank, B, n);
    std::vector<std::vector<Fp>> Dn;
    for (size_t i = 0; i < B.list.size(); ++i) {
        if (B.degreeOf(static_cast<int>(i)) != n) continue;
        std::vector<Fp> row(B.list.size(), Fp{0});
        row[i] = R.field().one();
        Dn.push_back(row);
    }
    int ncols = static_cast<int>(B.list.size());
    auto rk = [&](std::vector<std::vector<Fp>> rows) {
        return rows.empty() ? 0 : rankOf(R, rows, ncols);
    };
    auto unite = [](const std::vector<std::vector<Fp>>& a,
                    const std::vector<std::vector<Fp>>& b) {
        std::vector<std::vector<Fp>> u = a;
        u.insert(u.end(), b.begin(), b.end());
        return u;
    };
    int dimWN = rk(WN);
    int dimWL = rk(WL);
    int dimDL = rk(unite(Dn, WL));
    int dimAll = rk(unite(WN, unite(Dn, WL)));
    // dim(A cap B) = dim A + dim B - dim(A + B)
    return (dimWN + dimDL - dimAll) - dimWL;
}

// length of (I : m^inf)/I by saturating with iterated colon and summing the
// star Hilbert function of the quotient
inline long long saturationLengthOracle(const Ring& R,
                                        const std::vector<Polynomial>& I) {
    FreeModule amb{1, {}};
    std::vector<VectorElement> mgens;
    for (int v = 0; v < R.nvars(); ++v)
        mgens.push_back(polyToVec(polyTerm(R, R.field().one(), R.var(v)), 1, 0));
    std::vector<Polynomial> cur = I;
    for (int guard = 0; guard < 64; ++guard) {
        std::vector<Polynomial> next = colonIdeal(R, amb, idealToVecs(cur), mgens);
        if (sameIdeal(R, next, cur)) break;
        cur = std::move(next);
    }
    // ell(sat/I) = sum over degrees of (SM_I(n) - SM_sat(n))
    HilbertData hi = hilbertOfIdeal(R, I);
    HilbertData hs = hilbertOfIdeal(R, cur);
    std::optional<long long> len = (hi - hs).finiteLength();
    if (!len) throw EngineError("saturation quotient should have finite length");
    return *len;
}

}  // namespace lcoracle

#endif
