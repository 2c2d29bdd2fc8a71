#ifndef LCLAB_RESOLUTION_HPP
#define LCLAB_RESOLUTION_HPP

#include <vector>

#include "lclab/hilbert.hpp"

namespace lclab {

// Matrix with polynomial entries, stored as columns living in S^dstRank.
struct PolyMatrix {
    int dstRank = 0;
    std::vector<VectorElement> cols;

    int srcRank() const { return static_cast<int>(cols.size()); }
};

PolyMatrix transposeMatrix(const Ring& R, const PolyMatrix& M);
VectorElement applyMatrix(const Ring& R, const PolyMatrix& M, const VectorElement& v);

// Chain complex of free modules F_0 <- F_1 <- ... <- F_len with maps[k] the
// matrix of F_{k+1} -> F_k. For a minimal free resolution every entry lies in
// the maximal ideal and shifts[k] records the generator orders of F_k.
struct FreeComplex {
    std::vector<int> ranks;
    std::vector<PolyMatrix> maps;
    std::vector<std::vector<int32_t>> shifts;

    int length() const { return static_cast<int>(maps.size()); }
};

// Minimal free resolution of S/I for a proper ideal I, built by iterated
// syzygies with each generating set pruned to a minimal one.
FreeComplex freeResolution(const Ring& R, const std::vector<Polynomial>& igens);

// Ranks of a minimal complex; rejects complexes with unit entries.
std::vector<int> bettiNumbers(const Ring& R, const FreeComplex& C);

bool composeCheck(const Ring& R, const FreeComplex& C);

// Every entry of every map lies in the maximal ideal.
bool isMinimalComplex(const Ring& R, const FreeComplex& C);

}  // namespace lclab

#endif
