#include "lclab/hilbert.hpp"

#include <algorithm>

namespace lclab {

HilbertData::HilbertData(int nvars, std::vector<long long> numerator)
    : nvars_(nvars), num_(std::move(numerator)) {
    trim();
}

void HilbertData::trim() {
    while (!num_.empty() && num_.back() == 0) num_.pop_back();
}

static long long binom(long long n, int k) {
    if (n < 0 || k < 0) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long HilbertData::value(int32_t n) const {
    if (n < 0) return 0;
    long long v = 0;
    for (size_t j = 0; j < num_.size() && static_cast<int32_t>(j) <= n; ++j)
        v += num_[j] * binom(n - static_cast<int32_t>(j) + nvars_ - 1, nvars_ - 1);
    return v;
}

std::vector<long long> HilbertData::prefix(int32_t upto) const {
    std::vector<long long> out;
    out.reserve(upto + 1);
    for (int32_t n = 0; n <= upto; ++n) out.push_back(value(n));
    return out;
}

// Divide the numerator by (1-t) as often as it stays exact; what remains of
// nvars determines the dimension.
static int divideOutOnes(std::vector<long long>& p) {
    int k = 0;
    auto evalAtOne = [&]() {
        long long s = 0;
        for (long long c : p) s += c;
        return s;
    };
    while (!p.empty() && evalAtOne() == 0) {
        // p(t) = (1-t) q(t): q_i = p_i + q_{i-1}
        std::vector<long long> q(p.size() > 0 ? p.size() - 1 : 0, 0);
        long long carry = 0;
        for (size_t i = 0; i + 1 < p.size() || i < q.size(); ++i) {
            carry = p[i] + carry;
            if (i < q.size()) q[i] = carry;
        }
        p = std::move(q);
        while (!p.empty() && p.back() == 0) p.pop_back();
        ++k;
    }
    return k;
}

std::optional<int> HilbertData::dim() const {
    if (num_.empty()) return std::nullopt;
    std::vector<long long> p = num_;
    int k = divideOutOnes(p);
    if (p.empty()) return std::nullopt;  // series vanished: zero module
    return nvars_ - k;
}

std::optional<long long> HilbertData::finiteLength() const {
    if (num_.empty()) return 0;
    std::vector<long long> p = num_;
    int k = divideOutOnes(p);
    if (p.empty()) return 0;
    if (nvars_ - k > 0) return std::nullopt;
    long long s = 0;
    for (long long c : p) s += c;
    return s;
}

int32_t HilbertData::lastNonzeroDegree() const {
    std::vector<long long> p = num_;
    int k = divideOutOnes(p);
    if (p.empty()) return -1;
    if (nvars_ - k > 0) throw PreconditionError("infinite module has no top degree");
    // p is the full Hilbert series polynomial
    int32_t last = -1;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) last = static_cast<int32_t>(i);
    return last;
}

int32_t HilbertData::stabilizationDegree() const {
    return num_.empty() ? 0 : static_cast<int32_t>(num_.size() - 1);
}

HilbertData HilbertData::operator-(const HilbertData& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("Hilbert data over different rings");
    std::vector<long long> p(std::max(num_.size(), o.num_.size()), 0);
    for (size_t i = 0; i < num_.size(); ++i) p[i] += num_[i];
    for (size_t i = 0; i < o.num_.size(); ++i) p[i] -= o.num_[i];
    return HilbertData(nvars_, std::move(p));
}

HilbertData HilbertData::operator+(const HilbertData& o) const {
    if (nvars_ != o.nvars_) throw StructuralError("Hilbert data over different rings");
    std::vector<long long> p(std::max(num_.size(), o.num_.size()), 0);
    for (size_t i = 0; i < num_.size(); ++i) p[i] += num_[i];
    for (size_t i = 0; i < o.num_.size(); ++i) p[i] += o.num_[i];
    return HilbertData(nvars_, std::move(p));
}

// Numerator of the Hilbert series of S/L for a monomial ideal L, by the
// classical colon recursion: N(L + m) = N(L) - t^deg(m) N(L : m).
static void minimalizeMonos(std::vector<Monomial>& ms) {
    std::vector<Monomial> kept;
    for (size_t i = 0; i < ms.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < ms.size() && !red; ++j)
            if (i != j && dividesMono(ms[j], ms[i]) &&
                (!dividesMono(ms[i], ms[j]) || j < i))
                red = true;
        if (!red) kept.push_back(ms[i]);
    }
    ms = std::move(kept);
}

static std::vector<long long> numeratorOfMonomialIdeal(std::vector<Monomial> gens) {
    minimalizeMonos(gens);
    if (gens.empty()) return {1};
    for (const Monomial& g : gens)
        if (g.isOne()) return {};
    if (gens.size() == 1) {
        std::vector<long long> p(gens[0].deg + 1, 0);
        p[0] = 1;
        p[gens[0].deg] -= 1;
        return p;
    }
    Monomial pivot = gens.back();
    std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
    std::vector<Monomial> colon;
    colon.reserve(rest.size());
    for (const Monomial& g : rest) {
        Monomial q = g;
        q.deg = 0;
        for (int i = 0; i < g.nvars; ++i) {
            q.e[i] = std::max<int32_t>(0, g.e[i] - pivot.e[i]);
            q.deg += q.e[i];
        }
        colon.push_back(q);
    }
    std::vector<long long> a = numeratorOfMonomialIdeal(rest);
    std::vector<long long> b = numeratorOfMonomialIdeal(std::move(colon));
    std::vector<long long> out(std::max(a.size(), b.size() + pivot.deg), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i + pivot.deg] -= b[i];
    return out;
}

HilbertData hilbertFunction(const Ring& R, const LeadingModule& L,
                            const std::vector<int32_t>& shifts) {
    if (!shifts.empty() && static_cast<int>(shifts.size()) != L.rank)
        throw StructuralError("shift list does not match rank");
    std::vector<long long> total;
    for (int c = 0; c < L.rank; ++c) {
        std::vector<long long> p = numeratorOfMonomialIdeal(L.byComp[c]);
        int32_t s = shifts.empty() ? 0 : shifts[c];
        if (s < 0) throw StructuralError("negative shifts are not supported here");
        if (total.size() < p.size() + s) total.resize(p.size() + s, 0);
        for (size_t i = 0; i < p.size(); ++i) total[i + s] += p[i];
    }
    (void)R;
    return HilbertData(R.nvars(), std::move(total));
}

HilbertData hilbertOfIdeal(const Ring& R, const std::vector<Polynomial>& gens) {
    StandardBasis B = stdBasisIdeal(R, gens);
    ModuleOrder O{&R, B.mod, -1};
    return hilbertFunction(R, leadingModule(R, O, B));
}

bool hfEqual(const Ring& R, const std::vector<Polynomial>& I,
             const std::vector<Polynomial>& J) {
    return hilbertOfIdeal(R, I) == hilbertOfIdeal(R, J);
}

int krullDim(const Ring& R, const LeadingModule& L) {
    std::optional<int> d = hilbertFunction(R, L).dim();
    if (!d) throw PreconditionError("Krull dimension of the empty quotient");
    return *d;
}

std::optional<long long> finiteLength(const Ring& R, const LeadingModule& L) {
    return hilbertFunction(R, L).finiteLength();
}

std::vector<int32_t> minGradedGeneratorDegrees(const Ring& R, const FreeModule& F,
                                               const std::vector<VectorElement>& gens) {
    ModuleOrder O{&R, F, -1};
    std::vector<VectorElement> nz;
    for (const VectorElement& g : gens) {
        if (g.isZero()) continue;
        if (!isHomogeneousV(O, g))
            throw PreconditionError("minimal graded generators need homogeneous input");
        nz.push_back(g);
    }
    std::sort(nz.begin(), nz.end(), [&](const VectorElement& a, const VectorElement& b) {
        int32_t da = ordV(O, a), db = ordV(O, b);
        if (da != db) return da < db;
        return O.cmp(a.lt(), b.lt()) == Cmp::GT;
    });
    std::vector<VectorElement> kept;
    std::vector<int32_t> degs;
    for (const VectorElement& v : nz) {
        bool redundant = false;
        if (!kept.empty()) {
            StandardBasis B = stdBasis(R, O, kept);
            redundant = isMember(R, O, v, B);
        }
        if (!redundant) {
            kept.push_back(v);
            degs.push_back(ordV(O, v));
        }
    }
    return degs;
}

int32_t artinRees(const Ring& R, const FreeModule& F,
                  const std::vector<VectorElement>& gens) {
    std::vector<VectorElement> star = initialModuleStar(R, F, gens);
    if (star.empty()) return 0;  // zero module, by convention
    ModuleOrder O{&R, F, -1};
    int32_t top = 0;
    for (const VectorElement& v : star) top = std::max(top, ordV(O, v));
    return top;
}

}  // namespace lclab
