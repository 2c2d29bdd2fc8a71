#ifndef LCLAB_RING_HPP
#define LCLAB_RING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lclab/field.hpp"

namespace lclab {

// The engine works in the localization of k[x_1..x_n] at (x_1..x_n) with a
// fixed number of variables; exponent vectors are stored inline.
constexpr int kMaxVars = 8;

enum class Cmp { LT, EQ, GT };

struct Monomial {
    std::array<int32_t, kMaxVars> e{};
    int32_t deg = 0;
    uint8_t nvars = 0;

    static Monomial one(int nvars) {
        Monomial m;
        m.nvars = static_cast<uint8_t>(nvars);
        return m;
    }

    static Monomial var(int nvars, int i, int32_t k = 1) {
        Monomial m = one(nvars);
        m.e[i] = k;
        m.deg = k;
        return m;
    }

    bool isOne() const { return deg == 0; }

    bool operator==(const Monomial& o) const {
        if (nvars != o.nvars || deg != o.deg) return false;
        for (int i = 0; i < nvars; ++i)
            if (e[i] != o.e[i]) return false;
        return true;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mulMono(const Monomial& a, const Monomial& b) {
    if (a.nvars != b.nvars) throw StructuralError("monomial variable count mismatch");
    Monomial r = a;
    for (int i = 0; i < a.nvars; ++i) r.e[i] += b.e[i];
    r.deg += b.deg;
    return r;
}

inline bool dividesMono(const Monomial& a, const Monomial& b) {
    // a | b
    if (a.nvars != b.nvars) throw StructuralError("monomial variable count mismatch");
    if (a.deg > b.deg) return false;
    for (int i = 0; i < a.nvars; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Monomial quotMono(const Monomial& b, const Monomial& a) {
    // b / a, assuming a | b
    Monomial r = b;
    for (int i = 0; i < b.nvars; ++i) r.e[i] -= a.e[i];
    r.deg -= a.deg;
    return r;
}

inline Monomial lcmMono(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg = 0;
    for (int i = 0; i < a.nvars; ++i) {
        r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
        r.deg += r.e[i];
    }
    return r;
}

// Session-wide ring context: coefficient field, variables, and the local
// monomial ordering (smaller total degree wins, reverse-lexicographic
// tie-break, so 1 is the largest monomial).
class Ring {
  public:
    Ring(uint32_t p, std::vector<std::string> vars)
        : field_(p), vars_(std::move(vars)) {
        if (vars_.empty() || vars_.size() > kMaxVars)
            throw StructuralError("variable count must be between 1 and " +
                                  std::to_string(kMaxVars));
    }

    const PrimeField& field() const { return field_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& varNames() const { return vars_; }

    Monomial one() const { return Monomial::one(nvars()); }
    Monomial var(int i, int32_t k = 1) const { return Monomial::var(nvars(), i, k); }

    // Local degree ordering: lower total degree is larger; within a degree the
    // last variable with a differing exponent decides, smaller exponent wins.
    Cmp cmpMono(const Monomial& a, const Monomial& b) const {
        if (a.nvars != nvars() || b.nvars != nvars())
            throw StructuralError("monomial does not match ring variable count");
        if (a.deg != b.deg) return a.deg < b.deg ? Cmp::GT : Cmp::LT;
        for (int i = nvars() - 1; i >= 0; --i) {
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? Cmp::GT : Cmp::LT;
        }
        return Cmp::EQ;
    }

    bool monoGT(const Monomial& a, const Monomial& b) const {
        return cmpMono(a, b) == Cmp::GT;
    }

    std::string monoToString(const Monomial& m) const {
        if (m.isOne()) return "1";
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            if (m.e[i] == 0) continue;
            if (!s.empty()) s += "*";
            s += vars_[i];
            if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
        }
        return s;
    }

  private:
    PrimeField field_;
    std::vector<std::string> vars_;
};

}  // namespace lclab

#endif
