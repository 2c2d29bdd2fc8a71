#ifndef LCLAB_FIELD_HPP
#define LCLAB_FIELD_HPP

#include <cstdint>

#include "lclab/errors.hpp"

namespace lclab {

// Element of the prime field Z/p. The modulus lives in PrimeField; elements
// are plain residues so they stay cheap to copy around term lists.
struct Fp {
    uint32_t v = 0;

    bool operator==(const Fp& o) const { return v == o.v; }
    bool operator!=(const Fp& o) const { return v != o.v; }
    bool isZero() const { return v == 0; }
};

// Arithmetic in Z/p for a fixed odd prime p, checked by trial division at
// construction. One instance per session; all coefficients share it.
class PrimeField {
  public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p < 3 || !isPrime(p))
            throw StructuralError("coefficient modulus must be an odd prime, got " +
                                  std::to_string(p));
    }

    uint32_t modulus() const { return p_; }

    Fp make(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return Fp{static_cast<uint32_t>(r)};
    }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1}; }

    Fp add(Fp a, Fp b) const {
        uint32_t s = a.v + b.v;
        if (s >= p_) s -= p_;
        return Fp{s};
    }

    Fp sub(Fp a, Fp b) const {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
    }

    Fp neg(Fp a) const { return Fp{a.v == 0 ? 0 : p_ - a.v}; }

    Fp mul(Fp a, Fp b) const {
        return Fp{static_cast<uint32_t>((static_cast<uint64_t>(a.v) * b.v) % p_)};
    }

    // Extended Euclid; a must be nonzero.
    Fp inv(Fp a) const {
        if (a.v == 0) throw UndefinedInputError("inverse of 0 in prime field");
        int64_t t = 0, newt = 1;
        int64_t r = p_, newr = a.v;
        while (newr != 0) {
            int64_t q = r / newr;
            int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        if (t < 0) t += p_;
        return Fp{static_cast<uint32_t>(t)};
    }

    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    static bool isPrime(uint32_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

  private:
    uint32_t p_;
};

}  // namespace lclab

#endif
