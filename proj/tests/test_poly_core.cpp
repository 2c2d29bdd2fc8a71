#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace lctest;

TEST_CASE("prime field arithmetic") {
    PrimeField F(32003);
    CHECK(F.add(F.make(32000), F.make(5)).v == 2);
    CHECK(F.mul(F.make(-1), F.make(-1)).v == 1);
    for (long long a : {1, 2, 17, 31999, 12345}) {
        Fp x = F.make(a);
        CHECK(F.mul(x, F.inv(x)).v == 1);
    }
    CHECK_THROWS_AS(PrimeField(32004), StructuralError);
    CHECK_THROWS_AS(PrimeField(2), StructuralError);  // odd primes only
    CHECK_THROWS_AS(F.inv(F.zero()), UndefinedInputError);
}

TEST_CASE("local ordering basics") {
    Ring R = ring3();
    Monomial one = R.one();
    Monomial x = mono(R, "x"), x2 = mono(R, "x^2"), xy = mono(R, "x*y"),
             z2 = mono(R, "z^2");

    // the unit dominates, lower degree wins
    CHECK(cmpMonomials(R, one, x) == Cmp::GT);
    CHECK(cmpMonomials(R, x, x2) == Cmp::GT);
    CHECK(cmpMonomials(R, x2, x2) == Cmp::EQ);

    // the reverse-lex tie-break, enumerated by hand in degree 2:
    // x^2 > xy > y^2 > xz > yz > z^2
    std::vector<std::string> chain = {"x^2", "x*y", "y^2", "x*z", "y*z", "z^2"};
    for (size_t i = 0; i < chain.size(); ++i)
        for (size_t j = i + 1; j < chain.size(); ++j)
            CHECK(cmpMonomials(R, mono(R, chain[i]), mono(R, chain[j])) == Cmp::GT);
    CHECK(cmpMonomials(R, xy, z2) == Cmp::GT);

    Ring R2 = ring2();
    CHECK_THROWS_AS(cmpMonomials(R, mono(R2, "x"), x), StructuralError);
}

TEST_CASE("ordering laws on random monomials") {
    Ring R = ring3();
    Rng rng(7);
    for (int it = 0; it < 300; ++it) {
        Monomial a = randomMonomial(R, rng, 0, 6);
        Monomial b = randomMonomial(R, rng, 0, 6);
        Monomial c = randomMonomial(R, rng, 0, 6);

        // totality and antisymmetry
        Cmp ab = cmpMonomials(R, a, b);
        Cmp ba = cmpMonomials(R, b, a);
        if (ab == Cmp::EQ) {
            CHECK(a == b);
        } else {
            CHECK(ab != ba);
        }
        // multiplicativity
        if (ab == Cmp::GT)
            CHECK(cmpMonomials(R, mulMono(c, a), mulMono(c, b)) == Cmp::GT);
        // 1 is the largest monomial
        if (!a.isOne()) CHECK(cmpMonomials(R, R.one(), a) == Cmp::GT);
        // transitivity spot check
        Cmp bc = cmpMonomials(R, b, c);
        if (ab == Cmp::GT && bc == Cmp::GT) CHECK(cmpMonomials(R, a, c) == Cmp::GT);
    }
}

TEST_CASE("polynomial addition") {
    Ring R = ring3();
    CHECK(equalP(addP(R, P(R, "x + y"), P(R, "-x")), P(R, "y")));
    CHECK(equalP(addP(R, P(R, "0"), P(R, "x^2 + z")), P(R, "x^2 + z")));

    // characteristic wraparound: 2*x^2 + x^2 = 0 mod 3
    Ring R3(3, {"x", "y"});
    CHECK(addP(R3, P(R3, "2*x^2"), P(R3, "x^2")).isZero());
}

TEST_CASE("polynomial multiplication") {
    Ring R = ring3();
    CHECK(equalP(mulP(R, P(R, "x + y"), P(R, "x - y")), P(R, "x^2 - y^2")));
    Polynomial f = P(R, "x^2 + 3*x*y - z^3 + 7");
    CHECK(equalP(mulP(R, f, P(R, "1")), f));
    // frozen direct expansion
    CHECK(equalP(mulP(R, P(R, "x + z^3"), P(R, "x + z^3")),
                 P(R, "x^2 + 2*x*z^3 + z^6")));
}

TEST_CASE("ring axioms on random polynomials") {
    Ring R = ring3();
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        Polynomial a = randPoly(R, rng, 0, 4, 1 + it % 8);
        Polynomial b = randPoly(R, rng, 0, 4, 1 + (it + 3) % 8);
        Polynomial c = randPoly(R, rng, 0, 4, 1 + (it + 5) % 8);
        CHECK(equalP(addP(R, a, b), addP(R, b, a)));
        CHECK(equalP(mulP(R, mulP(R, a, b), c), mulP(R, a, mulP(R, b, c))));
        CHECK(equalP(mulP(R, a, addP(R, b, c)),
                     addP(R, mulP(R, a, b), mulP(R, a, c))));
    }
}

TEST_CASE("order of a product adds") {
    Ring R = ring3();
    Rng rng(13);
    for (int it = 0; it < 80; ++it) {
        Polynomial a = randPoly(R, rng, 0, 5, 4);
        Polynomial b = randPoly(R, rng, 0, 5, 4);
        if (a.isZero() || b.isZero()) continue;
        CHECK(mulP(R, a, b).ord() == a.ord() + b.ord());
        // initial forms are multiplicative over a field
        CHECK(equalP(initialForm(R, mulP(R, a, b)),
                     mulP(R, initialForm(R, a), initialForm(R, b))));
    }
}

TEST_CASE("initial form") {
    Ring R = ring3();
    CHECK(equalP(initialForm(R, P(R, "y - x^2")), P(R, "y")));
    CHECK(equalP(initialForm(R, P(R, "x^2 + x*y + z^3")), P(R, "x^2 + x*y")));
    // expand then take the lowest homogeneous part
    Polynomial prod = mulP(R, P(R, "y - x^2"), P(R, "y + x^2"));
    CHECK(equalP(prod, P(R, "y^2 - x^4")));
    CHECK(equalP(initialForm(R, prod), P(R, "y^2")));
    CHECK_THROWS_AS(initialForm(R, Polynomial{}), UndefinedInputError);
}

TEST_CASE("truncation modulo powers of m") {
    Ring R = ring3();
    CHECK(equalP(truncateModPower(R, P(R, "y - z^5"), 5), P(R, "y")));
    CHECK(truncateModPower(R, P(R, "x + y^2 + 1"), 0).isZero());
    CHECK(equalP(truncateModPower(R, P(R, "x^2 + x*z^4 + z^9"), 6),
                 P(R, "x^2 + x*z^4")));
}

TEST_CASE("vector elements and module order") {
    Ring R = ring3();
    FreeModule F{2, {}};
    ModuleOrder O{&R, F, -1};
    VectorElement v = addV(O, polyToVec(P(R, "x^2"), 2, 0), polyToVec(P(R, "y"), 2, 1));
    CHECK(v.lt().comp == 1);  // y has lower degree, so it leads
    CHECK(ordV(O, v) == 1);
    CHECK(maxdegV(O, v) == 2);
    CHECK(ecartV(O, v) == 1);
    VectorElement in = initialFormV(O, v);
    CHECK(in.t.size() == 1);
    CHECK(in.lt().comp == 1);

    // with shifts the weighted degree decides
    FreeModule Fs{2, {0, 3}};
    ModuleOrder Os{&R, Fs, -1};
    VectorElement w = normalizeVec(Os, 2, v.t);
    CHECK(w.lt().comp == 0);  // weighted degrees: 2 + 0 beats 1 + 3
    CHECK(ordV(Os, w) == 2);
}

TEST_CASE("monomial enumeration") {
    Ring R = ring3();
    CHECK(countMonomials(3, 2) == 6);
    CHECK(monomialsOfDegree(R, 2).size() == 6);
    CHECK(countMonomials(3, 0) == 1);
    // unranking is a bijection
    for (long long i = 0; i < countMonomials(3, 4); ++i) {
        Monomial m = unrankMonomial(3, 4, i);
        CHECK(m.deg == 4);
        for (long long j = 0; j < i; ++j) CHECK(!(unrankMonomial(3, 4, j) == m));
    }
}
