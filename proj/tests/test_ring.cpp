#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reso/morphism.hpp"

using namespace rt;

TEST_CASE("polynomial arithmetic basics") {
    auto C = ctxQ({"x", "y", "z"});
    auto f = pp(C, "x^2") * (pp(C, "1") - pp(C, "x*y^2*z"));

    SUBCASE("exact division recovers the cofactor") {
        CHECK(f.exactDiv(pp(C, "x^2")) == pp(C, "1 - x*y^2*z"));
    }
    SUBCASE("multiplication by zero absorbs") {
        CHECK((f * Polynomial::zero(C)).isZero());
    }
    SUBCASE("additive cancellation") {
        CHECK(pp(C, "x^2 + y^3") + pp(C, "-y^3") == pp(C, "x^2"));
    }
    SUBCASE("exact division with remainder is refused") {
        CHECK_THROWS_AS(pp(C, "x^2 + y").exactDiv(pp(C, "x")), DomainError);
    }
    SUBCASE("context mismatch is refused") {
        auto D = ctxQ({"x", "y"});
        CHECK_THROWS_AS(pp(C, "x") + pp(D, "x"), DomainError);
    }
}

TEST_CASE("order at the origin") {
    auto C = ctxQ({"x", "y"});
    CHECK(pp(C, "x^2 + y^17").order0() == 2);
    CHECK(Polynomial::zero(C).order0() == kOrderInfinity);

    auto C3 = ctxQ({"x", "y", "z"});
    auto camelia = pp(C3, "27*x^2*y^3*z^2") + pp(C3, "x^2 + y^3 - z^2").pow(3);
    CHECK(camelia.order0() == 6);
}

TEST_CASE("translation") {
    auto C1 = ctxQ({"x"});
    CHECK(pp(C1, "x^2").translate(qpoint({1})) == pp(C1, "x^2 + 2*x + 1"));

    auto C = ctxQ({"x", "y"});
    CHECK(pp(C, "x^2*y^3").translate(qpoint({0, 1})).order0() == 2);

    auto f = pp(C, "x^3 - 2*x*y + 7");
    CHECK(f.translate(qpoint({0, 0})) == f);
    CHECK_THROWS_AS(f.translate(qpoint({1})), DomainError);
}

TEST_CASE("morphism application") {
    auto C = ctxQ({"x", "y"});
    RingMorphism phi(C, C, {pp(C, "x"), pp(C, "x*y")});
    CHECK(applyMorphism(phi, pp(C, "x^2 + y^17")) == pp(C, "x^2 + x^17*y^17"));

    auto C3 = ctxQ({"x", "y", "z"});
    RingMorphism pt(C3, C3, {pp(C3, "x"), pp(C3, "x*y"), pp(C3, "x*z")});
    auto camelia = pp(C3, "27*x^2*y^3*z^2") + pp(C3, "x^2 + y^3 - z^2").pow(3);
    auto expected = pp(C3, "x^6") * (pp(C3, "27*x*y^3*z^2") + pp(C3, "1 + x*y^3 - z^2").pow(3));
    CHECK(applyMorphism(pt, camelia) == expected);

    auto id = RingMorphism::identity(C3);
    CHECK(applyMorphism(id, camelia) == camelia);
}

TEST_CASE("derivatives") {
    auto C = ctxQ({"x", "y", "z"});
    auto f = pp(C, "x^3 + x^2*y*z + z^5");
    Monomial d2x(3);
    d2x[0] = 2;
    CHECK(f.derivative(d2x) == pp(C, "6*x + 2*y*z"));

    CHECK(pp(C, "5").derivative(d2x).isZero());

    for (uint64_t p : {2ull, 3ull, 5ull}) {
        auto F = ctxFp(p, {"x"});
        Monomial dxp(1);
        dxp[0] = static_cast<uint32_t>(p);
        auto xp = Polynomial::variable(F, 0, static_cast<uint32_t>(p));
        CHECK(xp.derivative(dxp).isZero());  // ordinary derivative dies in char p
        CHECK(xp.dividedPowerDerivative(dxp) == Polynomial::constant(F, Rational(1)));
    }
}

TEST_CASE("lowest initial form") {
    auto C = ctxQ({"x", "y", "z", "w"});
    CHECK(pp(C, "x^2 - y^3").initialFormLowest() == pp(C, "x^2"));
    CHECK(pp(C, "x*z^3 - y^4").initialFormLowest() == pp(C, "x*z^3 - y^4"));
    CHECK(pp(C, "x + x^7 - 3*y*w").initialFormLowest() == pp(C, "x"));
    CHECK(pp(C, "x + 2*y - 3*y*w").initialFormLowest() == pp(C, "x + 2*y"));
    CHECK_THROWS_AS(Polynomial::zero(C).initialFormLowest(), DomainError);
}

TEST_CASE("p-th power split") {
    auto F2 = ctxFp(2, {"x", "y"});
    auto [root, rest] = pp(F2, "x^2 + y^2 + x*y").pthPowerSplit();
    CHECK(root == pp(F2, "x + y"));
    CHECK(rest == pp(F2, "x*y"));

    auto [r0, f0] = pp(F2, "x*y + x^3*y").pthPowerSplit();
    CHECK(r0.isZero());
    CHECK(f0 == pp(F2, "x*y + x^3*y"));

    auto F3 = ctxFp(3, {"y"});
    auto [r3, rest3] = pp(F3, "y^6").pthPowerSplit();
    CHECK(r3 == pp(F3, "y^2"));
    CHECK(rest3.isZero());

    auto Q = ctxQ({"x"});
    CHECK_THROWS_AS(pp(Q, "x^2").pthPowerSplit(), DomainError);
}

TEST_CASE("ring properties on random samples") {
    std::mt19937 rng(20240811);
    auto C = ctxQ({"x", "y", "z"});

    SUBCASE("order of a product adds") {
        for (int i = 0; i < 200; ++i) {
            auto f = randomPoly(rng, C, 5, 4);
            auto g = randomPoly(rng, C, 5, 4);
            CHECK((f * g).order0() == f.order0() + g.order0());
        }
    }
    SUBCASE("translate roundtrip") {
        std::uniform_int_distribution<long long> cd(-4, 4);
        for (int i = 0; i < 200; ++i) {
            auto f = randomPoly(rng, C, 5, 5, true);
            std::vector<Rational> a{Rational(cd(rng)), Rational(cd(rng)), Rational(cd(rng))};
            std::vector<Rational> na{-a[0], -a[1], -a[2]};
            CHECK(f.translate(a).translate(na) == f);
        }
    }
    SUBCASE("morphisms distribute over + and *") {
        RingMorphism phi(C, C, {pp(C, "x"), pp(C, "x*y"), pp(C, "x*z + 1")});
        for (int i = 0; i < 100; ++i) {
            auto f = randomPoly(rng, C, 4, 3, true);
            auto g = randomPoly(rng, C, 4, 3, true);
            CHECK(phi.apply(f + g) == phi.apply(f) + phi.apply(g));
            CHECK(phi.apply(f * g) == phi.apply(f) * phi.apply(g));
        }
    }
    SUBCASE("initial form is multiplicative") {
        for (int i = 0; i < 200; ++i) {
            auto f = randomPoly(rng, C, 5, 4);
            auto g = randomPoly(rng, C, 5, 4);
            CHECK((f * g).initialFormLowest() == f.initialFormLowest() * g.initialFormLowest());
        }
    }
    SUBCASE("char 0: order equals least vanishing derivative order") {
        for (int i = 0; i < 60; ++i) {
            auto f = randomPoly(rng, C, 4, 4);
            uint64_t o = f.order0();
            // no derivative of order < o survives at 0, some derivative of order o does
            uint64_t best = kOrderInfinity;
            uint32_t cap = static_cast<uint32_t>(std::min<uint64_t>(o + 1, 8));
            for (uint32_t a = 0; a <= cap; ++a)
                for (uint32_t b = 0; a + b <= cap; ++b)
                    for (uint32_t c = 0; a + b + c <= cap; ++c) {
                        Monomial al(3);
                        al[0] = a; al[1] = b; al[2] = c;
                        if (!f.derivative(al).constantTerm().isZero())
                            best = std::min<uint64_t>(best, a + b + c);
                    }
            CHECK(best == o);
        }
    }
    SUBCASE("p-th power split roundtrip") {
        auto F = ctxFp(3, {"x", "y", "z"});
        std::uniform_int_distribution<long long> cd(0, 8);
        std::uniform_int_distribution<uint32_t> ed(0, 6);
        for (int i = 0; i < 200; ++i) {
            Polynomial f = Polynomial::zero(F);
            for (int t = 0; t < 4; ++t) {
                Monomial m(3);
                for (size_t v = 0; v < 3; ++v) m[v] = ed(rng);
                f = f + Polynomial::term(F, m, Rational(cd(rng)));
            }
            auto [root, rest] = f.pthPowerSplit();
            CHECK(root.pow(3) + rest == f);
            for (const auto& [m, c] : rest.terms()) {
                bool allDiv = true;
                for (size_t v = 0; v < 3; ++v)
                    if (m[v] % 3) allDiv = false;
                CHECK(!allDiv);
            }
        }
    }
}

TEST_CASE("term guard trips on explosive products") {
    auto C = ctxQ({"x", "y", "z"});
    size_t old = Polynomial::termGuard();
    Polynomial::setTermGuard(50);
    auto f = pp(C, "1 + x + y + z").pow(3);
    CHECK_THROWS_AS(f.pow(4) * f.pow(4), GuardError);
    Polynomial::setTermGuard(old);
}

TEST_CASE("canonical printing") {
    auto C = ctxQ({"x", "y"});
    CHECK(pp(C, "y^3 - x^2").toString() == "y^3 - x^2");
    CHECK(pp(C, "x^2 - y^3").toString() == "-y^3 + x^2");
    CHECK(pp(C, "1/3*x + 2/27").toString() == "1/3*x + 2/27");
    CHECK(Polynomial::zero(C).toString() == "0");
}

TEST_CASE("printing and parsing roundtrip") {
    std::mt19937 rng(271828);
    auto C = ctxQ({"x", "y", "z"});
    for (int rep = 0; rep < 200; ++rep) {
        auto f = randomPoly(rng, C, 6, 6, true);
        CHECK(parsePolynomial(C, f.toString()) == f);
    }
    auto F = ctxFp(7, {"x", "y"});
    std::uniform_int_distribution<long long> cd(0, 6);
    std::uniform_int_distribution<uint32_t> ed(0, 5);
    for (int rep = 0; rep < 100; ++rep) {
        Polynomial f = Polynomial::zero(F);
        for (int t = 0; t < 4; ++t) {
            Monomial m(2);
            m[0] = ed(rng);
            m[1] = ed(rng);
            f = f + Polynomial::term(F, m, Rational(cd(rng)));
        }
        CHECK(parsePolynomial(F, f.toString()) == f);
    }
    // rational coefficients survive as well
    auto g = pp(C, "2/27*x^3 - 1/3*x*y^2*z^2 + 5");
    CHECK(parsePolynomial(C, g.toString()) == g);
}
