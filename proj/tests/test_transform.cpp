#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "reso/transform.hpp"

using namespace rt;

namespace {

std::vector<BlowupChart> pointCharts(const ContextPtr& C) {
    std::vector<Polynomial> vars;
    for (size_t i = 0; i < C->arity(); ++i) vars.push_back(Polynomial::variable(C, i));
    return coordinateCharts(Center(Ideal(C, vars)));
}

}  // namespace

TEST_CASE("total transforms of the curve fixture") {
    auto C = ctxQ({"x", "y"});
    Ideal I(C, {pp(C, "x^2 + y^17")});
    auto charts = pointCharts(C);

    CHECK(idealEquals(totalTransform(I, charts[0]), Ideal(C, {pp(C, "x^2 + x^17*y^17")})));
    CHECK(idealEquals(totalTransform(I, charts[1]), Ideal(C, {pp(C, "x^2*y^2 + y^17")})));
    CHECK(idealEquals(totalTransform(Ideal::unit(C), charts[0]), Ideal::unit(C)));
}

TEST_CASE("strict transforms by saturation") {
    auto C = ctxQ({"x", "y"});
    auto charts = pointCharts(C);

    SUBCASE("curve fixture, both charts") {
        Ideal I(C, {pp(C, "x^2 + y^17")});
        auto sx = strictTransform(I, charts[0]);
        CHECK(idealEquals(sx.ideal, Ideal(C, {pp(C, "1 + x^15*y^17")})));
        CHECK(orderAtPoint(sx.ideal, PointQ::origin(2)).value == 0);

        auto sy = strictTransform(I, charts[1]);
        CHECK(idealEquals(sy.ideal, Ideal(C, {pp(C, "x^2 + y^15")})));
        CHECK(orderAtPoint(sy.ideal, PointQ::origin(2)).value == 2);
        CHECK(sy.exceptionalOrder == 2);
    }
    SUBCASE("monomial pair: strict transform becomes the whole ring") {
        Ideal I(C, {pp(C, "x^2"), pp(C, "y^3")});
        auto s = strictTransform(I, charts[1]);
        CHECK(isUnitIdeal(s.ideal));
    }
    SUBCASE("the center itself transforms to the unit ideal") {
        Ideal I(C, {pp(C, "x"), pp(C, "y")});
        auto s = strictTransform(I, charts[0]);
        CHECK(isUnitIdeal(s.ideal));
    }
}

TEST_CASE("Macaulay-basis route equals saturation on the space-curve fixture") {
    auto C = ctxQ({"x", "y", "z"});
    Ideal I(C, {pp(C, "x^2 - y^3"), pp(C, "x*y - z^3")});
    auto charts = pointCharts(C);

    SUBCASE("x-chart matches the recorded equations") {
        Ideal viaM = strictTransformViaMacaulay(I, charts[0]);
        Ideal expected(C, {pp(C, "1 - x*y^3"), pp(C, "y - x*z^3"), pp(C, "z^3 - y^4")});
        CHECK(idealEquals(viaM, expected));
    }
    SUBCASE("z-chart matches the recorded equations") {
        Ideal viaM = strictTransformViaMacaulay(I, charts[2]);
        Ideal expected(C, {pp(C, "x^2 - y^3*z"), pp(C, "x*y - z"), pp(C, "x - y^4")});
        CHECK(idealEquals(viaM, expected));
    }
    SUBCASE("y-chart matches the recorded equations") {
        Ideal viaM = strictTransformViaMacaulay(I, charts[1]);
        Ideal expected(C, {pp(C, "x^2 - y"), pp(C, "x - y*z^3"), pp(C, "x*z^3 - 1")});
        CHECK(idealEquals(viaM, expected));
    }
    SUBCASE("all charts agree with the saturation route") {
        for (const auto& chart : charts) {
            CHECK(idealEquals(strictTransformViaMacaulay(I, chart), strictTransform(I, chart).ideal));
        }
    }
    SUBCASE("principal ideals: both routes equal generator-wise division") {
        Ideal P(C, {pp(C, "x^2 + y*z")});
        for (const auto& chart : charts) {
            auto viaSat = strictTransform(P, chart).ideal;
            auto viaM = strictTransformViaMacaulay(P, chart);
            Polynomial total = chart.map.apply(P.generators()[0]);
            auto [k, cof] = total.extractVarPower(chart.chartVar);
            CHECK(idealEquals(viaSat, Ideal(C, {cof})));
            CHECK(idealEquals(viaM, Ideal(C, {cof})));
        }
    }
}

TEST_CASE("weak transforms") {
    auto C = ctxQ({"x", "y"});
    auto charts = pointCharts(C);

    SUBCASE("the weak/strict gap fixture") {
        Ideal I(C, {pp(C, "x^2"), pp(C, "y^3")});
        auto w = weakTransform(I, charts[1], 2);
        CHECK(idealEquals(w.ideal, Ideal(C, {pp(C, "x^2"), pp(C, "y")})));
        // total = h^d * weak
        Ideal total = totalTransform(I, charts[1]);
        Ideal recomposed(C, {pp(C, "y^2") * pp(C, "x^2"), pp(C, "y^2") * pp(C, "y")});
        CHECK(idealEquals(total, recomposed));
    }
    SUBCASE("principal ideals: weak equals strict") {
        Ideal I(C, {pp(C, "x^2 + y^17")});
        auto w = weakTransform(I, charts[1], 2);
        CHECK(idealEquals(w.ideal, strictTransform(I, charts[1]).ideal));
    }
    SUBCASE("d = 0 gives the total transform") {
        Ideal I(C, {pp(C, "x^2 + y^3")});
        CHECK(idealEquals(weakTransform(I, charts[0], 0).ideal, totalTransform(I, charts[0])));
    }
    SUBCASE("overlarge d fails the division") {
        Ideal I(C, {pp(C, "x^2 + y^17")});
        CHECK_THROWS_AS(weakTransform(I, charts[1], 3), DomainError);
    }
}

TEST_CASE("controlled transforms") {
    auto C = ctxQ({"x", "y"});
    auto charts = pointCharts(C);
    Ideal J(C, {pp(C, "x^2*y^3")});

    auto cx = controlledTransform(J, charts[0], 1);
    CHECK(idealEquals(cx.ideal, Ideal(C, {pp(C, "x^4*y^3")})));
    auto cy = controlledTransform(J, charts[1], 1);
    CHECK(idealEquals(cy.ideal, Ideal(C, {pp(C, "x^2*y^4")})));

    CHECK(idealEquals(controlledTransform(J, charts[0], 0).ideal, totalTransform(J, charts[0])));
    CHECK_THROWS_AS(controlledTransform(J, charts[0], 6), DomainError);
}

TEST_CASE("transform chain and exceptional order") {
    auto C = ctxQ({"x", "y"});
    auto charts = pointCharts(C);

    // I* subset I^! subset I^v subset I^s for 0 <= c <= d
    std::vector<Ideal> fixtures{Ideal(C, {pp(C, "x^2"), pp(C, "y^3")}),
                                Ideal(C, {pp(C, "x^2 + y^17")}),
                                Ideal(C, {pp(C, "x^3 - y^5"), pp(C, "x*y^2")}),
                                Ideal(C, {pp(C, "x^2*y^3")})};
    for (const auto& I : fixtures) {
        for (const auto& chart : charts) {
            uint64_t d = orderAlongCenter(I, chart);
            Ideal total = totalTransform(I, chart);
            auto weak = weakTransform(I, chart, d);
            auto strict = strictTransform(I, chart);
            CHECK(idealContains(weak.ideal, total));
            CHECK(idealContains(strict.ideal, weak.ideal));
            for (uint64_t c = 0; c <= d; ++c) {
                auto ctrl = controlledTransform(I, chart, c);
                CHECK(idealContains(ctrl.ideal, total));
                CHECK(idealContains(weak.ideal, ctrl.ideal));
            }
        }
    }

    SUBCASE("weak is strictly below strict on the gap fixture") {
        Ideal I(C, {pp(C, "x^2"), pp(C, "y^3")});
        auto weak = weakTransform(I, charts[1], 2);
        auto strict = strictTransform(I, charts[1]);
        CHECK(idealContains(strict.ideal, weak.ideal));
        CHECK(!idealContains(weak.ideal, strict.ideal));
    }

    SUBCASE("order of the total transform along E equals d") {
        std::vector<Ideal> fixs{Ideal(C, {pp(C, "x^2 + y^17")}),
                                Ideal(C, {pp(C, "x^3 + x*y^2 + y^7")})};
        for (const auto& I : fixs) {
            uint64_t d = orderAtPoint(I, PointQ::origin(2)).value;
            for (const auto& chart : charts) {
                Ideal total = totalTransform(I, chart);
                Ideal E(C, {chart.exceptional});
                CHECK(orderAlongPrime(total, E).value == d);
            }
        }
    }

    SUBCASE("generator-wise strict transforms can undershoot") {
        auto C3 = ctxQ({"x", "y", "z"});
        Ideal I(C3, {pp(C3, "x^2 - y^3"), pp(C3, "x*y - z^3")});
        auto charts3 = pointCharts(C3);
        const auto& chart = charts3[2];  // z-chart
        std::vector<Polynomial> naive;
        for (const auto& g : I.generators()) {
            auto [k, cof] = chart.map.apply(g).extractVarPower(chart.chartVar);
            naive.push_back(cof);
        }
        Ideal naiveIdeal(C3, naive);
        Ideal full = strictTransform(I, chart).ideal;
        CHECK(idealContains(full, naiveIdeal));
        CHECK(!idealContains(naiveIdeal, full));
    }
}

TEST_CASE("order bound at points of the exceptional divisor") {
    auto C = ctxQ({"x", "y"});
    auto charts = pointCharts(C);
    std::vector<Polynomial> fixtures{pp(C, "x^2 + y^17"), pp(C, "x^3 + y^4"),
                                     pp(C, "x^2*y + y^4 + x^5")};
    std::vector<PointQ> samples{PointQ::origin(2), PointQ{qpoint({0, 1})}, PointQ{qpoint({0, -2})},
                                PointQ{qpoint({0, 3})}};
    for (const auto& f : fixtures) {
        Ideal I(C, {f});
        uint64_t o = orderAtPoint(I, PointQ::origin(2)).value;
        for (const auto& chart : charts) {
            auto s = strictTransform(I, chart);
            for (const auto& a : samples) {
                // points of E in this chart have chartVar coordinate 0
                PointQ onE = a;
                onE.coords[chart.chartVar] = Rational(0);
                CHECK(orderAtPoint(s.ideal, onE).value <= o);
            }
        }
    }
}
