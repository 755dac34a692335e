#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "reso/game.hpp"

using namespace reso;

namespace {

GameState st(size_t n, std::vector<std::vector<uint64_t>> pts) {
    return GameState::make(n, std::move(pts));
}

}  // namespace

TEST_CASE("move application") {
    auto s = st(2, {{3, 0}, {0, 2}});

    auto r1 = applyMove(s, GameMove{{0, 1}, 0});
    CHECK(r1 == st(2, {{3, 0}, {2, 2}}));

    auto r2 = applyMove(s, GameMove{{0, 1}, 1});
    CHECK(r2 == st(2, {{3, 3}, {0, 2}}));

    SUBCASE("singleton states stay singleton") {
        auto w = st(2, {{2, 3}});
        auto r = applyMove(w, GameMove{{0, 1}, 0});
        CHECK(isWon(r));
    }
    SUBCASE("invalid moves are rejected") {
        CHECK_THROWS_AS(applyMove(s, GameMove{{0}, 0}), DomainError);
        CHECK_THROWS_AS(applyMove(s, GameMove{{0, 1}, 5}), DomainError);
    }
}

TEST_CASE("winning detection and minimalization") {
    CHECK(isWon(st(2, {{2, 3}})));
    CHECK(!isWon(st(2, {{3, 0}, {0, 2}})));
    CHECK(isWon(st(2, {{1, 1}, {1, 2}})));  // (1,2) dominates and is removed
    CHECK(st(3, {{1, 0, 0}, {1, 1, 0}, {0, 2, 0}}) == st(3, {{1, 0, 0}, {0, 2, 0}}));
}

TEST_CASE("the move map is injective on vertices before minimalization") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<uint64_t> e(0, 5);
    for (int rep = 0; rep < 200; ++rep) {
        std::vector<std::vector<uint64_t>> pts;
        for (int k = 0; k < 4; ++k) pts.push_back({e(rng), e(rng), e(rng)});
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<size_t> J{0, static_cast<size_t>(1 + rng() % 2)};
        size_t j = J[rng() % 2];
        std::set<std::vector<uint64_t>> images;
        for (const auto& alpha : pts) {
            std::vector<uint64_t> beta = alpha;
            uint64_t sum = 0;
            for (size_t k : J) sum += alpha[k];
            beta[j] = sum;
            images.insert(beta);
        }
        CHECK(images.size() == pts.size());
    }
}

TEST_CASE("strategy plays the only pair in the plane") {
    auto s = st(2, {{3, 0}, {0, 2}});
    auto J = strategyA(s);
    REQUIRE(J.size() == 2);
    CHECK(J[0] == 0);
    CHECK(J[1] == 1);
    CHECK_THROWS_AS(strategyA(st(2, {{1, 1}})), DomainError);
}

TEST_CASE("oracle confirms forced wins on small states") {
    CHECK(gameTreeOracle(st(2, {{3, 0}, {0, 2}}), 8) == OracleVerdict::ForcedWin);
    CHECK(gameTreeOracle(st(2, {{2, 3}}), 0) == OracleVerdict::ForcedWin);  // already won
    // too little depth to finish: one round cannot merge these two vertices
    CHECK(gameTreeOracle(st(2, {{3, 0}, {0, 2}}), 1) == OracleVerdict::Unknown);
    // and a starved node budget also reports unknown
    CHECK(gameTreeOracle(st(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}), 8, 0) == OracleVerdict::Unknown);
}

TEST_CASE("strategy soundness against the oracle suite") {
    std::vector<GameState> suite{
        st(2, {{3, 0}, {0, 2}}),
        st(2, {{5, 0}, {3, 1}, {0, 6}}),
        st(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
        st(3, {{1, 0, 3}, {0, 2, 1}}),
        st(3, {{4, 0, 0}, {1, 1, 1}, {0, 0, 5}}),
    };
    for (const auto& s : suite) {
        auto J = strategyA(s);
        // A's first move begins a forced win: every B reply stays forced-win
        for (size_t j : J) {
            auto next = applyMove(s, GameMove{J, j});
            CHECK(gameTreeOracle(next, 10) == OracleVerdict::ForcedWin);
        }
        CHECK(strategyDefeatsAllPolicies(s));
    }
}

TEST_CASE("strategy completeness at desk scale: all plane states with entries <= 6") {
    // enumerate antichains by brute force over small vertex sets
    for (uint64_t a1 = 0; a1 <= 6; ++a1) {
        for (uint64_t a2 = 0; a2 <= 6; ++a2) {
            for (uint64_t b1 = 0; b1 <= 6; ++b1) {
                for (uint64_t b2 = 0; b2 <= 6; ++b2) {
                    auto s = st(2, {{a1, a2}, {b1, b2}});
                    CHECK(strategyDefeatsAllPolicies(s));
                }
            }
        }
    }
}

TEST_CASE("transcripts") {
    auto adversaryFirst = [](const GameState&, const std::vector<size_t>& J) { return J.front(); };
    auto adversaryLast = [](const GameState&, const std::vector<size_t>& J) { return J.back(); };

    SUBCASE("a singleton start produces an empty transcript") {
        auto t = playGame(st(2, {{4, 4}}), strategyA, adversaryFirst);
        CHECK(t.won);
        CHECK(t.moves.empty());
    }
    SUBCASE("wins against simple adversaries are recorded") {
        std::vector<std::function<size_t(const GameState&, const std::vector<size_t>&)>> advs{
            adversaryFirst, adversaryLast};
        for (const auto& adv : advs) {
            auto t = playGame(st(2, {{3, 0}, {0, 2}}), strategyA, adv);
            CHECK(t.won);
            CHECK(!t.moves.empty());
            CHECK(isWon(t.states.back()));
        }
    }
    SUBCASE("the round cap is reported as a loss") {
        auto t = playGame(st(2, {{3, 0}, {0, 2}}), strategyA, adversaryFirst, 0);
        CHECK(!t.won);
    }
}
