#ifndef RESO_GAME_HPP
#define RESO_GAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "reso/errors.hpp"

namespace reso {

/// State of the polyhedral game: the minimal generators of N = conv(S + R^n_+).
/// Vertices are kept sorted and free of componentwise-dominating points.
struct GameState {
    size_t n = 0;
    std::vector<std::vector<uint64_t>> S;

    static GameState make(size_t n, std::vector<std::vector<uint64_t>> pts);
    bool operator==(const GameState& o) const { return n == o.n && S == o.S; }
    std::string toString() const;
};

/// Player A picks the set J (at least two coordinates), player B the index j in J.
struct GameMove {
    std::vector<size_t> J;
    size_t j = 0;
};

/// Replace every alpha_j by the sum over J, then minimalize.
GameState applyMove(const GameState& s, const GameMove& m);

/// Won once a single vertex spans the polyhedron.
bool isWon(const GameState& s);

/// Shipped two-element strategy for player A (validated empirically, not cited).
std::vector<size_t> strategyA(const GameState& s);

enum class OracleVerdict { ForcedWin, Unknown };

/// Exhaustive minimax over A-subsets and B-replies, within depth and node budget.
OracleVerdict gameTreeOracle(const GameState& s, uint32_t depth, uint64_t nodeBudget = 2000000);

struct GameTranscript {
    std::vector<GameState> states;  // includes the initial state
    std::vector<GameMove> moves;
    bool won = false;
};

/// Play A's strategy against an adversary policy; cap on the number of rounds.
GameTranscript playGame(const GameState& start,
                        const std::function<std::vector<size_t>(const GameState&)>& strategy,
                        const std::function<size_t(const GameState&, const std::vector<size_t>&)>& adversary,
                        uint32_t roundCap = 64);

/// True when A's strategy defeats every B reply sequence within the cap.
bool strategyDefeatsAllPolicies(const GameState& start, uint32_t roundCap = 64);

}  // namespace reso

#endif
