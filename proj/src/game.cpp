#include "reso/game.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace reso {

namespace {

// drop componentwise-dominating vertices, sort
std::vector<std::vector<uint64_t>> minimalize(std::vector<std::vector<uint64_t>> pts) {
    std::vector<std::vector<uint64_t>> keep;
    for (const auto& p : pts) {
        bool dominated = false;
        for (const auto& q : pts) {
            if (&p == &q || p == q) continue;
            bool qLeP = true;
            for (size_t i = 0; i < p.size(); ++i)
                if (q[i] > p[i]) { qLeP = false; break; }
            if (qLeP) { dominated = true; break; }
        }
        if (!dominated) keep.push_back(p);
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return keep;
}

}  // namespace

GameState GameState::make(size_t n, std::vector<std::vector<uint64_t>> pts) {
    if (pts.empty()) throw DomainError("game state needs at least one vertex");
    for (const auto& p : pts)
        if (p.size() != n) throw DomainError("vertex dimension mismatch");
    return GameState{n, minimalize(std::move(pts))};
}

std::string GameState::toString() const {
    std::string s = "{";
    for (size_t i = 0; i < S.size(); ++i) {
        if (i) s += ", ";
        s += "(";
        for (size_t k = 0; k < S[i].size(); ++k) {
            if (k) s += ",";
            s += std::to_string(S[i][k]);
        }
        s += ")";
    }
    s += "}";
    return s;
}

GameState applyMove(const GameState& s, const GameMove& m) {
    if (m.J.size() < 2) throw DomainError("player A must choose at least two coordinates");
    std::set<size_t> J(m.J.begin(), m.J.end());
    if (J.size() != m.J.size()) throw DomainError("repeated coordinate in the move");
    for (size_t i : J)
        if (i >= s.n) throw DomainError("coordinate out of range");
    if (!J.count(m.j)) throw DomainError("player B must choose inside A's set");

    std::vector<std::vector<uint64_t>> next;
    for (const auto& alpha : s.S) {
        std::vector<uint64_t> beta = alpha;
        uint64_t sum = 0;
        for (size_t k : J) sum += alpha[k];
        beta[m.j] = sum;
        next.push_back(std::move(beta));
    }
    return GameState{s.n, minimalize(std::move(next))};
}

bool isWon(const GameState& s) { return s.S.size() == 1; }

std::vector<size_t> strategyA(const GameState& s) {
    if (isWon(s)) throw DomainError("the game is already won");
    // pick the lexicographically first pair of distinct vertices and play the
    // two coordinates of extreme disagreement
    const auto& a = s.S[0];
    const auto& b = s.S[1];
    size_t iMax = 0, iMin = 0;
    int64_t dMax = 0, dMin = 0;
    for (size_t k = 0; k < s.n; ++k) {
        int64_t d = static_cast<int64_t>(a[k]) - static_cast<int64_t>(b[k]);
        if (d > dMax) { dMax = d; iMax = k; }
        if (d < dMin) { dMin = d; iMin = k; }
    }
    if (dMax == 0 || dMin == 0) {
        // degenerate; fall back to the first two coordinates where they differ
        std::vector<size_t> J;
        for (size_t k = 0; k < s.n && J.size() < 2; ++k)
            if (a[k] != b[k]) J.push_back(k);
        if (J.size() < 2)
            for (size_t k = 0; k < s.n && J.size() < 2; ++k)
                if (std::find(J.begin(), J.end(), k) == J.end()) J.push_back(k);
        return J;
    }
    std::vector<size_t> J{iMax, iMin};
    std::sort(J.begin(), J.end());
    return J;
}

namespace {

std::vector<std::vector<size_t>> allSubsetsGe2(size_t n) {
    std::vector<std::vector<size_t>> subsets;
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        std::vector<size_t> J;
        for (size_t k = 0; k < n; ++k)
            if (mask & (size_t(1) << k)) J.push_back(k);
        if (J.size() >= 2) subsets.push_back(std::move(J));
    }
    return subsets;
}

OracleVerdict oracleRec(const GameState& s, uint32_t depth, uint64_t& budget,
                        std::map<std::pair<std::string, uint32_t>, OracleVerdict>& memo) {
    if (isWon(s)) return OracleVerdict::ForcedWin;
    if (depth == 0) return OracleVerdict::Unknown;
    if (budget == 0) return OracleVerdict::Unknown;
    --budget;
    auto key = std::make_pair(s.toString(), depth);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;

    OracleVerdict verdict = OracleVerdict::Unknown;
    for (const auto& J : allSubsetsGe2(s.n)) {
        bool allBranchesWin = true;
        for (size_t j : J) {
            GameState next = applyMove(s, GameMove{J, j});
            if (oracleRec(next, depth - 1, budget, memo) != OracleVerdict::ForcedWin) {
                allBranchesWin = false;
                break;
            }
        }
        if (allBranchesWin) { verdict = OracleVerdict::ForcedWin; break; }
    }
    memo.emplace(key, verdict);
    return verdict;
}

}  // namespace

OracleVerdict gameTreeOracle(const GameState& s, uint32_t depth, uint64_t nodeBudget) {
    std::map<std::pair<std::string, uint32_t>, OracleVerdict> memo;
    return oracleRec(s, depth, nodeBudget, memo);
}

GameTranscript playGame(const GameState& start,
                        const std::function<std::vector<size_t>(const GameState&)>& strategy,
                        const std::function<size_t(const GameState&, const std::vector<size_t>&)>& adversary,
                        uint32_t roundCap) {
    GameTranscript t;
    t.states.push_back(start);
    GameState cur = start;
    for (uint32_t round = 0; round < roundCap; ++round) {
        if (isWon(cur)) { t.won = true; return t; }
        GameMove m;
        m.J = strategy(cur);
        m.j = adversary(cur, m.J);
        cur = applyMove(cur, m);
        t.moves.push_back(m);
        t.states.push_back(cur);
    }
    t.won = isWon(cur);
    return t;
}

namespace {

bool defeatRec(const GameState& s, uint32_t roundsLeft, std::set<std::string>& winning,
               std::set<std::string>& visiting) {
    if (isWon(s)) return true;
    if (roundsLeft == 0) return false;
    std::string key = s.toString();
    if (winning.count(key)) return true;
    if (visiting.count(key)) return false;  // a cycle under the fixed strategy never wins
    visiting.insert(key);
    std::vector<size_t> J = strategyA(s);
    bool ok = true;
    for (size_t j : J) {
        GameState next = applyMove(s, GameMove{J, j});
        if (!defeatRec(next, roundsLeft - 1, winning, visiting)) { ok = false; break; }
    }
    visiting.erase(key);
    if (ok) winning.insert(key);
    return ok;
}

}  // namespace

bool strategyDefeatsAllPolicies(const GameState& start, uint32_t roundCap) {
    std::set<std::string> winning, visiting;
    return defeatRec(start, roundCap, winning, visiting);
}

}  // namespace reso
