#include "reso/script.hpp"

#include <chrono>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "reso/game.hpp"
#include "reso/resolve.hpp"

namespace reso {

namespace {

using nlohmann::json;

struct ScriptError : DomainError {
    ScriptError(const std::string& msg, size_t line, size_t col)
        : DomainError("line " + std::to_string(line) + " col " + std::to_string(col) + ": " + msg) {}
};

std::vector<std::string> splitLines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else cur.push_back(c);
    }
    lines.push_back(cur);
    return lines;
}

std::string stripComment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> toks;
    std::istringstream in(s);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

ContextPtr parseRingDecl(const std::string& body, size_t lineNo) {
    // body: (Q|F<p>|Fp <p>)[v1,...,vn]
    auto open = body.find('[');
    auto close = body.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ScriptError("ring declaration needs [vars]", lineNo, body.size());
    std::string fieldTok = trim(body.substr(0, open));
    std::string varsTok = body.substr(open + 1, close - open - 1);

    FieldSpec field;
    if (fieldTok == "Q") {
        field = FieldSpec::rationals();
    } else if (!fieldTok.empty() && fieldTok[0] == 'F') {
        std::string digits = trim(fieldTok.substr(1));
        if (!digits.empty() && digits[0] == 'p') digits = trim(digits.substr(1));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ScriptError("bad prime field: " + fieldTok, lineNo, 5);
        field = FieldSpec::primeField(std::stoull(digits));
    } else {
        throw ScriptError("unknown field: " + fieldTok, lineNo, 5);
    }
    std::vector<std::string> vars;
    std::string cur;
    for (char c : varsTok + ",") {
        if (c == ',') {
            std::string v = trim(cur);
            if (v.empty()) throw ScriptError("empty variable name", lineNo, open);
            vars.push_back(v);
            cur.clear();
        } else cur.push_back(c);
    }
    return makeContext(vars, field);
}

}  // namespace

SessionScript parseScript(const std::string& text) {
    SessionScript s;
    auto lines = splitLines(text);
    bool afterCommand = false;
    for (size_t li = 0; li < lines.size(); ++li) {
        std::string line = trim(stripComment(lines[li]));
        if (line.empty()) continue;
        size_t lineNo = li + 1;
        if (afterCommand) {
            s.stateLines.push_back(line);
            continue;
        }
        auto toks = tokenize(line);
        const std::string& head = toks[0];
        if (head == "ring") {
            if (s.ring) throw ScriptError("only one ring per script", lineNo, 1);
            s.ring = parseRingDecl(trim(line.substr(4)), lineNo);
            continue;
        }
        if (head == "poly" || head == "ideal") {
            if (!s.ring) throw ScriptError("declare the ring first", lineNo, 1);
            auto eq = line.find('=');
            if (eq == std::string::npos) throw ScriptError("missing '='", lineNo, line.size());
            auto nameToks = tokenize(line.substr(head.size(), eq - head.size()));
            if (nameToks.size() != 1) throw ScriptError("expected one name before '='", lineNo, head.size() + 1);
            std::string name = nameToks[0];
            std::string rhs = line.substr(eq + 1);
            try {
                if (head == "poly") {
                    s.polys.emplace_back(name, parsePolynomial(s.ring, rhs));
                } else {
                    std::vector<Polynomial> gens;
                    std::string cur;
                    for (char c : rhs + ",") {
                        if (c == ',') {
                            if (!trim(cur).empty()) gens.push_back(parsePolynomial(s.ring, cur));
                            cur.clear();
                        } else cur.push_back(c);
                    }
                    s.ideals.emplace_back(name, Ideal(s.ring, std::move(gens)));
                }
            } catch (const ParseError& pe) {
                throw ScriptError(pe.what(), lineNo, eq + 2 + pe.offset());
            }
            continue;
        }
        // the command line
        s.commandLine = line;
        s.command = head;
        for (size_t i = 1; i < toks.size(); ++i) {
            if (toks[i].rfind("--", 0) == 0) {
                std::string key = toks[i].substr(2);
                std::string value;
                if (i + 1 < toks.size() && toks[i + 1].rfind("--", 0) != 0) value = toks[++i];
                s.flags[key] = value;
            } else {
                throw ScriptError("unexpected token: " + toks[i], lineNo, 1);
            }
        }
        afterCommand = true;
    }
    if (s.command.empty()) throw DomainError("script has no command line");
    return s;
}

namespace {

// --- helpers shared by the command handlers -------------------------------

uint64_t parseNat(const std::string& v, const char* what) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
        throw DomainError(std::string("expected a natural number for ") + what);
    return std::stoull(v);
}

const Polynomial& lookupPoly(const SessionScript& s, const std::string& name) {
    for (const auto& [n, p] : s.polys)
        if (n == name) return p;
    throw DomainError("unknown polynomial: " + name);
}

const Ideal& lookupIdeal(const SessionScript& s, const std::string& name) {
    for (const auto& [n, I] : s.ideals)
        if (n == name) return I;
    throw DomainError("unknown ideal: " + name);
}

Ideal mainIdeal(const SessionScript& s) {
    auto it = s.flags.find("ideal");
    if (it != s.flags.end()) return lookupIdeal(s, it->second);
    it = s.flags.find("poly");
    if (it != s.flags.end()) return Ideal(s.ring, {lookupPoly(s, it->second)});
    if (s.ideals.size() == 1) return s.ideals[0].second;
    if (s.ideals.empty() && s.polys.size() == 1) return Ideal(s.ring, {s.polys[0].second});
    throw DomainError("pass --ideal NAME or --poly NAME");
}

Polynomial mainPoly(const SessionScript& s) {
    auto it = s.flags.find("poly");
    if (it != s.flags.end()) return lookupPoly(s, it->second);
    if (s.polys.size() == 1) return s.polys[0].second;
    throw DomainError("pass --poly NAME");
}

PointQ pointFlag(const SessionScript& s, const char* key, size_t arity) {
    auto it = s.flags.find(key);
    if (it == s.flags.end()) return PointQ::origin(arity);
    std::vector<Rational> coords;
    std::string cur;
    for (char c : it->second + ",") {
        if (c == ',') {
            std::string v = trim(cur);
            cur.clear();
            if (v.empty()) continue;
            auto slash = v.find('/');
            if (slash == std::string::npos) coords.emplace_back(BigInt::fromString(v));
            else coords.emplace_back(BigInt::fromString(v.substr(0, slash)),
                                     BigInt::fromString(v.substr(slash + 1)));
        } else cur.push_back(c);
    }
    if (coords.size() != arity) throw DomainError("point arity mismatch");
    return PointQ{coords};
}

Center centerFlag(const SessionScript& s) {
    auto it = s.flags.find("center");
    if (it != s.flags.end()) {
        std::vector<Polynomial> gens;
        std::string cur;
        for (char c : it->second + ",") {
            if (c == ',') {
                std::string v = trim(cur);
                cur.clear();
                if (v.empty()) continue;
                gens.push_back(parsePolynomial(s.ring, v));
            } else cur.push_back(c);
        }
        return Center(Ideal(s.ring, std::move(gens)));
    }
    it = s.flags.find("center-ideal");
    if (it != s.flags.end()) return Center(lookupIdeal(s, it->second));
    throw DomainError("pass --center x,y or --center-ideal NAME");
}

std::vector<BlowupChart> chartsFor(const Center& c) {
    bool coordinate = true;
    for (const auto& g : c.ideal.generators()) {
        if (g.termCount() != 1 || g.terms().begin()->first.degree() != 1) coordinate = false;
    }
    return coordinate ? coordinateCharts(c) : generalCharts(c);
}

const BlowupChart& chartFlag(const SessionScript& s, const std::vector<BlowupChart>& charts) {
    auto it = s.flags.find("chart");
    if (it == s.flags.end()) throw DomainError("pass --chart <variable or index>");
    for (const auto& ch : charts) {
        if (ch.name == "chart:" + it->second) return ch;
        if (std::to_string(ch.index) == it->second) return ch;
    }
    throw DomainError("no such chart: " + it->second);
}

std::string orderString(uint64_t v) {
    return v == kOrderInfinity ? "infinity" : std::to_string(v);
}

json orderJson(uint64_t v) {
    if (v == kOrderInfinity) return json("infinity");
    return json(v);
}

json ringJson(const ContextPtr& ctx) {
    return json{{"field", ctx->field().toString()}, {"vars", ctx->vars()}};
}

json idealJson(const Ideal& I) {
    json arr = json::array();
    for (const auto& g : I.generators()) arr.push_back(g.toString());
    return arr;
}

json morphismJson(const RingMorphism& m) {
    json arr = json::array();
    for (const auto& img : m.images()) arr.push_back(img.toString());
    return arr;
}

json traceJson(const ResolutionTrace& trace) {
    json nodes = json::array();
    for (const auto& node : trace.nodes) {
        json jn;
        jn["path"] = node.path;
        jn["arrival"] = morphismJson(node.arrival);
        jn["strict"] = idealJson(node.strict);
        jn["total"] = idealJson(node.total);
        json exc = json::array();
        for (const auto& e : node.exceptional)
            exc.push_back(json{{"equation", e.equation.toString()},
                               {"multiplicity", e.multiplicity},
                               {"birth", e.birth}});
        jn["exceptional"] = exc;
        jn["invariant"] = node.invariant;
        if (node.center) jn["center"] = node.center->toString();
        jn["step"] = node.step;
        jn["children"] = node.children;
        nodes.push_back(jn);
    }
    std::string status = trace.status == TraceStatus::Resolved ? "resolved"
                        : trace.status == TraceStatus::StepLimit ? "step-limit"
                                                                  : "error";
    return json{{"status", status},
                {"steps", trace.stepCount},
                {"message", trace.message},
                {"nodes", nodes}};
}

std::string traceText(const ResolutionTrace& trace) {
    std::ostringstream out;
    std::string status = trace.status == TraceStatus::Resolved ? "resolved"
                        : trace.status == TraceStatus::StepLimit ? "step-limit"
                                                                  : "error";
    out << "status: " << status << " after " << trace.stepCount << " blowups\n";
    if (!trace.message.empty()) out << "note: " << trace.message << "\n";
    for (const auto& node : trace.nodes) {
        out << (node.path.empty() ? "<root>" : node.path) << "\n";
        out << "  strict: " << node.strict.toString() << "\n";
        if (!node.exceptional.empty()) {
            out << "  exceptional:";
            for (const auto& e : node.exceptional)
                out << " [" << e.equation.toString() << " ^" << e.multiplicity
                    << " b" << e.birth << "]";
            out << "\n";
        }
        if (node.center) {
            out << "  blown up at " << node.center->toString() << " (step " << node.step << ")";
            if (!node.invariant.empty()) {
                out << " invariant (";
                for (size_t i = 0; i < node.invariant.size(); ++i) {
                    if (i) out << ", ";
                    out << node.invariant[i];
                }
                out << ")";
            }
            out << "\n";
        }
    }
    return out.str();
}

uint32_t maxStepsFlag(const SessionScript& s) {
    auto it = s.flags.find("max-steps");
    if (it == s.flags.end()) return 32;
    return static_cast<uint32_t>(parseNat(it->second, "--max-steps"));
}

struct CommandOutput {
    std::string text;
    json result;
    int exitCode = 0;
};

CommandOutput runCommand(const SessionScript& s) {
    const std::string& cmd = s.command;
    std::ostringstream out;
    json result;
    int exitCode = 0;

    if (cmd == "order") {
        Ideal I = mainIdeal(s);
        PointQ a = pointFlag(s, "at", s.ring->arity());
        auto rep = orderAtPoint(I, a);
        out << orderString(rep.value) << "\n";
        result["value"] = orderJson(rep.value);
        result["site"] = rep.site;
        if (rep.witness) result["witness"] = rep.witness->toString();
    } else if (cmd == "order-along") {
        Ideal I = mainIdeal(s);
        auto it = s.flags.find("prime");
        if (it == s.flags.end()) throw DomainError("pass --prime NAME");
        auto rep = orderAlongPrime(I, lookupIdeal(s, it->second));
        out << orderString(rep.value) << "\n";
        result["value"] = orderJson(rep.value);
        result["site"] = rep.site;
    } else if (cmd == "sing") {
        Ideal S = normalizeIdeal(singularLocus(mainIdeal(s)));
        out << S.toString() << "\n";
        result["ideal"] = idealJson(S);
    } else if (cmd == "toplocus") {
        Ideal T = topLocusIdeal(mainIdeal(s), pointFlag(s, "at", s.ring->arity()));
        out << T.toString() << "\n";
        result["ideal"] = idealJson(T);
    } else if (cmd == "hs") {
        uint32_t upto = 5;
        if (auto it = s.flags.find("upto"); it != s.flags.end())
            upto = static_cast<uint32_t>(parseNat(it->second, "--upto"));
        auto prefix = hilbertSamuelPrefix(mainIdeal(s), pointFlag(s, "at", s.ring->arity()), upto);
        for (size_t i = 0; i < prefix.size(); ++i) out << (i ? " " : "") << prefix[i];
        out << "\n";
        result["values"] = prefix;
    } else if (cmd == "rees") {
        auto rees = reesIdeal(centerFlag(s));
        Ideal R = normalizeIdeal(rees.ideal);
        out << R.toString() << "\n";
        result["ring"] = ringJson(rees.ambient);
        result["ideal"] = idealJson(R);
    } else if (cmd == "charts") {
        auto charts = chartsFor(centerFlag(s));
        json arr = json::array();
        for (const auto& ch : charts) {
            out << ch.name << ": map " << ch.map.toString()
                << ", exceptional " << ch.exceptional.toString();
            if (!ch.chartIdeal.isZeroIdeal()) out << ", relations " << ch.chartIdeal.toString();
            out << "\n";
            json jc{{"name", ch.name},
                    {"map", morphismJson(ch.map)},
                    {"exceptional", ch.exceptional.toString()},
                    {"relations", idealJson(ch.chartIdeal)}};
            arr.push_back(jc);
        }
        result["charts"] = arr;
    } else if (cmd == "transition") {
        auto charts = coordinateCharts(centerFlag(s));
        size_t from = parseNat(s.flags.count("from") ? s.flags.at("from") : "", "--from");
        size_t to = parseNat(s.flags.count("to") ? s.flags.at("to") : "", "--to");
        if (from < 1 || to < 1 || from > charts.size() || to > charts.size())
            throw DomainError("chart indices are 1-based");
        auto t = chartTransition(charts, from - 1, to - 1);
        out << t.map.toString() << "  [" << t.relation.toString() << " = 0]\n";
        result["map"] = morphismJson(t.map);
        result["relation"] = t.relation.toString();
        result["note"] = t.note;
    } else if (cmd == "transform") {
        Ideal I = mainIdeal(s);
        auto charts = chartsFor(centerFlag(s));
        const BlowupChart& chart = chartFlag(s, charts);
        auto kindIt = s.flags.find("kind");
        if (kindIt == s.flags.end()) throw DomainError("pass --kind total|strict|weak|controlled");
        const std::string& kind = kindIt->second;
        Ideal R = Ideal::zero(s.ring);
        if (kind == "total") {
            R = totalTransform(I, chart);
        } else if (kind == "strict") {
            auto r = strictTransform(I, chart);
            R = r.ideal;
            result["exceptionalOrder"] = orderJson(r.exceptionalOrder);
            result["hPower"] = r.hPower;
        } else if (kind == "weak") {
            auto r = weakTransform(I, chart);
            R = r.ideal;
            result["exceptionalOrder"] = orderJson(r.exceptionalOrder);
            result["hPower"] = r.hPower;
        } else if (kind == "controlled") {
            uint64_t c = parseNat(s.flags.count("control") ? s.flags.at("control") : "", "--control");
            auto r = controlledTransform(I, chart, c);
            R = r.ideal;
            result["exceptionalOrder"] = orderJson(r.exceptionalOrder);
            result["hPower"] = r.hPower;
        } else {
            throw DomainError("unknown transform kind: " + kind);
        }
        out << R.toString() << "\n";
        result["kind"] = kind;
        result["chart"] = chart.name;
        result["ideal"] = idealJson(R);
    } else if (cmd == "coeff") {
        Ideal I = mainIdeal(s);
        auto it = s.flags.find("frame");
        if (it == s.flags.end()) throw DomainError("pass --frame <variable>");
        size_t v = s.ring->varIndex(it->second);
        uint64_t o = orderAtPoint(I, PointQ::origin(s.ring->arity())).value;
        if (auto oIt = s.flags.find("order"); oIt != s.flags.end())
            o = parseNat(oIt->second, "--order");
        if (o == 0 || o == kOrderInfinity) throw DomainError("coefficient ideal needs a finite positive order");
        HypersurfaceFrame frame{s.ring, v, PointQ::origin(s.ring->arity()), o};
        Ideal J = coefficientIdeal(I, frame);
        out << J.toString() << "\n";
        result["ring"] = ringJson(J.context());
        result["ideal"] = idealJson(J);
        result["order"] = o;
    } else if (cmd == "residual-order") {
        Polynomial f = mainPoly(s);
        std::vector<size_t> excVars;
        if (auto it = s.flags.find("exc"); it != s.flags.end()) {
            std::string cur;
            for (char c : it->second + ",") {
                if (c == ',') {
                    if (!trim(cur).empty()) excVars.push_back(s.ring->varIndex(trim(cur)));
                    cur.clear();
                } else cur.push_back(c);
            }
        }
        PointQ a = pointFlag(s, "at", s.ring->arity());
        uint64_t r = residualOrder(f, ExceptionalRecord::ofVars(excVars), a);
        out << orderString(r) << "\n";
        result["value"] = orderJson(r);
    } else if (cmd == "resolve-curve") {
        auto trace = resolveCurveEmbedded(mainPoly(s), maxStepsFlag(s));
        out << traceText(trace);
        result = traceJson(trace);
        if (trace.status == TraceStatus::StepLimit) exitCode = 3;
        if (trace.status == TraceStatus::Error) exitCode = 2;
    } else if (cmd == "resolve-monomial") {
        auto it = s.flags.find("monomial");
        if (it == s.flags.end()) throw DomainError("pass --monomial <term>");
        Polynomial m = parsePolynomial(s.ring, it->second);
        if (m.termCount() != 1) throw DomainError("--monomial must be a single term");
        std::set<std::string> excNames;
        if (auto e = s.flags.find("exceptional"); e != s.flags.end()) {
            std::string cur;
            for (char c : e->second + ",") {
                if (c == ',') {
                    if (!trim(cur).empty()) excNames.insert(trim(cur));
                    cur.clear();
                } else cur.push_back(c);
            }
        }
        uint64_t cplus = parseNat(s.flags.count("cplus") ? s.flags.at("cplus") : "", "--cplus");
        const Monomial& expo = m.terms().begin()->first;
        std::vector<MonomialDivisor> divisors;
        for (size_t vIdx = 0; vIdx < s.ring->arity(); ++vIdx) {
            if (!expo[vIdx]) continue;
            divisors.push_back({s.ring->varName(vIdx), expo[vIdx],
                                excNames.count(s.ring->varName(vIdx)) > 0});
        }
        auto trace = resolveMonomial(divisors, cplus, maxStepsFlag(s));
        out << traceText(trace);
        result = traceJson(trace);
        if (trace.status == TraceStatus::StepLimit) exitCode = 3;
        if (trace.status == TraceStatus::Error) exitCode = 2;
    } else if (cmd == "resolve-h0") {
        Polynomial f = mainPoly(s);
        ResolutionTrace trace = s.flags.count("cplus")
            ? resolveHypersurfaceChar0(f, parseNat(s.flags.at("cplus"), "--cplus"), maxStepsFlag(s))
            : resolveHypersurfaceChar0(f);
        out << traceText(trace);
        result = traceJson(trace);
        if (trace.status == TraceStatus::StepLimit) exitCode = 3;
        if (trace.status == TraceStatus::Error) exitCode = 2;
    } else if (cmd == "game") {
        if (s.stateLines.empty()) throw DomainError("game needs state rows after the command");
        std::vector<std::vector<uint64_t>> pts;
        for (const auto& line : s.stateLines) {
            std::vector<uint64_t> row;
            for (const auto& tok : tokenize(line)) row.push_back(parseNat(tok, "game state entry"));
            pts.push_back(row);
        }
        size_t n = pts[0].size();
        GameState start = GameState::make(n, pts);
        uint32_t rounds = 64;
        if (auto it = s.flags.find("rounds"); it != s.flags.end())
            rounds = static_cast<uint32_t>(parseNat(it->second, "--rounds"));
        auto adversary = [](const GameState& st, const std::vector<size_t>& J) {
            // worst-case reply: maximize the resulting vertex count, then pick
            // the largest index for determinism
            size_t best = J.front();
            size_t bestCount = 0;
            for (size_t j : J) {
                size_t cnt = applyMove(st, GameMove{J, j}).S.size();
                if (cnt > bestCount || (cnt == bestCount && j > best)) {
                    bestCount = cnt;
                    best = j;
                }
            }
            return best;
        };
        auto t = playGame(start, strategyA, adversary, rounds);
        out << "start " << start.toString() << "\n";
        for (size_t i = 0; i < t.moves.size(); ++i) {
            out << "A J={";
            for (size_t k = 0; k < t.moves[i].J.size(); ++k)
                out << (k ? "," : "") << (t.moves[i].J[k] + 1);
            out << "} B j=" << (t.moves[i].j + 1) << " -> " << t.states[i + 1].toString() << "\n";
        }
        out << (t.won ? "won" : "round cap reached") << "\n";
        json moves = json::array();
        for (const auto& m : t.moves) moves.push_back(json{{"J", m.J}, {"j", m.j}});
        json states = json::array();
        for (const auto& stt : t.states) states.push_back(stt.S);
        result = json{{"won", t.won}, {"moves", moves}, {"states", states}};
        if (!t.won) {
            result["error"] = {{"code", "guard"}, {"message", "round cap reached without a win"}};
            exitCode = 3;
        }
    } else {
        throw DomainError("unknown command: " + cmd);
    }
    return {out.str(), result, exitCode};
}

}  // namespace

RunResult runScript(const std::string& text, bool withTimings) {
    RunResult rr;
    json doc;
    doc["version"] = 1;
    auto start = std::chrono::steady_clock::now();
    try {
        SessionScript s = parseScript(text);
        doc["ring"] = s.ring ? ringJson(s.ring) : json(nullptr);
        doc["command"] = s.commandLine;
        CommandOutput co = runCommand(s);
        rr.text = co.text;
        doc["result"] = co.result;
        rr.exitCode = co.exitCode;
    } catch (const GuardError& e) {
        rr.text = std::string("error[guard]: ") + e.what() + "\n";
        doc["error"] = {{"code", "guard"}, {"message", e.what()}};
        rr.exitCode = 3;
    } catch (const DomainError& e) {
        rr.text = std::string("error[domain]: ") + e.what() + "\n";
        doc["error"] = {{"code", "domain"}, {"message", e.what()}};
        rr.exitCode = 2;
    }
    if (withTimings) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start).count();
        doc["timings"] = {{"totalMs", ms}};
    }
    rr.json = doc.dump(2) + "\n";
    return rr;
}

}  // namespace reso
