#ifndef RESO_SCRIPT_HPP
#define RESO_SCRIPT_HPP

#include <map>
#include <string>
#include <vector>

#include "reso/parse.hpp"
#include "reso/ideal.hpp"

namespace reso {

/// A parsed session: one ring, named polynomials and ideals, one command.
struct SessionScript {
    ContextPtr ring;
    std::vector<std::pair<std::string, Polynomial>> polys;
    std::vector<std::pair<std::string, Ideal>> ideals;
    std::string commandLine;                       // raw command line
    std::string command;                           // first token
    std::map<std::string, std::string> flags;      // --key value (value may be empty)
    std::vector<std::string> stateLines;           // trailing lines (game states)
};

SessionScript parseScript(const std::string& text);

struct RunResult {
    std::string text;  // human-readable output
    std::string json;  // trace document
    int exitCode = 0;  // 0 ok, 2 domain error, 3 guard/step limit
};

/// Parse and execute a script; never throws, errors land in the exit code.
RunResult runScript(const std::string& text, bool withTimings = false);

}  // namespace reso

#endif
