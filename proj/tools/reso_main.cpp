#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reso/script.hpp"

int main(int argc, char** argv) {
    CLI::App app{"reso: exact blowups, transforms and resolution invariants"};
    std::string scriptPath;
    std::string outPath;
    bool jsonOnly = false;
    bool timings = false;
    app.add_option("script", scriptPath, "script file ('-' reads stdin)")->required();
    app.add_option("--out", outPath, "write the JSON trace to a file");
    app.add_flag("--json", jsonOnly, "print the JSON trace instead of text");
    app.add_flag("--timings", timings, "include timings in the trace (breaks byte determinism)");
    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (scriptPath == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(scriptPath);
        if (!in) {
            std::cerr << "error[domain]: cannot open script: " << scriptPath << "\n";
            return 2;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }

    reso::RunResult rr = reso::runScript(text, timings);
    if (jsonOnly) std::cout << rr.json;
    else std::cout << rr.text;
    if (!outPath.empty()) {
        std::ofstream out(outPath);
        out << rr.json;
    }
    return rr.exitCode;
}
