// Helpers shared by the CLI test and the acceptance binary.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsc::testing {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

inline RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(QSC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

inline std::string fixture(const std::string& name) { return std::string(QSC_FIXTURES) + "/" + name; }

inline std::vector<std::string> split(const std::string& s, const std::string& sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
        auto next = s.find(sep, pos);
        out.push_back(s.substr(pos, next - pos));
        if (next == std::string::npos) break;
        pos = next + sep.size();
    }
    return out;
}

inline bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

/// Rebuilds the JSON document of `present` from its text rendering.
inline nlohmann::ordered_json present_from_text(const std::string& text) {
    nlohmann::ordered_json d;
    d["command"] = "present";
    std::istringstream in(text);
    std::string line;
    bool in_rel = false;
    while (std::getline(in, line)) {
        if (in_rel && starts_with(line, "  ")) {
            d["relations"].push_back(line.substr(2));
            continue;
        }
        in_rel = false;
        if (starts_with(line, "ring: ")) {
            d["ring"] = line.substr(6);
        } else if (starts_with(line, "variables:")) {
            d["variables"] = nlohmann::ordered_json::array();
            std::istringstream vs(line.substr(10));
            std::string name, block, deg;
            // " name(block, degree d)"
            while (vs >> name >> deg) {
                auto open = name.find('(');
                block = name.substr(open + 1, name.size() - open - 2);
                vs >> deg;
                d["variables"].push_back({{"name", name.substr(0, open)},
                                          {"degree", std::stoi(deg.substr(0, deg.size() - 1))},
                                          {"block", block}});
            }
        } else if (line == "relations:") {
            d["relations"] = nlohmann::ordered_json::array();
            in_rel = true;
        } else if (starts_with(line, "module basis: ")) {
            d["module_basis"] = split(line.substr(14), ", ");
        } else if (starts_with(line, "graded dimensions: ")) {
            d["graded_dimensions"] = nlohmann::ordered_json::array();
            for (const auto& x : split(line.substr(19), " ")) d["graded_dimensions"].push_back(std::stoul(x));
        }
    }
    return d;
}

/// Rebuilds the correlator table from its text rendering; instanton names are taken from @p json.
inline nlohmann::ordered_json correlator_from_text(const std::string& text, const nlohmann::ordered_json& json) {
    nlohmann::ordered_json d;
    d["command"] = "correlator";
    d["instanton_variables"] = json.at("instanton_variables");
    d["correlators"] = nlohmann::ordered_json::array();
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (starts_with(line, "ring: ")) {
            d["ring"] = line.substr(6);
        } else if (starts_with(line, "<")) {
            auto close = line.find("> = ");
            auto inputs = split(line.substr(1, close - 1), ", ");
            d["correlators"].push_back(
                {{"inputs", inputs}, {"value", line.substr(close + 4)}, {"coefficients", nlohmann::ordered_json::array()}});
        } else if (starts_with(line, "  beta=(")) {
            auto close = line.find("): ");
            nlohmann::ordered_json beta = nlohmann::ordered_json::array();
            for (const auto& x : split(line.substr(8, close - 8), ",")) beta.push_back(std::stoul(x));
            d["correlators"].back()["coefficients"].push_back({{"beta", beta}, {"value", line.substr(close + 3)}});
        }
    }
    // Restore the key order of the JSON emitter.
    nlohmann::ordered_json ordered;
    ordered["command"] = d["command"];
    ordered["ring"] = d["ring"];
    ordered["instanton_variables"] = d["instanton_variables"];
    ordered["correlators"] = d["correlators"];
    return ordered;
}

}  // namespace qsc::testing
