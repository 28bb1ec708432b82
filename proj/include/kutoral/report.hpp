// report.hpp
//
// Check records and run reports shared by the verifiers and the CLI.
// Serialization is deliberately float-free: every number is rendered
// as a decimal string so that consumers never face 64-bit overflow,
// and JSON key order is fixed so that parse + re-serialize is
// byte-identical.

#pragma once

#include <json.hpp>

#include <chrono>
#include <string>
#include <utility>
#include <vector>

namespace kutoral {

struct CheckRecord {
    std::string statement; // which claim is being exercised
    std::string instance;  // the parameter tuple
    std::string expected;
    std::string observed;
    bool pass = false;
};

inline CheckRecord make_check(std::string statement, std::string instance,
                              std::string expected, std::string observed)
{
    CheckRecord c;
    c.statement = std::move(statement);
    c.instance = std::move(instance);
    c.expected = std::move(expected);
    c.observed = std::move(observed);
    c.pass = c.expected == c.observed;
    return c;
}

struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckRecord> checks;
    long long elapsed_ms = 0;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["command"] = command;
        nlohmann::ordered_json p = nlohmann::ordered_json::object();
        for (const auto& [key, value] : params)
            p[key] = value;
        j["params"] = p;
        nlohmann::ordered_json cs = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["statement"] = c.statement;
            cj["instance"] = c.instance;
            cj["expected"] = c.expected;
            cj["observed"] = c.observed;
            cj["pass"] = c.pass;
            cs.push_back(cj);
        }
        j["checks"] = cs;
        j["status"] = passed() ? "pass" : "fail";
        j["elapsed_ms"] = std::to_string(elapsed_ms);
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    std::string to_text() const
    {
        std::string out = command;
        for (const auto& [key, value] : params)
            out += " " + key + "=" + value;
        out += "\n";
        for (const auto& c : checks) {
            out += c.pass ? "  ok   " : "  FAIL ";
            out += c.statement + " [" + c.instance + "]";
            out += " expected=" + c.expected + " observed=" + c.observed + "\n";
        }
        out += passed() ? "status: pass" : "status: FAIL";
        out += " (" + std::to_string(elapsed_ms) + " ms, " +
               std::to_string(checks.size()) + " checks)\n";
        return out;
    }
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const
    {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace kutoral
