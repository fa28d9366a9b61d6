#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "specgraph/detail/sha256.hpp"
#include "specgraph/json_io.hpp"
#include "specgraph/version.hpp"

namespace specgraph {

/// Reproducibility record written next to every CLI artifact: command line,
/// parameters, version, wall time, and SHA-256 digests of inputs and outputs.
struct RunManifest {
    std::string command_line;
    json parameters = json::object();
    std::string tool_version = version_string;
    double wall_time_seconds = 0.0;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, sha256)
    std::vector<std::pair<std::string, std::string>> outputs; // (path, sha256)

    void add_input(const std::string& path) { inputs.emplace_back(path, detail::sha256_hex(read_text_file(path))); }
    void add_output(const std::string& path) { outputs.emplace_back(path, detail::sha256_hex(read_text_file(path))); }

    json to_json() const {
        json j;
        j["command_line"] = command_line;
        j["parameters"] = parameters;
        j["tool_version"] = tool_version;
        j["wall_time_seconds"] = wall_time_seconds;
        auto files = [](const std::vector<std::pair<std::string, std::string>>& v) {
            json arr = json::array();
            for (const auto& [p, d] : v) arr.push_back({{"path", p}, {"sha256", d}});
            return arr;
        };
        j["inputs"] = files(inputs);
        j["outputs"] = files(outputs);
        return j;
    }
};

class WallClock {
public:
    WallClock() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

} // namespace specgraph
