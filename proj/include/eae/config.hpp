#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eae/montecarlo.hpp"

namespace eae {

// Error in a config file or flag set; carries the source name and line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, const std::string& source, int line)
        : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                                      : source + ": " + message) {}
};

// Flat key=value configuration ('#' starts a comment, later keys win).
struct ParsedConfig {
    struct Entry {
        std::string key;
        std::string value;
        int line = 0;
    };
    std::vector<Entry> entries;
    std::string source = "<flags>";

    void set(const std::string& key, const std::string& value, int line = 0);
    std::optional<std::string> get(const std::string& key) const;
    int line_of(const std::string& key) const;
};

ParsedConfig parse_config_text(const std::string& text, const std::string& source_name);
ParsedConfig parse_config_file(const std::string& path);

enum class Command { capacity, ber, threshold, complexity, selftest };
std::string command_name(Command c);

// Fully resolved run description.
struct Setup {
    Command command = Command::selftest;
    SimConfig sim;
    std::vector<double> es_n0_db_grid;
    bool auto_erasure_threshold = false;  // capacity-optimal T per grid point
    ThresholdOptions threshold;
};

// Validates every key and value; throws ConfigError with source location on
// unknown keys or malformed values.
Setup resolve_setup(const ParsedConfig& cfg);

// Canonical replayable key=value text (the metadata sidecar payload);
// parsing it back yields an equivalent Setup.
std::string serialize_setup(const Setup& setup);

}  // namespace eae
