#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ilab {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// flat key-value configuration: a diffable text file plus command-line
// overrides; numeric fields are validated against the ranges of the modules
// they feed
struct ExperimentConfig {
    std::string experiment;
    std::map<std::string, std::string> kv;

    bool has(const std::string& key) const { return kv.count(key) > 0; }
    std::string get_str(const std::string& key, const std::string& def) const;

    // range check: [lo, hi] with optional strict ends; "inf" parses to +inf
    double get_real(const std::string& key, double def, double lo, double hi,
                    bool lo_strict = false, bool hi_strict = false) const;
    std::size_t get_size(const std::string& key, std::size_t def, std::size_t lo,
                         std::size_t hi) const;
    std::uint64_t get_seed(std::uint64_t def) const;
    std::vector<double> get_reals(const std::string& key,
                                  const std::vector<double>& def) const;
    std::vector<std::size_t> get_sizes(const std::string& key,
                                       const std::vector<std::size_t>& def) const;
};

// "key = value" lines, '#' comments; parse errors carry the line number
ExperimentConfig parse_config_text(const std::string& text);

// "key=value" command-line override
void apply_override(ExperimentConfig& cfg, const std::string& assignment);

double parse_real(const std::string& text, const std::string& field);

}  // namespace ilab
