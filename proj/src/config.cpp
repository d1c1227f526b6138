#include "ilab/config.hpp"

#include <cmath>
#include <sstream>

namespace ilab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(trim(item));
    return out;
}

}  // namespace

double parse_real(const std::string& text, const std::string& field) {
    if (text == "inf" || text == "Inf" || text == "INF")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("field '" + field + "': cannot parse '" + text + "' as a number");
    }
}

std::string ExperimentConfig::get_str(const std::string& key, const std::string& def) const {
    auto it = kv.find(key);
    return it == kv.end() ? def : it->second;
}

double ExperimentConfig::get_real(const std::string& key, double def, double lo, double hi,
                                  bool lo_strict, bool hi_strict) const {
    auto it = kv.find(key);
    double v = it == kv.end() ? def : parse_real(it->second, key);
    bool ok = (lo_strict ? v > lo : v >= lo) && (hi_strict ? v < hi : v <= hi);
    if (!ok) {
        std::ostringstream msg;
        msg << "field '" << key << "': value " << v << " outside allowed range "
            << (lo_strict ? "(" : "[") << lo << ", " << hi << (hi_strict ? ")" : "]");
        throw ConfigError(msg.str());
    }
    return v;
}

std::size_t ExperimentConfig::get_size(const std::string& key, std::size_t def, std::size_t lo,
                                       std::size_t hi) const {
    auto it = kv.find(key);
    std::size_t v = def;
    if (it != kv.end()) {
        double r = parse_real(it->second, key);
        if (r < 0 || r != std::floor(r) || std::isinf(r))
            throw ConfigError("field '" + key + "': expected a nonnegative integer");
        v = static_cast<std::size_t>(r);
    }
    if (v < lo || v > hi) {
        std::ostringstream msg;
        msg << "field '" << key << "': value " << v << " outside allowed range [" << lo
            << ", " << hi << "]";
        throw ConfigError(msg.str());
    }
    return v;
}

std::uint64_t ExperimentConfig::get_seed(std::uint64_t def) const {
    auto it = kv.find("seed");
    if (it == kv.end()) return def;
    try {
        return std::stoull(it->second);
    } catch (const std::exception&) {
        throw ConfigError("field 'seed': expected an unsigned integer");
    }
}

std::vector<double> ExperimentConfig::get_reals(const std::string& key,
                                                const std::vector<double>& def) const {
    auto it = kv.find(key);
    if (it == kv.end()) return def;
    std::vector<double> out;
    for (const auto& item : split_list(it->second)) out.push_back(parse_real(item, key));
    if (out.empty()) throw ConfigError("field '" + key + "': empty list");
    return out;
}

std::vector<std::size_t> ExperimentConfig::get_sizes(
    const std::string& key, const std::vector<std::size_t>& def) const {
    auto it = kv.find(key);
    if (it == kv.end()) return def;
    std::vector<std::size_t> out;
    for (const auto& item : split_list(it->second)) {
        double r = parse_real(item, key);
        if (r < 0 || r != std::floor(r))
            throw ConfigError("field '" + key + "': expected nonnegative integers");
        out.push_back(static_cast<std::size_t>(r));
    }
    if (out.empty()) throw ConfigError("field '" + key + "': empty list");
    return out;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "line " << lineno << ": expected 'key = value', got '" << t << "'";
            throw ConfigError(msg.str());
        }
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (key.empty()) {
            std::ostringstream msg;
            msg << "line " << lineno << ": empty key";
            throw ConfigError(msg.str());
        }
        if (key == "experiment")
            cfg.experiment = value;
        else
            cfg.kv[key] = value;
    }
    return cfg;
}

void apply_override(ExperimentConfig& cfg, const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override '" + assignment + "': expected key=value");
    std::string key = trim(assignment.substr(0, eq));
    std::string value = trim(assignment.substr(eq + 1));
    if (key == "experiment")
        cfg.experiment = value;
    else
        cfg.kv[key] = value;
}

}  // namespace ilab
