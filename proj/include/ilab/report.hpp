#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ilab {

// every solver-backed number carries its eps; closed-form values carry none
struct ResultValue {
    double value = 0.0;
    std::optional<double> eps;
    std::string provenance;  // "closed-form" | "solver" | "sampled"
};

struct Check {
    std::string name;
    double value = 0.0;
    std::string cmp;  // "<=", ">=", "bool"
    double threshold = 0.0;
    bool pass = false;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct Report {
    int schema_version = 1;
    std::string experiment;
    std::map<std::string, std::string> config;
    std::map<std::string, ResultValue> results;
    std::map<std::string, Table> tables;
    std::vector<Check> checks;
    bool pass = true;
    bool certified = true;  // false when a solver failed to certify
    std::string failure;
    double runtime_ms = 0.0;

    void add_result(const std::string& name, double value, const std::string& provenance,
                    std::optional<double> eps = std::nullopt);
    void add_check(const std::string& name, double value, const std::string& cmp,
                   double threshold);
    void add_check_bool(const std::string& name, bool ok);

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

// temp file + rename
void write_atomic(const std::string& path, const std::string& content);

}  // namespace ilab
