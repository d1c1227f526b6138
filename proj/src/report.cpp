#include "ilab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ilab {

void Report::add_result(const std::string& name, double value, const std::string& provenance,
                        std::optional<double> eps) {
    results[name] = ResultValue{value, eps, provenance};
}

void Report::add_check(const std::string& name, double value, const std::string& cmp,
                       double threshold) {
    bool ok = cmp == "<=" ? value <= threshold : value >= threshold;
    checks.push_back(Check{name, value, cmp, threshold, ok});
    pass = pass && ok;
}

void Report::add_check_bool(const std::string& name, bool ok) {
    checks.push_back(Check{name, ok ? 1.0 : 0.0, "bool", 1.0, ok});
    pass = pass && ok;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema_version"] = schema_version;
    j["experiment"] = experiment;
    j["config"] = config;
    nlohmann::json jr = nlohmann::json::object();
    for (const auto& [k, v] : results) {
        nlohmann::json e;
        e["value"] = v.value;
        if (v.eps) e["eps"] = *v.eps;
        e["provenance"] = v.provenance;
        jr[k] = e;
    }
    j["results"] = jr;
    nlohmann::json jt = nlohmann::json::object();
    for (const auto& [k, t] : tables) {
        nlohmann::json e;
        e["columns"] = t.columns;
        e["rows"] = t.rows;
        jt[k] = e;
    }
    j["tables"] = jt;
    nlohmann::json jc = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["value"] = c.value;
        e["cmp"] = c.cmp;
        e["threshold"] = c.threshold;
        e["pass"] = c.pass;
        jc.push_back(e);
    }
    j["checks"] = jc;
    j["pass"] = pass;
    j["certified"] = certified;
    if (!failure.empty()) j["failure"] = failure;
    j["runtime_ms"] = runtime_ms;
    return j;
}

std::string Report::to_csv() const {
    std::ostringstream out;
    out.precision(17);
    out << "record,name,fields...\n";
    out << "experiment," << experiment << "\n";
    for (const auto& [k, v] : config) out << "config," << k << "," << v << "\n";
    for (const auto& [k, v] : results) {
        out << "scalar," << k << "," << v.value << ",";
        if (v.eps)
            out << *v.eps;
        else
            out << "-";
        out << "," << v.provenance << "\n";
    }
    for (const auto& c : checks)
        out << "check," << c.name << "," << c.value << "," << c.cmp << "," << c.threshold
            << "," << (c.pass ? "pass" : "fail") << "\n";
    for (const auto& [k, t] : tables) {
        out << "table," << k;
        for (const auto& col : t.columns) out << "," << col;
        out << "\n";
        for (const auto& row : t.rows) {
            out << "row," << k;
            for (double v : row) out << "," << v;
            out << "\n";
        }
    }
    out << "pass," << (pass ? "1" : "0") << "\n";
    out << "certified," << (certified ? "1" : "0") << "\n";
    return out.str();
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("write_atomic: cannot open " + tmp);
        f << content;
        if (!f.good()) throw std::runtime_error("write_atomic: short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("write_atomic: rename failed for " + path);
}

}  // namespace ilab
