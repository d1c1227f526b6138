#pragma once

#include <string>
#include <vector>

#include "ilab/config.hpp"
#include "ilab/report.hpp"

namespace ilab {

struct ExperimentInfo {
    std::string name;
    std::string summary;  // one-line statement of the claim the run measures
};

const std::vector<ExperimentInfo>& list_experiments();

// Executes the named experiment.  Unknown names and invalid fields raise
// ConfigError; solver certification failures are caught and reported in the
// returned Report (certified = false), never silently.
Report run_experiment(const ExperimentConfig& cfg);

}  // namespace ilab
