#pragma once

#include <string>
#include <vector>

#include "aos/lagrange.hpp"
#include "aos/model.hpp"
#include "aos/policy.hpp"

namespace aos {

/// Parse a system configuration from JSON text. Two forms are accepted:
/// an explicit node list
///   {"N":1,"T":1000,"seed":1,"nodes":[{"lambda":0.5,"omega":[1,10],
///    "P":[[0.9,0.1],[0.5,0.5]]}]}
/// or the built-in 40-node preset
///   {"paper_preset":{"q":0.1},"N":6,"T":100000,"seed":1}.
/// Throws ConfigError on malformed input.
SystemConfig parse_system_config(const std::string& json_text);

/// Load a configuration file; missing or unreadable files are ConfigErrors.
SystemConfig load_system_config(const std::string& path);

/// Solver output written by `solve` and consumed by `simulate`: everything
/// needed to run the near-stationary policy without re-solving.
struct PolicyArtifact {
    double eta1 = 0.0;
    double eta2 = 0.0;
    double alpha = 1.0;
    double J_re = 0.0;
    double D_re = 0.0;
    int M = 0;
    int N = 0;
    std::vector<TransmitPolicy> policies;
    std::vector<MixedMeasures> measures;
};

PolicyArtifact make_artifact(const RelaxedSolution& rel, int M, int N);

void save_artifact(const PolicyArtifact& artifact, const std::string& path);
PolicyArtifact load_artifact(const std::string& path);

}  // namespace aos
