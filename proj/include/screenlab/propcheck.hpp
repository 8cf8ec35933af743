// Numeric verification of the model's headline properties, used by the
// `verify` command. Each suite reports a pass flag and its worst measured
// margin (how far inside the tolerance the worst case landed).
#pragma once

#include <string>
#include <vector>

#include "screenlab/model.hpp"

namespace screenlab {

struct CheckResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;   // worst observed slack; negative means failed
    std::string detail;
};

// Seven suites: contract closed forms vs root finding, screening gradient,
// conservatism sensitivities, value-gradient sign flip, cost comparative
// statics (including k*), the moral-hazard variant, and outside options.
std::vector<CheckResult> run_proposition_suite(const ModelParams& params, bool quick);

}  // namespace screenlab
