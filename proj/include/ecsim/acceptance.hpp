#pragma once

#include <string>
#include <vector>

namespace ecsim {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // measured values against their targets
};

struct AcceptanceReport {
    std::vector<CriterionResult> criteria;
    std::vector<std::string> missing;  // absent or unreadable inputs
    bool all_pass = false;
};

// Names of the files the gate consumes, relative to the output directory.
const std::vector<std::string>& acceptance_inputs();

// Evaluate every criterion against the scenario outputs in dir. If any input
// is missing the criteria list is left empty and `missing` names the files.
AcceptanceReport evaluate_acceptance(const std::string& dir);

void write_acceptance_report(const AcceptanceReport& rep, const std::string& path);

}  // namespace ecsim
