#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eislat/jsonio.hpp"

namespace eislat {

// One verification check: a finite claim the library recomputes from scratch.
// `claim` names the mathematical statement being checked, so a failure says
// exactly what broke.
struct CheckResult {
    std::string id;
    std::string claim;
    bool pass = false;
    Json witness;
    double wall_ms = 0.0;
};

// The full verification ledger (the acceptance criteria C01..C14).
// `seed` only affects which random cases the property-based checks draw;
// every seed must pass.
std::vector<CheckResult> run_all_checks(uint64_t seed = 0);

Json report_to_json(const std::vector<CheckResult>& results);

}  // namespace eislat
