#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cli_io.hpp"

namespace pw {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool checks_passed = false;
    double seconds = 0;
    double budget = 0;  // seconds
    std::string detail;
    bool passed() const { return checks_passed && seconds <= budget; }
};

// one function per criterion; all randomness comes from `seed`
CriterionResult acceptance_worked_example();
CriterionResult acceptance_le_tshift();
CriterionResult acceptance_weave_pipeline();
CriterionResult acceptance_phi_psi(std::uint64_t seed);
CriterionResult acceptance_twist_round_trip(std::uint64_t seed);
CriterionResult acceptance_hexagon(std::uint64_t seed);
CriterionResult acceptance_twist_dt(std::uint64_t seed, int depth);
CriterionResult acceptance_source_target(std::uint64_t seed);

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, int depth);
json to_json(const CriterionResult& r);
std::string summary_line(const CriterionResult& r);

}  // namespace pw
