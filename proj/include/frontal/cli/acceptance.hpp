#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <frontal/tangent.hpp>

namespace frontal::cli
{

struct criterion_result {
    unsigned id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double budget_seconds = 0;
};

// Runs the twelve acceptance checks in order. A check passes only when every assertion holds
// and it finishes within its time budget.
std::vector<criterion_result> run_acceptance(std::uint64_t seed, const jet_limits &limits = {});

// "PASS  3  codimension formula  (0.41 s of 30 s)  detail"
std::string format_result(const criterion_result &r);

} // namespace frontal::cli
