#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <frontal/tangent.hpp>

namespace frontal::cli
{

struct config {
    enum class mode_kind { exact, jet };
    mode_kind mode = mode_kind::exact;
    unsigned jet_degree = 10; // truncation degree of check in jet mode
    unsigned jet_cap = 40;
    unsigned n3_jet_cap = 12;
    bool json = false;
    std::uint64_t seed = 20261014;

    jet_limits limits() const
    {
        return {jet_cap, n3_jet_cap};
    }
    // Throws error("InvalidConfig") when a cap is below 4.
    void validate() const;
};

struct command {
    std::string verb;
    std::vector<std::string> inputs; // expression text or file paths
    bool multigerm = false;          // stable: treat all inputs as branches of one multigerm
};

struct outcome {
    int exit_code = 0; // 0 success, 2 NotFrontal / NotStable, 1 any other error
    std::string out;
    std::string err;
};

const std::vector<std::string> &verbs();

outcome run(const command &cmd, const config &cfg);

} // namespace frontal::cli
