#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambdaosc/params.hpp"
#include "lambdaosc/sweep.hpp"

namespace lambdaosc {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat "key = value" document; '#' starts a comment; unknown keys are
// rejected with their line number. Every key has a default; which keys were
// defaulted is tracked for the run manifest.
struct RunConfig {
    PhysicalParams params;
    std::string reference_rate = "gamma2"; // label only, echoed to outputs

    // nbar derivation inputs; a directly given nbar wins
    double omega_si = 0.0;
    double temperature = 0.0;
    double hbar_over_kb = 7.638232577577646e-12; // K*s

    CaseSelect cases = CaseSelect::I;
    std::string axis = "omega23_over_2Omega0";
    double axis_min = 0.0;
    double axis_max = 2.0;
    int axis_points = 201;
    double conv_tol = 1e-6;
    int n_max_start = 0;
    int n_max_cap = 512;
    double regime_threshold = 5.0;
    int validate_draws = 5;
    int validate_n_max = 14;

    std::vector<std::string> defaulted_keys; // keys not present in the file
    std::map<std::string, std::string> given; // raw key -> value as parsed

    static RunConfig from_file(const std::string& path);
    static RunConfig from_text(const std::string& text,
                               const std::string& origin = "<string>");

    SweepConfig sweep_config() const;
    std::string to_json() const; // full echo, defaults included
};

} // namespace lambdaosc
