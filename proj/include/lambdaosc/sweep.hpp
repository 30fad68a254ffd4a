#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lambdaosc/generator.hpp"
#include "lambdaosc/observables.hpp"

namespace lambdaosc {

enum class CaseSelect { I, II, Both };

struct SweepConfig {
    PhysicalParams base;
    std::string axis = "omega23_over_2Omega0";
    std::vector<double> grid; // empty is rejected by run_sweep
    CaseSelect cases = CaseSelect::I;
    double conv_tol = 1e-6;
    int n_max_start = 0; // 0 = ceil(8*(nbar+1))
    int n_max_cap = 512;
    int jobs = 1;
    GeneratorVariants variants;

    static std::vector<double> uniform_grid(double lo, double hi, int points);
};

struct SweepRow {
    double axis_value = 0;
    Case which = Case::I;
    Observables obs;
    int n_max_used = 0;
    bool converged = false;
    double residual = 0;
    bool failed = false;
    std::string error;
};

// Set one named parameter on a copy of base. Knows the physical axes plus
// the scaled control axis omega23_over_2Omega0. Throws on unknown names.
PhysicalParams apply_axis(const PhysicalParams& base, const std::string& axis,
                          double value);

// Double n_max until (mean_n, g2) move by less than conv_tol relative, or
// the cap is reached (converged = false). Solver failures are folded into
// the row, never thrown.
SweepRow converge_nmax(const PhysicalParams& point, Case which,
                       const SweepConfig& cfg);

// One row per (case, grid value), ordered by (case, axis value).
// Deterministic for a fixed config regardless of jobs.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

} // namespace lambdaosc
