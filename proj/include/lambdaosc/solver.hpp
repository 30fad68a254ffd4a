#pragma once

#include <stdexcept>

#include "lambdaosc/generator.hpp"

namespace lambdaosc {

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probability entry fell below -1e-8: the truncation is too small.
struct NonPhysical : std::runtime_error {
    NonPhysical(const std::string& what, double worst_)
        : std::runtime_error(what), worst(worst_) {}
    double worst;
};

struct StepFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SolveMethod { ReplaceRow, LeastSquares };

struct SteadyStateResult {
    BlockVector state;
    double residual = 0.0;    // max |(L x)_i| over the non-replaced rows
    double trace_leak = 0.0;  // |(L x)_r| on the replaced row (truncation leak)
    double condition_hint = 0.0;
    SolveMethod method = SolveMethod::ReplaceRow;
};

// Steady state with sum_n P^(0)_n = 1. The row for P^(0)_{replace_fock}
// (default n_max) is replaced by the normalization functional and the square
// sparse system solved by LU; a least-squares solve of the stacked
// [L; normalization] system is the fallback when LU reports singularity.
SteadyStateResult steady_state(const RateMatrix& m, int replace_fock = -1);

struct StepControl {
    double rtol = 1e-8;
    double atol = 1e-12;
    double h0 = 0.0;           // 0 = choose from matrix scale
    long max_steps = 2000000;
    int max_rejects = 30;
    bool explicit_rk4 = false; // fixed-step explicit cross-check path
};

// Integrate dP/dt = L P to t_end. Default path is adaptive trapezoidal with
// step-doubling error control (stiff-capable); explicit_rk4 runs classic RK4
// at fixed step h0 for cross-checks.
BlockVector evolve(const RateMatrix& m, const BlockVector& p0, double t_end,
                   const StepControl& ctl = {});

} // namespace lambdaosc
