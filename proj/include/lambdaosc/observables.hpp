#pragma once

#include <stdexcept>

#include "lambdaosc/block_vector.hpp"
#include "lambdaosc/rates.hpp"

namespace lambdaosc {

struct ZeroDenominator : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced steady-state quantities. g2 is NaN when the mean quanta number
// is numerically zero (deep cooling), never an exception.
struct Observables {
    double mean_n = 0;
    double mean_n_over_nbar = 0;
    double g2 = 0;
    double Rz = 0;
    double pop1 = 0, pop2 = 0, pop3 = 0;
};

Observables reduce(const BlockVector& state, double nbar);

struct EmitterPopulations {
    double pop1 = 0, pop2 = 0, pop3 = 0;
};

// Closed-form steady state of the emitter-only population system (g = 0).
EmitterPopulations emitter_steady_analytic(const EmitterRates& r);

} // namespace lambdaosc
