#include "lambdaosc/observables.hpp"

#include <cmath>
#include <limits>

namespace lambdaosc {

Observables reduce(const BlockVector& s, double nbar) {
    Observables o;
    double sum0 = 0, mean = 0, fac = 0;
    for (int n = 0; n <= s.n_max; ++n) {
        const double p = s.at(0, n);
        sum0 += p;
        mean += n * p;
        fac += double(n) * (n - 1) * p;
    }
    o.mean_n = mean;
    o.mean_n_over_nbar = nbar > 0 ? mean / nbar : mean;
    o.g2 = mean > 1e-300 ? fac / (mean * mean)
                         : std::numeric_limits<double>::quiet_NaN();
    const double s1 = s.block_sum(1);
    const double s2 = s.block_sum(2);
    o.Rz = s2;
    o.pop1 = sum0 - s1;
    o.pop2 = (s1 + s2) / 2;
    o.pop3 = (s1 - s2) / 2;
    return o;
}

EmitterPopulations emitter_steady_analytic(const EmitterRates& r) {
    const double Dp = r.g11_plus * (r.g22_minus + r.g33_minus)
                      + r.g22_plus * (r.g11_minus + r.g22_minus)
                      + r.g33_plus * (r.g11_minus - r.g33_minus);
    const double Dm = r.g11_minus * (r.g22_plus + r.g33_plus)
                      + r.g22_minus * (r.g11_plus + r.g22_plus)
                      + r.g33_minus * (r.g11_plus - r.g33_plus);
    if (Dp == 0.0 || Dm == 0.0)
        throw ZeroDenominator("emitter_steady_analytic: vanishing denominator");
    EmitterPopulations p;
    p.pop2 = (r.g11_plus * r.g22_minus + r.g11_minus * r.g33_plus) / Dp;
    p.pop3 = (r.g11_minus * r.g22_plus + r.g11_plus * r.g33_minus) / Dm;
    p.pop1 = 1.0 - p.pop2 - p.pop3;
    return p;
}

} // namespace lambdaosc
