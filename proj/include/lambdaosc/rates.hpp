#pragma once

#include "lambdaosc/params.hpp"

namespace lambdaosc {

// The shared damping building blocks. Symbol map (see docs/equations.md):
//   gamma_plus/minus   = gamma^(+-)
//   Gamma_plus/minus   = Gamma^(+-)
//   gamma0_plus/minus  = gamma^(+-)_0   (signed)
//   gamma00            = gamma^(0)_0
struct BaseRates {
    double gamma_plus = 0, gamma_minus = 0;
    double Gamma_plus = 0, Gamma_minus = 0;
    double gamma0_plus = 0, gamma0_minus = 0;
    double gamma00 = 0;
};

BaseRates base_rates(const DressedParams& d, double gamma2, double gamma3,
                     double gamma);

// Rate coefficients gamma^(i)_j of the single-quantum-resonance system.
// g4_4 = g5_5 = g6_6 = g3_3 hold by construction (aliased accessors).
// g1_2 is the gamma-dependent population cross coefficient; the commonly
// quoted form of this system omits it, which fails the operator-level
// equivalence gate for gamma > 0 (docs/equations.md).
struct CaseIRates {
    double g1_0 = 0, g1_1 = 0, g1_2 = 0;
    double g2_0 = 0, g2_1 = 0, g2_2 = 0;
    double g3_3 = 0;
    double g4_4() const { return g3_3; }
    double g5_5() const { return g3_3; }
    double g6_6() const { return g3_3; }
};

CaseIRates case1_rates(const BaseRates& b, const DressedParams& d,
                       double gamma2, double gamma3, double gamma);

// Rate coefficients gammat^(i)_j of the two-quanta-resonance system.
// All equality chains hold by construction.
struct CaseIIRates {
    double t1_0 = 0, t1_1 = 0, t1_2 = 0;
    double t2_0 = 0, t2_1 = 0, t2_2 = 0;
    double t3_3 = 0, t3_7 = 0;
    double t5_5 = 0, t5_9 = 0;
    double t9_5 = 0;
    double t11_11 = 0;
    double t4_4() const { return t3_3; }
    double t4_8() const { return t3_7; }
    double t6_6() const { return t5_5; }
    double t6_10() const { return t5_9; }
    double t7_7() const { return t6_6(); }
    double t7_3() const { return t6_10(); }
    double t8_8() const { return t7_7(); }
    double t8_4() const { return t7_3(); }
    double t9_9() const { return t3_3; }
    double t10_10() const { return t3_3; }
    double t10_6() const { return t9_5; }
    double t12_12() const { return t11_11; }
    double t13_13() const { return t11_11; }
    double t14_14() const { return t11_11; }
    double t15_15() const { return t11_11; }
    double t16_16() const { return t11_11; }
};

CaseIIRates case2_rates(const BaseRates& b, const DressedParams& d,
                        double gamma2, double gamma3, double gamma);

// Population rate coefficients gamma^(+-)_{11,22,33} of the emitter-only
// system. g22 carries 2*Gamma^(-+); the 1/2 variant fails the oracle gate
// (docs/equations.md).
struct EmitterRates {
    double g11_plus = 0, g11_minus = 0;
    double g22_plus = 0, g22_minus = 0;
    double g33_plus = 0, g33_minus = 0;
};

EmitterRates emitter_rates(const BaseRates& b, const DressedParams& d,
                           double gamma);

} // namespace lambdaosc
