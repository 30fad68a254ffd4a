#include "lambdaosc/rates.hpp"

namespace lambdaosc {

BaseRates base_rates(const DressedParams& d, double gamma2, double gamma3,
                     double gamma) {
    const double s = d.sin_theta, c = d.cos_theta;
    const double c2 = c * c;
    BaseRates b;
    // gamma^(+-) = gamma2 (1 +- s)^2 + gamma3 (1 -+ s)^2
    b.gamma_plus = gamma2 * (1 + s) * (1 + s) + gamma3 * (1 - s) * (1 - s);
    b.gamma_minus = gamma2 * (1 - s) * (1 - s) + gamma3 * (1 + s) * (1 + s);
    // Gamma^(+-) = gamma^(+-) c^2/8 + gamma (1 -+ s)^4/16
    auto pow4 = [](double x) { return x * x * x * x; };
    b.Gamma_plus = b.gamma_plus * c2 / 8 + gamma * pow4(1 - s) / 16;
    b.Gamma_minus = b.gamma_minus * c2 / 8 + gamma * pow4(1 + s) / 16;
    // gamma^(+-)_0 = +-(gamma3 (1 -+ s) - gamma2 (1 +- s)) s c^2/2
    b.gamma0_plus = +(gamma3 * (1 - s) - gamma2 * (1 + s)) * s * c2 / 2;
    b.gamma0_minus = -(gamma3 * (1 + s) - gamma2 * (1 - s)) * s * c2 / 2;
    // gamma^(0)_0 = (gamma2 + gamma3) c^4/4
    b.gamma00 = (gamma2 + gamma3) * c2 * c2 / 4;
    return b;
}

CaseIRates case1_rates(const BaseRates& b, const DressedParams& d,
                       double gamma2, double gamma3, double gamma) {
    const double s = d.sin_theta, c = d.cos_theta;
    const double s2 = s * s, c2 = c * c;
    const double gpm = b.gamma_minus + b.gamma_plus;
    CaseIRates r;
    // gamma^(1)_0 = ((g^- + g^+) s^2 + gamma c^2 (1 + s^2))/2
    r.g1_0 = (gpm * s2 + gamma * c2 * (1 + s2)) / 2;
    // gamma^(1)_1 = 2 g^0_0 + (g^- + g^+) s^2/2 + 3 gamma c^2 (1 + s^2)/4
    r.g1_1 = 2 * b.gamma00 + gpm * s2 / 2 + 3 * gamma * c2 * (1 + s2) / 4;
    // population cross coefficient, equals gammat^(1)_2
    r.g1_2 = gamma * s * c2 / 2;
    // gamma^(2)_0 = ((g^+ - g^-) s^2 - 2 gamma s c^2)/2
    r.g2_0 = ((b.gamma_plus - b.gamma_minus) * s2 - 2 * gamma * s * c2) / 2;
    // gamma^(2)_1 = 2(G^- - G^+) + (g^+ - g^-) s^2/2 - gamma s c^2/2
    r.g2_1 = 2 * (b.Gamma_minus - b.Gamma_plus)
             + (b.gamma_plus - b.gamma_minus) * s2 / 2 - gamma * s * c2 / 2;
    // gamma^(2)_2 = 2(g^0_0 + G^- + G^+ + gamma c^2 (1 + s^2)/8)
    r.g2_2 = 2 * (b.gamma00 + b.Gamma_minus + b.Gamma_plus
                  + gamma * c2 * (1 + s2) / 8);
    // gamma^(3)_3 = (gamma2 + gamma3) c^2/2 + 2 g^0_0 + G^- + G^+
    //               + gamma c^2 (1 + s^2)/4
    r.g3_3 = (gamma2 + gamma3) * c2 / 2 + 2 * b.gamma00 + b.Gamma_minus
             + b.Gamma_plus + gamma * c2 * (1 + s2) / 4;
    return r;
}

CaseIIRates case2_rates(const BaseRates& b, const DressedParams& d,
                        double gamma2, double gamma3, double gamma) {
    const double s = d.sin_theta, c = d.cos_theta;
    const double s2 = s * s, c2 = c * c, c4 = c2 * c2;
    const CaseIRates c1 = case1_rates(b, d, gamma2, gamma3, gamma);
    CaseIIRates t;
    t.t1_0 = c1.g1_0;
    t.t1_1 = c1.g1_1;
    // gammat^(1)_2 = gamma s c^2/2
    t.t1_2 = gamma * s * c2 / 2;
    t.t2_0 = c1.g2_0;
    // gammat^(2)_1 = -gamma^(2)_1
    t.t2_1 = -c1.g2_1;
    t.t2_2 = c1.g2_2;
    // gammat^(3)_3 = gamma2 c^2 (1+3s)^2/8 + gamma3 c^2 (1-3s)^2/8
    //   + (g^+ + g^-) s^2/4 + g^0_0 + G^- + 9 gamma c^4/16
    //   + gamma c^2 ((1+s)^2 + (1-s)^2/2)/4
    t.t3_3 = gamma2 * c2 * (1 + 3 * s) * (1 + 3 * s) / 8
             + gamma3 * c2 * (1 - 3 * s) * (1 - 3 * s) / 8
             + (b.gamma_plus + b.gamma_minus) * s2 / 4 + b.gamma00
             + b.Gamma_minus + 9 * gamma * c4 / 16
             + gamma * c2 * ((1 + s) * (1 + s) + (1 - s) * (1 - s) / 2) / 4;
    // gammat^(3)_7 = g^+_0 + gamma c^2 (1-s)^2/4
    t.t3_7 = b.gamma0_plus + gamma * c2 * (1 - s) * (1 - s) / 4;
    // gammat^(5)_5: same as gammat^(3)_3 with s -> -s in the first pair and
    // G^- -> G^+
    t.t5_5 = gamma2 * c2 * (1 - 3 * s) * (1 - 3 * s) / 8
             + gamma3 * c2 * (1 + 3 * s) * (1 + 3 * s) / 8
             + (b.gamma_plus + b.gamma_minus) * s2 / 4 + b.gamma00
             + b.Gamma_plus + 9 * gamma * c4 / 16
             + gamma * c2 * ((1 - s) * (1 - s) + (1 + s) * (1 + s) / 2) / 4;
    // gammat^(5)_9 = g^-_0 + gamma c^2 (1+s)^2/4
    t.t5_9 = b.gamma0_minus + gamma * c2 * (1 + s) * (1 + s) / 4;
    // gammat^(9)_5 = g^+_0 + gamma c^2 (1-s)^2/4
    t.t9_5 = b.gamma0_plus + gamma * c2 * (1 - s) * (1 - s) / 4;
    // gammat^(11)_11 = (gamma2+gamma3) c^2/2 + 2 g^0_0 + G^- + G^+
    //   + gamma c^2 (1+s^2)/4   (equals gamma^(3)_3)
    t.t11_11 = c1.g3_3;
    return t;
}

EmitterRates emitter_rates(const BaseRates& b, const DressedParams& d,
                           double gamma) {
    const double s = d.sin_theta, c = d.cos_theta;
    const double s2 = s * s, c2 = c * c;
    auto pow4 = [](double x) { return x * x * x * x; };
    EmitterRates r;
    // gamma^(+-)_11 = g^(+-) s^2/2 + gamma c^2 (1 -+ s)^2/4
    r.g11_plus = b.gamma_plus * s2 / 2 + gamma * c2 * (1 - s) * (1 - s) / 4;
    r.g11_minus = b.gamma_minus * s2 / 2 + gamma * c2 * (1 + s) * (1 + s) / 4;
    // gamma^(+-)_22 = 2 g^0_0 + 2 G^(-+) + gamma c^2 (1 +- s)^2/4
    r.g22_plus = 2 * b.gamma00 + 2 * b.Gamma_minus
                 + gamma * c2 * (1 + s) * (1 + s) / 4;
    r.g22_minus = 2 * b.gamma00 + 2 * b.Gamma_plus
                  + gamma * c2 * (1 - s) * (1 - s) / 4;
    // gamma^(+-)_33 = g^(+-) c^2/4 + gamma (1 -+ s)^4/8
    r.g33_plus = b.gamma_plus * c2 / 4 + gamma * pow4(1 - s) / 8;
    r.g33_minus = b.gamma_minus * c2 / 4 + gamma * pow4(1 + s) / 8;
    return r;
}

} // namespace lambdaosc
