#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lambdaosc {

// Raw model inputs. All quantities are dimensionless multiples of one
// reference decay rate chosen by the caller; hbar never appears.
struct PhysicalParams {
    double omega = 50.0;    // oscillator frequency
    double omega23 = 0.0;   // lower-doublet splitting (may be negative)
    double Omega0 = 20.0;   // Rabi frequency, Omega_2 = Omega_3 = Omega0
    double g = 4.0;         // oscillator-emitter coupling
    double gamma2 = 1.0;    // |1> -> |2> decay
    double gamma3 = 0.1;    // |1> -> |3> decay
    double gamma = 0.0;     // |2> -> |3> decay
    double kappa = 1e-3;    // oscillator leak
    double nbar = 1.0;      // bath occupancy

    // Throws std::invalid_argument when a field is out of domain.
    void validate() const;
};

// Derived dressed-state quantities. theta is carried as the
// (sin_theta, cos_theta) pair; cos_theta >= 0 always.
struct DressedParams {
    double sin_theta = 0.0;
    double cos_theta = 1.0;
    double Omega = 0.0;       // generalized Rabi frequency
    double delta_bar = 0.0;   // omega - 2*Omega
    double delta_tilde = 0.0; // omega - Omega
    double g_bar = 0.0;       // g*cos^2(theta)/2
    double g_tilde = 0.0;     // g*sin(2theta)/(2*sqrt(2))
};

DressedParams derive_dressed(const PhysicalParams& p);

// Bose occupancy 1/(exp(hbar*omega/kB/T) - 1). T = 0 and large
// hbar*omega/kB/T both return 0 (no overflow, no NaN).
double thermal_occupancy(double omega, double temperature, double hbar_over_kB);

struct RegimeWarning {
    std::string ratio_name; // e.g. "Omega/g"
    double value = 0.0;
    double threshold = 0.0;
    std::string message() const;
};

// One warning per violated ratio Omega/x < threshold, x in
// {g, gamma, gamma2, gamma3}. Zero-valued x never warns.
std::vector<RegimeWarning> validate_regime(const PhysicalParams& p,
                                           const DressedParams& d,
                                           double threshold = 5.0);

} // namespace lambdaosc
