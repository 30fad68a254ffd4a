#include "lambdaosc/params.hpp"

#include <cmath>
#include <sstream>

namespace lambdaosc {

void PhysicalParams::validate() const {
    auto bad = [](const std::string& what) {
        throw std::invalid_argument("PhysicalParams: " + what);
    };
    for (double v : {omega, omega23, Omega0, g, gamma2, gamma3, gamma, kappa, nbar})
        if (!std::isfinite(v)) bad("all parameters must be finite");
    if (Omega0 <= 0) bad("Omega0 must be > 0");
    if (kappa <= 0) bad("kappa must be > 0");
    if (g < 0) bad("g must be >= 0");
    if (gamma2 < 0 || gamma3 < 0 || gamma < 0) bad("decay rates must be >= 0");
    if (nbar < 0) bad("nbar must be >= 0");
}

DressedParams derive_dressed(const PhysicalParams& p) {
    DressedParams d;
    d.Omega = std::sqrt(2.0 * p.Omega0 * p.Omega0 + 0.25 * p.omega23 * p.omega23);
    d.sin_theta = p.omega23 / (2.0 * d.Omega);
    d.cos_theta = std::sqrt(2.0) * p.Omega0 / d.Omega;
    d.delta_bar = p.omega - 2.0 * d.Omega;
    d.delta_tilde = p.omega - d.Omega;
    d.g_bar = p.g * d.cos_theta * d.cos_theta / 2.0;
    d.g_tilde = p.g * d.sin_theta * d.cos_theta / std::sqrt(2.0);
    return d;
}

double thermal_occupancy(double omega, double temperature, double hbar_over_kB) {
    if (temperature <= 0.0) return 0.0;
    const double x = hbar_over_kB * omega / temperature;
    // expm1 overflows to +inf for large x; 1/inf = 0, which is the wanted limit
    return 1.0 / std::expm1(x);
}

std::string RegimeWarning::message() const {
    std::ostringstream os;
    os << "secular regime violated: " << ratio_name << " = " << value
       << " < " << threshold;
    return os.str();
}

std::vector<RegimeWarning> validate_regime(const PhysicalParams& p,
                                           const DressedParams& d,
                                           double threshold) {
    std::vector<RegimeWarning> out;
    const std::pair<const char*, double> checks[] = {
        {"Omega/g", p.g},
        {"Omega/gamma", p.gamma},
        {"Omega/gamma2", p.gamma2},
        {"Omega/gamma3", p.gamma3},
    };
    for (const auto& [name, x] : checks) {
        if (x <= 0.0) continue;
        const double ratio = d.Omega / x;
        if (ratio < threshold) out.push_back({name, ratio, threshold});
    }
    return out;
}

} // namespace lambdaosc
