#ifndef TDSCAT_WAVE_HPP
#define TDSCAT_WAVE_HPP

#include <cmath>
#include <stdexcept>

#include "tdscat/linalg.hpp"

namespace tdscat {

// Background medium constants. kappa = omega * sqrt(epsilon0 * mu0) is
// enforced on construction (1e-12 relative).
struct WaveParameters {
    double epsilon0 = 1.0;
    double mu0 = 1.0;
    double omega = 0.0;
    double kappa = 0.0;

    WaveParameters(double eps0, double mu0_, double omega_, double kappa_)
        : epsilon0(eps0), mu0(mu0_), omega(omega_), kappa(kappa_) {
        if (!(epsilon0 > 0.0) || !(mu0 > 0.0) || !(omega > 0.0))
            throw std::invalid_argument("WaveParameters: epsilon0, mu0, omega must be positive");
        const double expected = omega * std::sqrt(epsilon0 * mu0);
        if (std::abs(kappa - expected) > 1e-12 * expected)
            throw std::invalid_argument("WaveParameters: kappa != omega*sqrt(epsilon0*mu0)");
    }

    static WaveParameters from_kappa(double eps0, double mu0_, double kappa_) {
        return WaveParameters(eps0, mu0_, kappa_ / std::sqrt(eps0 * mu0_), kappa_);
    }

    static WaveParameters from_omega(double eps0, double mu0_, double omega_) {
        return WaveParameters(eps0, mu0_, omega_, omega_ * std::sqrt(eps0 * mu0_));
    }

    double wavelength() const { return 2.0 * pi / kappa; }
};

}  // namespace tdscat

#endif
