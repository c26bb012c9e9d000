#ifndef TDSCAT_VALIDATION_HPP
#define TDSCAT_VALIDATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace tdscat {

// One consistency check: a named identity with its measured error and the
// threshold it must meet. Shared by the CLI `validate` subcommand and the
// test suite.
struct ValidationCheck {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct ValidationOptions {
    int polar_order = 32;
    int azimuthal_count = 64;
    double kappa = 4.0 * 3.141592653589793238462643383279502884;
    int direction_polar = 10;    // M for the theta1/theta2 checks
    int direction_azimuthal = 10;
    std::uint64_t seed = 20240817;
};

// Runs the identity suite: plane-wave quadrature identity, Gamma reciprocity
// and Im-part consistency, Bessel recurrence, theta1/theta2 convergence, and
// the finite-difference oracles for the analytic curls.
std::vector<ValidationCheck> run_validation_suite(const ValidationOptions& opts);

}  // namespace tdscat

#endif
