#ifndef TDSCAT_BESSEL_HPP
#define TDSCAT_BESSEL_HPP

namespace tdscat {

// Spherical Bessel function of the first kind, orders 0..2, x >= 0.
// Trigonometric closed forms for moderate x; 6-term Taylor series below
// x = 1e-2 where the closed forms cancel catastrophically.
double spherical_bessel_j(int n, double x);

}  // namespace tdscat

#endif
