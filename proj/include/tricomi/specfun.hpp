#ifndef TRICOMI_SPECFUN_HPP
#define TRICOMI_SPECFUN_HPP

#include "tricomi/errors.hpp"

namespace tricomi {

// Tuning knobs for the power-series evaluations.  truncation_tol is an
// absolute bound on the first neglected term, switchover_radius is the
// argument magnitude above which the large-argument asymptotic expansions
// take over from the series.
struct SeriesPolicy {
    double truncation_tol = 1e-16;
    int max_terms = 256;
    double switchover_radius = 12.0;
};

// Gamma function for real x, x not a nonpositive integer.  Negative
// arguments go through the reflection formula Gamma(1-b)Gamma(b) = pi csc(pi b).
double gamma(double x);

// sin(pi x) and cos(pi x) with exact argument reduction.
double sin_pi(double x);
double cos_pi(double x);

// Bessel functions of the first kind, J_nu(x), x >= 0.  Power series below
// the switchover radius, Hankel asymptotic expansion beyond.
double bessel_j(double nu, double x, const SeriesPolicy& policy = {});

// t^{|nu|} J_nu(t) for |nu| < 1: finite at t = 0 (the functions
// t^{1/3} J_{±1/3}(t) and t^{2/3} J_{±2/3}(t) used by the Airy forms).
double bessel_j_scaled(double nu, double t, const SeriesPolicy& policy = {});

// Modified Bessel function I_nu(x), x >= 0.
double bessel_i(double nu, double x, const SeriesPolicy& policy = {});

// t^{|nu|} I_nu(t) for |nu| < 1, finite at t = 0.
double bessel_i_scaled(double nu, double t, const SeriesPolicy& policy = {});

// Macdonald function K_nu(x), x > 0.  Symmetric in nu.  Defined through
// K_nu = (pi csc(nu pi)/2)(I_{-nu} - I_nu) at small x, through the integral
// representation int_0^inf e^{-x cosh t} cosh(nu t) dt at moderate x (which
// also covers integer orders), and through the e^{-x} asymptotic series at
// large x.
double bessel_k(double nu, double x, const SeriesPolicy& policy = {});

// Neumann function N_nu = (J_nu cos(nu pi) - J_{-nu}) / sin(nu pi),
// x > 0, nu not an integer.
double neumann_n(double nu, double x, const SeriesPolicy& policy = {});

// Airy functions and derivatives, real argument.  Positive axis through the
// I/K Bessel forms, negative axis through the J forms, closed Gamma
// constants at zero.
double airy_ai(double z);
double airy_bi(double z);
double airy_ai_prime(double z);
double airy_bi_prime(double z);

// Single-route entry points, exposed so the series/asymptotic seam can be
// probed directly.
double bessel_j_series(double nu, double x, const SeriesPolicy& policy = {});
double bessel_j_asymptotic(double nu, double x);
double bessel_i_series(double nu, double x, const SeriesPolicy& policy = {});
double bessel_i_asymptotic(double nu, double x);
double bessel_k_by_definition(double nu, double x, const SeriesPolicy& policy = {});
double bessel_k_by_integral(double nu, double x);
double bessel_k_asymptotic(double nu, double x);

// k-th positive zero of J_nu by the McMahon expansion.  Approximate; used
// for partitioning oscillatory integrals.
double bessel_j_zero_mcmahon(double nu, int k);

} // namespace tricomi

#endif
