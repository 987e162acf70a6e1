#ifndef TRICOMI_QUAD_HPP
#define TRICOMI_QUAD_HPP

#include "tricomi/errors.hpp"

#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace tricomi {

struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
};

// Descending ladder of regularization parameters for the e^{-eps|xi|}
// converging factor, plus the polynomial order of the eps -> 0 extrapolation.
struct EpsSchedule {
    std::vector<double> eps_values;
    int extrapolation_order = 3;

    // eps_k = 0.2 * 2^{-k}, k = 0..6, order 3.
    static EpsSchedule default_ladder();
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    long func_evals = 0;
    long nonfinite_evals = 0;
};

// Adaptive Gauss-Kronrod integration of f over the finite interval [a,b],
// applied after a tanh-sinh change of variables so that integrable endpoint
// power singularities x^alpha, alpha > -1, need no special casing.  Throws
// ConvergenceError (carrying the partial estimate) if the subdivision budget
// runs out before reaching max(abs_tol, rel_tol*|result|).
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec = {});

// Parameters of the Weber-Schafheitlin-type integrand
// e^{-eps t} t^{-lambda} J_mu(a t) J_nu(b t).
struct BesselTailIntegrand {
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double a = 1.0;
    double b = 1.0;
};

// Semi-infinite integral of the integrand above, eps >= 0.  The domain is
// partitioned at the (McMahon) zeros of the faster-oscillating Bessel factor
// and the alternating partial sums are accelerated with the Wynn epsilon
// algorithm; no hard truncation of the tail is ever applied.
QuadResult integrate_bessel_tail(const BesselTailIntegrand& g, double eps,
                                 const QuadSpec& spec = {});

struct ExtrapolationResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Richardson (Neville polynomial) extrapolation of (eps, value) samples to
// eps = 0, using the extrapolation_order + 1 smallest eps values.
ExtrapolationResult extrapolate_eps_limit(const std::vector<std::pair<double, double>>& samples,
                                          const EpsSchedule& schedule);

// Surface integral of g over the unit sphere S^{n-1}, n in {2,3}:
// periodic trapezoid rule on the circle, product Gauss rule on S^2.
double sphere_integral(int n, const std::function<double(std::span<const double>)>& g);

} // namespace tricomi

#endif
