#ifndef TRICOMI_RADIALFT_HPP
#define TRICOMI_RADIALFT_HPP

#include "tricomi/errors.hpp"
#include "tricomi/quad.hpp"

namespace tricomi {

// Radial profiles whose n-dimensional inverse Fourier transforms have closed
// forms: (u = scale * |xi|)
//   JnuTimesPowPlus      u^{ nu} J_nu(u)
//   JnuTimesPowMinus     u^{-nu} J_nu(u)
//   JminusNuTimesPowPlus u^{ nu} J_{-nu}(u)
//   Knu                  u^{ nu} K_nu(u)
//   Nnu                  u^{ nu} N_nu(u)
// The convention is the paper's throughout: the inverse transform carries
// (2 pi)^{-n} and kernel e^{+i<x,xi>}; the forward transform is its inverse.
enum class RadialFtKind { JnuTimesPowPlus, JnuTimesPowMinus, JminusNuTimesPowPlus, Knu, Nnu };

struct RadialFtSpec {
    RadialFtKind kind = RadialFtKind::Knu;
    double nu = 1.0 / 3.0; // |nu| < 1/2
    int n = 1;             // spatial dimension
    double scale = 1.0;    // the t or s multiplying |xi|
};

// Parameters of I_eps(a,b) = int_0^inf e^{-eps t} t^{-lambda} J_mu(at) J_nu(bt) dt,
// with the convergence condition mu + nu + 1 > lambda and a != b.
struct WsIntegralSpec {
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 0.0;
    double a = 1.0;
    double b = 2.0;

    // internal constants of the Weber-Schafheitlin reduction
    double alpha() const { return 0.5 * (mu + nu - lambda + 1.0); }
    double beta() const { return 0.5 * (nu - lambda - mu + 1.0); }
    double gamma_c() const { return nu + 1.0; }
};

// Closed-form inverse transform at radius r = |x|.  J/N kinds are singular
// across r = scale and refuse evaluation there.
double ift_closed(const RadialFtSpec& spec, double r);

// The same transform evaluated through the one-dimensional radial integral:
// direct quadrature for the K kind, eps-ladder regularization plus
// extrapolation for the oscillatory J/N kinds.  singular_margin < 0 selects
// the default 0.05 * scale standoff from the singular locus.
double ift_numeric(const RadialFtSpec& spec, double r, const EpsSchedule& schedule,
                   const QuadSpec& qspec = {}, double singular_margin = -1.0);

// eps -> 0 limit of I_eps(a,b) in closed hypergeometric form (both branches).
// Returns exact zero when a reciprocal Gamma factor kills the coefficient.
double ws_limit_closed(const WsIntegralSpec& spec);

struct SphereReductionReport {
    double computed = 0.0; // quadrature over S^{n-1}
    double target = 0.0;   // (2 pi)^{n/2} |rx|^{1-n/2} J_{n/2-1}(r|x|)
    double abs_err = 0.0;
};

// Checks the plane-wave sphere reduction formula at small n.
SphereReductionReport sphere_reduction_check(int n, double r, double x_norm);

} // namespace tricomi

#endif
