#ifndef TRICOMI_HYPERGEOM_HPP
#define TRICOMI_HYPERGEOM_HPP

#include "tricomi/errors.hpp"
#include "tricomi/quad.hpp"

namespace tricomi {

// Parameter block of the Gauss hypergeometric function F(a,b;c;z).
// Supported domain: real parameters, c not a nonpositive integer, z <= 1,
// and c - a - b > 0 when z = 1.
struct Hyp2F1Params {
    double a = 0.0;
    double b = 0.0;
    double c = 1.0;
    double z = 0.0;
};

// Rising factorial (a)_n = a(a+1)...(a+n-1): direct product for n <= 64,
// Gamma ratio beyond.
double pochhammer(double a, int n);

// F(a,b;c;z) by region: direct series for |z| <= 1/2, Euler transformation
// then series on (1/2, 1), Pfaff transformation for z < 0, Gauss summation
// at z = 1.  Terminates exactly when a or b is a nonpositive integer.
double hyp2f1(const Hyp2F1Params& p);
double hyp2f1(double a, double b, double c, double z);

// Plain power-series summation, convergent for |z| < 1 (and terminating
// parameter sets); exposed so the transformation paths can be checked
// against it.
double hyp2f1_series(double a, double b, double c, double z);

// Euler integral representation, valid for c > b > 0 and z < 1; reduced to
// quadrature and used as the in-repo oracle for hyp2f1.
double hyp2f1_euler_integral(const Hyp2F1Params& p, const QuadSpec& spec = {1e-13, 1e-12, 4000});

} // namespace tricomi

#endif
