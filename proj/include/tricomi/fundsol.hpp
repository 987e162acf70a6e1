#ifndef TRICOMI_FUNDSOL_HPP
#define TRICOMI_FUNDSOL_HPP

#include "tricomi/errors.hpp"

#include <utility>
#include <vector>

namespace tricomi {

// A point (x, y) in R^{n+1} with the discriminant 9|x|^2 + 4y^3 cached at
// construction.  Immutable.
class SpacetimePoint {
public:
    SpacetimePoint(std::vector<double> x, double y);
    // representative point for radial quantities: x = (x_norm, 0, ..., 0)
    static SpacetimePoint radial(int n, double x_norm, double y);

    int n() const { return static_cast<int>(x_.size()); }
    const std::vector<double>& x() const { return x_; }
    double y() const { return y_; }
    double x_norm_sq() const { return xsq_; }
    double x_norm() const;
    double discriminant() const { return disc_; }

private:
    std::vector<double> x_;
    double y_;
    double xsq_;
    double disc_;
};

enum class Region { DPlus, DMinus, Cone };

// 1e-9 scaled to the magnitude of the discriminant's ingredients.
double default_cone_tol(const SpacetimePoint& p);

Region classify(const SpacetimePoint& p, double cone_tol);

// The substituted times s = (2/3) y^{3/2} (y >= 0) and t = (2/3)(-y)^{3/2}
// (y <= 0); exactly one is active per sign of y, both vanish at y = 0.
struct SubstitutedTime {
    double s = 0.0;
    double t = 0.0;
    static SubstitutedTime from_y(double y);
};

// The four spectral-side Green's function constructions for
// F~_yy - y |xi|^2 F~ = delta(y - b):
//   AiryTwoSided  two-sided Airy product, any offset b
//   OriginAiBi    b = 0 simplification in substituted time (K / J-pair form)
//   MinusOnly     b = 0, supported in y <= 0 (single J_{1/3} term)
//   PlusKN        b = 0, K_{1/3} above / N_{-1/3} below
enum class SpectralConstruction { AiryTwoSided, OriginAiBi, MinusOnly, PlusKN };

struct SpectralGreen {
    SpectralConstruction construction = SpectralConstruction::OriginAiBi;
    double b_offset = 0.0;        // nonzero only for AiryTwoSided
    std::vector<double> constants; // the construction's coefficient set

    static SpectralGreen airy_two_sided(double b_offset);
    static SpectralGreen origin_ai_bi(); // constants {alpha, beta}
    static SpectralGreen minus_only();   // constants {3^{2/3} Gamma(4/3) / 2^{1/3}}
    static SpectralGreen plus_kn();      // constants {gamma, delta}
};

double spectral_green(const SpectralGreen& g, double xi_norm, double y);

// Physical-space fundamental solutions.  cone_tol < 0 selects the default;
// evaluation within cone_tol of the cone raises SingularLocusError.
double f_minus(int n, const SpacetimePoint& p, double cone_tol = -1.0);
double f_sharp(int n, const SpacetimePoint& p, double cone_tol = -1.0);
double f_plus(int n, const SpacetimePoint& p, double cone_tol = -1.0);

// Branch constants (the multipliers of |9|x|^2+4y^3|^{1/3 - n/2}).
double f_minus_constant(int n);
double f_sharp_dplus_constant(int n);
double f_sharp_dminus_constant(int n);

// The D_-^n-branch constants A (of F-sharp) and B (of F-minus) for even
// n = 2k; B is evaluated by both printed routes and their agreement is
// asserted.  3A - 2B = 0 is what cancels the D_- branch of 3F# - 2F-.
std::pair<double, double> ab_constants(int n);

// Scaling degree of the fundamental solutions under the dilation
// d_t(x,y) = (t^3 x, t^2 y):  F(t^3 x, t^2 y) = t^{2-3n} F(x,y).
double homogeneity_degree(int n);

} // namespace tricomi

#endif
