#include "tricomi/fundsol.hpp"

#include "tricomi/specfun.hpp"

#include <cmath>
#include <string>

namespace tricomi {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
const double kSqrt3 = std::sqrt(3.0);

double cos_half_pi_int(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return 1.0;
        case 2: return -1.0;
        default: return 0.0;
    }
}

void check_dim(int n, const SpacetimePoint& p, const char* who) {
    if (n < 1) throw DomainError(std::string(who) + ": requires n >= 1");
    if (n != p.n()) throw DomainError(std::string(who) + ": dimension mismatch with point");
}

// u^{1/3} K_{1/3}(u), finite at u = 0 (value 2^{-2/3} Gamma(1/3)).
double k13_scaled(double u) {
    if (u <= 1.0)
        return kPi / kSqrt3 * (bessel_i_scaled(-1.0 / 3.0, u) - bessel_i_scaled(1.0 / 3.0, u));
    return std::pow(u, 1.0 / 3.0) * bessel_k(1.0 / 3.0, u);
}

// u^{1/3} N_{-1/3}(u) = (2 u^{1/3} J_{1/3}(u) - u^{1/3} J_{-1/3}(u)) / sqrt(3)
double n13_scaled(double u) {
    return (2.0 * bessel_j_scaled(1.0 / 3.0, u) - bessel_j_scaled(-1.0 / 3.0, u)) / kSqrt3;
}

double exponent(int n) { return 1.0 / 3.0 - 0.5 * n; }

} // namespace

SpacetimePoint::SpacetimePoint(std::vector<double> x, double y) : x_(std::move(x)), y_(y) {
    if (x_.empty()) throw DomainError("SpacetimePoint: requires n >= 1");
    xsq_ = 0.0;
    for (double c : x_) xsq_ += c * c;
    disc_ = 9.0 * xsq_ + 4.0 * y_ * y_ * y_;
}

SpacetimePoint SpacetimePoint::radial(int n, double x_norm, double y) {
    if (n < 1) throw DomainError("SpacetimePoint: requires n >= 1");
    std::vector<double> x(static_cast<size_t>(n), 0.0);
    x[0] = x_norm;
    return SpacetimePoint(std::move(x), y);
}

double SpacetimePoint::x_norm() const { return std::sqrt(xsq_); }

double default_cone_tol(const SpacetimePoint& p) {
    return 1e-9 * (1.0 + 9.0 * p.x_norm_sq() + 4.0 * std::fabs(p.y() * p.y() * p.y()));
}

Region classify(const SpacetimePoint& p, double cone_tol) {
    if (cone_tol < 0.0) throw DomainError("classify: requires cone_tol >= 0");
    if (p.discriminant() > cone_tol) return Region::DPlus;
    if (p.discriminant() < -cone_tol) return Region::DMinus;
    return Region::Cone;
}

SubstitutedTime SubstitutedTime::from_y(double y) {
    SubstitutedTime st;
    if (y >= 0.0)
        st.s = (2.0 / 3.0) * y * std::sqrt(y);
    else
        st.t = (2.0 / 3.0) * (-y) * std::sqrt(-y);
    return st;
}

SpectralGreen SpectralGreen::airy_two_sided(double b_offset) {
    SpectralGreen g;
    g.construction = SpectralConstruction::AiryTwoSided;
    g.b_offset = b_offset;
    g.constants = {-kPi};
    return g;
}

SpectralGreen SpectralGreen::origin_ai_bi() {
    SpectralGreen g;
    g.construction = SpectralConstruction::OriginAiBi;
    double g23 = std::tgamma(2.0 / 3.0);
    g.constants = {-1.0 / (std::pow(2.0, 1.0 / 3.0) * std::pow(3.0, 1.0 / 3.0) * g23),
                   -kPi / (std::pow(2.0, 1.0 / 3.0) * std::pow(3.0, 5.0 / 6.0) * g23)};
    return g;
}

SpectralGreen SpectralGreen::minus_only() {
    SpectralGreen g;
    g.construction = SpectralConstruction::MinusOnly;
    g.constants = {std::pow(3.0, 2.0 / 3.0) * std::tgamma(4.0 / 3.0) / std::pow(2.0, 1.0 / 3.0)};
    return g;
}

SpectralGreen SpectralGreen::plus_kn() {
    SpectralGreen g;
    g.construction = SpectralConstruction::PlusKN;
    double g23 = std::tgamma(2.0 / 3.0);
    g.constants = {-std::pow(2.0, 2.0 / 3.0) / (std::pow(3.0, 4.0 / 3.0) * g23),
                   2.0 * kPi / (std::pow(2.0, 1.0 / 3.0) * std::pow(3.0, 4.0 / 3.0) * g23)};
    return g;
}

double spectral_green(const SpectralGreen& g, double xi_norm, double y) {
    if (!(xi_norm > 0.0)) throw DomainError("spectral_green: requires |xi| > 0");
    const double xi23 = std::pow(xi_norm, 2.0 / 3.0);
    const SubstitutedTime st = SubstitutedTime::from_y(y);

    switch (g.construction) {
        case SpectralConstruction::AiryTwoSided: {
            double b = g.b_offset;
            double pref = -kPi / xi23;
            if (y >= b) return pref * airy_bi(xi23 * b) * airy_ai(xi23 * y);
            return pref * airy_ai(xi23 * b) * airy_bi(xi23 * y);
        }
        case SpectralConstruction::OriginAiBi: {
            double alpha = g.constants[0], beta = g.constants[1];
            if (y >= 0.0) return alpha / xi23 * k13_scaled(st.s * xi_norm);
            double u = st.t * xi_norm;
            return beta / xi23 *
                   (bessel_j_scaled(-1.0 / 3.0, u) - bessel_j_scaled(1.0 / 3.0, u));
        }
        case SpectralConstruction::MinusOnly: {
            if (y >= 0.0) return 0.0;
            return g.constants[0] / xi23 * bessel_j_scaled(1.0 / 3.0, st.t * xi_norm);
        }
        case SpectralConstruction::PlusKN: {
            double gam = g.constants[0], del = g.constants[1];
            if (y >= 0.0) return gam / xi23 * k13_scaled(st.s * xi_norm);
            return del / xi23 * n13_scaled(st.t * xi_norm);
        }
    }
    throw DomainError("spectral_green: unknown construction");
}

double f_minus_constant(int n) {
    return std::pow(3.0, n) * gamma(4.0 / 3.0) /
           (std::pow(2.0, 2.0 / 3.0) * std::pow(kPi, 0.5 * n) * gamma(4.0 / 3.0 - 0.5 * n));
}

double f_sharp_dplus_constant(int n) {
    return -std::pow(3.0, n - 2.0) / (std::pow(2.0, 2.0 / 3.0) * std::pow(kPi, 0.5 * n)) *
           gamma(0.5 * n - 1.0 / 3.0) / gamma(2.0 / 3.0);
}

double f_sharp_dminus_constant(int n) {
    return -cos_half_pi_int(n) * std::pow(2.0, 1.0 / 3.0) * std::pow(3.0, n - 2.0) /
           std::pow(kPi, 0.5 * n) * gamma(0.5 * n - 1.0 / 3.0) / gamma(2.0 / 3.0);
}

double f_minus(int n, const SpacetimePoint& p, double cone_tol) {
    check_dim(n, p, "f_minus");
    if (cone_tol < 0.0) cone_tol = default_cone_tol(p);
    switch (classify(p, cone_tol)) {
        case Region::DPlus: return 0.0;
        case Region::DMinus:
            return f_minus_constant(n) * std::pow(-p.discriminant(), exponent(n));
        default:
            throw SingularLocusError("f_minus: evaluation on the characteristic cone");
    }
}

double f_sharp(int n, const SpacetimePoint& p, double cone_tol) {
    check_dim(n, p, "f_sharp");
    if (cone_tol < 0.0) cone_tol = default_cone_tol(p);
    switch (classify(p, cone_tol)) {
        case Region::DPlus:
            return f_sharp_dplus_constant(n) * std::pow(p.discriminant(), exponent(n));
        case Region::DMinus:
            return f_sharp_dminus_constant(n) * std::pow(-p.discriminant(), exponent(n));
        default:
            throw SingularLocusError("f_sharp: evaluation on the characteristic cone");
    }
}

double f_plus(int n, const SpacetimePoint& p, double cone_tol) {
    check_dim(n, p, "f_plus");
    if (n % 2 == 1) return f_sharp(n, p, cone_tol);
    // even n: the 3 F# - 2 F- combination; its D_- branch cancels through
    // 3A - 2B = 0
    return 3.0 * f_sharp(n, p, cone_tol) - 2.0 * f_minus(n, p, cone_tol);
}

std::pair<double, double> ab_constants(int n) {
    if (n < 2 || n % 2 != 0) throw DomainError("ab_constants: requires even n >= 2");
    const int k = n / 2;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^{k+1}
    const double pik = std::pow(kPi, k);
    const double gk = gamma(k - 1.0 / 3.0);
    const double g23 = gamma(2.0 / 3.0);
    double A = sign * std::pow(2.0, 1.0 / 3.0) * std::pow(3.0, 2.0 * (k - 1.0)) / pik * gk / g23;
    double B1 = std::pow(3.0, 2.0 * k) / (std::pow(2.0, 2.0 / 3.0) * pik) * gamma(4.0 / 3.0) /
                gamma(4.0 / 3.0 - k);
    double B2 = sign * std::pow(3.0, 2.0 * k - 1.0) / (std::pow(2.0, 2.0 / 3.0) * pik) * gk / g23;
    if (std::fabs(B1 - B2) > 1e-12 * std::fabs(B1))
        throw ConvergenceError("ab_constants: the two printed routes for B disagree", B1,
                               std::fabs(B1 - B2));
    return {A, B1};
}

double homogeneity_degree(int n) {
    if (n < 1) throw DomainError("homogeneity_degree: requires n >= 1");
    return 2.0 - 3.0 * n;
}

} // namespace tricomi
