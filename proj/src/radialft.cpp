#include "tricomi/radialft.hpp"

#include "tricomi/hypergeom.hpp"
#include "tricomi/specfun.hpp"

#include <cmath>
#include <string>

namespace tricomi {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(m pi/2), cos(m pi/2) exactly for integer m.
double sin_half_pi(int m) {
    switch (((m % 4) + 4) % 4) {
        case 1: return 1.0;
        case 3: return -1.0;
        default: return 0.0;
    }
}
double cos_half_pi(int m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return 1.0;
        case 2: return -1.0;
        default: return 0.0;
    }
}

void check_spec(const RadialFtSpec& spec) {
    if (!(std::fabs(spec.nu) < 0.5)) throw DomainError("radialft: requires |nu| < 1/2");
    if (spec.n < 1) throw DomainError("radialft: requires n >= 1");
    if (!(spec.scale > 0.0)) throw DomainError("radialft: requires scale > 0");
}

// Unit-scale closed forms, rho = |x|.
double unit_closed(RadialFtKind kind, double nu, int n, double rho) {
    const double hn = 0.5 * n;
    switch (kind) {
        case RadialFtKind::Knu:
            return std::pow(2.0, nu - 1.0) * gamma(hn + nu) / std::pow(kPi, hn) *
                   std::pow(1.0 + rho * rho, -hn - nu);
        case RadialFtKind::JnuTimesPowPlus: {
            double c = std::pow(2.0, nu) * gamma(hn + nu) / std::pow(kPi, hn + 1.0);
            if (rho < 1.0)
                return sin_half_pi(n) * c * std::pow(1.0 - rho * rho, -hn - nu);
            return -sin_pi(nu) * c * std::pow(rho * rho - 1.0, -hn - nu);
        }
        case RadialFtKind::JnuTimesPowMinus: {
            if (rho > 1.0) return 0.0;
            double g = nu - hn + 1.0;
            if (nonpositive_integer(g)) return 0.0;
            return std::pow(1.0 - rho * rho, nu - hn) /
                   (std::pow(2.0, nu) * std::pow(kPi, hn) * gamma(g));
        }
        case RadialFtKind::JminusNuTimesPowPlus: {
            if (rho > 1.0) return 0.0;
            return std::pow(2.0, nu) * sin_pi(nu + hn) * gamma(nu + hn) /
                   std::pow(kPi, hn + 1.0) * std::pow(1.0 - rho * rho, -nu - hn);
        }
        case RadialFtKind::Nnu: {
            double c = std::pow(2.0, nu) * gamma(hn + nu) / std::pow(kPi, hn + 1.0);
            if (rho < 1.0)
                return -cos_half_pi(n) * c * std::pow(1.0 - rho * rho, -hn - nu);
            return -cos_pi(nu) * c * std::pow(rho * rho - 1.0, -hn - nu);
        }
    }
    throw DomainError("radialft: unknown kind");
}

bool has_singular_locus(RadialFtKind kind) { return kind != RadialFtKind::Knu; }

} // namespace

double ift_closed(const RadialFtSpec& spec, double r) {
    check_spec(spec);
    if (!(r >= 0.0)) throw DomainError("ift_closed: requires r >= 0");
    if (has_singular_locus(spec.kind) && std::fabs(r - spec.scale) <= 1e-12 * spec.scale)
        throw SingularLocusError("ift_closed: evaluation on the singular locus r = scale");
    return std::pow(spec.scale, -spec.n) * unit_closed(spec.kind, spec.nu, spec.n, r / spec.scale);
}

double ift_numeric(const RadialFtSpec& spec, double r, const EpsSchedule& schedule,
                   const QuadSpec& qspec, double singular_margin) {
    check_spec(spec);
    if (!(r > 0.0)) throw DomainError("ift_numeric: requires r > 0");
    if (singular_margin < 0.0) singular_margin = 0.05 * spec.scale;

    const int n = spec.n;
    const double nu = spec.nu;
    const double s = spec.scale;
    const double hn = 0.5 * n;
    const double jorder = hn - 1.0;
    const double prefactor = std::pow(r, 1.0 - hn) * std::pow(2.0 * kPi, -hn);

    if (spec.kind == RadialFtKind::Knu) {
        // integrand decays like e^{-s t}; truncation at 52/s is below the
        // quadrature tolerance
        double T = 52.0 / s;
        auto f = [&](double t) {
            return std::pow(t, hn) * std::pow(s * t, nu) * bessel_k(nu, s * t) *
                   bessel_j(jorder, r * t);
        };
        return prefactor * integrate(f, 0.0, T, qspec).value;
    }

    if (std::fabs(r - s) < singular_margin)
        throw DomainError("ift_numeric: radius within the singular-locus margin");

    auto tail = [&](double jnu, double lambda, double eps) {
        BesselTailIntegrand g{lambda, jorder, jnu, r, s};
        return integrate_bessel_tail(g, eps, qspec).value;
    };

    std::vector<std::pair<double, double>> samples;
    samples.reserve(schedule.eps_values.size());
    for (double eps : schedule.eps_values) {
        double v;
        switch (spec.kind) {
            case RadialFtKind::JnuTimesPowPlus:
                v = std::pow(s, nu) * tail(nu, -(hn + nu), eps);
                break;
            case RadialFtKind::JnuTimesPowMinus:
                v = std::pow(s, -nu) * tail(nu, -(hn - nu), eps);
                break;
            case RadialFtKind::JminusNuTimesPowPlus:
                v = std::pow(s, nu) * tail(-nu, -(hn + nu), eps);
                break;
            case RadialFtKind::Nnu:
                v = std::pow(s, nu) *
                    (cos_pi(nu) * tail(nu, -(hn + nu), eps) - tail(-nu, -(hn + nu), eps)) /
                    sin_pi(nu);
                break;
            default:
                throw DomainError("ift_numeric: unknown kind");
        }
        samples.emplace_back(eps, v);
    }
    return prefactor * extrapolate_eps_limit(samples, schedule).value;
}

double ws_limit_closed(const WsIntegralSpec& spec) {
    if (!(spec.a > 0.0) || !(spec.b > 0.0)) throw DomainError("ws_limit_closed: requires a, b > 0");
    if (spec.a == spec.b) throw DomainError("ws_limit_closed: a = b is outside the treated range");
    if (!(spec.mu + spec.nu + 1.0 > spec.lambda))
        throw DomainError("ws_limit_closed: requires mu + nu + 1 > lambda");

    // Branches are images of each other under (a,mu) <-> (b,nu); normalize to
    // "big" and "small" so both go through one code path.
    double big_x, big_ord, small_x, small_ord;
    if (spec.b < spec.a) {
        big_x = spec.a;
        big_ord = spec.mu;
        small_x = spec.b;
        small_ord = spec.nu;
    } else {
        big_x = spec.b;
        big_ord = spec.nu;
        small_x = spec.a;
        small_ord = spec.mu;
    }
    const double lam = spec.lambda;
    const double A = 0.5 * (spec.mu + spec.nu - lam + 1.0); // > 0 by precondition
    const double B = 0.5 * (small_ord - lam - big_ord + 1.0);
    const double D = 0.5 * (lam + big_ord - small_ord + 1.0);
    const double C = small_ord + 1.0;

    // a reciprocal Gamma pole in the denominator kills the whole coefficient
    if (nonpositive_integer(D) || nonpositive_integer(C)) return 0.0;

    double ratio = small_x / big_x;
    double coeff = std::pow(small_x, small_ord) * gamma(A) /
                   (std::pow(2.0, lam) * std::pow(big_x, small_ord - lam + 1.0) * gamma(C) *
                    gamma(D));
    return coeff * hyp2f1(A, B, C, ratio * ratio);
}

SphereReductionReport sphere_reduction_check(int n, double r, double x_norm) {
    if (!(r > 0.0) || !(x_norm > 0.0))
        throw DomainError("sphere_reduction_check: requires r > 0 and |x| > 0");
    const double rx = r * x_norm;
    // phase real part; the imaginary part vanishes by symmetry
    double computed = sphere_integral(n, [&](std::span<const double> w) {
        return std::cos(rx * w[0]);
    });
    double target = std::pow(2.0 * kPi, 0.5 * n) * std::pow(rx, 1.0 - 0.5 * n) *
                    bessel_j(0.5 * n - 1.0, rx);
    return {computed, target, std::fabs(computed - target)};
}

} // namespace tricomi
