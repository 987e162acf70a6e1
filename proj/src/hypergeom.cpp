#include "tricomi/hypergeom.hpp"

#include "tricomi/specfun.hpp"

#include <cmath>
#include <string>

namespace tricomi {

namespace {

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// 1/Gamma(x), zero at the poles.
double rgamma(double x) {
    if (nonpositive_integer(x)) return 0.0;
    return 1.0 / gamma(x);
}

constexpr double kSeriesTol = 1e-15;
constexpr int kSeriesMaxTerms = 10000;

double series_sum(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    double comp = 0.0;
    for (int n = 0; n < kSeriesMaxTerms; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        if (term == 0.0) return sum + comp; // terminating polynomial
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) <= kSeriesTol) return sum;
    }
    throw ConvergenceError("hyp2f1: series did not converge", sum, std::fabs(term));
}

double gauss_sum_at_one(double a, double b, double c) {
    double s = c - a - b;
    if (!(s > 0.0))
        throw DomainError("hyp2f1: divergent at z = 1 with c - a - b <= 0");
    return gamma(c) * gamma(s) * rgamma(c - a) * rgamma(c - b);
}

} // namespace

double pochhammer(double a, int n) {
    if (n < 0) throw DomainError("pochhammer: requires n >= 0");
    if (n == 0) return 1.0;
    if (n <= 64 || a <= 0.0) {
        double p = 1.0;
        for (int k = 0; k < n; ++k) p *= a + k;
        return p;
    }
    return std::exp(std::lgamma(a + n) - std::lgamma(a));
}

double hyp2f1_series(double a, double b, double c, double z) {
    if (nonpositive_integer(c)) throw DomainError("hyp2f1: c must not be a nonpositive integer");
    return series_sum(a, b, c, z);
}

double hyp2f1(const Hyp2F1Params& p) { return hyp2f1(p.a, p.b, p.c, p.z); }

double hyp2f1(double a, double b, double c, double z) {
    if (nonpositive_integer(c)) throw DomainError("hyp2f1: c must not be a nonpositive integer");
    if (z > 1.0) throw DomainError("hyp2f1: z > 1 is outside the supported domain");

    // terminating polynomial, any admissible z
    if (nonpositive_integer(a) || nonpositive_integer(b)) return series_sum(a, b, c, z);

    if (z == 1.0) return gauss_sum_at_one(a, b, c);
    if (z < 0.0) {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), z/(z-1) in (0,1)
        return std::pow(1.0 - z, -a) * hyp2f1(a, c - b, c, z / (z - 1.0));
    }
    if (z <= 0.5) return series_sum(a, b, c, z);
    // Euler: F(a,b;c;z) = (1-z)^{c-a-b} F(c-a, c-b; c; z)
    return std::pow(1.0 - z, c - a - b) * series_sum(c - a, c - b, c, z);
}

double hyp2f1_euler_integral(const Hyp2F1Params& p, const QuadSpec& spec) {
    if (!(p.c > p.b) || !(p.b > 0.0))
        throw DomainError("hyp2f1_euler_integral: requires c > b > 0");
    if (!(p.z < 1.0)) throw DomainError("hyp2f1_euler_integral: requires z < 1");

    const double a = p.a, b = p.b, c = p.c, z = p.z;
    // Split at 1/2 and mirror the upper half so each power singularity sits
    // at an exactly representable zero endpoint.
    auto lower = [&](double t) {
        return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) * std::pow(1.0 - t * z, -a);
    };
    auto upper = [&](double u) {
        return std::pow(u, c - b - 1.0) * std::pow(1.0 - u, b - 1.0) *
               std::pow(1.0 - (1.0 - u) * z, -a);
    };
    double integral = integrate(lower, 0.0, 0.5, spec).value +
                      integrate(upper, 0.0, 0.5, spec).value;
    return gamma(c) / (gamma(b) * gamma(c - b)) * integral;
}

} // namespace tricomi
