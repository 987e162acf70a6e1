#include "tricomi/radialft.hpp"

#include "tricomi/hypergeom.hpp"
#include "tricomi/specfun.hpp"

#include <cmath>

#include "doctest.h"

using namespace tricomi;

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kThird = 1.0 / 3.0;

// Gamma(5/6)/(sqrt(2) pi) * (4/3)^{5/6}: Lemma-l1 f7 value at
// (lambda,mu,nu,a,b) = (-5/6,-1/2,1/3,1,2), 50-digit oracle
constexpr double kL1Example = 0.3228960660674323817953;

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

double gam(double x) { return tricomi::gamma(x); }

} // namespace

TEST_CASE("ift_closed K kind") {
    // n = 1 reduces to the classical table entry
    double nu = 0.3, x = 0.8;
    RadialFtSpec spec{RadialFtKind::Knu, nu, 1, 1.0};
    double expect = std::pow(2.0, nu - 1.0) * gam(0.5 + nu) / std::sqrt(kPi) *
                    std::pow(1.0 + x * x, -0.5 - nu);
    CHECK(rel(ift_closed(spec, x), expect) < 1e-14);
    CHECK_THROWS_AS(ift_closed({RadialFtKind::Knu, 0.6, 1, 1.0}, x), DomainError);
}

TEST_CASE("ift_closed branch structure") {
    // J-minus-power kind vanishes outside the unit ball
    for (int n : {1, 2, 3}) {
        RadialFtSpec spec{RadialFtKind::JnuTimesPowMinus, kThird, n, 1.0};
        CHECK(ift_closed(spec, 1.7) == 0.0);
        CHECK(ift_closed(spec, 0.5) != 0.0);
    }
    // singular locus refuses evaluation
    RadialFtSpec jp{RadialFtKind::JnuTimesPowPlus, kThird, 2, 1.0};
    CHECK_THROWS_AS(ift_closed(jp, 1.0), SingularLocusError);
    // even-n inner branch of the J-plus kind carries sin(n pi/2) = 0
    CHECK(ift_closed({RadialFtKind::JnuTimesPowPlus, kThird, 2, 1.0}, 0.5) == 0.0);
    // odd-n inner branch of the N kind carries cos(n pi/2) = 0
    CHECK(ift_closed({RadialFtKind::Nnu, kThird, 1, 1.0}, 0.5) == 0.0);
    CHECK(ift_closed({RadialFtKind::Nnu, kThird, 3, 1.0}, 0.5) == 0.0);
}

TEST_CASE("theorem th5 is the N-combination of th3 and the remark") {
    // N-closed = (cos(nu pi) th3 - f5h2) / sin(nu pi), pointwise
    double nu = kThird;
    for (int n : {1, 2, 3}) {
        for (double r : {0.35, 0.8, 1.4, 2.2}) {
            double lhs = ift_closed({RadialFtKind::Nnu, nu, n, 1.0}, r);
            double a = ift_closed({RadialFtKind::JnuTimesPowPlus, nu, n, 1.0}, r);
            double b = ift_closed({RadialFtKind::JminusNuTimesPowPlus, nu, n, 1.0}, r);
            double rhs = (cos_pi(nu) * a - b) / sin_pi(nu);
            CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(1.0, std::fabs(lhs)));
        }
    }
}

TEST_CASE("scaling rule two-route identity") {
    double nu = kThird;
    int n = 3;
    double s = 0.7, r = 0.31;
    double route1 = ift_closed({RadialFtKind::JnuTimesPowMinus, nu, n, s}, r);
    // profile homogeneity: u^{-nu} J_nu contributes s^{-2 nu} after unscaling
    double route2 = std::pow(s, -2.0 * nu) * std::pow(s * s - r * r, nu - 0.5 * n) /
                    (std::pow(2.0, nu) * std::pow(kPi, 0.5 * n) * gam(nu - 0.5 * n + 1.0));
    CHECK(rel(route1, route2) < 1e-12);
}

TEST_CASE("ws_limit_closed") {
    // the spec's f7 example
    CHECK(rel(ws_limit_closed({-5.0 / 6.0, -0.5, kThird, 1.0, 2.0}), kL1Example) < 1e-13);
    // denominator Gamma pole with finite numerator gives exact zero: the
    // mechanism behind Theorem th4's outer branch
    double nu = kThird;
    int n = 2;
    WsIntegralSpec th4_outer{nu - 0.5 * n, 0.5 * n - 1.0, nu, 1.8, 1.0};
    CHECK(ws_limit_closed(th4_outer) == 0.0);
    // branch swap maps f6 into f7
    WsIntegralSpec a{0.25, kThird, kThird, 1.7, 0.6};
    WsIntegralSpec b{0.25, kThird, kThird, 0.6, 1.7};
    CHECK(ws_limit_closed(a) == ws_limit_closed(b));
    CHECK_THROWS_AS(ws_limit_closed({0.0, 0.0, 0.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("ws limit against the numeric eps pipeline") {
    WsIntegralSpec spec{0.0, 0.0, 0.0, 1.0, 2.0};
    double closed = ws_limit_closed(spec);
    EpsSchedule sched = EpsSchedule::default_ladder();
    std::vector<std::pair<double, double>> samples;
    for (double e : sched.eps_values) {
        BesselTailIntegrand g{spec.lambda, spec.mu, spec.nu, spec.a, spec.b};
        samples.emplace_back(e, integrate_bessel_tail(g, e, {1e-9, 1e-9, 600}).value);
    }
    CHECK(std::fabs(extrapolate_eps_limit(samples, sched).value - closed) < 1e-5);
}

TEST_CASE("ift_numeric agrees with the closed forms") {
    EpsSchedule sched = EpsSchedule::default_ladder();
    // K kind at a few radii and dimensions
    for (int n : {1, 2, 3}) {
        RadialFtSpec spec{RadialFtKind::Knu, kThird, n, 1.0};
        for (double r : {0.25, 1.0, 4.0}) {
            double closed = ift_closed(spec, r);
            double numeric = ift_numeric(spec, r, sched, {1e-11, 1e-9, 4000});
            CHECK(rel(numeric, closed) < 1e-6);
        }
    }
    // an oscillatory kind, inner and outer branch, n = 2
    RadialFtSpec jm{RadialFtKind::JnuTimesPowMinus, kThird, 2, 1.0};
    double inner = ift_numeric(jm, 0.55, sched, {1e-8, 1e-8, 800});
    CHECK(rel(inner, ift_closed(jm, 0.55)) < 1e-3);
    double outer = ift_numeric(jm, 1.6, sched, {1e-8, 1e-8, 800});
    CHECK(std::fabs(outer) < 1e-4); // distributional zero outside the ball
    // margin guard
    CHECK_THROWS_AS(ift_numeric(jm, 1.001, sched), DomainError);
}

TEST_CASE("sphere_reduction_check") {
    SphereReductionReport r2 = sphere_reduction_check(2, 1.0, 1.7);
    CHECK(r2.abs_err < 1e-10);
    SphereReductionReport r3 = sphere_reduction_check(3, 1.0, 2.3);
    CHECK(r3.abs_err < 1e-8);
    // r|x| -> 0 gives the surface area
    SphereReductionReport area = sphere_reduction_check(2, 1e-8, 1.0);
    CHECK(std::fabs(area.computed - 2.0 * kPi) < 1e-10);
}
