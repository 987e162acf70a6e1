#include "tricomi/verify.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"

using namespace tricomi;

namespace {

BumpFunction quartic(std::vector<double> center, double radius) {
    BumpFunction b;
    b.center = std::move(center);
    b.radius = radius;
    return b;
}

// central finite difference of the bump along one coordinate
double fd_second(const BumpFunction& phi, std::vector<double> p, size_t coord, double h) {
    auto at = [&](double d) {
        std::vector<double> q = p;
        q[coord] += d;
        return phi.value(q);
    };
    return (at(2 * h) * -1.0 + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) /
           (12 * h * h);
}

} // namespace

TEST_CASE("bump analytic derivatives match finite differences") {
    for (BumpProfile prof : {BumpProfile::QuarticPolynomial, BumpProfile::GaussianTruncated}) {
        BumpFunction phi = quartic({0.1, -0.2, 0.3}, 1.7);
        phi.profile = prof;
        std::vector<double> p = {0.4, 0.1, -0.2};
        double lap = fd_second(phi, p, 0, 1e-4) + fd_second(phi, p, 1, 1e-4);
        CHECK(std::fabs(phi.laplacian_x(p) - lap) < 1e-6);
        CHECK(std::fabs(phi.second_y(p) - fd_second(phi, p, 2, 1e-4)) < 1e-6);
        CHECK(phi.value(std::vector<double>{5.0, 0.0, 0.0}) == 0.0);
    }
}

TEST_CASE("apply_tricomi basics") {
    BumpFunction phi = quartic({0.0, 0.0}, 2.0);
    // on a constant neighborhood (outside the support) everything vanishes
    std::vector<double> outside = {3.0, 1.0};
    CHECK(apply_tricomi(phi, outside) == 0.0);
    // quartic bump at its center: y*(-8n/rho^2) + (-8/rho^2), hand-expanded
    std::vector<double> center = {0.0, 0.0};
    CHECK(std::fabs(apply_tricomi(phi, center) - (-8.0 / 4.0)) < 1e-14);
    BumpFunction off = quartic({0.5, -1.0}, 1.5);
    std::vector<double> c2 = {0.5, -1.0};
    double expect = -1.0 * (-8.0 / 2.25) + (-8.0 / 2.25);
    CHECK(std::fabs(apply_tricomi(off, c2) - expect) < 1e-14);
    // linearity of the operator across two bumps
    BumpFunction phi2 = quartic({0.2, 0.1}, 1.1);
    std::vector<double> p = {0.3, -0.1};
    double lhs = 2.5 * apply_tricomi(phi, p) - 1.25 * apply_tricomi(phi2, p);
    double rhs = p[1] * (2.5 * phi.laplacian_x(p) - 1.25 * phi2.laplacian_x(p)) +
                 (2.5 * phi.second_y(p) - 1.25 * phi2.second_y(p));
    CHECK(std::fabs(lhs - rhs) < 1e-14);
}

TEST_CASE("delta pairing recovers phi(0) for F- in one dimension") {
    VerificationReport r = delta_pairing(FundamentalKind::FMinus, 1, quartic({0.0, 0.0}, 2.0),
                                         {3e-7, 3e-7, 900}, 5e-3);
    CHECK(r.target == 1.0);
    CHECK(r.passed);
    CHECK(std::fabs(r.computed - 1.0) < 5e-3);
}

TEST_CASE("pairing away from the pole sees the homogeneous equation") {
    BumpFunction phi = quartic({0.0, -1.4}, 0.7);
    VerificationReport r =
        delta_pairing(FundamentalKind::FMinus, 1, phi, {3e-7, 3e-7, 900}, 5e-3);
    CHECK(r.target == 0.0);
    CHECK(std::fabs(r.computed) < 5e-3 * phi.sup_norm());
}

TEST_CASE("raising quadrature effort decreases the reported error estimate") {
    BumpFunction phi = quartic({0.0, 0.0}, 2.0);
    VerificationReport coarse =
        delta_pairing(FundamentalKind::FMinus, 1, phi, {1e-4, 1e-4, 900}, 5e-3);
    VerificationReport fine =
        delta_pairing(FundamentalKind::FMinus, 1, phi, {2e-5, 2e-5, 900}, 5e-3);
    CHECK(fine.quad_error_estimate < coarse.quad_error_estimate);
    CHECK(fine.quad_subdivisions > coarse.quad_subdivisions);
}

TEST_CASE("report construction and jsonl shape") {
    VerificationReport r = make_report("demo", 2.0, 2.0 + 1e-9, 1e-6);
    CHECK(r.passed);
    CHECK(r.abs_err == doctest::Approx(1e-9));
    std::ostringstream os;
    r.eps_ladder = {0.2, 0.1};
    write_report_jsonl(os, r);
    std::string line = os.str();
    CHECK(line.find("\"name\":\"demo\"") != std::string::npos);
    CHECK(line.find("\"passed\":true") != std::string::npos);
    CHECK(line.find("\"eps_ladder\":[0.2,0.1]") != std::string::npos);
    CHECK(line.back() == '\n');
}

TEST_CASE("run_suite selection") {
    CHECK(run_suite({}).empty());
    int sink_calls = 0;
    std::vector<VerificationReport> rep =
        run_suite({"wronskian"}, [&](const VerificationReport&) { ++sink_calls; });
    REQUIRE(rep.size() == 1);
    CHECK(sink_calls == 1);
    CHECK(rep[0].target == doctest::Approx(1.0 / 3.14159265358979323846).epsilon(1e-12));
    CHECK(rep[0].passed);
    // every registered name is runnable by construction; spot check ordering
    std::vector<std::string> names = suite_names();
    CHECK(names.front() == "airy-constants");
    CHECK(std::find(names.begin(), names.end(), "delta-pairing-fsharp-n2") != names.end());
}
