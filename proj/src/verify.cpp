#include "tricomi/verify.hpp"

#include "tricomi/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "json.hpp"

namespace tricomi {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct BumpLocal {
    double q;        // |u|^2
    std::vector<double> u;
    bool inside;
};

BumpLocal bump_local(const BumpFunction& phi, std::span<const double> p) {
    BumpLocal loc;
    loc.u.resize(phi.center.size());
    loc.q = 0.0;
    for (size_t i = 0; i < phi.center.size(); ++i) {
        loc.u[i] = (p[i] - phi.center[i]) / phi.radius;
        loc.q += loc.u[i] * loc.u[i];
    }
    loc.inside = loc.q < 1.0;
    return loc;
}

} // namespace

double BumpFunction::value(std::span<const double> p) const {
    BumpLocal loc = bump_local(*this, p);
    if (!loc.inside) return 0.0;
    double w = 1.0 - loc.q;
    if (profile == BumpProfile::QuarticPolynomial) return w * w * w * w;
    return std::exp(-loc.q / w);
}

double BumpFunction::laplacian_x(std::span<const double> p) const {
    BumpLocal loc = bump_local(*this, p);
    if (!loc.inside) return 0.0;
    const double w = 1.0 - loc.q;
    const int nx = n();
    double usq = 0.0;
    for (int i = 0; i < nx; ++i) usq += loc.u[i] * loc.u[i];
    double r2 = radius * radius;
    if (profile == BumpProfile::QuarticPolynomial) {
        // d2/du_i2 (1-q)^4 = -8(1-q)^3 + 48 u_i^2 (1-q)^2
        return (-8.0 * nx * w * w * w + 48.0 * usq * w * w) / r2;
    }
    // phi = e^{f(q)}, f = -q/(1-q), f' = -1/(1-q)^2, f'' = -2/(1-q)^3
    double f = -loc.q / w;
    double fp = -1.0 / (w * w);
    double fpp = -2.0 / (w * w * w);
    double phi = std::exp(f);
    // d2/du_i2 e^f = e^f (4 u_i^2 fp^2 + 4 u_i^2 fpp + 2 fp)
    return phi * (4.0 * usq * (fp * fp + fpp) + 2.0 * nx * fp) / r2;
}

double BumpFunction::second_y(std::span<const double> p) const {
    BumpLocal loc = bump_local(*this, p);
    if (!loc.inside) return 0.0;
    const double w = 1.0 - loc.q;
    const double uy = loc.u[center.size() - 1];
    double r2 = radius * radius;
    if (profile == BumpProfile::QuarticPolynomial)
        return (-8.0 * w * w * w + 48.0 * uy * uy * w * w) / r2;
    double f = -loc.q / w;
    double fp = -1.0 / (w * w);
    double fpp = -2.0 / (w * w * w);
    double phi = std::exp(f);
    return phi * (4.0 * uy * uy * (fp * fp + fpp) + 2.0 * fp) / r2;
}

double apply_tricomi(const BumpFunction& phi, std::span<const double> p) {
    double y = p[p.size() - 1];
    return y * phi.laplacian_x(p) + phi.second_y(p);
}

VerificationReport make_report(std::string name, double target, double computed, double tol,
                               std::string mode) {
    VerificationReport r;
    r.name = std::move(name);
    r.target = target;
    r.computed = computed;
    r.abs_err = std::fabs(computed - target);
    r.rel_err = r.abs_err / std::max(std::fabs(target), 1e-300);
    r.tol = tol;
    r.mode = std::move(mode);
    r.passed = (r.mode == "rel") ? (r.rel_err <= tol) : (r.abs_err <= tol);
    return r;
}

namespace {

// Branch evaluation by strict discriminant sign; the cone itself has measure
// zero and surfaces only as an endpoint of the split integrals.
struct RawFundsol {
    FundamentalKind kind;
    int n;
    double cm, cp, cs; // f_minus, f_sharp(D+), f_sharp(D-) constants
    double e;

    double operator()(double r, double y) const {
        double disc = 9.0 * r * r + 4.0 * y * y * y;
        double fm = disc < 0.0 ? cm * std::pow(-disc, e) : 0.0;
        if (kind == FundamentalKind::FMinus) return fm;
        double fs = disc > 0.0 ? cp * std::pow(disc, e)
                               : (disc < 0.0 ? cs * std::pow(-disc, e) : 0.0);
        if (kind == FundamentalKind::FSharp) return fs;
        if (n % 2 == 1) return fs;
        return 3.0 * fs - 2.0 * fm;
    }
};

double cone_radius(double y) { return y < 0.0 ? (2.0 / 3.0) * (-y) * std::sqrt(-y) : 0.0; }

// |S^{n-1}| r^{n-1} surface factor of the radial reduction
double shell_factor(int n, double r) {
    if (n == 2) return 2.0 * kPi * r;
    return 4.0 * kPi * r * r; // n == 3
}

} // namespace

VerificationReport delta_pairing(FundamentalKind kind, int n, const BumpFunction& phi,
                                 const QuadSpec& qspec, double tol, double translation) {
    if (n < 1 || n > 3) throw DomainError("delta_pairing: n must be 1, 2, or 3");
    if (phi.n() != n) throw DomainError("delta_pairing: bump dimension mismatch");

    RawFundsol F{kind, n, f_minus_constant(n), f_sharp_dplus_constant(n),
                 f_sharp_dminus_constant(n), 1.0 / 3.0 - 0.5 * n};

    const double rho = phi.radius;
    const double cy = phi.center[n];
    // work in coordinates centered on the delta location (translation, 0,...)
    std::vector<double> cx(n);
    for (int i = 0; i < n; ++i) cx[i] = phi.center[i];
    cx[0] -= translation;
    if (n >= 2) {
        double off = 0.0;
        for (int i = 0; i < n; ++i) off += cx[i] * cx[i];
        if (off > 1e-24)
            throw DomainError("delta_pairing: for n >= 2 the bump must be x-centered on the pole");
    }

    // The discriminant loses ~1e-16 absolute near the cone, which leaves the
    // cone-endpoint pieces with a relative noise floor around 1e-7; the
    // inner tolerance must sit at that floor and the outer tolerance above
    // it, or the adaptive rules chase noise until the budget runs out.
    QuadSpec inner{std::max(qspec.abs_tol * 1e-2, 1e-10), 2e-7, qspec.max_subdivisions};
    long subdivisions = 0;

    // supports: F- lives in y < 0 only; F+ and F# reach both sides
    double ylo = cy - rho, yhi = cy + rho;
    if (kind == FundamentalKind::FMinus) yhi = std::min(yhi, 0.0);
    VerificationReport rep;
    if (!(ylo < yhi)) {
        rep = make_report("delta-pairing", phi.value(std::vector<double>(n + 1, 0.0)), 0.0, tol);
        return rep;
    }

    std::vector<double> point(n + 1);

    auto inner_value = [&](double y) {
        double dy = y - cy;
        double wsq = rho * rho - dy * dy;
        if (wsq <= 0.0) return 0.0;
        double w = std::sqrt(wsq);
        double rc = cone_radius(y);
        double total = 0.0;

        auto add_piece = [&](double lo, double hi, auto&& integrand) {
            if (!(lo < hi)) return;
            QuadResult qr = integrate(integrand, lo, hi, inner);
            subdivisions += qr.subdivisions;
            total += qr.value;
        };

        if (n == 1) {
            double cx1 = cx[0];
            double lo = cx1 - w, hi = cx1 + w;
            std::vector<double> cuts = {lo, hi};
            if (y < 0.0) {
                for (double c : {-rc, rc})
                    if (c > lo && c < hi) cuts.push_back(c);
            }
            // F develops a sharp peak at x = 0 as y -> 0+ (the cone pinches
            // at the origin); cutting there lets the endpoint transform
            // resolve the layer
            if (lo < 0.0 && 0.0 < hi) cuts.push_back(0.0);
            std::sort(cuts.begin(), cuts.end());
            auto integrand = [&](double xi) {
                double pt[2] = {xi + translation, y};
                return F(std::fabs(xi), y) * apply_tricomi(phi, std::span<const double>(pt, 2));
            };
            for (size_t i = 0; i + 1 < cuts.size(); ++i) {
                double mid = 0.5 * (cuts[i] + cuts[i + 1]);
                double disc = 9.0 * mid * mid + 4.0 * y * y * y;
                if (kind == FundamentalKind::FMinus && !(disc < 0.0)) continue;
                add_piece(cuts[i], cuts[i + 1], integrand);
            }
            return total;
        }

        // n >= 2, radially centered: single radial integral per region piece
        auto integrand = [&](double r) {
            point[0] = r + translation;
            for (int i = 1; i < n; ++i) point[i] = 0.0;
            point[n] = y;
            return shell_factor(n, r) * F(r, y) *
                   apply_tricomi(phi, std::span<const double>(point.data(), point.size()));
        };
        std::vector<double> cuts = {0.0, w};
        if (y < 0.0 && rc > 0.0 && rc < w) cuts.insert(cuts.begin() + 1, rc);
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            double mid = 0.5 * (cuts[i] + cuts[i + 1]);
            double disc = 9.0 * mid * mid + 4.0 * y * y * y;
            if (kind == FundamentalKind::FMinus && !(disc < 0.0)) continue;
            add_piece(cuts[i], cuts[i + 1], integrand);
        }
        return total;
    };

    double computed = 0.0;
    double err_est = 0.0;
    for (auto [alo, ahi] : {std::pair{ylo, std::min(yhi, 0.0)}, std::pair{std::max(ylo, 0.0), yhi}}) {
        if (!(alo < ahi)) continue;
        QuadResult qr = integrate(inner_value, alo, ahi, qspec);
        subdivisions += qr.subdivisions;
        computed += qr.value;
        err_est += qr.error_estimate;
    }

    std::vector<double> origin(n + 1, 0.0);
    origin[0] = translation;
    double target = phi.value(origin);
    rep = make_report("delta-pairing", target, computed, tol);
    rep.quad_subdivisions = subdivisions;
    rep.quad_error_estimate = err_est;
    return rep;
}

void write_report_jsonl(std::ostream& os, const VerificationReport& r) {
    nlohmann::json j{{"name", r.name},
                     {"target", r.target},
                     {"computed", r.computed},
                     {"abs_err", r.abs_err},
                     {"rel_err", r.rel_err},
                     {"tol", r.tol},
                     {"mode", r.mode},
                     {"passed", r.passed},
                     {"diagnostics",
                      {{"quad_subdivisions", r.quad_subdivisions},
                       {"quad_error_estimate", r.quad_error_estimate},
                       {"eps_ladder", r.eps_ladder}}}};
    os << j.dump() << "\n";
}

} // namespace tricomi
