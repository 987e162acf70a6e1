#include "tricomi/quad.hpp"

#include "tricomi/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tricomi {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

// Half-width of the tanh-sinh parameter domain.  tanh(sinh(4.3)) reaches
// within ~1e-32 of the endpoints, enough to resolve power singularities
// located at 0 to full double precision.
constexpr double kDeHalfWidth = 4.3;

struct MappedIntegrand {
    const std::function<double(double)>* f;
    double halfwidth;
    double lo, hi;
    long evals = 0;
    long nonfinite = 0;

    double operator()(double u) {
        // Distance to the nearer endpoint computed cancellation-free:
        // 1 - |tanh(s)| = 2 e^{-2|s|} / (1 + e^{-2|s|}).  This keeps points
        // next to a zero endpoint representable down to denormals, which is
        // what resolves power singularities there to full precision.
        double s = std::sinh(u);
        double e2 = std::exp(-2.0 * std::fabs(s));
        double offset = halfwidth * 2.0 * e2 / (1.0 + e2);
        double x = (u < 0.0) ? lo + offset : hi - offset;
        double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
        double w = halfwidth * std::cosh(u) * sech2;
        if (x <= lo || x >= hi) return 0.0; // endpoint hit by rounding
        ++evals;
        double v = (*f)(x);
        if (!std::isfinite(v)) {
            ++nonfinite;
            return 0.0;
        }
        return v * w;
    }
};

struct GkCell {
    double a, b;
    double value;
    double error;
};

GkCell gk15(MappedIntegrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        double x = h * kXgk[i];
        fv[i] = f(c - x);
        fv[14 - i] = f(c + x);
    }
    double kron = kWgk[7] * fv[7];
    double gauss = kWg[3] * fv[7];
    for (int i = 0; i < 7; ++i) {
        kron += kWgk[i] * (fv[i] + fv[14 - i]);
        if (i % 2 == 1) gauss += kWg[i / 2] * (fv[i] + fv[14 - i]);
    }
    double value = kron * h;
    // QUADPACK-style estimate: the raw (K - G) difference, inflated against
    // the cell's variation so rough cells cannot report spuriously small
    // errors.
    double reskh = 0.5 * kron;
    double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    resasc *= h;
    double err = std::fabs((kron - gauss) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    return {a, b, value, err + 1e-300};
}

} // namespace

EpsSchedule EpsSchedule::default_ladder() {
    EpsSchedule s;
    for (int k = 0; k <= 6; ++k) s.eps_values.push_back(0.2 * std::pow(2.0, -k));
    s.extrapolation_order = 3;
    return s;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
        throw DomainError("integrate: invalid QuadSpec");
    if (!(a < b)) throw DomainError("integrate: requires a < b");

    MappedIntegrand g{&f, 0.5 * (b - a), a, b};

    std::vector<GkCell> cells;
    cells.push_back(gk15(g, -kDeHalfWidth, kDeHalfWidth));
    double total = cells[0].value;
    double toterr = cells[0].error;
    int splits = 0;

    while (true) {
        double tol = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
        if (toterr <= tol) break;
        if (splits >= spec.max_subdivisions) {
            throw ConvergenceError("integrate: subdivision budget exhausted", total, toterr);
        }
        // split the worst cell; ties resolved by position for determinism
        size_t worst = 0;
        for (size_t i = 1; i < cells.size(); ++i)
            if (cells[i].error > cells[worst].error ||
                (cells[i].error == cells[worst].error && cells[i].a < cells[worst].a))
                worst = i;
        GkCell old = cells[worst];
        double mid = 0.5 * (old.a + old.b);
        if (mid <= old.a || mid >= old.b) {
            // interval no longer splittable in double precision
            break;
        }
        GkCell left = gk15(g, old.a, mid);
        GkCell right = gk15(g, mid, old.b);
        cells[worst] = left;
        cells.push_back(right);
        total += left.value + right.value - old.value;
        toterr += left.error + right.error - old.error;
        ++splits;
    }

    // re-accumulate to shed the incremental-update roundoff
    total = 0.0;
    toterr = 0.0;
    std::sort(cells.begin(), cells.end(), [](const GkCell& p, const GkCell& q) { return p.a < q.a; });
    for (const GkCell& c : cells) {
        total += c.value;
        toterr += c.error;
    }
    return {total, toterr, splits, g.evals, g.nonfinite};
}

namespace {

// Wynn epsilon algorithm on the sequence of partial sums; returns the best
// even-column estimate and a crude error from the last two estimates.
struct WynnAccelerator {
    std::vector<double> row; // rolling epsilon table, e[j] over diagonals
    std::vector<double> estimates;

    void push(double s) {
        std::vector<double> prev = row;
        row.assign(prev.size() + 1, 0.0);
        row[0] = s;
        double before = 0.0; // e_{-1} = 0
        for (size_t j = 1; j < row.size(); ++j) {
            double denom = row[j - 1] - prev[j - 1];
            double carry = (j >= 2) ? prev[j - 2] : before;
            if (std::fabs(denom) < 1e-290) {
                row.resize(j); // table converged exactly; stop extending
                break;
            }
            row[j] = carry + 1.0 / denom;
        }
        size_t best = (row.size() - 1) - (row.size() - 1) % 2; // largest even column
        estimates.push_back(row[best]);
    }

    double value() const { return estimates.back(); }
    double error() const {
        size_t n = estimates.size();
        if (n < 2) return std::numeric_limits<double>::infinity();
        return std::fabs(estimates[n - 1] - estimates[n - 2]);
    }
};

} // namespace

QuadResult integrate_bessel_tail(const BesselTailIntegrand& g, double eps, const QuadSpec& spec) {
    if (!(g.a > 0.0) || !(g.b > 0.0)) throw DomainError("integrate_bessel_tail: requires a, b > 0");
    if (g.a == g.b) throw DomainError("integrate_bessel_tail: a = b is outside the treated range");
    if (!(g.mu + g.nu + 1.0 > g.lambda))
        throw DomainError("integrate_bessel_tail: requires mu + nu + 1 > lambda");
    if (!(eps >= 0.0)) throw DomainError("integrate_bessel_tail: requires eps >= 0");

    // The product J_mu(at) J_nu(bt) carries oscillations at both the sum and
    // the difference frequency, and the partial integrals only alternate
    // cleanly when neither component is sampled at a near-stationary phase.
    // Cell width: the odd multiple of the fast half-period pi/(a+b) closest
    // to the beat half-period pi/|a-b|.  The sum component then contributes
    // an exact (-1)^k to consecutive cells while the difference component
    // stays at least pi/2 away from a stationary phase, so the epsilon
    // algorithm annihilates both.
    const double ratio = (g.a + g.b) / std::fabs(g.a - g.b);
    const int modd = 2 * static_cast<int>(std::floor(0.5 * (ratio - 1.0) + 0.5)) + 1;
    const double h_part = modd * kPi / (g.a + g.b);

    auto f = [&](double t) {
        double v = std::pow(t, -g.lambda) * bessel_j(g.mu, g.a * t) * bessel_j(g.nu, g.b * t);
        if (eps > 0.0) v *= std::exp(-eps * t);
        return v;
    };

    const int max_cells = 64;
    QuadSpec cell_spec{std::min(spec.abs_tol * 1e-2, 1e-12), 1e-12, 200};

    QuadResult out;
    WynnAccelerator acc;
    double plain_sum = 0.0;
    double prev_edge = 0.0;
    int tiny_streak = 0;
    const double tol = spec.abs_tol;

    for (int k = 1; k <= max_cells; ++k) {
        double edge = k * h_part;
        QuadResult cell = integrate(f, prev_edge, edge, cell_spec);
        out.func_evals += cell.func_evals;
        out.nonfinite_evals += cell.nonfinite_evals;
        out.subdivisions += 1;
        plain_sum += cell.value;
        prev_edge = edge;

        acc.push(plain_sum);

        if (std::fabs(cell.value) < tol) {
            if (++tiny_streak >= 2) {
                // strongly damped: the plain sum has already converged
                out.value = plain_sum;
                out.error_estimate = std::fabs(cell.value) + cell.error_estimate;
                return out;
            }
        } else {
            tiny_streak = 0;
        }

        if (k >= 8 && acc.error() < tol) {
            out.value = acc.value();
            out.error_estimate = acc.error();
            return out;
        }
    }

    double best = acc.value();
    double err = acc.error();
    if (err < std::max(tol * 100.0, 1e-6 * std::max(1.0, std::fabs(best)))) {
        // usable though not at requested tolerance
        out.value = best;
        out.error_estimate = err;
        return out;
    }
    throw ConvergenceError("integrate_bessel_tail: acceleration did not settle", best, err);
}

ExtrapolationResult extrapolate_eps_limit(const std::vector<std::pair<double, double>>& samples,
                                          const EpsSchedule& schedule) {
    const int order = schedule.extrapolation_order;
    if (order < 1) throw DomainError("extrapolate_eps_limit: order must be >= 1");
    if (static_cast<int>(schedule.eps_values.size()) < order + 1)
        throw DomainError("extrapolate_eps_limit: schedule shorter than order + 1");
    for (size_t i = 0; i < schedule.eps_values.size(); ++i)
        if (!(schedule.eps_values[i] > 0.0) ||
            (i > 0 && !(schedule.eps_values[i] < schedule.eps_values[i - 1])))
            throw DomainError("extrapolate_eps_limit: schedule must be positive and descending");
    if (static_cast<int>(samples.size()) < order + 1)
        throw DomainError("extrapolate_eps_limit: need at least order + 1 samples");
    for (size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i].first > 0.0) || !(samples[i].first < samples[i - 1].first))
            throw DomainError("extrapolate_eps_limit: eps values must be positive and descending");

    // Neville tableau at eps = 0 over the order+1 smallest eps samples.
    const size_t m = static_cast<size_t>(order) + 1;
    const size_t off = samples.size() - m;
    std::vector<double> x(m), t(m);
    for (size_t i = 0; i < m; ++i) {
        x[i] = samples[off + i].first;
        t[i] = samples[off + i].second;
    }
    std::vector<double> corrections;
    double prev_diag = t[m - 1];
    for (size_t j = 1; j < m; ++j) {
        for (size_t i = m - 1; i >= j; --i) {
            t[i] = t[i] + (t[i] - t[i - 1]) * x[i] / (x[i - j] - x[i]);
            if (i == j) break;
        }
        corrections.push_back(std::fabs(t[m - 1] - prev_diag));
        prev_diag = t[m - 1];
    }

    double value = t[m - 1];
    double last = corrections.back();
    double first = corrections.front();
    double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::fabs(value));
    if (corrections.size() >= 2 && last > first && last > floor)
        throw ConvergenceError("extrapolate_eps_limit: non-decreasing corrections", value, last);
    return {value, std::max(last, floor * 1e-2)};
}

double sphere_integral(int n, const std::function<double(std::span<const double>)>& g) {
    if (n == 2) {
        const int m = 256;
        double sum = 0.0;
        for (int j = 0; j < m; ++j) {
            double th = 2.0 * kPi * j / m;
            double w[2] = {std::cos(th), std::sin(th)};
            sum += g(std::span<const double>(w, 2));
        }
        return sum * (2.0 * kPi / m);
    }
    if (n == 3) {
        // 4 x 20 composite Gauss-Legendre in cos(theta), trapezoid in phi
        static const double gl20[10][2] = {
            {7.65265211334973383e-02, 1.52753387130725782e-01},
            {2.27785851141645096e-01, 1.49172986472603658e-01},
            {3.73706088715419549e-01, 1.42096109318381875e-01},
            {5.10867001950827126e-01, 1.31688638449176526e-01},
            {6.36053680726515025e-01, 1.18194531961518245e-01},
            {7.46331906460150796e-01, 1.01930119817240261e-01},
            {8.39116971822218782e-01, 8.32767415767046715e-02},
            {9.12234428251325835e-01, 6.26720483341094425e-02},
            {9.63971927277913809e-01, 4.06014298003862170e-02},
            {9.93128599185094885e-01, 1.76140071391532732e-02}};
        const int panels = 4;
        const int mphi = 128;
        const double hc = 2.0 / panels;
        double sum = 0.0;
        for (int p = 0; p < panels; ++p) {
            double cmid = -1.0 + (p + 0.5) * hc;
            for (int i = 0; i < 10; ++i) {
                for (int sgn = -1; sgn <= 1; sgn += 2) {
                    double c = cmid + sgn * 0.5 * hc * gl20[i][0];
                    double wc = 0.5 * hc * gl20[i][1];
                    double s = std::sqrt(std::max(0.0, 1.0 - c * c));
                    double inner = 0.0;
                    for (int j = 0; j < mphi; ++j) {
                        double ph = 2.0 * kPi * j / mphi;
                        double w[3] = {s * std::cos(ph), s * std::sin(ph), c};
                        inner += g(std::span<const double>(w, 3));
                    }
                    sum += wc * inner * (2.0 * kPi / mphi);
                }
            }
        }
        return sum;
    }
    throw DomainError("sphere_integral: only n = 2 and n = 3 are supported");
}

} // namespace tricomi
