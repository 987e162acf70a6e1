#ifndef TRICOMI_VERIFY_HPP
#define TRICOMI_VERIFY_HPP

#include "tricomi/fundsol.hpp"
#include "tricomi/quad.hpp"

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tricomi {

// Smooth compactly supported test functions with analytic derivatives; no
// finite differences enter the pairing integrands.
enum class BumpProfile {
    QuarticPolynomial, // (1 - |u|^2)^4 on |u| < 1, else 0
    GaussianTruncated, // exp(-|u|^2 / (1 - |u|^2)) on |u| < 1, else 0
};

struct BumpFunction {
    std::vector<double> center; // (x_1, ..., x_n, y)
    double radius = 2.0;
    BumpProfile profile = BumpProfile::QuarticPolynomial;

    int n() const { return static_cast<int>(center.size()) - 1; }
    double value(std::span<const double> p) const;
    double laplacian_x(std::span<const double> p) const; // sum over the n spatial coords
    double second_y(std::span<const double> p) const;
    double sup_norm() const { return 1.0; }
};

// (y Delta_x + d^2/dy^2) phi at p, p = (x_1,...,x_n,y).
double apply_tricomi(const BumpFunction& phi, std::span<const double> p);

struct VerificationReport {
    std::string name;
    double target = 0.0;
    double computed = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    std::string mode = "abs"; // which error the tolerance applies to
    bool passed = false;
    long quad_subdivisions = 0;
    double quad_error_estimate = 0.0;
    std::vector<double> eps_ladder;
};

VerificationReport make_report(std::string name, double target, double computed, double tol,
                               std::string mode = "abs");

enum class FundamentalKind { FMinus, FPlus, FSharp };

// Numerical pairing <F, P phi> over supp phi, split along the characteristic
// cone so the |disc|^{1/3 - n/2} singularity is absorbed by the endpoint
// transform; the target is phi evaluated at the delta location
// (translation*e1, 0).  n in {1, 2, 3}; n = 3 is expensive.
VerificationReport delta_pairing(FundamentalKind kind, int n, const BumpFunction& phi,
                                 const QuadSpec& qspec, double tol,
                                 double translation = 0.0);

// One line-delimited structured record per report.
void write_report_jsonl(std::ostream& os, const VerificationReport& r);

using ReportSink = std::function<void(const VerificationReport&)>;

// Names of the registered check groups, in execution order.
std::vector<std::string> suite_names();

// Runs the selected check groups (exact names from suite_names()); every
// produced report is also handed to the sink.  Failures are data, not
// errors.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& selection,
                                          const ReportSink& sink = {});

} // namespace tricomi

#endif
