// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion runs the corresponding verification groups at the
// tolerances pinned inside them.

#include "tricomi/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace {

struct Criterion {
    int number;
    const char* description;
    std::vector<std::string> groups;
};

const Criterion kCriteria[] = {
    {1, "Airy constants and Wronskian", {"airy-constants", "wronskian"}},
    {2, "Watson / Lemma l0 sweep, 12 combinations", {"watson-sweep"}},
    {3, "closed vs numeric inverse Fourier transforms", {"ft-closed-vs-numeric"}},
    {4, "Weber-Schafheitlin limits and branch symmetry", {"lemma-l1"}},
    {5, "spectral continuity and unit derivative jumps", {"spectral-jumps"}},
    {6, "constant identities", {"constant-identities"}},
    {7,
     "delta pairings <F, P phi> = phi(0)",
     {"delta-pairing-fminus-n1", "delta-pairing-fplus-n1", "delta-pairing-fminus-n2",
      "delta-pairing-fsharp-n2", "homogeneous-pairing"}},
    {8, "off-cone PDE residual order and dilation covariance", {"pde-residual", "dilation"}},
    {9, "n = 1 combination identity (3/2)F+ - (1/2)F-", {"combination-n1"}},
};

} // namespace

int main() {
    bool all_ok = true;
    for (const Criterion& c : kCriteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<tricomi::VerificationReport> reports;
        std::string why;
        bool ok = true;
        try {
            reports = tricomi::run_suite(c.groups);
            for (const tricomi::VerificationReport& r : reports) {
                if (!r.passed) {
                    ok = false;
                    char buf[256];
                    std::snprintf(buf, sizeof(buf), " [%s: %s_err %.3e > tol %.3e]",
                                  r.name.c_str(), r.mode.c_str(),
                                  r.mode == "rel" ? r.rel_err : r.abs_err, r.tol);
                    why += buf;
                }
            }
            if (reports.empty()) {
                ok = false;
                why = " [no reports produced]";
            }
        } catch (const std::exception& e) {
            ok = false;
            why = std::string(" [exception: ") + e.what() + "]";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d: %s (%zu checks, %.1fs)%s\n", ok ? "PASS" : "FAIL",
                    c.number, c.description, reports.size(), secs, why.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    std::printf("%s\n", all_ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES");
    return all_ok ? 0 : 1;
}
