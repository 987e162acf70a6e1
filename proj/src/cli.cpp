#include "tricomi/cli.hpp"

#include "tricomi/fundsol.hpp"
#include "tricomi/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace tricomi {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSingular = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 73;

std::string fmt15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::DPlus: return "DPlus";
        case Region::DMinus: return "DMinus";
        default: return "Cone";
    }
}

// "--x 1.5" is |x| on a ray; "--x 0.3,0.4" is a full vector of n components.
bool parse_x(const std::string& text, int n, std::vector<double>& out_vec) {
    std::vector<double> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            parts.push_back(std::stod(item, &used));
            if (used != item.size()) return false;
        } catch (const std::exception&) {
            return false;
        }
    }
    if (parts.size() == 1) {
        out_vec.assign(static_cast<size_t>(n), 0.0);
        out_vec[0] = parts[0];
        return true;
    }
    if (static_cast<int>(parts.size()) == n) {
        out_vec = parts;
        return true;
    }
    return false;
}

struct QuantityEval {
    std::string quantity;

    // returns false on singular locus (value quantities only)
    bool eval(int n, const SpacetimePoint& p, std::string& text) const {
        if (quantity == "discriminant") {
            text = fmt15(p.discriminant());
            return true;
        }
        if (quantity == "region") {
            text = region_name(classify(p, default_cone_tol(p)));
            return true;
        }
        try {
            double v;
            if (quantity == "f_minus")
                v = f_minus(n, p);
            else if (quantity == "f_plus")
                v = f_plus(n, p);
            else
                v = f_sharp(n, p);
            text = fmt15(v);
            return true;
        } catch (const SingularLocusError&) {
            return false;
        }
    }
};

int do_eval(int n, const std::string& xtext, double y, const std::string& quantity,
            std::ostream& out, std::ostream& err) {
    std::vector<double> x;
    if (!parse_x(xtext, n, x)) {
        err << "eval: --x must be a single |x| or a comma list of n components\n";
        return kExitUsage;
    }
    SpacetimePoint p(x, y);
    std::string text;
    if (!QuantityEval{quantity}.eval(n, p, text)) {
        err << "singular locus: 9|x|^2 + 4y^3 = 0 at the requested point\n";
        return kExitSingular;
    }
    out << text << "\n";
    return kExitOk;
}

struct AxisSpec {
    double min = 0.0, max = 1.0;
    int count = 2;
};

int do_grid(int n, const std::string& quantity, const AxisSpec& xa, const AxisSpec& ya,
            const std::string& out_path, std::ostream& err) {
    if (xa.count < 2 || ya.count < 2) {
        err << "grid: axis counts must be >= 2\n";
        return kExitUsage;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "grid: cannot open output path " << out_path << "\n";
        return kExitIo;
    }
    QuantityEval q{quantity};
    file << "x,y,discriminant,region,value\n";
    for (int iy = 0; iy < ya.count; ++iy) {
        double y = ya.min + (ya.max - ya.min) * iy / (ya.count - 1);
        for (int ix = 0; ix < xa.count; ++ix) {
            double xv = xa.min + (xa.max - xa.min) * ix / (xa.count - 1);
            SpacetimePoint p = SpacetimePoint::radial(n, xv, y);
            std::string value;
            if (!q.eval(n, p, value)) value.clear(); // cone cell: empty field
            file << fmt15(xv) << "," << fmt15(y) << "," << fmt15(p.discriminant()) << ","
                 << region_name(classify(p, default_cone_tol(p))) << "," << value << "\n";
        }
    }
    if (!file.good()) {
        err << "grid: write failure on " << out_path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int do_verify(std::vector<std::string> suites, const std::string& jsonl_path, std::ostream& out,
              std::ostream& err) {
    std::vector<std::string> known = suite_names();
    if (suites.size() == 1 && suites[0] == "all") suites = known;
    for (const std::string& s : suites) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            err << "verify: unknown suite '" << s << "'\n";
            return kExitUsage;
        }
    }
    std::ofstream jsonl;
    if (!jsonl_path.empty()) {
        jsonl.open(jsonl_path);
        if (!jsonl) {
            err << "verify: cannot open output path " << jsonl_path << "\n";
            return kExitIo;
        }
    }
    ReportSink sink = [&](const VerificationReport& r) {
        if (jsonl.is_open()) write_report_jsonl(jsonl, r);
    };
    std::vector<VerificationReport> reports = run_suite(suites, sink);
    bool all_passed = true;
    out << "status  " << "abs_err      rel_err      tol          name\n";
    for (const VerificationReport& r : reports) {
        all_passed = all_passed && r.passed;
        char line[160];
        std::snprintf(line, sizeof(line), "%-7s %-12.3e %-12.3e %-12.3e ",
                      r.passed ? "pass" : "FAIL", r.abs_err, r.rel_err, r.tol);
        out << line << r.name << "\n";
    }
    out << (all_passed ? "all checks passed" : "FAILURES present") << " (" << reports.size()
        << " reports)\n";
    return all_passed ? kExitOk : 1;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fundamental solutions of the generalized Tricomi operator y*Lap + d2/dy2"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a quantity at one point");
    int n = 1;
    std::string xtext = "0";
    double y = 0.0;
    std::string quantity = "f_minus";
    eval->add_option("--n", n, "spatial dimension")->check(CLI::PositiveNumber);
    eval->add_option("--x", xtext, "|x| or comma-separated components");
    eval->add_option("--y", y, "type-changing coordinate");
    eval->add_option("--quantity", quantity)
        ->check(CLI::IsMember({"f_minus", "f_plus", "f_sharp", "discriminant", "region"}));

    // grid
    auto* grid = app.add_subcommand("grid", "evaluate a quantity on a grid, write CSV");
    AxisSpec xa, ya;
    std::string out_path = "grid.csv";
    grid->add_option("--n", n)->check(CLI::PositiveNumber);
    grid->add_option("--quantity", quantity)
        ->check(CLI::IsMember({"f_minus", "f_plus", "f_sharp", "discriminant", "region"}));
    grid->add_option("--x-min", xa.min);
    grid->add_option("--x-max", xa.max);
    grid->add_option("--x-count", xa.count);
    grid->add_option("--y-min", ya.min);
    grid->add_option("--y-max", ya.max);
    grid->add_option("--y-count", ya.count);
    grid->add_option("--out", out_path, "output CSV path");

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> suites = {"all"};
    std::string jsonl_path;
    verify->add_option("suites", suites, "suite names or 'all'");
    verify->add_option("--jsonl", jsonl_path, "write line-delimited structured reports here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return do_eval(n, xtext, y, quantity, out, err);
        if (grid->parsed()) return do_grid(n, quantity, xa, ya, out_path, err);
        return do_verify(suites, jsonl_path, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace tricomi
