#include "tricomi/cli.hpp"

#include "tricomi/fundsol.hpp"
#include "tricomi/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(std::vector<std::string> args) {
    std::vector<const char*> argv = {"tricomi"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = tricomi::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("eval prints 15-digit values and honors exit codes") {
    CliResult r = cli({"eval", "--n", "1", "--x", "0", "--y", "-1", "--quantity", "f_minus"});
    CHECK(r.code == 0);
    double expect = 3.0 * tricomi::gamma(4.0 / 3.0) /
                    (std::pow(2.0, 2.0 / 3.0) * std::sqrt(3.14159265358979324) *
                     tricomi::gamma(5.0 / 6.0)) *
                    std::pow(4.0, -1.0 / 6.0);
    CHECK(std::fabs(std::stod(r.out) - expect) < 1e-14);

    // cone point: exit 2 with a singular-locus message
    CliResult cone =
        cli({"eval", "--n", "1", "--x", "0.666666666666666666", "--y", "-1", "--quantity",
             "f_minus"});
    CHECK(cone.code == 2);
    CHECK(cone.err.find("singular locus") != std::string::npos);

    CliResult region = cli({"eval", "--quantity", "region", "--n", "2", "--x", "0,0", "--y", "1"});
    CHECK(region.code == 0);
    CHECK(region.out == "DPlus\n");

    CHECK(cli({"eval", "--quantity", "nonsense"}).code == 64);
    CHECK(cli({"eval", "--n", "2", "--x", "1,2,3", "--y", "0.5"}).code == 64);
}

TEST_CASE("radial symmetry makes the ray choice immaterial") {
    CliResult full = cli({"eval", "--n", "2", "--x", "0.3,0.4", "--y", "-1.2", "--quantity",
                          "f_minus"});
    CliResult norm = cli({"eval", "--n", "2", "--x", "0.5", "--y", "-1.2", "--quantity",
                          "f_minus"});
    CHECK(full.code == 0);
    CHECK(full.out == norm.out);
}

TEST_CASE("grid CSV output: schema, cone cells, byte stability") {
    std::string path = "test_grid_out.csv";
    std::vector<std::string> args = {"grid", "--n",      "1",   "--quantity", "f_minus",
                                     "--x-min", "-1",    "--x-max", "1",      "--x-count", "5",
                                     "--y-min", "-1.5",  "--y-max", "0.5",    "--y-count", "5",
                                     "--out", path};
    CHECK(cli(args).code == 0);
    std::string first = slurp(path);
    CHECK(first.rfind("x,y,discriminant,region,value\n", 0) == 0);
    // 25 data rows + header
    CHECK(std::count(first.begin(), first.end(), '\n') == 26);
    CHECK(cli(args).code == 0);
    CHECK(slurp(path) == first); // deterministic bytes
    std::remove(path.c_str());

    CliResult bad = cli({"grid", "--out", "/nonexistent-dir/zz.csv"});
    CHECK(bad.code == 73);
}

TEST_CASE("grid golden files") {
    struct Golden {
        const char* name;
        std::vector<std::string> args;
    };
    const Golden goldens[] = {
        {"grid_n1_fminus.csv",
         {"grid", "--n", "1", "--quantity", "f_minus", "--x-min", "-1.2", "--x-max", "1.2",
          "--x-count", "7", "--y-min", "-1.6", "--y-max", "0.8", "--y-count", "7", "--out", ""}},
        {"grid_n1_fplus.csv",
         {"grid", "--n", "1", "--quantity", "f_plus", "--x-min", "-1.2", "--x-max", "1.2",
          "--x-count", "7", "--y-min", "-1.6", "--y-max", "0.8", "--y-count", "7", "--out", ""}},
        {"grid_n2_fsharp.csv",
         {"grid", "--n", "2", "--quantity", "f_sharp", "--x-min", "0", "--x-max", "1.5",
          "--x-count", "6", "--y-min", "-1.2", "--y-max", "1.2", "--y-count", "7", "--out", ""}},
    };
    for (const Golden& g : goldens) {
        std::string tmp = std::string("regen_") + g.name;
        std::vector<std::string> args = g.args;
        args.back() = tmp;
        REQUIRE(cli(args).code == 0);
        std::string golden_path = std::string(TRICOMI_GOLDEN_DIR) + "/" + g.name;
        CHECK(slurp(tmp) == slurp(golden_path));
        std::remove(tmp.c_str());
    }
}

TEST_CASE("verify subcommand") {
    CHECK(cli({"verify", "no-such-suite"}).code == 64);

    std::string path = "test_verify_out.jsonl";
    CliResult r = cli({"verify", "wronskian", "gamma-identity", "--jsonl", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("wronskian") != std::string::npos);
    CHECK(r.out.find("all checks passed") != std::string::npos);
    std::string lines = slurp(path);
    CHECK(std::count(lines.begin(), lines.end(), '\n') == 2);
    CHECK(lines.find("\"passed\":true") != std::string::npos);
    std::remove(path.c_str());
}
