#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chlod/harness.hpp"

#ifdef __unix__
#include <sys/wait.h>
#endif

using chlod::ExperimentConfig;
using chlod::parse_config_text;

namespace {

const char* kShifted1dCfg =
    "operator=shifted1d\n"
    "b_sequence=sqrt\n"
    "alpha=0\n"
    "beta=1\n"
    "g=sin(x)\n"
    "ms=4,8,16\n"
    "grid=51\n";

const char* kStancuCfg =
    "operator=shifted_stancu\n"
    "b_sequence=const:1\n"
    "alpha=0\n"
    "beta=1\n"
    "phi1=0\n"
    "phi2=1\n"
    "scheme=descending\n"
    "g=exp(-((x-0.5)^2+(y-0.5)^2))\n"
    "ms=4,8\n"
    "grid=11\n";

// Drop the wall-clock column from converge CSV rows so reruns compare equal.
std::string strip_seconds(const std::string& csv) {
    std::stringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos) {
            const auto last = line.rfind(',');
            line = line.substr(0, last);
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace

TEST_CASE("config parsing") {
    const ExperimentConfig cfg = parse_config_text(kStancuCfg);
    CHECK(cfg.op == chlod::OperatorKind::ShiftedStancu);
    CHECK(cfg.alpha == 0.0);
    CHECK(cfg.beta == 1.0);
    CHECK(cfg.ms == std::vector<int>{4, 8});
    CHECK(cfg.grid == 11);
    CHECK(cfg.scheme_name_raw == "descending");
    CHECK(cfg.b_sequence.value(9) == 1.0);
    CHECK(cfg.echo_lines.size() == 10);

    // comments and blank lines are ignored
    CHECK_NOTHROW(parse_config_text(
        "# a comment\n\noperator=shifted1d\ng=x\nms=2\n"));
}

TEST_CASE("config validation errors") {
    CHECK_THROWS_AS(parse_config_text("g=x\nms=2\n"), chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\nms=2\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=warp\ng=x\nms=2\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(
        parse_config_text("operator=shifted1d\ng=x\nms=2\nalpha=2\nbeta=1\n"),
        chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x\nms=4,4\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x\nms=0\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x\nms=2\ngrid=1\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x\nms=2\nwhat=1\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(parse_config_text("operator=shifted1d\ng=x+\nms=2\n"),
                    chlod::ValidationError);
    CHECK_THROWS_AS(
        parse_config_text("operator=shifted1d\ng=y\nms=2\n"),  // y only bivariate
        chlod::ValidationError);
    CHECK_THROWS_AS(
        parse_config_text("operator=shifted1d\ng=x\nms=2\nscheme=spiral\n"),
        chlod::ValidationError);
    CHECK_THROWS_AS(
        parse_config_text("operator=shifted1d\ng=x\nms=2\nb_sequence=cubic\n"),
        chlod::ValidationError);
    // the error message for a bad operator lists the valid names
    try {
        parse_config_text("operator=warp\ng=x\nms=2\n");
    } catch (const chlod::ValidationError& e) {
        CHECK(std::string(e.what()).find("disk_piecewise") != std::string::npos);
    }
}

TEST_CASE("run_eval dispatch") {
    const ExperimentConfig lin = parse_config_text(
        "operator=shifted1d\nb_sequence=const:2\ng=x\nms=6\n");
    // the operator reproduces x exactly
    CHECK(chlod::run_eval(lin, std::nullopt, {1.3, {}, {}, {}}) ==
          doctest::Approx(1.3).epsilon(1e-13));
    CHECK(chlod::run_eval(lin, 3, {0.5, {}, {}, {}}) ==
          doctest::Approx(0.5).epsilon(1e-13));
    CHECK_THROWS_AS(chlod::run_eval(lin, std::nullopt, {{}, {}, {}, {}}),
                    chlod::ValidationError);
    CHECK_THROWS_AS(chlod::run_eval(lin, std::nullopt, {9.0, {}, {}, {}}),
                    chlod::DomainError);

    const ExperimentConfig biv = parse_config_text(kStancuCfg);
    CHECK_NOTHROW(chlod::run_eval(biv, std::nullopt, {0.5, 0.5, {}, {}}));
    CHECK_THROWS_AS(chlod::run_eval(biv, std::nullopt, {0.5, 3.0, {}, {}}),
                    chlod::DomainError);

    const ExperimentConfig tri = parse_config_text(
        "operator=triangle\nb_sequence=const:1\ng=x+y\nms=5\n");
    CHECK_NOTHROW(chlod::run_eval(tri, std::nullopt, {{}, {}, 0.5, 0.5}));
    CHECK_THROWS_AS(chlod::run_eval(tri, std::nullopt, {0.5, 0.5, {}, {}}),
                    chlod::ValidationError);
}

TEST_CASE("run_moments") {
    std::ostringstream report, csv;
    CHECK(chlod::run_moments(parse_config_text(kShifted1dCfg), report, &csv));
    CHECK(report.str().find("PASS") != std::string::npos);
    const std::string c = csv.str();
    CHECK(c.find("m,dev_const,dev_x,dev_x2") != std::string::npos);
    CHECK(c.find("# operator=shifted1d") != std::string::npos);

    std::ostringstream r2;
    CHECK(chlod::run_moments(parse_config_text(kStancuCfg), r2, nullptr));

    std::ostringstream r3;
    CHECK_THROWS_AS(
        chlod::run_moments(parse_config_text(
                               "operator=classical1d\ng=x\nms=2\n"),
                           r3, nullptr),
        chlod::ValidationError);
}

TEST_CASE("run_converge output shape and determinism") {
    const ExperimentConfig cfg = parse_config_text(kStancuCfg);
    std::ostringstream a, b;
    chlod::run_converge(cfg, a);
    chlod::run_converge(cfg, b);
    CHECK(strip_seconds(a.str()) == strip_seconds(b.str()));
    CHECK(a.str().find("m,b_m,sup_error,mean_error,grid,seconds") !=
          std::string::npos);
    CHECK(a.str().find("# trend: sup_error strictly decreasing = ") !=
          std::string::npos);

    // count data rows
    std::stringstream in(a.str());
    std::string line;
    int data_rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#' && line.find("m,b_m") != 0) ++data_rows;
    }
    CHECK(data_rows == 2);
}

TEST_CASE("run_surface output shape and consistency with converge") {
    const ExperimentConfig cfg = parse_config_text(kStancuCfg);
    std::ostringstream surf;
    chlod::run_surface(cfg, 8, surf);
    const std::string s = surf.str();
    CHECK(s.find("u,v,x,y,g,Bg,abs_error") != std::string::npos);
    CHECK(s.find("# m=8 b_m=1") != std::string::npos);

    // max abs_error over the surface equals the converge sup_error for m = 8
    double max_err = 0.0;
    int rows = 0;
    std::stringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'u') continue;
        const auto last = line.rfind(',');
        max_err = std::max(max_err, std::stod(line.substr(last + 1)));
        ++rows;
    }
    CHECK(rows == 11 * 11);

    std::ostringstream conv;
    chlod::run_converge(cfg, conv);
    std::stringstream cin(conv.str());
    double sup_m8 = -1.0;
    while (std::getline(cin, line)) {
        if (line.rfind("8,", 0) == 0) {
            // m,b_m,sup_error,...
            std::stringstream fields(line);
            std::string f;
            std::getline(fields, f, ',');
            std::getline(fields, f, ',');
            std::getline(fields, f, ',');
            sup_m8 = std::stod(f);
        }
    }
    REQUIRE(sup_m8 >= 0.0);
    CHECK(max_err == doctest::Approx(sup_m8).epsilon(1e-14));
}

TEST_CASE("surface rows for the 1d operator use v = y = 0") {
    const ExperimentConfig cfg = parse_config_text(kShifted1dCfg);
    std::ostringstream surf;
    chlod::run_surface(cfg, 4, surf);
    std::stringstream in(surf.str());
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'u') continue;
        ++rows;
        std::stringstream fields(line);
        std::string u, v, x, y;
        std::getline(fields, u, ',');
        std::getline(fields, v, ',');
        std::getline(fields, x, ',');
        std::getline(fields, y, ',');
        CHECK(std::stod(v) == 0.0);
        CHECK(std::stod(y) == 0.0);
    }
    CHECK(rows == 51);
}

#ifdef CHLOD_CLI_PATH

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string err_path = "cli_stderr.tmp";
    const std::string cmd = std::string(CHLOD_CLI_PATH) + " " + args + " >" +
                            out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    int code = -1;
#ifdef __unix__
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    CliResult r{code, slurp(out_path), slurp(err_path)};
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return r;
}

std::string write_cfg(const std::string& name, const std::string& text) {
    std::ofstream out(name);
    out << text;
    return name;
}

}  // namespace

TEST_CASE("cli: eval, exit codes, error messages") {
    const std::string cfg = write_cfg("cli_lin.cfg",
                                      "operator=shifted1d\n"
                                      "b_sequence=const:2\n"
                                      "g=x\n"
                                      "ms=6\n");
    auto r = run_cli("eval --config " + cfg + " --x 1.25");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.25).epsilon(1e-13));

    // outside the interval: exit 1 with a domain message
    r = run_cli("eval --config " + cfg + " --x 5.0");
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("outside domain") != std::string::npos);

    // missing config file: exit 2
    r = run_cli("eval --config does_not_exist.cfg --x 0.5");
    CHECK(r.exit_code == 2);

    // malformed config: exit 1
    const std::string bad = write_cfg("cli_bad.cfg", "operator=warp\ng=x\nms=2\n");
    r = run_cli("eval --config " + bad + " --x 0.5");
    CHECK(r.exit_code == 1);

    std::remove(cfg.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("cli: moments and converge write CSV files") {
    const std::string cfg = write_cfg("cli_mom.cfg",
                                      "operator=shifted1d\n"
                                      "b_sequence=sqrt\n"
                                      "g=sin(x)\n"
                                      "ms=4,8\n");
    auto r = run_cli("moments --config " + cfg + " --out cli_mom.csv");
    CHECK(r.exit_code == 0);
    CHECK(slurp("cli_mom.csv").find("m,dev_const,dev_x,dev_x2") !=
          std::string::npos);

    r = run_cli("converge --config " + cfg + " --out cli_conv.csv");
    CHECK(r.exit_code == 0);
    CHECK(slurp("cli_conv.csv").find("m,b_m,sup_error") != std::string::npos);

    r = run_cli("surface --config " + cfg + " --m 8 --out cli_surf.csv");
    CHECK(r.exit_code == 0);
    CHECK(slurp("cli_surf.csv").find("u,v,x,y,g,Bg,abs_error") !=
          std::string::npos);

    std::remove(cfg.c_str());
    std::remove("cli_mom.csv");
    std::remove("cli_conv.csv");
    std::remove("cli_surf.csv");
}

#endif  // CHLOD_CLI_PATH
