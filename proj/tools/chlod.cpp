// Experiment CLI for the Bernstein-Chlodowsky operator library.
//
// Subcommands:
//   eval      single operator value at a point
//   moments   closed-form moment verification
//   converge  convergence study CSV
//   surface   parametric surface export CSV
//
// Exit codes: 0 success, 1 validation/domain error, 2 I/O error,
// 3 moment threshold exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "chlod/harness.hpp"

namespace {

chlod::ExperimentConfig load(const std::string& path) {
    return chlod::load_config(path);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw chlod::IoError("cannot open output file '" + path + "'");
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein-Chlodowsky approximation experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<int> m;
    std::optional<double> x, y, u, v;
    std::string out_path;

    auto* eval = app.add_subcommand("eval", "operator value at a point");
    eval->add_option("--config", config_path)->required();
    eval->add_option("--m", m);
    eval->add_option("--x", x);
    eval->add_option("--y", y);
    eval->add_option("--u", u);
    eval->add_option("--v", v);

    auto* moments = app.add_subcommand("moments", "verify closed-form moments");
    moments->add_option("--config", config_path)->required();
    moments->add_option("--out", out_path);

    auto* converge = app.add_subcommand("converge", "convergence study CSV");
    converge->add_option("--config", config_path)->required();
    converge->add_option("--out", out_path);

    auto* surface = app.add_subcommand("surface", "surface export CSV");
    surface->add_option("--config", config_path)->required();
    surface->add_option("--m", m);
    surface->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        const chlod::ExperimentConfig cfg = load(config_path);
        const std::string dest = !out_path.empty() ? out_path : cfg.output;

        if (eval->parsed()) {
            const double value = chlod::run_eval(cfg, m, {x, y, u, v});
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", value);
            std::cout << buf << "\n";
            return 0;
        }
        if (moments->parsed()) {
            bool ok;
            if (!dest.empty()) {
                std::ofstream csv = open_output(dest);
                ok = chlod::run_moments(cfg, std::cout, &csv);
            } else {
                ok = chlod::run_moments(cfg, std::cout, nullptr);
            }
            return ok ? 0 : 3;
        }
        if (converge->parsed()) {
            if (!dest.empty()) {
                std::ofstream csv = open_output(dest);
                chlod::run_converge(cfg, csv);
            } else {
                chlod::run_converge(cfg, std::cout);
            }
            return 0;
        }
        if (surface->parsed()) {
            if (!dest.empty()) {
                std::ofstream csv = open_output(dest);
                chlod::run_surface(cfg, m, csv);
            } else {
                chlod::run_surface(cfg, m, std::cout);
            }
            return 0;
        }
    } catch (const chlod::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const chlod::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
