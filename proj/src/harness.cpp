#include "chlod/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <vector>

#include "chlod/bivariate.hpp"
#include "chlod/geometry.hpp"

namespace chlod {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Instance {
    int m = 0;
    double b = 0.0;
    ShiftedInterval J{0.0, 1.0, 1.0};
    Func1D phi1;
    Func1D phi2;
    Func1D g1;
    Func2D g2;
    NodeScheme scheme = NodeScheme::Constant;
};

Instance make_instance(const ExperimentConfig& cfg, int m) {
    Instance inst;
    inst.m = m;
    inst.b = cfg.b_sequence.value(m);
    inst.J = ShiftedInterval(cfg.alpha, cfg.beta, inst.b);
    inst.phi1 = Func1D::from_expr(cfg.phi1_expr);
    inst.phi2 = Func1D::from_expr(cfg.phi2_expr);
    inst.scheme = parse_scheme(cfg.scheme_name_raw);
    if (operator_is_bivariate(cfg.op)) {
        inst.g2 = Func2D::from_expr(cfg.g_expr);
    } else {
        inst.g1 = Func1D::from_expr(cfg.g_expr);
    }
    return inst;
}

// Curve-bounded domain for the Stancu operators.  The classical frame pins
// alpha = 0, beta = 1.  Validation of curve separation is required for
// physical-point evaluation but skipped for parametric paths, where crossing
// curves (as in moving-domain convergence runs) still yield a well defined sum.
CurveDomain make_domain(const ExperimentConfig& cfg, const Instance& inst,
                        bool require_separation) {
    if (cfg.op == OperatorKind::Stancu &&
        (std::fabs(cfg.alpha) > 1e-12 || std::fabs(cfg.beta - 1.0) > 1e-12)) {
        throw ValidationError("operator 'stancu' requires alpha=0, beta=1");
    }
    if (require_separation) {
        return CurveDomain(inst.J, inst.phi1, inst.phi2);
    }
    return CurveDomain::unchecked(inst.J, inst.phi1, inst.phi2);
}

struct SurfaceRow {
    double u, v, x, y, g, Bg;
};

// Evaluate the configured operator over the parametric grid.  1D operators
// produce `grid` rows with v = y = 0; bivariate operators produce grid^2 rows.
std::vector<SurfaceRow> surface_rows(const ExperimentConfig& cfg,
                                     const Instance& inst, int grid_n) {
    std::vector<SurfaceRow> rows;
    const auto par = [grid_n](int i) {
        return static_cast<double>(i) / (grid_n - 1);
    };

    switch (cfg.op) {
        case OperatorKind::Classical1D:
        case OperatorKind::Shifted1D: {
            const bool shifted = cfg.op == OperatorKind::Shifted1D;
            std::vector<double> xs(static_cast<std::size_t>(grid_n));
            for (int i = 0; i < grid_n; ++i) {
                xs[static_cast<std::size_t>(i)] =
                    shifted ? inst.J.left() + inst.J.width() * par(i)
                            : inst.b * par(i);
            }
            std::vector<double> vals;
            if (shifted) {
                vals = shifted_operator_grid(inst.g1, inst.m, inst.J, xs);
            } else {
                vals.reserve(xs.size());
                for (const double x : xs) {
                    vals.push_back(classical_operator(inst.g1, inst.m, inst.b, x));
                }
            }
            for (int i = 0; i < grid_n; ++i) {
                const double x = xs[static_cast<std::size_t>(i)];
                rows.push_back({par(i), 0.0, x, 0.0, inst.g1(x),
                                vals[static_cast<std::size_t>(i)]});
            }
            return rows;
        }
        case OperatorKind::Stancu:
        case OperatorKind::ShiftedStancu: {
            const CurveDomain dom = make_domain(cfg, inst, false);
            const ShiftedStancu op(inst.g2, inst.m, dom, inst.scheme);
            for (int i = 0; i < grid_n; ++i) {
                for (int j = 0; j < grid_n; ++j) {
                    const double u = par(i);
                    const double v = par(j);
                    const Point2 p = dom.transform_point(u, v);
                    rows.push_back({u, v, p.x, p.y, inst.g2(p.x, p.y),
                                    op.eval_param(u, v)});
                }
            }
            return rows;
        }
        case OperatorKind::Triangle: {
            for (int i = 0; i < grid_n; ++i) {
                for (int j = 0; j < grid_n; ++j) {
                    const double u = par(i);
                    const double v = par(j);
                    const Point2 p = square_to_triangle(u, v, inst.b);
                    rows.push_back({u, v, p.x, p.y, inst.g2(p.x, p.y),
                                    triangle_operator(inst.g2, inst.m, inst.b, u, v)});
                }
            }
            return rows;
        }
        case OperatorKind::DiskGlobal:
        case OperatorKind::DiskPiecewise: {
            const bool piecewise = cfg.op == OperatorKind::DiskPiecewise;
            for (int i = 0; i < grid_n; ++i) {
                for (int j = 0; j < grid_n; ++j) {
                    const double u = par(i);
                    const double v = par(j);
                    const Point2 p = square_to_disk_global(u, v, inst.b);
                    const double val =
                        piecewise
                            ? disk_operator_piecewise(inst.g2, inst.m, inst.b, p.x,
                                                      p.y)
                            : disk_operator_global(inst.g2, inst.m, inst.scheme,
                                                   inst.b, p.x, p.y);
                    rows.push_back({u, v, p.x, p.y, inst.g2(p.x, p.y), val});
                }
            }
            return rows;
        }
    }
    throw ValidationError("corrupt operator kind");
}

void write_echo(const ExperimentConfig& cfg, std::ostream& out) {
    for (const auto& line : cfg.echo_lines) {
        out << "# " << line << "\n";
    }
}

}  // namespace

double run_eval(const ExperimentConfig& cfg, std::optional<int> m_opt,
                const EvalPoint& point) {
    const int m = m_opt.value_or(cfg.ms.back());
    const Instance inst = make_instance(cfg, m);

    const auto need = [&](const std::optional<double>& c, const char* name) {
        if (!c) {
            throw ValidationError(std::string("eval needs coordinate --") + name);
        }
        return *c;
    };

    switch (cfg.op) {
        case OperatorKind::Classical1D:
            return classical_operator(inst.g1, m, inst.b, need(point.x, "x"));
        case OperatorKind::Shifted1D:
            return shifted_operator(inst.g1, m, inst.J, need(point.x, "x"));
        case OperatorKind::Stancu: {
            const CurveDomain dom = make_domain(cfg, inst, true);
            return stancu_operator(inst.g2, m, dom, inst.scheme,
                                   need(point.x, "x"), need(point.y, "y"));
        }
        case OperatorKind::ShiftedStancu: {
            const CurveDomain dom = make_domain(cfg, inst, true);
            return shifted_stancu_operator(inst.g2, m, dom, inst.scheme,
                                           need(point.x, "x"), need(point.y, "y"));
        }
        case OperatorKind::Triangle:
            return triangle_operator(inst.g2, m, inst.b, need(point.u, "u"),
                                     need(point.v, "v"));
        case OperatorKind::DiskGlobal:
            return disk_operator_global(inst.g2, m, inst.scheme, inst.b,
                                        need(point.x, "x"), need(point.y, "y"));
        case OperatorKind::DiskPiecewise:
            return disk_operator_piecewise(inst.g2, m, inst.b, need(point.x, "x"),
                                           need(point.y, "y"));
    }
    throw ValidationError("corrupt operator kind");
}

bool run_moments(const ExperimentConfig& cfg, std::ostream& report,
                 std::ostream* csv) {
    if (cfg.op != OperatorKind::Shifted1D && cfg.op != OperatorKind::ShiftedStancu) {
        throw ValidationError("operator '" + operator_name(cfg.op) +
                              "' has no closed-form moments (use shifted1d or "
                              "shifted_stancu)");
    }
    constexpr double kThreshold = 1e-8;
    if (csv) {
        write_echo(cfg, *csv);
        *csv << "m,dev_const,dev_x,dev_x2\n";
    }
    bool ok = true;
    for (const int m : cfg.ms) {
        const Instance inst = make_instance(cfg, m);
        double dev[3] = {0.0, 0.0, 0.0};
        if (cfg.op == OperatorKind::Shifted1D) {
            const Func1D monomials[3] = {
                Func1D::constant(1.0),
                Func1D::from_callable([](double x) { return x; }, "x"),
                Func1D::from_callable([](double x) { return x * x; }, "x^2"),
            };
            constexpr int kGrid = 101;
            std::vector<double> xs(kGrid);
            for (int i = 0; i < kGrid; ++i) {
                xs[static_cast<std::size_t>(i)] =
                    inst.J.left() + inst.J.width() * i / (kGrid - 1);
            }
            for (int j = 0; j < 3; ++j) {
                const std::vector<double> vals =
                    shifted_operator_grid(monomials[j], m, inst.J, xs);
                for (int i = 0; i < kGrid; ++i) {
                    dev[j] = std::max(
                        dev[j],
                        std::fabs(vals[static_cast<std::size_t>(i)] -
                                  moment(j, m, inst.J, xs[static_cast<std::size_t>(i)])));
                }
            }
        } else {
            const CurveDomain dom = make_domain(cfg, inst, false);
            const Func2D monomials[3] = {
                Func2D::from_callable([](double, double) { return 1.0; }, "1"),
                Func2D::from_callable([](double x, double) { return x; }, "x"),
                Func2D::from_callable([](double x, double) { return x * x; }, "x^2"),
            };
            const int n = cfg.grid;
            for (int j = 0; j < 3; ++j) {
                const ShiftedStancu op(monomials[j], m, dom, inst.scheme);
                for (int i = 0; i < n; ++i) {
                    const double u = static_cast<double>(i) / (n - 1);
                    const double x = inst.J.left() + inst.J.width() * u;
                    for (int l = 0; l < n; ++l) {
                        const double v = static_cast<double>(l) / (n - 1);
                        const double closed = j == 2 ? moment(2, m, inst.J, x)
                                              : j == 1 ? x
                                                       : 1.0;
                        dev[j] = std::max(
                            dev[j], std::fabs(op.eval_param(u, v) - closed));
                    }
                }
            }
        }
        report << "m=" << m << " b_m=" << fmt17(inst.b)
               << " dev(1)=" << fmt17(dev[0]) << " dev(x)=" << fmt17(dev[1])
               << " dev(x^2)=" << fmt17(dev[2]) << "\n";
        if (csv) {
            *csv << m << "," << fmt17(dev[0]) << "," << fmt17(dev[1]) << ","
                 << fmt17(dev[2]) << "\n";
        }
        ok = ok && dev[0] <= kThreshold && dev[1] <= kThreshold &&
             dev[2] <= kThreshold;
    }
    report << (ok ? "moments: PASS" : "moments: FAIL") << " (threshold "
           << kThreshold << ")\n";
    return ok;
}

void run_converge(const ExperimentConfig& cfg, std::ostream& csv) {
    write_echo(cfg, csv);
    csv << "m,b_m,sup_error,mean_error,grid,seconds\n";
    std::vector<double> sups;
    for (const int m : cfg.ms) {
        const auto start = std::chrono::steady_clock::now();
        const Instance inst = make_instance(cfg, m);
        const std::vector<SurfaceRow> rows = surface_rows(cfg, inst, cfg.grid);
        double sup = 0.0;
        double total = 0.0;
        for (const auto& r : rows) {
            const double err = std::fabs(r.g - r.Bg);
            sup = std::max(sup, err);
            total += err;
        }
        const double mean = total / static_cast<double>(rows.size());
        const std::chrono::duration<double> elapsed =
            std::chrono::steady_clock::now() - start;
        char secbuf[32];
        std::snprintf(secbuf, sizeof(secbuf), "%.3f", elapsed.count());
        csv << m << "," << fmt17(inst.b) << "," << fmt17(sup) << "," << fmt17(mean)
            << "," << cfg.grid << "," << secbuf << "\n";
        sups.push_back(sup);
    }
    const bool monotone = std::is_sorted(sups.rbegin(), sups.rend()) &&
                          std::adjacent_find(sups.begin(), sups.end()) == sups.end();
    csv << "# trend: sup_error strictly decreasing = " << (monotone ? "yes" : "no")
        << "\n";
}

void run_surface(const ExperimentConfig& cfg, std::optional<int> m_opt,
                 std::ostream& csv) {
    const int m = m_opt.value_or(cfg.ms.back());
    const Instance inst = make_instance(cfg, m);
    write_echo(cfg, csv);
    csv << "# m=" << m << " b_m=" << fmt17(inst.b) << "\n";
    csv << "u,v,x,y,g,Bg,abs_error\n";
    for (const auto& r : surface_rows(cfg, inst, cfg.grid)) {
        csv << fmt17(r.u) << "," << fmt17(r.v) << "," << fmt17(r.x) << ","
            << fmt17(r.y) << "," << fmt17(r.g) << "," << fmt17(r.Bg) << ","
            << fmt17(std::fabs(r.g - r.Bg)) << "\n";
    }
}

}  // namespace chlod
