#include "chlod/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "chlod/univariate.hpp"

namespace chlod {

ShiftedStancu::ShiftedStancu(const Func2D& g, int m, const CurveDomain& dom,
                             NodeScheme scheme)
    : m_(m), scheme_(scheme), dom_(&dom) {
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    mks_.resize(static_cast<std::size_t>(m) + 1);
    node_vals_.resize(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        const int m_k = mk(scheme, m, k);
        mks_[static_cast<std::size_t>(k)] = m_k;
        auto& column = node_vals_[static_cast<std::size_t>(k)];
        column.resize(static_cast<std::size_t>(m_k) + 1);
        const double u = static_cast<double>(k) / m;
        for (int j = 0; j <= m_k; ++j) {
            // Degenerate column: single node at v = 0.
            const double v = m_k == 0 ? 0.0 : static_cast<double>(j) / m_k;
            const Point2 p = dom.transform_point(u, v);
            column[static_cast<std::size_t>(j)] = g(p.x, p.y);
        }
    }
}

double ShiftedStancu::eval(double x, double y) const {
    const double u = dom_->J().to_unit(x);
    const double v = dom_->check_membership(x, y);
    return eval_param(u, v);
}

double ShiftedStancu::eval_param(double u, double v) const {
    if (u < -1e-12 || u > 1.0 + 1e-12 || v < -1e-12 || v > 1.0 + 1e-12) {
        throw DomainError("parametric point outside the unit square");
    }
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    const std::vector<double> outer = bernstein_row(m_, u);
    double acc = 0.0;
    for (int k = 0; k <= m_; ++k) {
        const double wk = outer[static_cast<std::size_t>(k)];
        if (wk == 0.0) continue;
        const int m_k = mks_[static_cast<std::size_t>(k)];
        const auto& column = node_vals_[static_cast<std::size_t>(k)];
        double inner = 0.0;
        if (m_k == 0) {
            inner = column[0];
        } else {
            const std::vector<double> row = bernstein_row(m_k, v);
            for (int j = 0; j <= m_k; ++j) {
                inner += column[static_cast<std::size_t>(j)] *
                         row[static_cast<std::size_t>(j)];
            }
        }
        acc += wk * inner;
    }
    return acc;
}

double stancu_operator(const Func2D& g, int m, const CurveDomain& dom,
                       NodeScheme scheme, double x, double y) {
    const ShiftedInterval& J = dom.J();
    if (std::fabs(J.alpha()) > 1e-12 || std::fabs(J.beta() - 1.0) > 1e-12) {
        throw ValidationError(
            "classical-frame operator requires a domain with alpha=0, beta=1");
    }
    return shifted_stancu_operator(g, m, dom, scheme, x, y);
}

double shifted_stancu_operator(const Func2D& g, int m, const CurveDomain& dom,
                               NodeScheme scheme, double x, double y) {
    return ShiftedStancu(g, m, dom, scheme).eval(x, y);
}

double shifted_stancu_parametric(const Func2D& g, int m, const CurveDomain& dom,
                                 NodeScheme scheme, double u, double v) {
    return ShiftedStancu(g, m, dom, scheme).eval_param(u, v);
}

double moment_y(const CurveDomain& dom, int m, NodeScheme scheme, double x,
                double y) {
    const double v = dom.check_membership(x, y);
    const double u = dom.J().to_unit(x);
    // The vertical partition of unity collapses the j-sum to phi1 + v * height
    // per column -- except in degenerate columns (m_k = 0), whose single node
    // sits on phi1 and contributes no height term.
    const std::vector<double> row = bernstein_row(m, u);
    double height_part = 0.0;
    for (int k = 0; k <= m; ++k) {
        if (mk(scheme, m, k) == 0) continue;
        const double xk = dom.J().left() + dom.J().width() * k / m;
        height_part += (dom.phi2(xk) - dom.phi1(xk)) * row[static_cast<std::size_t>(k)];
    }
    return v * height_part + shifted_operator(dom.phi1_func(), m, dom.J(), x);
}

double remainder_qm(const CurveDomain& dom, int m, NodeScheme scheme, double x,
                    double y) {
    if (m < 1) {
        throw ValidationError("remainder needs m >= 1");
    }
    const double u = dom.J().to_unit(x);
    const double lo = dom.phi1(x);
    const double hi = dom.phi2(x);
    const double tol = 1e-12 * std::max(std::fabs(hi - lo), 1.0);
    if (y < lo - tol || y > hi + tol) {
        throw DomainError("point outside domain in remainder evaluation");
    }
    const std::vector<double> row = bernstein_row(m, u);
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        const int m_k = mk(scheme, m, k);
        if (m_k == 0) continue;  // no variance term in a one-node column
        const double h = dom.phi2_param(static_cast<double>(k) / m) -
                         dom.phi1_param(static_cast<double>(k) / m);
        sum += h * h / m_k * row[static_cast<std::size_t>(k)];
    }
    return (y - lo) * (hi - y) / ((hi - lo) * (hi - lo)) * sum;
}

namespace {

bool inside_domain(const CurveDomain& dom, double x, double y) {
    const ShiftedInterval& J = dom.J();
    if (x < J.left() || x > J.right()) return false;
    return dom.phi1(x) <= y && y <= dom.phi2(x);
}

}  // namespace

double estimate_modulus(const Func2D& g, const CurveDomain& dom, double delta1,
                        double delta2, int samples, std::uint64_t seed) {
    if (!(delta1 > 0.0 && delta2 > 0.0)) {
        throw ValidationError("modulus deltas must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> dx(-delta1, delta1);
    std::uniform_real_distribution<double> dy(-delta2, delta2);
    double w = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Point2 p = dom.transform_point(unit(rng), unit(rng));
        const double x2 = p.x + dx(rng);
        const double y2 = p.y + dy(rng);
        if (!inside_domain(dom, x2, y2)) continue;
        w = std::max(w, std::fabs(g(x2, y2) - g(p.x, p.y)));
    }
    return w;
}

double estimate_modulus_grid(const Func2D& g, const CurveDomain& dom,
                             double delta1, double delta2, int n) {
    if (!(delta1 > 0.0 && delta2 > 0.0)) {
        throw ValidationError("modulus deltas must be positive");
    }
    if (n < 2) {
        throw ValidationError("modulus grid needs n >= 2");
    }
    const double offs[8][2] = {{delta1, 0.0},     {-delta1, 0.0},
                               {0.0, delta2},     {0.0, -delta2},
                               {delta1, delta2},  {delta1, -delta2},
                               {-delta1, delta2}, {-delta1, -delta2}};
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Point2 p = dom.transform_point(static_cast<double>(i) / (n - 1),
                                                 static_cast<double>(j) / (n - 1));
            const double base = g(p.x, p.y);
            for (const auto& d : offs) {
                const double x2 = p.x + d[0];
                const double y2 = p.y + d[1];
                if (!inside_domain(dom, x2, y2)) continue;
                w = std::max(w, std::fabs(g(x2, y2) - base));
            }
        }
    }
    return w;
}

std::vector<ErrorReport> convergence_study(
    const Func2D& g, const std::function<CurveDomain(int)>& dom_family,
    NodeScheme scheme, const std::vector<int>& ms, int grid_n) {
    if (ms.empty()) {
        throw ValidationError("convergence study needs at least one degree");
    }
    if (grid_n < 2) {
        throw ValidationError("convergence grid needs at least 2 points");
    }
    std::vector<ErrorReport> reports;
    reports.reserve(ms.size());
    for (const int m : ms) {
        const CurveDomain dom = dom_family(m);
        const ShiftedStancu op(g, m, dom, scheme);
        double sup = 0.0;
        double total = 0.0;
        for (int i = 0; i < grid_n; ++i) {
            const double u = static_cast<double>(i) / (grid_n - 1);
            for (int j = 0; j < grid_n; ++j) {
                const double v = static_cast<double>(j) / (grid_n - 1);
                const Point2 p = dom.transform_point(u, v);
                const double err = std::fabs(op.eval_param(u, v) - g(p.x, p.y));
                sup = std::max(sup, err);
                total += err;
            }
        }
        reports.push_back({m, sup, total / (static_cast<double>(grid_n) * grid_n),
                           grid_n, scheme});
    }
    return reports;
}

}  // namespace chlod
