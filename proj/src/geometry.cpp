#include "chlod/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace chlod {

namespace {

void check_unit_square(double& u, double& v) {
    if (u < -1e-12 || u > 1.0 + 1e-12 || v < -1e-12 || v > 1.0 + 1e-12) {
        throw DomainError("parametric point (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") outside the unit square");
    }
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
}

void check_positive_b(double b) {
    if (!(b > 0.0)) {
        throw ValidationError("domain scale b must be positive");
    }
}

}  // namespace

Quadrant classify_quadrant(double x, double y) {
    if (y >= 0.0) {
        return x >= 0.0 ? Quadrant::Q1 : Quadrant::Q2;
    }
    return x <= 0.0 ? Quadrant::Q3 : Quadrant::Q4;
}

Point2 quadrant_signs(Quadrant q) {
    switch (q) {
        case Quadrant::Q1: return {1.0, 1.0};
        case Quadrant::Q2: return {-1.0, 1.0};
        case Quadrant::Q3: return {-1.0, -1.0};
        case Quadrant::Q4: return {1.0, -1.0};
    }
    return {1.0, 1.0};
}

Point2 square_to_triangle(double u, double v, double b) {
    check_positive_b(b);
    check_unit_square(u, v);
    const double a = 2.0 * u - 1.0;
    return {b * a, b * (1.0 - v * (1.0 - std::fabs(a)))};
}

double triangle_operator(const Func2D& g, int m, double b, double u, double v) {
    check_positive_b(b);
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    check_unit_square(u, v);
    const double a = 2.0 * u - 1.0;
    const double t = 1.0 - v * (1.0 - std::fabs(a));
    // Outer weights C(m,k) (2u-1)^k (2-2u)^(m-k); the argument 2u-1 is signed,
    // the weights still sum to 1 by the binomial theorem.
    const std::vector<double> outer = bernstein_row(m, a);
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double wk = outer[static_cast<std::size_t>(k)];
        if (wk == 0.0) continue;
        const int m_k = m - k;
        const double uk = static_cast<double>(k) / m;
        if (m_k == 0) {
            acc += wk * g(square_to_triangle(uk, 0.0, b).x,
                          square_to_triangle(uk, 0.0, b).y);
            continue;
        }
        const std::vector<double> inner = bernstein_row(m_k, t);
        double column = 0.0;
        for (int j = 0; j <= m_k; ++j) {
            const Point2 node =
                square_to_triangle(uk, static_cast<double>(j) / m_k, b);
            column += inner[static_cast<std::size_t>(j)] * g(node.x, node.y);
        }
        acc += wk * column;
    }
    return acc;
}

Point2 square_to_disk_global(double u, double v, double b) {
    check_positive_b(b);
    check_unit_square(u, v);
    const double a = 2.0 * u - 1.0;
    const double w = std::sqrt(std::max(0.0, 1.0 - a * a));
    return {b * a, b * (2.0 * v - 1.0) * w};
}

double disk_operator_global(const Func2D& g, int m, NodeScheme scheme, double b,
                            double x, double y) {
    check_positive_b(b);
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    if (x * x + y * y > b * b * (1.0 + 1e-12)) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside domain: not in the disk of radius " +
                          std::to_string(b));
    }
    const double edge_tol = 1e-12 * b;
    double inner_arg;
    if (b - std::fabs(x) <= edge_tol) {
        if (std::fabs(y) > edge_tol) {
            throw DomainError("singular fiber at |x| = b with y != 0");
        }
        inner_arg = 0.5;  // continuous limit of (y/sqrt(1-(x/b)^2) + b)/(2b)
    } else {
        const double wb = std::sqrt(b * b - x * x);
        inner_arg = std::clamp((y * b / wb + b) / (2.0 * b), 0.0, 1.0);
    }
    const double outer_arg = std::clamp((x + b) / (2.0 * b), 0.0, 1.0);
    const std::vector<double> outer = bernstein_row(m, outer_arg);
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double wk = outer[static_cast<std::size_t>(k)];
        if (wk == 0.0) continue;
        const int m_k = mk(scheme, m, k);
        const double xk = b * (2.0 * k - m) / m;
        const double wq = std::sqrt(std::max(
            0.0, 1.0 - (2.0 * k - m) * (2.0 * k - m) / (static_cast<double>(m) * m)));
        if (m_k == 0) {
            acc += wk * g(xk, -b * wq);  // single node at v = 0
            continue;
        }
        const std::vector<double> inner = bernstein_row(m_k, inner_arg);
        double column = 0.0;
        for (int j = 0; j <= m_k; ++j) {
            const double yj = b * wq * (2.0 * j - m_k) / m_k;
            column += inner[static_cast<std::size_t>(j)] * g(xk, yj);
        }
        acc += wk * column;
    }
    return acc;
}

Point2 square_to_disk_quadrant(Quadrant q, double u, double v, double b) {
    check_positive_b(b);
    const double tol = 1e-12 * b;
    if (u < -tol || u > b + tol || v < -tol || v > b + tol) {
        throw DomainError("quadrant parameters (u, v) must lie in [0, b]^2");
    }
    u = std::clamp(u, 0.0, b);
    v = std::clamp(v, 0.0, b);
    const Point2 s = quadrant_signs(q);
    return {s.x * (u / b) * std::sqrt(std::max(0.0, b * b - v * v)), s.y * v};
}

double disk_operator_piecewise(const Func2D& g, int m, double b, double x,
                               double y) {
    check_positive_b(b);
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    if (x * x + y * y > b * b * (1.0 + 1e-12)) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside domain: not in the disk of radius " +
                          std::to_string(b));
    }
    const Point2 s = quadrant_signs(classify_quadrant(x, y));
    const double denom = std::sqrt(std::max(0.0, b * b - y * y));
    // At |y| = b the horizontal fiber collapses; clamp to the endpoint.
    const double uarg =
        denom <= 1e-12 * b ? 0.0 : std::clamp(std::fabs(x) / denom, 0.0, 1.0);
    const double varg = std::clamp(std::fabs(y) / b, 0.0, 1.0);
    const std::vector<double> outer = bernstein_row(m, uarg);
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
        const double wk = outer[static_cast<std::size_t>(k)];
        if (wk == 0.0) continue;
        const int m_k = m - k;
        if (m_k == 0) {
            acc += wk * g(s.x * b * k / m, 0.0);  // k = m column, node on the axis
            continue;
        }
        const std::vector<double> inner = bernstein_row(m_k, varg);
        double column = 0.0;
        for (int j = 0; j <= m_k; ++j) {
            const double nx = s.x * k * b *
                              std::sqrt(static_cast<double>(m_k) * m_k -
                                        static_cast<double>(j) * j) /
                              (static_cast<double>(m_k) * m);
            const double ny = s.y * j * b / m_k;
            column += inner[static_cast<std::size_t>(j)] * g(nx, ny);
        }
        acc += wk * column;
    }
    return acc;
}

}  // namespace chlod
