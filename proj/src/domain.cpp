#include "chlod/domain.hpp"

#include <algorithm>
#include <cmath>

namespace chlod {

NodeScheme parse_scheme(const std::string& name) {
    if (name == "descending") return NodeScheme::Descending;
    if (name == "ascending") return NodeScheme::Ascending;
    if (name == "constant") return NodeScheme::Constant;
    throw ValidationError("unknown node scheme '" + name +
                          "' (expected descending, ascending, or constant)");
}

std::string scheme_name(NodeScheme scheme) {
    switch (scheme) {
        case NodeScheme::Descending: return "descending";
        case NodeScheme::Ascending: return "ascending";
        case NodeScheme::Constant: return "constant";
    }
    return "?";
}

int mk(NodeScheme scheme, int m, int k) {
    if (k < 0 || k > m) {
        throw IndexError("node index k=" + std::to_string(k) +
                         " outside [0, " + std::to_string(m) + "]");
    }
    switch (scheme) {
        case NodeScheme::Descending: return m - k;
        case NodeScheme::Ascending: return k;
        case NodeScheme::Constant: return m;
    }
    throw ValidationError("corrupt node scheme");
}

CurveDomain::CurveDomain(ShiftedInterval J, Func1D phi1, Func1D phi2)
    : CurveDomain(std::move(J), std::move(phi1), std::move(phi2), true) {}

CurveDomain CurveDomain::unchecked(ShiftedInterval J, Func1D phi1, Func1D phi2) {
    return CurveDomain(std::move(J), std::move(phi1), std::move(phi2), false);
}

CurveDomain::CurveDomain(ShiftedInterval J, Func1D phi1, Func1D phi2, bool check)
    : J_(std::move(J)), phi1_(std::move(phi1)), phi2_(std::move(phi2)) {
    if (!check) return;
    constexpr int kGrid = 1000;
    for (int i = 0; i < kGrid; ++i) {
        const double x = J_.left() + J_.width() * static_cast<double>(i) / (kGrid - 1);
        if (!(phi1_(x) < phi2_(x))) {
            throw ValidationError(
                "boundary curves are not strictly separated: phi1(x) >= phi2(x) "
                "at x=" + std::to_string(x));
        }
    }
    separation_checked_ = true;
}

Point2 CurveDomain::transform_point(double u, double v) const {
    if (u < -1e-12 || u > 1.0 + 1e-12 || v < -1e-12 || v > 1.0 + 1e-12) {
        throw DomainError("parametric point (" + std::to_string(u) + ", " +
                          std::to_string(v) + ") outside the unit square");
    }
    u = std::clamp(u, 0.0, 1.0);
    v = std::clamp(v, 0.0, 1.0);
    const double x = x_of(u);
    const double lo = phi1_(x);
    const double hi = phi2_(x);
    return {x, lo + (hi - lo) * v};
}

double CurveDomain::check_membership(double x, double y) const {
    const double u = J_.to_unit(x);  // throws outside [alpha b, beta b]
    (void)u;
    const double lo = phi1_(x);
    const double hi = phi2_(x);
    const double tol = 1e-12 * std::max(std::fabs(hi - lo), 1.0);
    if (!(hi - lo > 0.0)) {
        throw DomainError("degenerate vertical fiber at x=" + std::to_string(x) +
                          ": phi1 >= phi2");
    }
    if (y < lo - tol || y > hi + tol) {
        throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                          ") outside domain: y not in [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
    }
    return std::clamp((y - lo) / (hi - lo), 0.0, 1.0);
}

double y_step(NodeScheme scheme, const CurveDomain& dom, int m, int k) {
    const int m_k = mk(scheme, m, k);
    if (m_k < 1) {
        throw DomainError("degenerate column k=" + std::to_string(k) +
                          ": m_k = 0 has no node spacing");
    }
    const double xk = static_cast<double>(k) * dom.J().b() / m;
    return (dom.phi2(xk) - dom.phi1(xk)) / m_k;
}

}  // namespace chlod
