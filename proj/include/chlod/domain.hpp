#ifndef CHLOD_DOMAIN_HPP
#define CHLOD_DOMAIN_HPP

#include <string>
#include <utility>

#include "chlod/basis.hpp"
#include "chlod/func.hpp"

namespace chlod {

/// Rule assigning the inner degree m_k to node column k.
enum class NodeScheme { Descending, Ascending, Constant };

NodeScheme parse_scheme(const std::string& name);
std::string scheme_name(NodeScheme scheme);

/// m_k for column k: m - k, k, or m.
int mk(NodeScheme scheme, int m, int k);

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Planar region between y = phi1(x) and y = phi2(x) over the x-interval J.
/// Construction checks strict separation phi1 < phi2 on a 1000-point grid;
/// `unchecked` skips the check for parametric-space evaluation of domains
/// whose boundary curves cross (the operator sums stay well defined there).
class CurveDomain {
public:
    CurveDomain(ShiftedInterval J, Func1D phi1, Func1D phi2);

    static CurveDomain unchecked(ShiftedInterval J, Func1D phi1, Func1D phi2);

    const ShiftedInterval& J() const { return J_; }
    double phi1(double x) const { return phi1_(x); }
    double phi2(double x) const { return phi2_(x); }
    const Func1D& phi1_func() const { return phi1_; }
    const Func1D& phi2_func() const { return phi2_; }

    /// Rescaled boundary curves of the parametric frame, phi_i((beta-alpha) b u
    /// + alpha b) for u in [0, 1].
    double phi1_param(double u) const { return phi1_(x_of(u)); }
    double phi2_param(double u) const { return phi2_(x_of(u)); }

    /// Map the unit square onto the region.
    Point2 transform_point(double u, double v) const;

    /// Throws DomainError if (x, y) lies outside the region beyond tolerance;
    /// returns y mapped to the vertical unit coordinate.
    double check_membership(double x, double y) const;

    bool separation_checked() const { return separation_checked_; }

private:
    CurveDomain(ShiftedInterval J, Func1D phi1, Func1D phi2, bool check);

    double x_of(double u) const { return J_.left() + J_.width() * u; }

    ShiftedInterval J_;
    Func1D phi1_;
    Func1D phi2_;
    bool separation_checked_ = false;
};

/// Physical y-axis node spacing at column k in the classical frame
/// (x_k = (k/m) b): (phi2(x_k) - phi1(x_k)) / m_k.  Columns with m_k = 0
/// collapse to a single node and have no spacing.
double y_step(NodeScheme scheme, const CurveDomain& dom, int m, int k);

}  // namespace chlod

#endif
