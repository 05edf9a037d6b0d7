#ifndef CHLOD_BIVARIATE_HPP
#define CHLOD_BIVARIATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "chlod/domain.hpp"
#include "chlod/func.hpp"

namespace chlod {

/// One convergence-study row.
struct ErrorReport {
    int m = 0;
    double sup_error = 0.0;
    double mean_error = 0.0;
    int grid_n = 0;
    NodeScheme scheme = NodeScheme::Constant;
};

/// Shifted bivariate operator with node values precomputed once.  Offers both
/// the physical-point and the parametric evaluation path; the two agree at
/// (x, y) = transform_point(u, v) whenever the boundary curves are separated.
class ShiftedStancu {
public:
    ShiftedStancu(const Func2D& g, int m, const CurveDomain& dom,
                  NodeScheme scheme);

    double eval(double x, double y) const;
    double eval_param(double u, double v) const;

    int m() const { return m_; }
    const CurveDomain& domain() const { return *dom_; }

private:
    int m_;
    NodeScheme scheme_;
    const CurveDomain* dom_;
    std::vector<int> mks_;                       // m_k per column
    std::vector<std::vector<double>> node_vals_; // g at transformed nodes
};

/// Bivariate Stancu operator in the classical frame: the domain must span
/// [0, b] (alpha = 0, beta = 1).
double stancu_operator(const Func2D& g, int m, const CurveDomain& dom,
                       NodeScheme scheme, double x, double y);

/// Shifted bivariate operator at a physical point of the region.
double shifted_stancu_operator(const Func2D& g, int m, const CurveDomain& dom,
                               NodeScheme scheme, double x, double y);

/// Same operator evaluated through the parametric frame (u, v) in [0, 1]^2.
double shifted_stancu_parametric(const Func2D& g, int m, const CurveDomain& dom,
                                 NodeScheme scheme, double u, double v);

/// Semi-closed form of the operator applied to g(x, y) = y:
/// ((y - phi1)/(phi2 - phi1)) B[phi2 - phi1](x) + B[phi1](x).
double moment_y(const CurveDomain& dom, int m, NodeScheme scheme, double x,
                double y);

/// Variance remainder Q_m of the second vertical moment; columns with
/// m_k = 0 contribute nothing.
double remainder_qm(const CurveDomain& dom, int m, NodeScheme scheme, double x,
                    double y);

/// Sampled lower estimate of the modulus of continuity w(delta1, delta2).
double estimate_modulus(const Func2D& g, const CurveDomain& dom, double delta1,
                        double delta2, int samples, std::uint64_t seed = 42);

/// Deterministic variant: n x n parametric anchors, box-corner and axis
/// offsets of size (delta1, delta2).
double estimate_modulus_grid(const Func2D& g, const CurveDomain& dom,
                             double delta1, double delta2, int n);

/// For each m, sup and mean absolute error of the shifted operator against g
/// on a grid_n x grid_n parametric grid.
std::vector<ErrorReport> convergence_study(
    const Func2D& g, const std::function<CurveDomain(int)>& dom_family,
    NodeScheme scheme, const std::vector<int>& ms, int grid_n);

}  // namespace chlod

#endif
