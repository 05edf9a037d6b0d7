#ifndef CHLOD_BASIS_HPP
#define CHLOD_BASIS_HPP

#include <utility>
#include <vector>

#include "chlod/errors.hpp"

namespace chlod {

/// Degree/index pair (m, k) of a Bernstein-type basis polynomial, 0 <= k <= m.
struct BasisIndex {
    int m = 0;
    int k = 0;
};

/// The interval J = [alpha*b, beta*b] carrying the shifted basis.  alpha and
/// beta are dimensionless shift factors, b is the scale of the current degree.
class ShiftedInterval {
public:
    ShiftedInterval(double alpha, double beta, double b);

    /// Interval with explicit endpoints [lo, hi]; the basis formula depends
    /// only on the endpoints, so b is fixed to 1.
    static ShiftedInterval from_endpoints(double lo, double hi);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double b() const { return b_; }

    double left() const { return alpha_ * b_; }
    double right() const { return beta_ * b_; }
    double width() const { return (beta_ - alpha_) * b_; }

    /// Map x in [left, right] to t in [0, 1], clamped after a tolerance check
    /// of 1e-12 * width.
    double to_unit(double x) const;

private:
    double alpha_;
    double beta_;
    double b_;
};

/// log of the binomial coefficient C(m, k).
double log_binomial(int m, int k);

/// Binomial coefficient C(m, k) as a double (exact for m <= 60).
double binomial(int m, int k);

/// Classical Bernstein basis polynomial p_{m,k}(t) = C(m,k) t^k (1-t)^(m-k)
/// on [0, 1].  Endpoints are exact Kronecker deltas; degrees above 30 go
/// through log-space to avoid binomial overflow.
double bernstein(BasisIndex idx, double t);

/// All m+1 basis values p_{m,0..m}(t) by the stable triangular recurrence.
/// Valid for any real t (used with signed arguments by the triangle map).
std::vector<double> bernstein_row(int m, double t);

/// Chlodowsky basis q_{m,k}(x/b) for x in [0, b].
double chlodowsky_basis(BasisIndex idx, double x, double b);

/// Shifted basis on J: p_{m,k}((x/b - alpha)/(beta - alpha)).
double shifted_basis(BasisIndex idx, double x, const ShiftedInterval& J);

/// Derivative of the shifted basis via the degree-lowering recurrence,
/// m * (q_{m-1,k-1} - q_{m-1,k}) / width(J), with out-of-range terms zero.
double shifted_basis_derivative(BasisIndex idx, double x,
                                const ShiftedInterval& J);

/// Location and value of the maximum of the shifted basis polynomial:
/// x* = (beta-alpha)(k/m) b + alpha b, value C(m,k) k^k (m-k)^(m-k) / m^m.
std::pair<double, double> basis_mode(BasisIndex idx, const ShiftedInterval& J);

}  // namespace chlod

#endif
