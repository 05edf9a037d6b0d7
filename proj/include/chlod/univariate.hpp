#ifndef CHLOD_UNIVARIATE_HPP
#define CHLOD_UNIVARIATE_HPP

#include <string>
#include <vector>

#include "chlod/basis.hpp"
#include "chlod/func.hpp"

namespace chlod {

/// The scale sequence b_m.  Admissible (non-constant) kinds satisfy
/// b_m -> infinity and b_m / m -> 0.
class ChlodowskySequence {
public:
    enum class Kind { SqrtM, LogM, PowerM, Constant };

    static ChlodowskySequence sqrt_m() { return {Kind::SqrtM, 0.0}; }
    static ChlodowskySequence log_m() { return {Kind::LogM, 0.0}; }
    static ChlodowskySequence power_m(double exponent);
    static ChlodowskySequence constant(double c);

    /// Parse a config spec: "sqrt", "log", "pow:P", "const:C".
    static ChlodowskySequence parse(const std::string& spec);

    Kind kind() const { return kind_; }
    double parameter() const { return param_; }

    /// b_m for the given degree (m >= 1).
    double value(int m) const;

    /// Numeric admissibility check over m <= 10^6: positivity, nondecreasing,
    /// and b_m / m falling toward zero for non-constant kinds.
    void validate() const;

    std::string spec_string() const;

private:
    ChlodowskySequence(Kind kind, double param) : kind_(kind), param_(param) {}

    Kind kind_;
    double param_;
};

/// Classical Chlodowsky operator: sum_k g(k b / m) q_{m,k}(x / b) on [0, b].
double classical_operator(const Func1D& g, int m, double b, double x);

/// Shifted operator on J with nodes (beta-alpha)(k/m) b + alpha b.
double shifted_operator(const Func1D& g, int m, const ShiftedInterval& J,
                        double x);

/// Grid-evaluation variant: node values of g are computed once and reused
/// across all grid points.
std::vector<double> shifted_operator_grid(const Func1D& g, int m,
                                          const ShiftedInterval& J,
                                          const std::vector<double>& xs);

/// Closed-form moments of the shifted operator applied to 1, x, x^2:
/// 1, x, and x^2 + (x - alpha b)(beta b - x)/m.
double moment(int j, int m, const ShiftedInterval& J, double x);

/// Max |g - shifted operator of g| over grid_n equispaced points of J,
/// endpoints included.
double sup_error(const Func1D& g, int m, const ShiftedInterval& J, int grid_n);

}  // namespace chlod

#endif
