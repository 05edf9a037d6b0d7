#ifndef CHLOD_HARNESS_HPP
#define CHLOD_HARNESS_HPP

#include <iosfwd>
#include <optional>

#include "chlod/config.hpp"

namespace chlod {

/// Evaluation point for `run_eval`: physical (x, y) for most operators,
/// parametric (u, v) for the triangle operator (and 1D operators use x only).
struct EvalPoint {
    std::optional<double> x;
    std::optional<double> y;
    std::optional<double> u;
    std::optional<double> v;
};

/// Operator value at a single point.  m defaults to the last entry of ms.
double run_eval(const ExperimentConfig& cfg, std::optional<int> m,
                const EvalPoint& point);

/// Moment-identity report (shifted1d / shifted_stancu only).  Writes a text
/// report to `report` and, when `csv` is nonnull, one CSV row per m.
/// Returns false if any deviation exceeds 1e-8.
bool run_moments(const ExperimentConfig& cfg, std::ostream& report,
                 std::ostream* csv);

/// Convergence study CSV: one row m,b_m,sup_error,mean_error,grid,seconds per
/// m, with a trailing monotone-trend comment line.
void run_converge(const ExperimentConfig& cfg, std::ostream& csv);

/// Surface export CSV: u,v,x,y,g,Bg,abs_error rows in row-major order
/// (u outer, v inner), 17 significant digits.
void run_surface(const ExperimentConfig& cfg, std::optional<int> m,
                 std::ostream& csv);

}  // namespace chlod

#endif
