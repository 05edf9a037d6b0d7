#ifndef CHLOD_CONFIG_HPP
#define CHLOD_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chlod/expr.hpp"
#include "chlod/univariate.hpp"

namespace chlod {

enum class OperatorKind {
    Classical1D,
    Shifted1D,
    Stancu,
    ShiftedStancu,
    Triangle,
    DiskGlobal,
    DiskPiecewise,
};

OperatorKind parse_operator(const std::string& name);
std::string operator_name(OperatorKind kind);
bool operator_is_bivariate(OperatorKind kind);

/// One experiment: an operator, its scale sequence, boundary curves, target
/// function, degree list, and output options.
struct ExperimentConfig {
    OperatorKind op = OperatorKind::Shifted1D;
    ChlodowskySequence b_sequence = ChlodowskySequence::sqrt_m();
    double alpha = 0.0;
    double beta = 1.0;
    std::string phi1_source = "0";
    std::string phi2_source = "1";
    std::string g_source;
    std::string scheme_name_raw = "constant";
    std::vector<int> ms;
    int grid = 41;
    std::string output;
    std::uint64_t seed = 42;

    expr::Expr phi1_expr;
    expr::Expr phi2_expr;
    expr::Expr g_expr;

    /// Raw key=value lines as read, for the CSV metadata echo.
    std::vector<std::string> echo_lines;
};

/// Parse and fully validate the line-oriented key=value config file.
/// Expressions are parsed eagerly so syntax errors surface here.
ExperimentConfig load_config(const std::string& path);

/// Same, from in-memory text (used by tests).
ExperimentConfig parse_config_text(const std::string& text);

}  // namespace chlod

#endif
