#include "chlod/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace chlod {

namespace {

std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace

ChlodowskySequence ChlodowskySequence::power_m(double exponent) {
    if (!(exponent > 0.0 && exponent < 1.0)) {
        throw ValidationError("power sequence exponent must lie in (0, 1), got " +
                              std::to_string(exponent));
    }
    return {Kind::PowerM, exponent};
}

ChlodowskySequence ChlodowskySequence::constant(double c) {
    if (!(c > 0.0)) {
        throw ValidationError("constant sequence requires c > 0, got " +
                              std::to_string(c));
    }
    return {Kind::Constant, c};
}

ChlodowskySequence ChlodowskySequence::parse(const std::string& spec) {
    if (spec == "sqrt") return sqrt_m();
    if (spec == "log") return log_m();
    if (spec.rfind("pow:", 0) == 0) return power_m(std::stod(spec.substr(4)));
    if (spec.rfind("const:", 0) == 0) return constant(std::stod(spec.substr(6)));
    throw ValidationError("unknown b-sequence spec '" + spec +
                          "' (expected sqrt, log, pow:P, or const:C)");
}

double ChlodowskySequence::value(int m) const {
    if (m < 1) {
        throw ValidationError("b-sequence needs m >= 1");
    }
    switch (kind_) {
        case Kind::SqrtM: return std::sqrt(static_cast<double>(m));
        case Kind::LogM: return std::log(m + 2.0);
        case Kind::PowerM: return std::pow(static_cast<double>(m), param_);
        case Kind::Constant: return param_;
    }
    throw ValidationError("corrupt sequence kind");
}

void ChlodowskySequence::validate() const {
    double prev = 0.0;
    for (int m = 1; m <= 1000000; m = std::max(m + 1, m + m / 8)) {
        const double b = value(m);
        if (!(b > 0.0)) {
            throw ValidationError("b_m must stay positive, failed at m=" +
                                  std::to_string(m));
        }
        if (kind_ != Kind::Constant && b < prev) {
            throw ValidationError("b_m must be nondecreasing, failed at m=" +
                                  std::to_string(m));
        }
        prev = b;
    }
    if (kind_ != Kind::Constant) {
        if (value(1000000) / 1e6 > 1e-2 || value(1000000) / 1e6 >= value(1000) / 1e3) {
            throw ValidationError("b_m / m does not fall toward zero");
        }
    }
}

std::string ChlodowskySequence::spec_string() const {
    switch (kind_) {
        case Kind::SqrtM: return "sqrt";
        case Kind::LogM: return "log";
        case Kind::PowerM: return "pow:" + fmt_param(param_);
        case Kind::Constant: return "const:" + fmt_param(param_);
    }
    return "?";
}

double classical_operator(const Func1D& g, int m, double b, double x) {
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    const double tol = 1e-12 * b;
    if (x < -tol || x > b + tol) {
        throw DomainError("x=" + std::to_string(x) + " outside domain [0, " +
                          std::to_string(b) + "]");
    }
    const double t = std::clamp(x / b, 0.0, 1.0);
    const std::vector<double> row = bernstein_row(m, t);
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) {
        acc += g(static_cast<double>(k) * b / m) * row[static_cast<std::size_t>(k)];
    }
    return acc;
}

double shifted_operator(const Func1D& g, int m, const ShiftedInterval& J,
                        double x) {
    const std::vector<double> vals = shifted_operator_grid(g, m, J, {x});
    return vals.front();
}

std::vector<double> shifted_operator_grid(const Func1D& g, int m,
                                          const ShiftedInterval& J,
                                          const std::vector<double>& xs) {
    if (m < 1) {
        throw ValidationError("operator degree must satisfy m >= 1");
    }
    std::vector<double> nodes(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        nodes[static_cast<std::size_t>(k)] =
            g(J.left() + J.width() * static_cast<double>(k) / m);
    }
    std::vector<double> out;
    out.reserve(xs.size());
    for (const double x : xs) {
        const std::vector<double> row = bernstein_row(m, J.to_unit(x));
        double acc = 0.0;
        for (int k = 0; k <= m; ++k) {
            acc += nodes[static_cast<std::size_t>(k)] * row[static_cast<std::size_t>(k)];
        }
        out.push_back(acc);
    }
    return out;
}

double moment(int j, int m, const ShiftedInterval& J, double x) {
    if (m < 1) {
        throw ValidationError("moment needs m >= 1");
    }
    J.to_unit(x);  // domain check
    switch (j) {
        case 0: return 1.0;
        case 1: return x;
        case 2:
            return x * x + (x - J.left()) * (J.right() - x) / m;
        default:
            throw ValidationError("unsupported moment order j=" + std::to_string(j));
    }
}

double sup_error(const Func1D& g, int m, const ShiftedInterval& J, int grid_n) {
    if (grid_n < 2) {
        throw ValidationError("sup_error grid needs at least 2 points");
    }
    std::vector<double> xs(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        xs[static_cast<std::size_t>(i)] =
            J.left() + J.width() * static_cast<double>(i) / (grid_n - 1);
    }
    const std::vector<double> vals = shifted_operator_grid(g, m, J, xs);
    double worst = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        worst = std::max(worst, std::fabs(g(xs[static_cast<std::size_t>(i)]) -
                                          vals[static_cast<std::size_t>(i)]));
    }
    return worst;
}

}  // namespace chlod
