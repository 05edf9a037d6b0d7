#include "chlod/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace chlod {

namespace {

constexpr int kLogSpaceDegree = 31;  // C(60,30) exceeds exact double integers

void check_index(BasisIndex idx) {
    if (idx.m < 0 || idx.k < 0 || idx.k > idx.m) {
        throw IndexError("basis index k=" + std::to_string(idx.k) +
                         " out of range for degree m=" + std::to_string(idx.m));
    }
}

}  // namespace

ShiftedInterval::ShiftedInterval(double alpha, double beta, double b)
    : alpha_(alpha), beta_(beta), b_(b) {
    if (!(alpha < beta)) {
        throw ValidationError("shifted interval requires alpha < beta, got alpha=" +
                              std::to_string(alpha) + " beta=" + std::to_string(beta));
    }
    if (!(b > 0.0)) {
        throw ValidationError("shifted interval requires b > 0, got b=" +
                              std::to_string(b));
    }
}

ShiftedInterval ShiftedInterval::from_endpoints(double lo, double hi) {
    return ShiftedInterval(lo, hi, 1.0);
}

double ShiftedInterval::to_unit(double x) const {
    const double tol = 1e-12 * width();
    if (x < left() - tol || x > right() + tol) {
        throw DomainError("x=" + std::to_string(x) + " outside domain [" +
                          std::to_string(left()) + ", " + std::to_string(right()) +
                          "]");
    }
    const double t = (x - left()) / width();
    return std::clamp(t, 0.0, 1.0);
}

double log_binomial(int m, int k) {
    return std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
}

double binomial(int m, int k) {
    if (k < 0 || k > m) return 0.0;
    k = std::min(k, m - k);
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<long double>(m - k + i) / static_cast<long double>(i);
    }
    return static_cast<double>(r);
}

double bernstein(BasisIndex idx, double t) {
    check_index(idx);
    if (t < -1e-12 || t > 1.0 + 1e-12) {
        throw DomainError("bernstein argument t=" + std::to_string(t) +
                          " outside domain [0, 1]");
    }
    t = std::clamp(t, 0.0, 1.0);
    // Kronecker endpoint values, no 0^0 ambiguity.
    if (t == 0.0) return idx.k == 0 ? 1.0 : 0.0;
    if (t == 1.0) return idx.k == idx.m ? 1.0 : 0.0;
    if (idx.m < kLogSpaceDegree) {
        return binomial(idx.m, idx.k) * std::pow(t, idx.k) *
               std::pow(1.0 - t, idx.m - idx.k);
    }
    const double lg = log_binomial(idx.m, idx.k) + idx.k * std::log(t) +
                      (idx.m - idx.k) * std::log1p(-t);
    return std::exp(lg);
}

std::vector<double> bernstein_row(int m, double t) {
    std::vector<double> b(static_cast<std::size_t>(m) + 1, 0.0);
    b[0] = 1.0;
    const double s = 1.0 - t;
    for (int j = 1; j <= m; ++j) {
        b[j] = t * b[j - 1];
        for (int i = j - 1; i >= 1; --i) {
            b[i] = t * b[i - 1] + s * b[i];
        }
        b[0] *= s;
    }
    return b;
}

double chlodowsky_basis(BasisIndex idx, double x, double b) {
    if (!(b > 0.0)) {
        throw ValidationError("chlodowsky basis requires b > 0");
    }
    const double tol = 1e-12 * b;
    if (x < -tol || x > b + tol) {
        throw DomainError("x=" + std::to_string(x) + " outside domain [0, " +
                          std::to_string(b) + "]");
    }
    return bernstein(idx, std::clamp(x / b, 0.0, 1.0));
}

double shifted_basis(BasisIndex idx, double x, const ShiftedInterval& J) {
    return bernstein(idx, J.to_unit(x));
}

double shifted_basis_derivative(BasisIndex idx, double x,
                                const ShiftedInterval& J) {
    check_index(idx);
    if (idx.m < 1) {
        throw IndexError("derivative recurrence needs degree m >= 1");
    }
    const double t = J.to_unit(x);
    const double lower = idx.k >= 1 ? bernstein({idx.m - 1, idx.k - 1}, t) : 0.0;
    const double upper = idx.k <= idx.m - 1 ? bernstein({idx.m - 1, idx.k}, t) : 0.0;
    return idx.m * (lower - upper) / J.width();
}

std::pair<double, double> basis_mode(BasisIndex idx, const ShiftedInterval& J) {
    check_index(idx);
    if (idx.m < 1) {
        throw IndexError("basis mode undefined for degree m = 0");
    }
    const double ratio = static_cast<double>(idx.k) / idx.m;
    const double xstar = J.left() + J.width() * ratio;
    if (idx.k == 0 || idx.k == idx.m) {
        return {xstar, 1.0};  // 0^0 := 1, endpoint polynomials peak at 1
    }
    const double lg = log_binomial(idx.m, idx.k) + idx.k * std::log(ratio) +
                      (idx.m - idx.k) * std::log(1.0 - ratio);
    return {xstar, std::exp(lg)};
}

}  // namespace chlod
