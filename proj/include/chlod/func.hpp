#ifndef CHLOD_FUNC_HPP
#define CHLOD_FUNC_HPP

#include <functional>
#include <string>
#include <utility>

#include "chlod/expr.hpp"

namespace chlod {

/// Single-variable function: either a parsed expression or a native callable.
class Func1D {
public:
    Func1D() = default;

    static Func1D from_expr(expr::Expr e) {
        Func1D f;
        f.label_ = e.to_string();
        f.fn_ = [e = std::move(e)](double x) {
            const double vals[1] = {x};
            return e.eval(vals);
        };
        return f;
    }

    static Func1D from_callable(std::function<double(double)> fn,
                                std::string label = "<native>") {
        Func1D f;
        f.fn_ = std::move(fn);
        f.label_ = std::move(label);
        return f;
    }

    static Func1D constant(double c) {
        return from_callable([c](double) { return c; }, std::to_string(c));
    }

    double operator()(double x) const { return fn_(x); }
    const std::string& label() const { return label_; }

private:
    std::function<double(double)> fn_;
    std::string label_;
};

/// Two-variable function over the planar domain.
class Func2D {
public:
    Func2D() = default;

    static Func2D from_expr(expr::Expr e) {
        Func2D f;
        f.label_ = e.to_string();
        f.fn_ = [e = std::move(e)](double x, double y) {
            const double vals[2] = {x, y};
            return e.eval(vals);
        };
        return f;
    }

    static Func2D from_callable(std::function<double(double, double)> fn,
                                std::string label = "<native>") {
        Func2D f;
        f.fn_ = std::move(fn);
        f.label_ = std::move(label);
        return f;
    }

    double operator()(double x, double y) const { return fn_(x, y); }
    const std::string& label() const { return label_; }

private:
    std::function<double(double, double)> fn_;
    std::string label_;
};

}  // namespace chlod

#endif
