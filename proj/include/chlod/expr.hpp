#ifndef CHLOD_EXPR_HPP
#define CHLOD_EXPR_HPP

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chlod/errors.hpp"

namespace chlod::expr {

// Abstract syntax tree for the small configuration expression language:
// decimal literals, declared variables, + - * / ^, unary minus, the unary
// function catalog {sin, cos, exp, sqrt, abs, log} and the constant pi.

enum class NodeKind { Number, Variable, Unary, Binary, Call };

struct Node {
    NodeKind kind;
    double number = 0.0;       // Number
    int var_index = -1;        // Variable (index into the declared set)
    std::string name;          // Variable / Call
    char op = 0;               // Unary ('-') / Binary
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;  // Binary only
};

class Expr {
public:
    Expr() = default;
    Expr(std::shared_ptr<const Node> root, std::vector<std::string> variables);

    bool empty() const { return root_ == nullptr; }
    const std::vector<std::string>& variables() const { return variables_; }

    /// Evaluate with values[i] bound to variables()[i].
    double eval(std::span<const double> values) const;

    /// Fully parenthesized round-trippable rendering.
    std::string to_string() const;

    /// Structural equality of the two trees.
    friend bool equal(const Expr& a, const Expr& b);

private:
    std::shared_ptr<const Node> root_;
    std::vector<std::string> variables_;
};

/// Parse `source` over the declared variable set.  Throws ParseError with the
/// byte offset of the failure, or on references to undeclared identifiers.
Expr parse(const std::string& source, const std::vector<std::string>& variables);

}  // namespace chlod::expr

#endif
