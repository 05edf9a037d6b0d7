#include "chlod/expr.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <sstream>

namespace chlod::expr {

namespace {

constexpr std::array<const char*, 6> kFunctions = {"sin", "cos", "exp",
                                                   "sqrt", "abs", "log"};

bool is_function(const std::string& name) {
    return std::find(kFunctions.begin(), kFunctions.end(), name) !=
           kFunctions.end();
}

using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Number;
    n->number = v;
    return n;
}

NodePtr make_variable(const std::string& name, int index) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Variable;
    n->name = name;
    n->var_index = index;
    return n;
}

NodePtr make_unary(NodePtr operand) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Unary;
    n->op = '-';
    n->lhs = std::move(operand);
    return n;
}

NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Binary;
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

NodePtr make_call(const std::string& name, NodePtr arg) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Call;
    n->name = name;
    n->lhs = std::move(arg);
    return n;
}

// Recursive-descent parser.  Precedence, loosest to tightest:
//   + -  |  * /  |  unary -  |  ^ (right-assoc)  |  primary
class Parser {
public:
    Parser(const std::string& src, const std::vector<std::string>& vars)
        : src_(src), vars_(vars) {}

    NodePtr run() {
        skip_ws();
        if (pos_ >= src_.size()) {
            throw ParseError("empty expression", 0);
        }
        NodePtr e = parse_sum();
        skip_ws();
        if (pos_ < src_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_sum() {
        NodePtr lhs = parse_product();
        while (true) {
            if (accept('+')) {
                lhs = make_binary('+', lhs, parse_product());
            } else if (accept('-')) {
                lhs = make_binary('-', lhs, parse_product());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_product() {
        NodePtr lhs = parse_unary();
        while (true) {
            if (accept('*')) {
                lhs = make_binary('*', lhs, parse_unary());
            } else if (accept('/')) {
                lhs = make_binary('/', lhs, parse_unary());
            } else {
                return lhs;
            }
        }
    }

    // Unary minus binds looser than ^, so -2^2 parses as -(2^2).
    NodePtr parse_unary() {
        if (accept('-')) {
            return make_unary(parse_unary());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (accept('^')) {
            return make_binary('^', base, parse_unary());
        }
        return base;
    }

    NodePtr parse_primary() {
        skip_ws();
        if (pos_ >= src_.size()) {
            throw ParseError("unexpected end of expression", pos_);
        }
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_sum();
            if (!accept(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_identifier();
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) {
            ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_ + 1;
            if (mark < src_.size() && (src_[mark] == '+' || src_[mark] == '-')) ++mark;
            if (mark < src_.size() && std::isdigit(static_cast<unsigned char>(src_[mark]))) {
                pos_ = mark;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    ++pos_;
                }
            }
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(src_.substr(start, pos_ - start), &used);
            if (used != pos_ - start) {
                throw ParseError("malformed number", start);
            }
            return make_number(v);
        } catch (const std::invalid_argument&) {
            throw ParseError("malformed number", start);
        }
    }

    NodePtr parse_identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
        const std::string name = src_.substr(start, pos_ - start);
        if (name == "pi") {
            return make_number(M_PI);
        }
        if (peek() == '(') {
            if (!is_function(name)) {
                throw ParseError("unknown function '" + name + "'", start);
            }
            accept('(');
            NodePtr arg = parse_sum();
            if (!accept(')')) {
                throw ParseError("expected ')' after argument of '" + name + "'",
                                 pos_);
            }
            return make_call(name, arg);
        }
        const auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) {
            throw ParseError("unknown identifier '" + name + "'", start);
        }
        return make_variable(name, static_cast<int>(it - vars_.begin()));
    }

    const std::string& src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

void render(const Node& n, std::ostream& out) {
    switch (n.kind) {
        case NodeKind::Number: {
            std::ostringstream num;
            num.precision(17);
            num << n.number;
            out << num.str();
            break;
        }
        case NodeKind::Variable:
            out << n.name;
            break;
        case NodeKind::Unary:
            out << "(-";
            render(*n.lhs, out);
            out << ")";
            break;
        case NodeKind::Binary:
            out << "(";
            render(*n.lhs, out);
            out << n.op;
            render(*n.rhs, out);
            out << ")";
            break;
        case NodeKind::Call:
            out << n.name << "(";
            render(*n.lhs, out);
            out << ")";
            break;
    }
}

std::string render_str(const Node& n) {
    std::ostringstream out;
    render(n, out);
    return out.str();
}

double eval_node(const Node& n, std::span<const double> values) {
    switch (n.kind) {
        case NodeKind::Number:
            return n.number;
        case NodeKind::Variable:
            return values[static_cast<std::size_t>(n.var_index)];
        case NodeKind::Unary:
            return -eval_node(*n.lhs, values);
        case NodeKind::Binary: {
            const double a = eval_node(*n.lhs, values);
            const double b = eval_node(*n.rhs, values);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (b == 0.0) {
                        throw EvalError("division by zero in " + render_str(n) +
                                        " with numerator " + std::to_string(a));
                    }
                    return a / b;
                case '^': return std::pow(a, b);
            }
            throw EvalError("unknown operator");
        }
        case NodeKind::Call: {
            const double a = eval_node(*n.lhs, values);
            if (n.name == "sin") return std::sin(a);
            if (n.name == "cos") return std::cos(a);
            if (n.name == "exp") return std::exp(a);
            if (n.name == "abs") return std::fabs(a);
            if (n.name == "sqrt") {
                if (a < -1e-12) {
                    throw EvalError("sqrt of negative value " + std::to_string(a) +
                                    " in " + render_str(n));
                }
                return std::sqrt(std::max(a, 0.0));
            }
            if (n.name == "log") {
                if (a <= 0.0) {
                    throw EvalError("log of nonpositive value " + std::to_string(a) +
                                    " in " + render_str(n));
                }
                return std::log(a);
            }
            throw EvalError("unknown function '" + n.name + "'");
        }
    }
    throw EvalError("corrupt expression node");
}

bool equal_nodes(const Node* a, const Node* b) {
    if (a == nullptr || b == nullptr) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case NodeKind::Number: return a->number == b->number;
        case NodeKind::Variable: return a->var_index == b->var_index;
        case NodeKind::Unary: return equal_nodes(a->lhs.get(), b->lhs.get());
        case NodeKind::Binary:
            return a->op == b->op && equal_nodes(a->lhs.get(), b->lhs.get()) &&
                   equal_nodes(a->rhs.get(), b->rhs.get());
        case NodeKind::Call:
            return a->name == b->name && equal_nodes(a->lhs.get(), b->lhs.get());
    }
    return false;
}

}  // namespace

Expr::Expr(std::shared_ptr<const Node> root, std::vector<std::string> variables)
    : root_(std::move(root)), variables_(std::move(variables)) {}

double Expr::eval(std::span<const double> values) const {
    if (!root_) {
        throw EvalError("evaluating an empty expression");
    }
    if (values.size() < variables_.size()) {
        throw EvalError("bindings do not cover all variables");
    }
    return eval_node(*root_, values);
}

std::string Expr::to_string() const {
    return root_ ? render_str(*root_) : std::string();
}

bool equal(const Expr& a, const Expr& b) {
    return equal_nodes(a.root_.get(), b.root_.get());
}

Expr parse(const std::string& source, const std::vector<std::string>& variables) {
    Parser parser(source, variables);
    return Expr(parser.run(), variables);
}

}  // namespace chlod::expr
