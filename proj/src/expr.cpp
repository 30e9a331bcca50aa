#include "setgame/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace setgame {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t pos = i + 1;
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t j = i;
            while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j < n && text[j] == '.') {
                ++j;
                while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            }
            if (j < n && (text[j] == 'e' || text[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
                if (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) {
                    ++k;
                    while (k < n && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                    j = k;
                }
            }
            const std::string lit(text.substr(i, j - i));
            out.push_back({TokenKind::Number, std::strtod(lit.c_str(), nullptr), lit, pos});
            i = j;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < n && ident_char(text[j])) ++j;
            out.push_back({TokenKind::Ident, 0.0, std::string(text.substr(i, j - i)), pos});
            i = j;
            continue;
        }
        TokenKind k;
        switch (c) {
            case '+': k = TokenKind::Plus; break;
            case '-': k = TokenKind::Minus; break;
            case '*': k = TokenKind::Star; break;
            case '/': k = TokenKind::Slash; break;
            case '^': k = TokenKind::Caret; break;
            case '(': k = TokenKind::LParen; break;
            case ')': k = TokenKind::RParen; break;
            case ',': k = TokenKind::Comma; break;
            default:
                throw ExprError(std::string("illegal character '") + c + "'", pos);
        }
        out.push_back({k, 0.0, std::string(1, c), pos});
        ++i;
    }
    out.push_back({TokenKind::End, 0.0, "", n + 1});
    return out;
}

namespace {

Expr make(ExprOp op, Expr lhs = nullptr, Expr rhs = nullptr) {
    auto n = std::make_shared<ExprNode>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

Expr make_const(double v) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Const;
    n->value = v;
    return n;
}

Expr make_var(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->op = ExprOp::Var;
    n->name = std::move(name);
    return n;
}

struct FunctionInfo {
    ExprOp op;
    int arity;
};

const FunctionInfo* lookup_function(const std::string& name) {
    static const std::map<std::string, FunctionInfo> table = {
        {"neg", {ExprOp::Neg, 1}},  {"abs", {ExprOp::Abs, 1}}, {"tanh", {ExprOp::Tanh, 1}},
        {"exp", {ExprOp::Exp, 1}},  {"sin", {ExprOp::Sin, 1}}, {"cos", {ExprOp::Cos, 1}},
        {"min", {ExprOp::Min, 2}},  {"max", {ExprOp::Max, 2}}, {"pow", {ExprOp::Pow, 2}},
    };
    auto it = table.find(name);
    return it == table.end() ? nullptr : &it->second;
}

class Parser {
public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    Expr run() {
        Expr e = parse_add();
        expect(TokenKind::End, "end of input");
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    bool accept(TokenKind k) {
        if (cur().kind == k) {
            advance();
            return true;
        }
        return false;
    }

    void expect(TokenKind k, const char* what) {
        if (cur().kind != k)
            throw ExprError(std::string("expected ") + what + ", got '" +
                                (cur().kind == TokenKind::End ? "<end>" : cur().text) + "'",
                            cur().pos);
        advance();
    }

    Expr parse_add() {
        Expr e = parse_mul();
        for (;;) {
            if (accept(TokenKind::Plus))
                e = make(ExprOp::Add, e, parse_mul());
            else if (accept(TokenKind::Minus))
                e = make(ExprOp::Sub, e, parse_mul());
            else
                return e;
        }
    }

    Expr parse_mul() {
        Expr e = parse_pow();
        for (;;) {
            if (accept(TokenKind::Star))
                e = make(ExprOp::Mul, e, parse_pow());
            else if (accept(TokenKind::Slash))
                e = make(ExprOp::Div, e, parse_pow());
            else
                return e;
        }
    }

    // '^' is right associative; unary sign binds tighter than '^'.
    Expr parse_pow() {
        Expr base = parse_unary();
        if (accept(TokenKind::Caret)) return make(ExprOp::Pow, base, parse_pow());
        return base;
    }

    Expr parse_unary() {
        if (accept(TokenKind::Minus)) return make(ExprOp::Neg, parse_unary());
        if (accept(TokenKind::Plus)) return parse_unary();
        return parse_primary();
    }

    Expr parse_primary() {
        const Token t = cur();
        if (t.kind == TokenKind::Number) {
            advance();
            return make_const(t.number);
        }
        if (t.kind == TokenKind::Ident) {
            advance();
            if (cur().kind == TokenKind::LParen) {
                const FunctionInfo* fn = lookup_function(t.text);
                if (!fn) throw ExprError("unknown function '" + t.text + "'", t.pos);
                advance();
                std::vector<Expr> args;
                args.push_back(parse_add());
                while (accept(TokenKind::Comma)) args.push_back(parse_add());
                expect(TokenKind::RParen, "')'");
                if (static_cast<int>(args.size()) != fn->arity)
                    throw ExprError("function '" + t.text + "' expects " +
                                        std::to_string(fn->arity) + " argument(s), got " +
                                        std::to_string(args.size()),
                                    t.pos);
                return fn->arity == 1 ? make(fn->op, args[0]) : make(fn->op, args[0], args[1]);
            }
            return make_var(t.text);
        }
        if (t.kind == TokenKind::LParen) {
            advance();
            Expr e = parse_add();
            expect(TokenKind::RParen, "')'");
            return e;
        }
        throw ExprError("unexpected token '" + (t.kind == TokenKind::End ? "<end>" : t.text) + "'",
                        t.pos);
    }

    const std::vector<Token>& toks_;
    std::size_t i_ = 0;
};

}  // namespace

Expr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

Expr parse_expression(std::string_view text) {
    if (text.empty()) throw ExprError("empty expression", 0);
    return parse(tokenize(text));
}

namespace {

double checked(double v) {
    if (!std::isfinite(v)) throw ExprError("non-finite result", 0);
    return v;
}

}  // namespace

double evaluate(const Expr& e, const Env& env) {
    switch (e->op) {
        case ExprOp::Const: return e->value;
        case ExprOp::Var: {
            auto it = env.find(e->name);
            if (it == env.end()) throw ExprError("unbound variable '" + e->name + "'", 0);
            return it->second;
        }
        case ExprOp::Neg: return -evaluate(e->lhs, env);
        case ExprOp::Abs: return std::abs(evaluate(e->lhs, env));
        case ExprOp::Tanh: return std::tanh(evaluate(e->lhs, env));
        case ExprOp::Exp: return checked(std::exp(evaluate(e->lhs, env)));
        case ExprOp::Sin: return std::sin(evaluate(e->lhs, env));
        case ExprOp::Cos: return std::cos(evaluate(e->lhs, env));
        case ExprOp::Add: return checked(evaluate(e->lhs, env) + evaluate(e->rhs, env));
        case ExprOp::Sub: return checked(evaluate(e->lhs, env) - evaluate(e->rhs, env));
        case ExprOp::Mul: return checked(evaluate(e->lhs, env) * evaluate(e->rhs, env));
        case ExprOp::Div: {
            const double d = evaluate(e->rhs, env);
            if (d == 0.0) throw ExprError("division by zero", 0);
            return checked(evaluate(e->lhs, env) / d);
        }
        case ExprOp::Min: return std::min(evaluate(e->lhs, env), evaluate(e->rhs, env));
        case ExprOp::Max: return std::max(evaluate(e->lhs, env), evaluate(e->rhs, env));
        case ExprOp::Pow: return checked(std::pow(evaluate(e->lhs, env), evaluate(e->rhs, env)));
    }
    throw ExprError("corrupt expression tree", 0);
}

namespace {

const char* op_symbol(ExprOp op) {
    switch (op) {
        case ExprOp::Add: return "+";
        case ExprOp::Sub: return "-";
        case ExprOp::Mul: return "*";
        case ExprOp::Div: return "/";
        default: return "?";
    }
}

const char* fn_name(ExprOp op) {
    switch (op) {
        case ExprOp::Neg: return "neg";
        case ExprOp::Abs: return "abs";
        case ExprOp::Tanh: return "tanh";
        case ExprOp::Exp: return "exp";
        case ExprOp::Sin: return "sin";
        case ExprOp::Cos: return "cos";
        case ExprOp::Min: return "min";
        case ExprOp::Max: return "max";
        case ExprOp::Pow: return "pow";
        default: return "?";
    }
}

void render(const Expr& e, std::ostringstream& os) {
    switch (e->op) {
        case ExprOp::Const: {
            os.precision(17);
            if (e->value < 0) {
                // keep literals nonnegative so reparsing yields neg(Const)
                os << "neg(" << -e->value << ")";
            } else {
                os << e->value;
            }
            return;
        }
        case ExprOp::Var: os << e->name; return;
        case ExprOp::Add:
        case ExprOp::Sub:
        case ExprOp::Mul:
        case ExprOp::Div:
            os << '(';
            render(e->lhs, os);
            os << ' ' << op_symbol(e->op) << ' ';
            render(e->rhs, os);
            os << ')';
            return;
        default:
            os << fn_name(e->op) << '(';
            render(e->lhs, os);
            if (e->rhs) {
                os << ", ";
                render(e->rhs, os);
            }
            os << ')';
            return;
    }
}

}  // namespace

std::string to_string(const Expr& e) {
    std::ostringstream os;
    render(e, os);
    return os.str();
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a->op != b->op) return false;
    switch (a->op) {
        case ExprOp::Const: return a->value == b->value;
        case ExprOp::Var: return a->name == b->name;
        default:
            if (!structurally_equal(a->lhs, b->lhs)) return false;
            if (static_cast<bool>(a->rhs) != static_cast<bool>(b->rhs)) return false;
            return !a->rhs || structurally_equal(a->rhs, b->rhs);
    }
}

bool references_any(const Expr& e, std::span<const std::string> names) {
    switch (e->op) {
        case ExprOp::Const: return false;
        case ExprOp::Var: {
            for (const auto& n : names)
                if (n == e->name) return true;
            return false;
        }
        default:
            if (e->lhs && references_any(e->lhs, names)) return true;
            return e->rhs && references_any(e->rhs, names);
    }
}

struct BoundExpr::Node {
    ExprOp op;
    double value = 0.0;
    int slot = -1;
    const Node* lhs = nullptr;
    const Node* rhs = nullptr;
};

BoundExpr::BoundExpr(const Expr& e, std::span<const std::string> slot_names) {
    // count nodes to keep pointers stable
    std::size_t count = 0;
    auto count_nodes = [&](auto&& self, const Expr& n) -> void {
        ++count;
        if (n->lhs) self(self, n->lhs);
        if (n->rhs) self(self, n->rhs);
    };
    count_nodes(count_nodes, e);
    nodes_.reserve(count);

    auto build = [&](auto&& self, const Expr& n) -> const Node* {
        Node node;
        node.op = n->op;
        node.value = n->value;
        if (n->op == ExprOp::Var) {
            for (std::size_t i = 0; i < slot_names.size(); ++i)
                if (slot_names[i] == n->name) {
                    node.slot = static_cast<int>(i);
                    break;
                }
            if (node.slot < 0) throw ExprError("unbound variable '" + n->name + "'", 0);
        }
        if (n->lhs) node.lhs = self(self, n->lhs);
        if (n->rhs) node.rhs = self(self, n->rhs);
        nodes_.push_back(node);
        return &nodes_.back();
    };
    root_ = build(build, e);
}

double BoundExpr::eval_node(const Node& n, std::span<const double> slots) const {
    switch (n.op) {
        case ExprOp::Const: return n.value;
        case ExprOp::Var: return slots[static_cast<std::size_t>(n.slot)];
        case ExprOp::Neg: return -eval_node(*n.lhs, slots);
        case ExprOp::Abs: return std::abs(eval_node(*n.lhs, slots));
        case ExprOp::Tanh: return std::tanh(eval_node(*n.lhs, slots));
        case ExprOp::Exp: return checked(std::exp(eval_node(*n.lhs, slots)));
        case ExprOp::Sin: return std::sin(eval_node(*n.lhs, slots));
        case ExprOp::Cos: return std::cos(eval_node(*n.lhs, slots));
        case ExprOp::Add: return checked(eval_node(*n.lhs, slots) + eval_node(*n.rhs, slots));
        case ExprOp::Sub: return checked(eval_node(*n.lhs, slots) - eval_node(*n.rhs, slots));
        case ExprOp::Mul: return checked(eval_node(*n.lhs, slots) * eval_node(*n.rhs, slots));
        case ExprOp::Div: {
            const double d = eval_node(*n.rhs, slots);
            if (d == 0.0) throw ExprError("division by zero", 0);
            return checked(eval_node(*n.lhs, slots) / d);
        }
        case ExprOp::Min: return std::min(eval_node(*n.lhs, slots), eval_node(*n.rhs, slots));
        case ExprOp::Max: return std::max(eval_node(*n.lhs, slots), eval_node(*n.rhs, slots));
        case ExprOp::Pow:
            return checked(std::pow(eval_node(*n.lhs, slots), eval_node(*n.rhs, slots)));
    }
    throw ExprError("corrupt expression tree", 0);
}

double BoundExpr::eval(std::span<const double> slots) const { return eval_node(*root_, slots); }

}  // namespace setgame
