#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setgame/errors.hpp"

namespace setgame {

// Raised on tokenize/parse/evaluate failures; position is a 1-based
// character offset into the source text (0 when not applicable).
struct ExprError : SpecError {
    ExprError(const std::string& msg, std::size_t position)
        : SpecError(position > 0 ? msg + " (at position " + std::to_string(position) + ")" : msg),
          pos(position) {}
    std::size_t pos = 0;
};

enum class TokenKind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
    TokenKind kind;
    double number = 0.0;
    std::string text;
    std::size_t pos = 0;  // 1-based position of the first character
};

std::vector<Token> tokenize(std::string_view text);

enum class ExprOp { Const, Var, Neg, Abs, Tanh, Exp, Sin, Cos, Add, Sub, Mul, Div, Min, Max, Pow };

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprOp op;
    double value = 0.0;    // Const
    std::string name;      // Var
    Expr lhs, rhs;         // unary ops use lhs only
};

Expr parse(const std::vector<Token>& tokens);
Expr parse_expression(std::string_view text);  // tokenize + parse

// Variable bindings for evaluation; names not present are unbound.
using Env = std::map<std::string, double, std::less<>>;

double evaluate(const Expr& e, const Env& env);

// Fully parenthesized rendering; reparses to a structurally equal tree.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

// True if the expression references any variable in `names`.
bool references_any(const Expr& e, std::span<const std::string> names);

// Slot-compiled expression for tight evaluation loops: variable names are
// resolved against a fixed layout once, evaluation then reads a flat array.
class BoundExpr {
public:
    BoundExpr() = default;
    BoundExpr(const Expr& e, std::span<const std::string> slot_names);
    double eval(std::span<const double> slots) const;
    bool valid() const { return root_ != nullptr; }

private:
    struct Node;
    double eval_node(const Node& n, std::span<const double> slots) const;
    std::vector<Node> nodes_;
    const Node* root_ = nullptr;
};

}  // namespace setgame
