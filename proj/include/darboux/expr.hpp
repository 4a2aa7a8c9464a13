#pragma once

// Scalar expressions in the two variables u, v: parsing, evaluation and
// exact symbolic differentiation. Trees are immutable and shared, so Expr
// values are cheap to copy and safe to evaluate concurrently.
//
// Grammar (standard precedence, ^ right-associative and binding tighter
// than unary minus):
//   expr   := term  (('+'|'-') term)*
//   term   := unary (('*'|'/') unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' unary)?
//   atom   := number | 'u' | 'v' | 'pi' | name '(' expr ')' | '(' expr ')'
// with name one of sin, cos, tan, exp, log, sqrt, sinh, cosh.

#include <array>
#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "darboux/errors.hpp"

namespace darboux {

enum class Var : std::uint8_t { U, V };

class Expr {
public:
    /// Parse an expression source string. Throws ParseError on syntax
    /// errors, unknown identifiers and empty input.
    static Expr parse(std::string_view text);

    static Expr constant(double value);
    static Expr variable(Var var);
    static Expr pi();

    /// Evaluate at (u, v). Throws EvalDomainError whenever a singular
    /// function is applied outside its natural domain or an intermediate
    /// result is non-finite; never returns NaN or infinity.
    double eval(double u, double v) const;

    /// Exact symbolic derivative with respect to var; the result is again
    /// an expression in the same grammar (so derivatives compose).
    Expr derivative(Var var) const;

    /// Unambiguous serialization; parse(str()) evaluates identically.
    std::string str() const;

    /// True when the tree is a plain constant; optionally yields its value.
    bool is_constant(double* value = nullptr) const;

private:
    struct Node;
    using NodeRef = std::shared_ptr<const Node>;

    explicit Expr(NodeRef node) : node_(std::move(node)) {}

    NodeRef node_;

    friend Expr operator+(const Expr&, const Expr&);
    friend Expr operator-(const Expr&, const Expr&);
    friend Expr operator*(const Expr&, const Expr&);
    friend Expr operator/(const Expr&, const Expr&);
    friend Expr operator-(const Expr&);
    friend Expr pow(const Expr&, const Expr&);
    friend Expr sin(const Expr&);
    friend Expr cos(const Expr&);
    friend Expr tan(const Expr&);
    friend Expr exp(const Expr&);
    friend Expr log(const Expr&);
    friend Expr sqrt(const Expr&);
    friend Expr sinh(const Expr&);
    friend Expr cosh(const Expr&);

    class Parser;
};

struct Expr::Node {
    enum class Kind : std::uint8_t {
        Constant, Variable, Pi, Negate, Add, Sub, Mul, Div, Pow, Call
    };
    enum class Fn : std::uint8_t { Sin, Cos, Tan, Exp, Log, Sqrt, Sinh, Cosh };

    Kind kind;
    Fn fn{Fn::Sin};
    Var var{Var::U};
    double value{0.0};
    NodeRef lhs;
    NodeRef rhs;
};

namespace detail {

inline const char* fn_name(Expr::Node::Fn fn) {
    switch (fn) {
        case Expr::Node::Fn::Sin: return "sin";
        case Expr::Node::Fn::Cos: return "cos";
        case Expr::Node::Fn::Tan: return "tan";
        case Expr::Node::Fn::Exp: return "exp";
        case Expr::Node::Fn::Log: return "log";
        case Expr::Node::Fn::Sqrt: return "sqrt";
        case Expr::Node::Fn::Sinh: return "sinh";
        case Expr::Node::Fn::Cosh: return "cosh";
    }
    return "?";
}

inline bool is_const_value(const Expr::Node& n, double v) {
    return n.kind == Expr::Node::Kind::Constant && n.value == v;
}

inline double checked(double x, const char* what) {
    if (!std::isfinite(x))
        throw EvalDomainError(std::string("non-finite result in ") + what);
    return x;
}

inline double eval_node(const Expr::Node& n, double u, double v) {
    using Kind = Expr::Node::Kind;
    using Fn = Expr::Node::Fn;
    switch (n.kind) {
        case Kind::Constant: return n.value;
        case Kind::Variable: return n.var == Var::U ? u : v;
        case Kind::Pi: return 3.14159265358979323846;
        case Kind::Negate: return -eval_node(*n.lhs, u, v);
        case Kind::Add:
            return checked(eval_node(*n.lhs, u, v) + eval_node(*n.rhs, u, v), "addition");
        case Kind::Sub:
            return checked(eval_node(*n.lhs, u, v) - eval_node(*n.rhs, u, v), "subtraction");
        case Kind::Mul:
            return checked(eval_node(*n.lhs, u, v) * eval_node(*n.rhs, u, v), "multiplication");
        case Kind::Div: {
            const double num = eval_node(*n.lhs, u, v);
            const double den = eval_node(*n.rhs, u, v);
            if (den == 0.0) throw EvalDomainError("division by zero");
            return checked(num / den, "division");
        }
        case Kind::Pow: {
            const double base = eval_node(*n.lhs, u, v);
            const double expo = eval_node(*n.rhs, u, v);
            const bool integral_expo = std::floor(expo) == expo && std::abs(expo) < 9.0e15;
            if (base < 0.0 && !integral_expo)
                throw EvalDomainError("negative base raised to a non-integer power");
            if (base == 0.0 && expo < 0.0)
                throw EvalDomainError("zero base raised to a negative power");
            return checked(std::pow(base, expo), "power");
        }
        case Kind::Call: {
            const double x = eval_node(*n.lhs, u, v);
            switch (n.fn) {
                case Fn::Sin: return std::sin(x);
                case Fn::Cos: return std::cos(x);
                case Fn::Tan: return checked(std::tan(x), "tan");
                case Fn::Exp: return checked(std::exp(x), "exp");
                case Fn::Log:
                    if (x <= 0.0) throw EvalDomainError("log of a non-positive value");
                    return checked(std::log(x), "log");
                case Fn::Sqrt:
                    if (x < 0.0) throw EvalDomainError("sqrt of a negative value");
                    return std::sqrt(x);
                case Fn::Sinh: return checked(std::sinh(x), "sinh");
                case Fn::Cosh: return checked(std::cosh(x), "cosh");
            }
            throw EvalDomainError("unknown function");
        }
    }
    throw EvalDomainError("malformed expression node");
}

// Node factories. Constant subtrees fold when the folded value is finite
// and inside the function's domain; identities with 0 and 1 collapse.
// Only evaluation-correctness is promised, not canonical form.

inline Expr::NodeRef make_const(double v) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Kind::Constant;
    n->value = v;
    return n;
}

inline Expr::NodeRef make_variable(Var var) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Kind::Variable;
    n->var = var;
    return n;
}

inline Expr::NodeRef make_pi() {
    auto n = std::make_shared<Expr::Node>();
    n->kind = Expr::Node::Kind::Pi;
    return n;
}

inline Expr::NodeRef make_binary(Expr::Node::Kind kind, Expr::NodeRef a, Expr::NodeRef b) {
    auto n = std::make_shared<Expr::Node>();
    n->kind = kind;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

inline Expr::NodeRef make_neg(Expr::NodeRef a) {
    using Kind = Expr::Node::Kind;
    if (a->kind == Kind::Constant) return make_const(-a->value);
    if (a->kind == Kind::Negate) return a->lhs;
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Negate;
    n->lhs = std::move(a);
    return n;
}

inline Expr::NodeRef make_add(Expr::NodeRef a, Expr::NodeRef b) {
    using Kind = Expr::Node::Kind;
    if (is_const_value(*a, 0.0)) return b;
    if (is_const_value(*b, 0.0)) return a;
    if (a->kind == Kind::Constant && b->kind == Kind::Constant) {
        const double v = a->value + b->value;
        if (std::isfinite(v)) return make_const(v);
    }
    return make_binary(Kind::Add, std::move(a), std::move(b));
}

inline Expr::NodeRef make_sub(Expr::NodeRef a, Expr::NodeRef b) {
    using Kind = Expr::Node::Kind;
    if (is_const_value(*b, 0.0)) return a;
    if (is_const_value(*a, 0.0)) return make_neg(std::move(b));
    if (a->kind == Kind::Constant && b->kind == Kind::Constant) {
        const double v = a->value - b->value;
        if (std::isfinite(v)) return make_const(v);
    }
    return make_binary(Kind::Sub, std::move(a), std::move(b));
}

inline Expr::NodeRef make_mul(Expr::NodeRef a, Expr::NodeRef b) {
    using Kind = Expr::Node::Kind;
    if (is_const_value(*a, 0.0) || is_const_value(*b, 0.0)) return make_const(0.0);
    if (is_const_value(*a, 1.0)) return b;
    if (is_const_value(*b, 1.0)) return a;
    if (a->kind == Kind::Constant && b->kind == Kind::Constant) {
        const double v = a->value * b->value;
        if (std::isfinite(v)) return make_const(v);
    }
    return make_binary(Kind::Mul, std::move(a), std::move(b));
}

inline Expr::NodeRef make_div(Expr::NodeRef a, Expr::NodeRef b) {
    using Kind = Expr::Node::Kind;
    if (is_const_value(*a, 0.0)) return make_const(0.0);
    if (is_const_value(*b, 1.0)) return a;
    if (a->kind == Kind::Constant && b->kind == Kind::Constant && b->value != 0.0) {
        const double v = a->value / b->value;
        if (std::isfinite(v)) return make_const(v);
    }
    return make_binary(Kind::Div, std::move(a), std::move(b));
}

inline Expr::NodeRef make_pow(Expr::NodeRef a, Expr::NodeRef b) {
    using Kind = Expr::Node::Kind;
    if (is_const_value(*b, 1.0)) return a;
    if (is_const_value(*b, 0.0)) return make_const(1.0);
    if (a->kind == Kind::Constant && b->kind == Kind::Constant) {
        const double base = a->value;
        const double expo = b->value;
        const bool integral_expo = std::floor(expo) == expo && std::abs(expo) < 9.0e15;
        if ((base > 0.0 || (integral_expo && (base != 0.0 || expo > 0.0)))) {
            const double v = std::pow(base, expo);
            if (std::isfinite(v)) return make_const(v);
        }
    }
    return make_binary(Kind::Pow, std::move(a), std::move(b));
}

inline Expr::NodeRef make_call(Expr::Node::Fn fn, Expr::NodeRef a) {
    using Kind = Expr::Node::Kind;
    using Fn = Expr::Node::Fn;
    if (a->kind == Kind::Constant) {
        const double x = a->value;
        bool ok = true;
        double v = 0.0;
        switch (fn) {
            case Fn::Sin: v = std::sin(x); break;
            case Fn::Cos: v = std::cos(x); break;
            case Fn::Tan: v = std::tan(x); break;
            case Fn::Exp: v = std::exp(x); break;
            case Fn::Log: ok = x > 0.0; v = ok ? std::log(x) : 0.0; break;
            case Fn::Sqrt: ok = x >= 0.0; v = ok ? std::sqrt(x) : 0.0; break;
            case Fn::Sinh: v = std::sinh(x); break;
            case Fn::Cosh: v = std::cosh(x); break;
        }
        if (ok && std::isfinite(v)) return make_const(v);
    }
    auto n = std::make_shared<Expr::Node>();
    n->kind = Kind::Call;
    n->fn = fn;
    n->lhs = std::move(a);
    return n;
}

inline Expr::NodeRef derive_node(const Expr::NodeRef& e, Var var);

inline Expr::NodeRef derive_call(const Expr::NodeRef& e, Var var) {
    using Fn = Expr::Node::Fn;
    const Expr::NodeRef& arg = e->lhs;
    Expr::NodeRef darg = derive_node(arg, var);
    switch (e->fn) {
        case Fn::Sin: return make_mul(make_call(Fn::Cos, arg), std::move(darg));
        case Fn::Cos: return make_neg(make_mul(make_call(Fn::Sin, arg), std::move(darg)));
        case Fn::Tan:
            return make_div(std::move(darg),
                            make_pow(make_call(Fn::Cos, arg), make_const(2.0)));
        case Fn::Exp: return make_mul(make_call(Fn::Exp, arg), std::move(darg));
        case Fn::Log: return make_div(std::move(darg), arg);
        case Fn::Sqrt:
            return make_div(std::move(darg),
                            make_mul(make_const(2.0), make_call(Fn::Sqrt, arg)));
        case Fn::Sinh: return make_mul(make_call(Fn::Cosh, arg), std::move(darg));
        case Fn::Cosh: return make_mul(make_call(Fn::Sinh, arg), std::move(darg));
    }
    return make_const(0.0);
}

inline Expr::NodeRef derive_node(const Expr::NodeRef& e, Var var) {
    using Kind = Expr::Node::Kind;
    switch (e->kind) {
        case Kind::Constant:
        case Kind::Pi:
            return make_const(0.0);
        case Kind::Variable:
            return make_const(e->var == var ? 1.0 : 0.0);
        case Kind::Negate:
            return make_neg(derive_node(e->lhs, var));
        case Kind::Add:
            return make_add(derive_node(e->lhs, var), derive_node(e->rhs, var));
        case Kind::Sub:
            return make_sub(derive_node(e->lhs, var), derive_node(e->rhs, var));
        case Kind::Mul:
            return make_add(make_mul(derive_node(e->lhs, var), e->rhs),
                            make_mul(e->lhs, derive_node(e->rhs, var)));
        case Kind::Div:
            return make_div(make_sub(make_mul(derive_node(e->lhs, var), e->rhs),
                                     make_mul(e->lhs, derive_node(e->rhs, var))),
                            make_pow(e->rhs, make_const(2.0)));
        case Kind::Pow: {
            const Expr::NodeRef& base = e->lhs;
            const Expr::NodeRef& expo = e->rhs;
            if (expo->kind == Kind::Constant) {
                // d(f^c) = c f^(c-1) f', valid for negative bases as well
                const double c = expo->value;
                return make_mul(make_const(c),
                                make_mul(make_pow(base, make_const(c - 1.0)),
                                         derive_node(base, var)));
            }
            // d(f^g) = f^g (g' log f + g f'/f)
            Expr::NodeRef term1 = make_mul(derive_node(expo, var),
                                           make_call(Expr::Node::Fn::Log, base));
            Expr::NodeRef term2 = make_mul(expo, make_div(derive_node(base, var), base));
            return make_mul(make_pow(base, expo), make_add(std::move(term1), std::move(term2)));
        }
        case Kind::Call:
            return derive_call(e, var);
    }
    return make_const(0.0);
}

inline void print_node(const Expr::Node& n, std::string& out) {
    using Kind = Expr::Node::Kind;
    switch (n.kind) {
        case Kind::Constant: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            if (n.value < 0.0) {
                out += '(';
                out += buf;
                out += ')';
            } else {
                out += buf;
            }
            return;
        }
        case Kind::Variable: out += (n.var == Var::U ? 'u' : 'v'); return;
        case Kind::Pi: out += "pi"; return;
        case Kind::Negate:
            out += "(-";
            print_node(*n.lhs, out);
            out += ')';
            return;
        case Kind::Add:
        case Kind::Sub:
        case Kind::Mul:
        case Kind::Div:
        case Kind::Pow: {
            const char op = n.kind == Kind::Add ? '+'
                          : n.kind == Kind::Sub ? '-'
                          : n.kind == Kind::Mul ? '*'
                          : n.kind == Kind::Div ? '/'
                                                : '^';
            out += '(';
            print_node(*n.lhs, out);
            out += op;
            print_node(*n.rhs, out);
            out += ')';
            return;
        }
        case Kind::Call:
            out += fn_name(n.fn);
            out += '(';
            print_node(*n.lhs, out);
            out += ')';
            return;
    }
}

} // namespace detail

class Expr::Parser {
public:
    static NodeRef run(std::string_view src) {
        Parser p(src);
        p.advance();
        if (p.kind_ == TokKind::End)
            throw ParseError("empty expression", 0);
        NodeRef e = p.parse_expr();
        if (p.kind_ != TokKind::End)
            throw ParseError("unexpected trailing input", p.offset_);
        return e;
    }

private:
    enum class TokKind : std::uint8_t {
        Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End
    };

    explicit Parser(std::string_view src) : src_(src) {}

    std::string_view src_;
    std::size_t pos_ = 0;

    TokKind kind_ = TokKind::End;
    double number_ = 0.0;
    std::string_view ident_;
    std::size_t offset_ = 0;

    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        offset_ = pos_;
        if (pos_ >= src_.size()) {
            kind_ = TokKind::End;
            return;
        }
        const char c = src_[pos_];
        switch (c) {
            case '+': kind_ = TokKind::Plus; ++pos_; return;
            case '-': kind_ = TokKind::Minus; ++pos_; return;
            case '*': kind_ = TokKind::Star; ++pos_; return;
            case '/': kind_ = TokKind::Slash; ++pos_; return;
            case '^': kind_ = TokKind::Caret; ++pos_; return;
            case '(': kind_ = TokKind::LParen; ++pos_; return;
            case ')': kind_ = TokKind::RParen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const char* begin = src_.data() + pos_;
            const char* end = src_.data() + src_.size();
            double value = 0.0;
            auto [ptr, ec] = std::from_chars(begin, end, value, std::chars_format::general);
            if (ec != std::errc() || ptr == begin)
                throw ParseError("malformed number literal", pos_);
            pos_ += static_cast<std::size_t>(ptr - begin);
            kind_ = TokKind::Number;
            number_ = value;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            kind_ = TokKind::Ident;
            ident_ = src_.substr(start, pos_ - start);
            return;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    NodeRef parse_expr() {
        NodeRef e = parse_term();
        while (kind_ == TokKind::Plus || kind_ == TokKind::Minus) {
            const bool add = kind_ == TokKind::Plus;
            advance();
            NodeRef rhs = parse_term();
            e = add ? detail::make_add(std::move(e), std::move(rhs))
                    : detail::make_sub(std::move(e), std::move(rhs));
        }
        return e;
    }

    NodeRef parse_term() {
        NodeRef e = parse_unary();
        while (kind_ == TokKind::Star || kind_ == TokKind::Slash) {
            const bool mul = kind_ == TokKind::Star;
            advance();
            NodeRef rhs = parse_unary();
            e = mul ? detail::make_mul(std::move(e), std::move(rhs))
                    : detail::make_div(std::move(e), std::move(rhs));
        }
        return e;
    }

    NodeRef parse_unary() {
        if (kind_ == TokKind::Minus) {
            advance();
            return detail::make_neg(parse_unary());
        }
        return parse_power();
    }

    NodeRef parse_power() {
        NodeRef base = parse_atom();
        if (kind_ == TokKind::Caret) {
            advance();
            // right-associative; the exponent may carry a unary minus
            return detail::make_pow(std::move(base), parse_unary());
        }
        return base;
    }

    NodeRef parse_atom() {
        switch (kind_) {
            case TokKind::Number: {
                const double v = number_;
                advance();
                return detail::make_const(v);
            }
            case TokKind::Ident: {
                const std::string_view name = ident_;
                const std::size_t name_offset = offset_;
                advance();
                if (name == "u") return detail::make_variable(Var::U);
                if (name == "v") return detail::make_variable(Var::V);
                if (name == "pi") return detail::make_pi();
                static constexpr std::array<std::pair<std::string_view, Node::Fn>, 8> fns{{
                    {"sin", Node::Fn::Sin}, {"cos", Node::Fn::Cos}, {"tan", Node::Fn::Tan},
                    {"exp", Node::Fn::Exp}, {"log", Node::Fn::Log}, {"sqrt", Node::Fn::Sqrt},
                    {"sinh", Node::Fn::Sinh}, {"cosh", Node::Fn::Cosh},
                }};
                for (const auto& [fname, fn] : fns) {
                    if (name == fname) {
                        expect(TokKind::LParen, "expected '(' after function name");
                        advance();
                        NodeRef arg = parse_expr();
                        expect(TokKind::RParen, "expected ')'");
                        advance();
                        return detail::make_call(fn, std::move(arg));
                    }
                }
                if (kind_ == TokKind::LParen)
                    throw ParseError("unknown function '" + std::string(name) + "'", name_offset);
                throw ParseError("unknown identifier '" + std::string(name) + "'", name_offset);
            }
            case TokKind::LParen: {
                advance();
                NodeRef e = parse_expr();
                expect(TokKind::RParen, "expected ')'");
                advance();
                return e;
            }
            default:
                throw ParseError("expected an expression", offset_);
        }
    }

    void expect(TokKind k, const char* message) const {
        if (kind_ != k) throw ParseError(message, offset_);
    }
};

inline Expr Expr::parse(std::string_view text) { return Expr(Parser::run(text)); }

inline Expr Expr::constant(double value) {
    if (!std::isfinite(value)) throw EvalDomainError("non-finite constant");
    return Expr(detail::make_const(value));
}

inline Expr Expr::variable(Var var) { return Expr(detail::make_variable(var)); }

inline Expr Expr::pi() { return Expr(detail::make_pi()); }

inline double Expr::eval(double u, double v) const { return detail::eval_node(*node_, u, v); }

inline Expr Expr::derivative(Var var) const { return Expr(detail::derive_node(node_, var)); }

inline std::string Expr::str() const {
    std::string out;
    detail::print_node(*node_, out);
    return out;
}

inline bool Expr::is_constant(double* value) const {
    if (node_->kind != Node::Kind::Constant) return false;
    if (value) *value = node_->value;
    return true;
}

inline Expr operator+(const Expr& a, const Expr& b) {
    return Expr(detail::make_add(a.node_, b.node_));
}
inline Expr operator-(const Expr& a, const Expr& b) {
    return Expr(detail::make_sub(a.node_, b.node_));
}
inline Expr operator*(const Expr& a, const Expr& b) {
    return Expr(detail::make_mul(a.node_, b.node_));
}
inline Expr operator/(const Expr& a, const Expr& b) {
    return Expr(detail::make_div(a.node_, b.node_));
}
inline Expr operator-(const Expr& a) { return Expr(detail::make_neg(a.node_)); }

inline Expr operator+(const Expr& a, double b) { return a + Expr::constant(b); }
inline Expr operator+(double a, const Expr& b) { return Expr::constant(a) + b; }
inline Expr operator-(const Expr& a, double b) { return a - Expr::constant(b); }
inline Expr operator-(double a, const Expr& b) { return Expr::constant(a) - b; }
inline Expr operator*(const Expr& a, double b) { return a * Expr::constant(b); }
inline Expr operator*(double a, const Expr& b) { return Expr::constant(a) * b; }
inline Expr operator/(const Expr& a, double b) { return a / Expr::constant(b); }
inline Expr operator/(double a, const Expr& b) { return Expr::constant(a) / b; }

inline Expr pow(const Expr& a, const Expr& b) {
    return Expr(detail::make_pow(a.node_, b.node_));
}
inline Expr pow(const Expr& a, double b) { return pow(a, Expr::constant(b)); }
inline Expr sin(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Sin, a.node_)); }
inline Expr cos(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Cos, a.node_)); }
inline Expr tan(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Tan, a.node_)); }
inline Expr exp(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Exp, a.node_)); }
inline Expr log(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Log, a.node_)); }
inline Expr sqrt(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Sqrt, a.node_)); }
inline Expr sinh(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Sinh, a.node_)); }
inline Expr cosh(const Expr& a) { return Expr(detail::make_call(Expr::Node::Fn::Cosh, a.node_)); }

} // namespace darboux
