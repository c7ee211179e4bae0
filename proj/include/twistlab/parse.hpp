#pragma once

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "twistlab/expr.hpp"

namespace twistlab {

// Text grammar (shared by the CLI and the table renderers):
//
//   sum     := tensor ( ('+'|'-') tensor )*
//   tensor  := product ( '(x)' product )*
//   product := unary ( ('*'|'/') unary )*
//   unary   := '-' unary | power
//   power   := atom [ '^' uint ]
//   atom    := 'exp' '(' sum ')' | 'log1p' '(' sum ')'
//            | generator | parameter | integer | '(' sum ')'
//
// `sigma` abbreviates log1p(E13) and `sigma_tilde` abbreviates
// (1/2)*log1p(2*xi*E13). Exponentials of whole tensor expressions denote
// exponentials in the tensor-product algebra.

namespace parse_detail {

struct Token {
    enum class Kind { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Tensor, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '(' && i + 2 < src.size() && src[i + 1] == 'x' && src[i + 2] == ')') {
            out.push_back({Token::Kind::Tensor, "(x)", i});
            i += 3;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::Kind::Number, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Ident, src.substr(i, j - i), i});
            i = j;
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Kind::Plus; break;
            case '-': k = Token::Kind::Minus; break;
            case '*': k = Token::Kind::Star; break;
            case '/': k = Token::Kind::Slash; break;
            case '^': k = Token::Kind::Caret; break;
            case '(': k = Token::Kind::LParen; break;
            case ')': k = Token::Kind::RParen; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

/// Intermediate parse value: a pure coefficient or a tensor expression.
using Value = std::variant<Scalar, TensorExpr>;

inline TensorExpr to_expr(const Value& v, int legs_hint = 1) {
    if (std::holds_alternative<TensorExpr>(v)) return std::get<TensorExpr>(v);
    return expr_scalar(legs_hint, std::get<Scalar>(v));
}

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    Value parse_all() {
        Value v = parse_sum();
        expect(Token::Kind::End, "end of input");
        return v;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw parse_error("expected " + what, peek().pos);
        ++pos_;
    }

    Value parse_sum() {
        Value acc = parse_tensor();
        while (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
            bool minus = take().kind == Token::Kind::Minus;
            Value rhs = parse_tensor();
            acc = v_add(acc, minus ? v_neg(rhs) : rhs, peek().pos);
        }
        return acc;
    }

    Value parse_tensor() {
        Value acc = parse_product();
        while (peek().kind == Token::Kind::Tensor) {
            take();
            Value rhs = parse_product();
            acc = Value(tensor_prod(to_expr(acc), to_expr(rhs)));
        }
        return acc;
    }

    Value parse_product() {
        Value acc = parse_unary();
        while (peek().kind == Token::Kind::Star || peek().kind == Token::Kind::Slash) {
            bool div = take().kind == Token::Kind::Slash;
            std::size_t at = peek().pos;
            Value rhs = parse_unary();
            acc = div ? v_div(acc, rhs, at) : v_mul(acc, rhs, at);
        }
        return acc;
    }

    Value parse_unary() {
        if (peek().kind == Token::Kind::Minus) {
            take();
            return v_neg(parse_unary());
        }
        return parse_power();
    }

    Value parse_power() {
        Value base = parse_atom();
        if (peek().kind == Token::Kind::Caret) {
            take();
            if (peek().kind != Token::Kind::Number)
                throw parse_error("expected an integer exponent", peek().pos);
            unsigned n = static_cast<unsigned>(std::stoul(take().text));
            if (std::holds_alternative<Scalar>(base)) return Value(std::get<Scalar>(base).pow(n));
            return Value(expr_pow(std::get<TensorExpr>(base), n));
        }
        return base;
    }

    Value parse_atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Number: {
                Token tk = take();
                return Value(Scalar(Rational(tk.text)));
            }
            case Token::Kind::LParen: {
                take();
                Value v = parse_sum();
                expect(Token::Kind::RParen, "')'");
                return v;
            }
            case Token::Kind::Ident: {
                Token tk = take();
                if (tk.text == "exp" || tk.text == "log1p") {
                    expect(Token::Kind::LParen, "'(' after " + tk.text);
                    Value inner = parse_sum();
                    expect(Token::Kind::RParen, "')'");
                    if (std::holds_alternative<Scalar>(inner))
                        throw parse_error(tk.text + " of a pure scalar is not representable", tk.pos);
                    const TensorExpr& e = std::get<TensorExpr>(inner);
                    return Value(tk.text == "exp" ? exp_of(e) : log1p_of(e));
                }
                if (tk.text == "sigma")
                    return Value(log1p_of(expr_leaf(1, 0, gens::E(1, 3))));
                if (tk.text == "sigma_tilde") {
                    TensorExpr inner = scale(expr_leaf(1, 0, gens::E(1, 3)), Scalar(2) * Scalar(Param::Xi));
                    return Value(scale(log1p_of(inner), Scalar::rational(1, 2)));
                }
                if (auto p = param_from_name(tk.text)) return Value(Scalar(*p));
                const auto& gen_table = named_generators();
                auto it = gen_table.find(tk.text);
                if (it != gen_table.end()) return Value(expr_leaf(1, 0, it->second));
                throw parse_error("unknown symbol '" + tk.text + "'", tk.pos);
            }
            default:
                throw parse_error("unexpected token '" + t.text + "'", t.pos);
        }
    }

    static Value v_neg(const Value& v) {
        if (std::holds_alternative<Scalar>(v)) return Value(-std::get<Scalar>(v));
        return Value(scale(std::get<TensorExpr>(v), Scalar(-1)));
    }
    static Value v_add(const Value& a, const Value& b, std::size_t at) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
            return Value(std::get<Scalar>(a) + std::get<Scalar>(b));
        TensorExpr ea = to_expr(a, legs_of(b)), eb = to_expr(b, legs_of(a));
        if (ea.legs != eb.legs) throw parse_error("adding expressions with different leg counts", at);
        return Value(add(ea, eb));
    }
    static Value v_mul(const Value& a, const Value& b, std::size_t at) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
            return Value(std::get<Scalar>(a) * std::get<Scalar>(b));
        if (std::holds_alternative<Scalar>(a))
            return Value(scale(std::get<TensorExpr>(b), std::get<Scalar>(a)));
        if (std::holds_alternative<Scalar>(b))
            return Value(scale(std::get<TensorExpr>(a), std::get<Scalar>(b)));
        const auto& ea = std::get<TensorExpr>(a);
        const auto& eb = std::get<TensorExpr>(b);
        if (ea.legs != eb.legs)
            throw parse_error("product of expressions with different leg counts", at);
        return Value(mul(ea, eb));
    }
    static Value v_div(const Value& a, const Value& b, std::size_t at) {
        if (!std::holds_alternative<Scalar>(b))
            throw parse_error("division by a tensor expression", at);
        const Scalar& s = std::get<Scalar>(b);
        if (s.is_zero()) throw parse_error("division by zero", at);
        if (std::holds_alternative<Scalar>(a)) return Value(std::get<Scalar>(a) / s);
        return Value(scale(std::get<TensorExpr>(a), Scalar(1) / s));
    }
    static int legs_of(const Value& v) {
        return std::holds_alternative<TensorExpr>(v) ? std::get<TensorExpr>(v).legs : 1;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace parse_detail

inline TensorExpr parse_expr(const std::string& text) {
    parse_detail::Parser p(text);
    return parse_detail::to_expr(p.parse_all());
}

inline Scalar parse_scalar(const std::string& text) {
    parse_detail::Parser p(text);
    auto v = p.parse_all();
    if (!std::holds_alternative<Scalar>(v))
        throw parse_error("expected a scalar expression, found a tensor expression", 0);
    return std::get<Scalar>(v);
}

// --- rendering -----------------------------------------------------------------

namespace render_detail {

inline std::string scalar_prefix(const Scalar& c) {
    std::string s = c.str();
    if (s.find(' ') != std::string::npos) return "(" + s + ")*";
    return s + "*";
}

std::string render(const TensorExpr& e);

inline std::string render_factor(const Factor& f) {
    switch (f.kind) {
        case Factor::Kind::Leaf:
            return f.elem.str();
        case Factor::Kind::Exp:
            return "exp(" + render(*f.arg) + ")";
        case Factor::Kind::Log1p: {
            // sugar for the jordanian primitive
            if (f.arg->terms.size() == 1 && f.arg->terms[0].coeff.is_one() &&
                f.arg->terms[0].factors.size() == 1 &&
                f.arg->terms[0].factors[0].kind == Factor::Kind::Leaf &&
                f.arg->terms[0].factors[0].elem == gens::E(1, 3))
                return "sigma";
            return "log1p(" + render(*f.arg) + ")";
        }
    }
    return "?";
}

inline std::string render_term(const Term& t, int legs) {
    std::vector<const Factor*> multi;
    std::vector<std::vector<const Factor*>> slots(static_cast<std::size_t>(legs));
    for (const auto& f : t.factors) {
        std::vector<bool> mask(static_cast<std::size_t>(legs), false);
        detail_expr::leg_support(f, mask);
        int count = 0, which = 0;
        for (int l = 0; l < legs; ++l)
            if (mask[static_cast<std::size_t>(l)]) {
                ++count;
                which = l;
            }
        if (count > 1)
            multi.push_back(&f);
        else
            slots[static_cast<std::size_t>(count == 1 ? which : 0)].push_back(&f);
    }

    std::string body;
    if (!multi.empty()) {
        if (multi.size() != t.factors.size())
            throw error("cannot render a term mixing slotted and tensor-spanning factors");
        for (const auto* f : multi) {
            if (!body.empty()) body += " * ";
            body += render_factor(*f);
        }
    } else {
        for (int l = 0; l < legs; ++l) {
            if (l > 0) body += " (x) ";
            const auto& fs = slots[static_cast<std::size_t>(l)];
            if (fs.empty()) {
                body += "1";
                continue;
            }
            std::string piece;
            for (const auto* f : fs) {
                if (!piece.empty()) piece += "*";
                // single-leg exp/log factors render through their one-leg projection
                if (f->kind == Factor::Kind::Leaf) {
                    piece += render_factor(*f);
                } else {
                    TensorExpr proj = detail_expr::project_single(*f->arg);
                    Factor pf = f->kind == Factor::Kind::Exp
                                    ? Factor::exp(std::make_shared<TensorExpr>(std::move(proj)))
                                    : Factor::log1p(std::make_shared<TensorExpr>(std::move(proj)));
                    piece += render_factor(pf);
                }
            }
            body += piece;
        }
    }

    if (t.coeff.is_one()) return body;
    if (t.coeff == Scalar(-1)) return "-" + body;
    return scalar_prefix(t.coeff) + body;
}

inline std::string render(const TensorExpr& e) {
    if (e.terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        std::string t = render_term(e.terms[i], e.legs);
        if (i == 0) {
            out = t;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace render_detail

inline std::string render(const TensorExpr& e) { return render_detail::render(e); }

}  // namespace twistlab
