#include "lpdo/parser.hpp"

#include <cctype>

#include "lpdo/error.hpp"

namespace lpdo {

namespace {

struct Token {
    enum class Type { Integer, VarX, VarY, DiffOp, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::size_t position;
    std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t k = 0;
    while (k < s.size()) {
        const char ch = s[k];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++k;
            continue;
        }
        const std::size_t start = k;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])))
                ++k;
            out.push_back({Token::Type::Integer, start, std::string(s.substr(start, k - start))});
            continue;
        }
        if (ch == 'D') {
            // Dx, Dy and the shorthand Dxx, Dxy, Dxxy, ...
            ++k;
            while (k < s.size() && (s[k] == 'x' || s[k] == 'y'))
                ++k;
            if (k == start + 1)
                throw ParseError("expected x or y after D", start);
            out.push_back({Token::Type::DiffOp, start, std::string(s.substr(start + 1, k - start - 1))});
            continue;
        }
        Token::Type t;
        switch (ch) {
        case 'x': t = Token::Type::VarX; break;
        case 'y': t = Token::Type::VarY; break;
        case '+': t = Token::Type::Plus; break;
        case '-': t = Token::Type::Minus; break;
        case '*': t = Token::Type::Star; break;
        case '/': t = Token::Type::Slash; break;
        case '^': t = Token::Type::Caret; break;
        case '(': t = Token::Type::LParen; break;
        case ')': t = Token::Type::RParen; break;
        default: throw ParseError(std::string("unexpected character '") + ch + "'", start);
        }
        ++k;
        // An identifier character right after x or y (e.g. "xy") is an
        // implicit product, which the grammar does not have.
        if ((t == Token::Type::VarX || t == Token::Type::VarY) && k < s.size() &&
            std::isalnum(static_cast<unsigned char>(s[k])))
            throw ParseError("missing '*' between factors", k);
        out.push_back({t, start, std::string(1, ch)});
    }
    out.push_back({Token::Type::End, s.size(), ""});
    return out;
}

class Parser {
  public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    OperatorExpr parse_all() {
        OperatorExpr e = expr();
        if (peek().type != Token::Type::End)
            throw ParseError("unexpected '" + peek().text + "'", peek().position);
        return e;
    }

  private:
    using K = OperatorExpr::Kind;

    const Token &peek() const { return tokens_[pos_]; }
    const Token &next() { return tokens_[pos_++]; }

    static OperatorExpr node(K kind, std::size_t at, std::vector<OperatorExpr> children = {}) {
        OperatorExpr e{kind, at, 0, std::move(children)};
        return e;
    }

    OperatorExpr expr() {
        OperatorExpr lhs = term();
        while (peek().type == Token::Type::Plus || peek().type == Token::Type::Minus) {
            const Token op = next();
            OperatorExpr rhs = term();
            lhs = node(op.type == Token::Type::Plus ? K::Add : K::Sub, op.position, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    OperatorExpr term() {
        OperatorExpr lhs = unary();
        while (peek().type == Token::Type::Star || peek().type == Token::Type::Slash) {
            const Token op = next();
            OperatorExpr rhs = unary();
            lhs = node(op.type == Token::Type::Star ? K::Mul : K::Div, op.position, {std::move(lhs), std::move(rhs)});
        }
        return lhs;
    }

    OperatorExpr unary() {
        if (peek().type == Token::Type::Minus) {
            const Token op = next();
            return node(K::Neg, op.position, {unary()});
        }
        if (peek().type == Token::Type::Plus) {
            next();
            return unary();
        }
        return power();
    }

    OperatorExpr power() {
        OperatorExpr base = primary();
        if (peek().type != Token::Type::Caret)
            return base;
        const Token caret = next();
        if (peek().type == Token::Type::Minus)
            throw ParseError("negative exponent", peek().position);
        if (peek().type != Token::Type::Integer)
            throw ParseError("expected a nonnegative integer exponent", peek().position);
        OperatorExpr e = node(K::Pow, caret.position, {std::move(base)});
        e.value = Integer(next().text);
        if (peek().type == Token::Type::Caret)
            throw ParseError("chained '^' is ambiguous; use parentheses", peek().position);
        return e;
    }

    OperatorExpr primary() {
        const Token t = next();
        switch (t.type) {
        case Token::Type::Integer: {
            OperatorExpr e = node(K::Integer, t.position);
            e.value = Integer(t.text);
            return e;
        }
        case Token::Type::VarX: return node(K::VarX, t.position);
        case Token::Type::VarY: return node(K::VarY, t.position);
        case Token::Type::DiffOp: {
            // Dxxy → Dx*Dx*Dy
            OperatorExpr e = node(t.text[0] == 'x' ? K::Dx : K::Dy, t.position);
            for (std::size_t k = 1; k < t.text.size(); ++k)
                e = node(K::Mul, t.position,
                         {std::move(e), node(t.text[k] == 'x' ? K::Dx : K::Dy, t.position + k + 1)});
            return e;
        }
        case Token::Type::LParen: {
            OperatorExpr e = expr();
            if (peek().type != Token::Type::RParen)
                throw ParseError("expected ')'", peek().position);
            next();
            return e;
        }
        case Token::Type::End: throw ParseError("unexpected end of input", t.position);
        default: throw ParseError("unexpected '" + t.text + "'", t.position);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

Lpdo power_of(const Lpdo &base, const Integer &n, std::size_t at) {
    if (!n.fits_uint_p() || n > 4096)
        throw ParseError("exponent too large", at);
    const unsigned long k = n.get_ui();
    if (base.order().value_or(0) == 0) {
        const RatFunc f = base.coefficient({0, 0});
        return Lpdo(f.pow(static_cast<int>(k)));
    }
    Lpdo r(1);
    for (unsigned long i = 0; i < k; ++i)
        r = compose(r, base);
    return r;
}

} // namespace

OperatorExpr parse(std::string_view text) { return Parser(text).parse_all(); }

Lpdo evaluate(const OperatorExpr &e) {
    using K = OperatorExpr::Kind;
    switch (e.kind) {
    case K::Integer: return Lpdo(RatFunc(Rational(e.value)));
    case K::VarX: return Lpdo(RatFunc::variable(Var::x));
    case K::VarY: return Lpdo(RatFunc::variable(Var::y));
    case K::Dx: return Lpdo::dx();
    case K::Dy: return Lpdo::dy();
    case K::Neg: return -evaluate(e.children[0]);
    case K::Add: return evaluate(e.children[0]) + evaluate(e.children[1]);
    case K::Sub: return evaluate(e.children[0]) - evaluate(e.children[1]);
    case K::Mul: return compose(evaluate(e.children[0]), evaluate(e.children[1]));
    case K::Div: {
        const Lpdo num = evaluate(e.children[0]), den = evaluate(e.children[1]);
        if (den.order().value_or(0) > 0)
            throw ParseError("Dx/Dy may not appear in a denominator", e.children[1].position);
        if (num.order().value_or(0) > 0)
            throw ParseError("operator divided by a function; write (1/f)*L instead", e.position);
        const RatFunc d = den.coefficient({0, 0});
        if (d.is_zero())
            throw DivisionByZero();
        return Lpdo(num.coefficient({0, 0}) / d);
    }
    case K::Pow: return power_of(evaluate(e.children[0]), e.value, e.position);
    }
    throw ParseError("malformed expression", e.position);
}

Lpdo parse_operator(std::string_view text) { return evaluate(parse(text)); }

RatFunc parse_function(std::string_view text) {
    const Lpdo L = parse_operator(text);
    if (L.order().value_or(0) > 0)
        throw ParseError("expected a function of x, y without Dx, Dy", 0);
    return L.coefficient({0, 0});
}

} // namespace lpdo
