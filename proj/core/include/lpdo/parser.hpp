#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lpdo/operator.hpp"

namespace lpdo {

/// Syntax tree of an operator expression over Dx, Dy, x, y, integers,
/// + - * / ^ and parentheses. `*` is composition and is not commutative.
struct OperatorExpr {
    enum class Kind { Integer, VarX, VarY, Dx, Dy, Neg, Add, Sub, Mul, Div, Pow };

    Kind kind;
    std::size_t position = 0;
    Integer value;          // Integer literal, or the exponent of Pow
    std::vector<OperatorExpr> children;
};

/// Precedence: ^ binds tightest, then unary minus, then * and /, then + and
/// -; binary operators associate to the left. Throws ParseError with the
/// offending position.
OperatorExpr parse(std::string_view text);

/// Evaluates a tree to an operator. `/` requires both sides to be free of
/// Dx, Dy; write (1/y)*Dx rather than Dx/y. Throws ParseError on violations
/// and DivisionByZero on a zero divisor.
Lpdo evaluate(const OperatorExpr &expr);

/// parse + evaluate.
Lpdo parse_operator(std::string_view text);

/// Parses an expression that must be free of Dx, Dy.
RatFunc parse_function(std::string_view text);

} // namespace lpdo
