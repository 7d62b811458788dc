#pragma once

#include "lpdo/operator.hpp"

namespace lpdo {

struct DivisionResult {
    Lpdo quotient;
    Lpdo remainder;

    /// The divisor is an exact factor on the requested side.
    bool exact() const noexcept { return remainder.is_zero(); }
};

/// L = Q∘F + R for a first-order F.
///
/// Q is built layer by layer from the top degree: the current top
/// homogeneous part is divided by Sym(F) as a binary form (lex X > Y) and
/// whatever is not divisible moves to R. R = 0 exactly when F is a right
/// factor of L. Throws PreconditionError unless order(F) == 1.
DivisionResult right_divide(const Lpdo &L, const Lpdo &F);

/// L = F∘Q + R for a first-order F; same layer construction as right_divide.
DivisionResult left_divide(const Lpdo &L, const Lpdo &F);

/// right_divide for a divisor of any positive order. Since {Sym(F)} is a
/// Gröbner basis of the principal ideal it generates, R = 0 still decides
/// right divisibility.
DivisionResult right_divide_layered(const Lpdo &L, const Lpdo &F);

/// left_divide for a divisor of any positive order.
DivisionResult left_divide_layered(const Lpdo &L, const Lpdo &F);

} // namespace lpdo
