#include "lpdo/division.hpp"

#include "lpdo/error.hpp"
#include "lpdo/symbol.hpp"

namespace lpdo {

namespace {

enum class Side { left, right };

DivisionResult divide(const Lpdo &L, const Lpdo &F, Side side) {
    const auto f_order = F.order();
    if (!f_order || *f_order == 0)
        throw PreconditionError("order(F) >= 1");
    const SymbolForm s = symbol(F);

    DivisionResult out;
    Lpdo current = L;
    while (!current.is_zero()) {
        const unsigned d = *current.order();
        if (d < *f_order) {
            out.remainder += current;
            break;
        }
        const FormDivision fd = divide_forms(symbol(current), s);
        const Lpdo q = fd.quotient.to_operator();
        const Lpdo r = fd.remainder.to_operator();
        out.quotient += q;
        out.remainder += r;
        current -= r;
        current -= side == Side::right ? compose(q, F) : compose(F, q);
    }
    return out;
}

void require_first_order(const Lpdo &F) {
    if (F.order() != 1u)
        throw PreconditionError("order(F) == 1");
}

} // namespace

DivisionResult right_divide(const Lpdo &L, const Lpdo &F) {
    require_first_order(F);
    return divide(L, F, Side::right);
}

DivisionResult left_divide(const Lpdo &L, const Lpdo &F) {
    require_first_order(F);
    return divide(L, F, Side::left);
}

DivisionResult right_divide_layered(const Lpdo &L, const Lpdo &F) { return divide(L, F, Side::right); }

DivisionResult left_divide_layered(const Lpdo &L, const Lpdo &F) { return divide(L, F, Side::left); }

} // namespace lpdo
