#include "lpdo/invariants.hpp"

#include "lpdo/error.hpp"
#include "lpdo/normal_form.hpp"

namespace lpdo {

InvariantSet compute_invariants(const Lpdo &L) {
    const NormalForm nf = classify_normal_form(L);
    if (nf.kind != NormalForm::Kind::Form1 || !(nf.p == RatFunc(1)))
        throw PreconditionError("L in normalized form (Dx + q*Dy)*Dx*Dy + ... with p == 1");

    const RatFunc &q = nf.q;
    const RatFunc a20 = L.coefficient({2, 0}), a11 = L.coefficient({1, 1}), a02 = L.coefficient({0, 2});
    const RatFunc a10 = L.coefficient({1, 0}), a01 = L.coefficient({0, 1}), a00 = L.coefficient({0, 0});
    auto d = [](const RatFunc &f, unsigned nx, unsigned ny) { return partial(f, nx, ny); };
    const RatFunc qx = d(q, 1, 0), qy = d(q, 0, 1), qxy = d(q, 1, 1);
    const RatFunc q2 = q * q;
    const RatFunc a20x = d(a20, 1, 0), a20y = d(a20, 0, 1);
    const RatFunc half(Rational(1, 2));

    InvariantSet inv;
    inv.q = q;
    inv.I1 = RatFunc(2) * q2 * a20 - q * a11 + RatFunc(2) * a02;
    inv.I2 = -q * d(a02, 0, 1) + a02 * qy + q2 * a20x;
    inv.I3 = a10 + RatFunc(2) * qy * a20 + a20 * a20 * q - d(a11, 0, 1) + q * a20y - a11 * a20;
    inv.I4 = a01 * q2 - RatFunc(3) * qx * a02 + a02 * a02 - d(a11, 1, 0) * q2 + a11 * q * qx + q * d(a02, 1, 0) -
             a02 * a11 * q;
    inv.I5 = a00 * q + RatFunc(2) * a02 * a20x - a02 * a10 - a01 * a20 * q - half * d(a11, 1, 1) * q +
             q * qx * a20y - a11 * q * a20x + q * qy * a20x + RatFunc(2) * q2 * a20 * a20x + q * qxy * a20 +
             a20 * a11 * a02;
    return inv;
}

bool equivalence_class_equal(const InvariantSet &a, const InvariantSet &b) { return a == b; }

} // namespace lpdo
