#pragma once

#include "lpdo/operator.hpp"

namespace lpdo {

/// Generating gauge invariants (q, I1, …, I5) of an operator
///   (Dx + q Dy) Dx Dy + sum_{i+j<=2} a_ij Dx^i Dy^j.
/// Two such operators are gauge equivalent iff all six entries agree.
struct InvariantSet {
    RatFunc q;
    RatFunc I1;
    RatFunc I2;
    RatFunc I3;
    RatFunc I4;
    RatFunc I5;

    friend bool operator==(const InvariantSet &, const InvariantSet &) = default;
};

/// Requires L in normalized form XY(X + qY), i.e. a_21 = 1 and a_30 = a_03 = 0;
/// throws PreconditionError otherwise (call normalize_form1 first).
InvariantSet compute_invariants(const Lpdo &L);

/// Componentwise exact equality.
bool equivalence_class_equal(const InvariantSet &a, const InvariantSet &b);

} // namespace lpdo
