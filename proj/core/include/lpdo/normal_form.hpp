#pragma once

#include <string>

#include "lpdo/operator.hpp"

namespace lpdo {

/// Which normalized third-order shape the principal symbol matches:
///   Form1  XY(pX + qY), p, q ≠ 0   (three distinct linear factors)
///   Form2  X²Y, or XY² when swapped
///   Form3  X³, or Y³ when swapped
///   Other  anything else (e.g. X²(X + xY))
struct NormalForm {
    enum class Kind { Form1, Form2, Form3, Other };

    Kind kind = Kind::Other;
    RatFunc p;
    RatFunc q;
    bool swapped = false;
    /// Human-readable factor pattern of the symbol, e.g. "X*Y*(X + Y)" or
    /// "X^2*(X + x*Y)" for the Landau operator.
    std::string pattern;
    /// The symbol has a repeated linear factor that could be identified.
    bool repeated_factor = false;
};

std::string to_string(NormalForm::Kind kind);

/// Throws PreconditionError unless order(L) == 3.
NormalForm classify_normal_form(const Lpdo &L);

/// (1/p)·L for a Form1 operator, which has p = 1 and the same right factors.
Lpdo normalize_form1(const Lpdo &L);

} // namespace lpdo
