#pragma once

#include <functional>
#include <map>
#include <string>

#include "lpdo/operator.hpp"

namespace lpdo {

/// Homogeneous form sum c_i X^i Y^{d-i} over K in formal commuting X, Y.
class SymbolForm {
  public:
    /// X-exponent → coefficient, highest X power first.
    using Coeffs = std::map<unsigned, RatFunc, std::greater<>>;

    SymbolForm() = default;
    SymbolForm(unsigned degree, Coeffs coeffs);

    unsigned degree() const noexcept { return degree_; }
    const Coeffs &coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of X^i Y^j; requires i + j == degree().
    RatFunc coefficient(unsigned i, unsigned j) const;

    friend SymbolForm operator*(const SymbolForm &a, const SymbolForm &b);
    friend bool operator==(const SymbolForm &a, const SymbolForm &b) = default;

    /// The homogeneous operator sum c_i Dx^i Dy^{d-i}.
    Lpdo to_operator() const;
    std::string to_string() const;

  private:
    unsigned degree_ = 0;
    Coeffs coeffs_;
};

/// cx·X + cy·Y with (cx, cy) ≠ (0, 0).
struct LinearForm {
    RatFunc cx;
    RatFunc cy;

    /// Throws PreconditionError when both coefficients vanish.
    LinearForm(RatFunc cx_, RatFunc cy_);
    static LinearForm X() { return {RatFunc(1), RatFunc(0)}; }
    static LinearForm Y() { return {RatFunc(0), RatFunc(1)}; }
    /// The symbol of a first-order operator.
    static LinearForm of(const Lpdo &first_order);

    SymbolForm to_symbol() const;
    /// cx·Dx + cy·Dy.
    Lpdo to_operator() const;
    friend bool operator==(const LinearForm &, const LinearForm &) = default;
};

/// cx1·cy2 − cy1·cx2 == 0, i.e. the forms differ by a factor in K.
bool proportional(const LinearForm &a, const LinearForm &b);

/// Principal symbol. Throws PreconditionError for the zero operator.
SymbolForm symbol(const Lpdo &L);

struct FormDivision {
    SymbolForm quotient;
    SymbolForm remainder;
};

/// Division of binary forms with remainder under lex X > Y:
/// t = quotient·s + remainder, no remainder term divisible by lead(s).
FormDivision divide_forms(const SymbolForm &t, const SymbolForm &s);

} // namespace lpdo
