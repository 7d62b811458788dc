#pragma once

#include <string>

#include "lpdo/polynomial.hpp"

namespace lpdo {

/// Element of the coefficient field K = Q(x,y).
///
/// Always stored in canonical form: numerator and denominator have integer
/// coefficients with no common polynomial factor and no common integer
/// content, and the denominator's grlex leading coefficient is positive.
/// Structural equality therefore decides field equality.
class RatFunc {
  public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational &c) : num_(c), den_(1) { rescale(); }
    RatFunc(long c) : RatFunc(Rational(c)) {}
    RatFunc(const BivarPoly &p) : num_(p), den_(1) { rescale(); }
    /// Throws DivisionByZero when den is zero.
    RatFunc(const BivarPoly &num, const BivarPoly &den);

    static RatFunc variable(Var v) { return RatFunc(BivarPoly::variable(v)); }

    const BivarPoly &num() const noexcept { return num_; }
    const BivarPoly &den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }
    /// Value of a constant element; requires is_constant().
    Rational constant_value() const;

    RatFunc &operator+=(const RatFunc &o);
    RatFunc &operator-=(const RatFunc &o);
    RatFunc &operator*=(const RatFunc &o);
    RatFunc &operator/=(const RatFunc &o);
    friend RatFunc operator+(RatFunc a, const RatFunc &b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc &b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc &b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc &b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc &a, const RatFunc &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const;
    RatFunc pow(int n) const;
    RatFunc swapped_xy() const;

    /// Canonical text: "num" when the denominator is 1, else "num/den" with
    /// parentheses around multi-term or non-unit parts. Parses back exactly.
    std::string to_string() const;

  private:
    struct Raw {};
    RatFunc(BivarPoly num, BivarPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    /// Sign and integer scaling only; num and den must already be coprime.
    void rescale();

    BivarPoly num_;
    BivarPoly den_;
};

/// Partial derivative by the quotient rule.
RatFunc partial(const RatFunc &f, Var v);

/// Repeated partial derivative d^{nx}/dx^{nx} d^{ny}/dy^{ny}.
RatFunc partial(const RatFunc &f, unsigned nx, unsigned ny);

inline bool is_zero(const RatFunc &f) { return f.is_zero(); }

} // namespace lpdo
