#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "lpdo/rational_function.hpp"

namespace lpdo {

/// Element of K[Dx, Dy]: L = sum a_ij Dx^i Dy^j with a_ij in Q(x,y).
///
/// Terms are kept in grlex-descending order of (i, j) and zero coefficients
/// are never stored, so equality of maps is equality of operators.
class Lpdo {
  public:
    using Terms = std::map<Exponent, RatFunc, GrlexDescending>;

    Lpdo() = default;
    /// Order-0 operator (multiplication by f).
    Lpdo(const RatFunc &f);
    Lpdo(long c) : Lpdo(RatFunc(c)) {}
    Lpdo(std::initializer_list<std::pair<const Exponent, RatFunc>> terms);

    static Lpdo dx() { return Lpdo{{{1, 0}, RatFunc(1)}}; }
    static Lpdo dy() { return Lpdo{{{0, 1}, RatFunc(1)}}; }
    static Lpdo term(const RatFunc &c, Exponent e);

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Highest i+j over stored terms; nullopt for the zero operator.
    std::optional<unsigned> order() const noexcept;
    /// Coefficient a_ij (zero when absent).
    RatFunc coefficient(Exponent e) const;
    /// Homogeneous component of total degree k as an operator.
    Lpdo layer(unsigned k) const;

    Lpdo &operator+=(const Lpdo &o);
    Lpdo &operator-=(const Lpdo &o);
    friend Lpdo operator+(Lpdo a, const Lpdo &b) { return a += b; }
    friend Lpdo operator-(Lpdo a, const Lpdo &b) { return a -= b; }
    Lpdo operator-() const;
    /// Left multiplication by the order-0 operator f.
    friend Lpdo operator*(const RatFunc &f, const Lpdo &L);
    friend bool operator==(const Lpdo &a, const Lpdo &b) { return a.terms_ == b.terms_; }

    /// "Dx^3 + x*Dx^2*Dy + (2*x + 2)*Dx*Dy + ..." in grlex order; parses back.
    std::string to_string() const;

  private:
    void add_term(const Exponent &e, const RatFunc &c);
    Terms terms_;
};

/// Non-commutative product A∘B, expanding Dx^i Dy^j b by Leibniz' rule.
Lpdo compose(const Lpdo &a, const Lpdo &b);

/// Left-to-right product F1∘F2∘…∘Fk; the empty product is 1.
template <class Range> Lpdo compose_all(const Range &factors) {
    Lpdo acc(1);
    for (const auto &f : factors)
        acc = compose(acc, f);
    return acc;
}

/// g⁻¹∘L∘g. Throws PreconditionError when g = 0.
Lpdo gauge(const Lpdo &L, const RatFunc &g);

/// Relabels x ↔ y and Dx ↔ Dy. An involution.
Lpdo swap_xy(const Lpdo &L);

} // namespace lpdo
