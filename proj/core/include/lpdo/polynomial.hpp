#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace lpdo {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Var { x, y };

/// Exponent pair of a monomial x^i y^j (or Dx^i Dy^j for operators).
struct Exponent {
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    std::uint32_t total() const noexcept { return i + j; }
    friend bool operator==(const Exponent &, const Exponent &) = default;
};

/// Graded lexicographic order with x > y, largest first. Maps keyed with it
/// iterate from the leading term down.
struct GrlexDescending {
    bool operator()(const Exponent &a, const Exponent &b) const noexcept {
        if (a.total() != b.total())
            return a.total() > b.total();
        return a.i > b.i;
    }
};

/// Sparse polynomial in Q[x,y]. Zero coefficients are never stored.
class BivarPoly {
  public:
    using Terms = std::map<Exponent, Rational, GrlexDescending>;

    BivarPoly() = default;
    BivarPoly(const Rational &c);
    BivarPoly(long c) : BivarPoly(Rational(c)) {}

    static BivarPoly variable(Var v);
    static BivarPoly monomial(const Rational &c, Exponent e);

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Constant term value; meaningful when is_constant().
    Rational constant_value() const;

    /// Leading exponent and coefficient under grlex; requires !is_zero().
    const Exponent &leading_exponent() const { return terms_.begin()->first; }
    const Rational &leading_coefficient() const { return terms_.begin()->second; }

    int total_degree() const noexcept;
    int degree(Var v) const noexcept;
    Rational coefficient(Exponent e) const;

    BivarPoly &operator+=(const BivarPoly &o);
    BivarPoly &operator-=(const BivarPoly &o);
    BivarPoly &operator*=(const Rational &c);
    friend BivarPoly operator+(BivarPoly a, const BivarPoly &b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly &b) { return a -= b; }
    friend BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
    friend BivarPoly operator*(BivarPoly a, const Rational &c) { return a *= c; }
    BivarPoly operator-() const;
    friend bool operator==(const BivarPoly &a, const BivarPoly &b) { return a.terms_ == b.terms_; }

    BivarPoly pow(unsigned n) const;
    BivarPoly derivative(Var v) const;
    BivarPoly swapped_xy() const;

    /// Exact quotient a / b if b divides a in Q[x,y], nullopt otherwise.
    static std::optional<BivarPoly> divide_exact(const BivarPoly &a, const BivarPoly &b);

    /// Rational multiple with integer coefficients whose gcd is 1 and whose
    /// leading coefficient is positive. Zero maps to zero.
    BivarPoly primitive() const;
    /// lcm of coefficient denominators and gcd of coefficient numerators.
    Integer denominator_lcm() const;
    Integer numerator_gcd() const;

    /// "x^2*y - 3*x + 1/2"; grlex descending. Zero prints as "0".
    std::string to_string() const;

  private:
    void add_term(const Exponent &e, const Rational &c);
    Terms terms_;
};

/// gcd in Q[x,y], normalized by primitive(). gcd(0, 0) = 0.
BivarPoly gcd(const BivarPoly &a, const BivarPoly &b);

} // namespace lpdo
