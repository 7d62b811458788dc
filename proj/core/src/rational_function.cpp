#include "lpdo/rational_function.hpp"

#include "lpdo/error.hpp"

namespace lpdo {

RatFunc::RatFunc(const BivarPoly &num, const BivarPoly &den) : num_(num), den_(den) {
    if (den_.is_zero())
        throw DivisionByZero();
    normalize();
}

namespace {

BivarPoly exact(const BivarPoly &a, const BivarPoly &b) { return *BivarPoly::divide_exact(a, b); }

} // namespace

void RatFunc::normalize() {
    if (!num_.is_zero() && !den_.is_constant() && !num_.is_constant()) {
        const BivarPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = exact(num_, g);
            den_ = exact(den_, g);
        }
    }
    rescale();
}

void RatFunc::rescale() {
    if (num_.is_zero()) {
        den_ = BivarPoly(1);
        return;
    }
    // Clear denominators, then strip the joint integer content.
    Integer l;
    mpz_lcm(l.get_mpz_t(), num_.denominator_lcm().get_mpz_t(), den_.denominator_lcm().get_mpz_t());
    Rational scale(l);
    num_ *= scale;
    den_ *= scale;
    Integer c;
    mpz_gcd(c.get_mpz_t(), num_.numerator_gcd().get_mpz_t(), den_.numerator_gcd().get_mpz_t());
    Rational shrink(1, c);
    if (den_.leading_coefficient() < 0)
        shrink = -shrink;
    num_ *= shrink;
    den_ *= shrink;
}

Rational RatFunc::constant_value() const {
    return num_.constant_value() / den_.constant_value();
}

// Both operands are reduced, so any common factor of the sum's numerator
// and denominator divides g = gcd(den, o.den).
RatFunc &RatFunc::operator+=(const RatFunc &o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        rescale();
        return *this;
    }
    const BivarPoly g = gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        rescale();
        return *this;
    }
    const BivarPoly a = exact(den_, g), b = exact(o.den_, g);
    num_ = num_ * b + o.num_ * a;
    den_ = a * o.den_;
    if (!num_.is_zero()) {
        const BivarPoly h = gcd(num_, g);
        if (!h.is_constant()) {
            num_ = exact(num_, h);
            den_ = exact(den_, h);
        }
    }
    rescale();
    return *this;
}

RatFunc &RatFunc::operator-=(const RatFunc &o) { return *this += -o; }

// Cross-cancel: (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1)) with
// g1 = gcd(a, d) and g2 = gcd(c, b); the result is already reduced.
RatFunc &RatFunc::operator*=(const RatFunc &o) {
    if (is_zero() || o.is_zero()) {
        num_ = BivarPoly();
        rescale();
        return *this;
    }
    BivarPoly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!a.is_constant() && !d.is_constant()) {
        const BivarPoly g1 = gcd(a, d);
        if (!g1.is_constant()) {
            a = exact(a, g1);
            d = exact(d, g1);
        }
    }
    if (!c.is_constant() && !b.is_constant()) {
        const BivarPoly g2 = gcd(c, b);
        if (!g2.is_constant()) {
            c = exact(c, g2);
            b = exact(b, g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    rescale();
    return *this;
}

RatFunc &RatFunc::operator/=(const RatFunc &o) {
    if (o.is_zero())
        throw DivisionByZero();
    return *this *= o.inverse();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Raw{}); }

RatFunc RatFunc::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    RatFunc r(den_, num_, Raw{});
    r.rescale();
    return r;
}

RatFunc RatFunc::pow(int n) const {
    if (n < 0)
        return inverse().pow(-n);
    RatFunc r(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)), Raw{});
    r.rescale();
    return r;
}

RatFunc RatFunc::swapped_xy() const {
    RatFunc r(num_.swapped_xy(), den_.swapped_xy(), Raw{});
    r.rescale();
    return r;
}

namespace {

std::string wrap_numerator(const BivarPoly &p) {
    const std::string s = p.to_string();
    return p.terms().size() > 1 ? "(" + s + ")" : s;
}

// '/' binds like '*', so a product in the denominator needs grouping.
std::string wrap_denominator(const BivarPoly &p) {
    const std::string s = p.to_string();
    if (p.terms().size() > 1 || s.find('*') != std::string::npos)
        return "(" + s + ")";
    return s;
}

} // namespace

std::string RatFunc::to_string() const {
    if (den_ == BivarPoly(1))
        return num_.to_string();
    return wrap_numerator(num_) + "/" + wrap_denominator(den_);
}

RatFunc partial(const RatFunc &f, Var v) {
    if (f.is_polynomial())
        return RatFunc(f.num().derivative(v), f.den());
    const BivarPoly &n = f.num(), &d = f.den();
    return RatFunc(n.derivative(v) * d - n * d.derivative(v), d * d);
}

RatFunc partial(const RatFunc &f, unsigned nx, unsigned ny) {
    RatFunc r = f;
    for (unsigned k = 0; k < nx; ++k)
        r = partial(r, Var::x);
    for (unsigned k = 0; k < ny; ++k)
        r = partial(r, Var::y);
    return r;
}

} // namespace lpdo
