#include "lpdo/symbol.hpp"

#include <sstream>

#include "lpdo/error.hpp"

namespace lpdo {

SymbolForm::SymbolForm(unsigned degree, Coeffs coeffs) : degree_(degree) {
    for (auto &[i, c] : coeffs) {
        if (i > degree)
            throw PreconditionError("X-exponent <= degree of symbol form");
        if (!c.is_zero())
            coeffs_.emplace(i, std::move(c));
    }
}

RatFunc SymbolForm::coefficient(unsigned i, unsigned j) const {
    if (i + j != degree_)
        throw PreconditionError("i + j == degree of symbol form");
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? RatFunc() : it->second;
}

SymbolForm operator*(const SymbolForm &a, const SymbolForm &b) {
    SymbolForm::Coeffs out;
    for (const auto &[i, ca] : a.coeffs_)
        for (const auto &[k, cb] : b.coeffs_)
            out[i + k] += ca * cb;
    return SymbolForm(a.degree_ + b.degree_, std::move(out));
}

Lpdo SymbolForm::to_operator() const {
    Lpdo L;
    for (const auto &[i, c] : coeffs_)
        L += Lpdo::term(c, {i, degree_ - i});
    return L;
}

std::string SymbolForm::to_string() const {
    // The symbol prints like its homogeneous operator with X, Y for Dx, Dy.
    std::string s = to_operator().to_string();
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == 'D' && k + 1 < s.size() && (s[k + 1] == 'x' || s[k + 1] == 'y')) {
            out += s[k + 1] == 'x' ? 'X' : 'Y';
            ++k;
        } else {
            out += s[k];
        }
    }
    return out;
}

LinearForm::LinearForm(RatFunc cx_, RatFunc cy_) : cx(std::move(cx_)), cy(std::move(cy_)) {
    if (cx.is_zero() && cy.is_zero())
        throw PreconditionError("linear form (cx, cy) != (0, 0)");
}

LinearForm LinearForm::of(const Lpdo &first_order) {
    if (first_order.order() != 1u)
        throw PreconditionError("order(F) == 1");
    return {first_order.coefficient({1, 0}), first_order.coefficient({0, 1})};
}

SymbolForm LinearForm::to_symbol() const { return SymbolForm(1, {{1, cx}, {0, cy}}); }

Lpdo LinearForm::to_operator() const { return Lpdo{{{1, 0}, cx}, {{0, 1}, cy}}; }

bool proportional(const LinearForm &a, const LinearForm &b) {
    return (a.cx * b.cy - a.cy * b.cx).is_zero();
}

SymbolForm symbol(const Lpdo &L) {
    const auto d = L.order();
    if (!d)
        throw PreconditionError("L != 0 (the zero operator has no symbol)");
    SymbolForm::Coeffs c;
    for (const auto &[e, a] : L.terms())
        if (e.total() == *d)
            c.emplace(e.i, a);
    return SymbolForm(*d, std::move(c));
}

FormDivision divide_forms(const SymbolForm &t, const SymbolForm &s) {
    if (s.is_zero())
        throw DivisionByZero();
    const unsigned d = t.degree(), e = s.degree();
    if (t.is_zero() || e > d)
        return {SymbolForm(d >= e ? d - e : 0, {}), t};
    const unsigned m = s.coeffs().begin()->first;
    const RatFunc &lead = s.coeffs().begin()->second;

    SymbolForm::Coeffs work = t.coeffs(), quot, rem;
    for (unsigned i = d + 1; i-- > 0;) {
        auto it = work.find(i);
        if (it == work.end() || it->second.is_zero())
            continue;
        const RatFunc ti = it->second;
        // X^i Y^{d-i} is divisible by X^m Y^{e-m} iff i >= m and i - m <= d - e.
        if (i >= m && i - m <= d - e) {
            const RatFunc qc = ti / lead;
            quot[i - m] = qc;
            for (const auto &[k, sk] : s.coeffs())
                work[i - m + k] -= qc * sk;
        } else {
            rem[i] = ti;
        }
    }
    return {SymbolForm(d - e, std::move(quot)), SymbolForm(d, std::move(rem))};
}

} // namespace lpdo
