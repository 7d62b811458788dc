#include "lpdo/normal_form.hpp"

#include "lpdo/error.hpp"
#include "lpdo/symbol.hpp"

namespace lpdo {

namespace {

std::string power(const char *v, unsigned k) {
    if (k == 0)
        return "";
    return k == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(k);
}

std::string join(const std::string &a, const std::string &b) {
    if (a.empty())
        return b;
    if (b.empty())
        return a;
    return a + "*" + b;
}

} // namespace

std::string to_string(NormalForm::Kind kind) {
    switch (kind) {
    case NormalForm::Kind::Form1: return "Form1";
    case NormalForm::Kind::Form2: return "Form2";
    case NormalForm::Kind::Form3: return "Form3";
    case NormalForm::Kind::Other: return "Other";
    }
    return "Other";
}

NormalForm classify_normal_form(const Lpdo &L) {
    if (L.order() != 3u)
        throw PreconditionError("order(L) == 3");
    const SymbolForm sym = symbol(L);
    const RatFunc t3 = sym.coefficient(3, 0), t2 = sym.coefficient(2, 1), t1 = sym.coefficient(1, 2),
                  t0 = sym.coefficient(0, 3);

    NormalForm nf;
    if (t3.is_zero() && t0.is_zero() && !t2.is_zero() && !t1.is_zero()) {
        nf.kind = NormalForm::Kind::Form1;
        nf.p = t2;
        nf.q = t1;
        const LinearForm s(t2, t1);
        nf.pattern = "X*Y*(" + s.to_symbol().to_string() + ")";
        return nf;
    }
    const int nonzero = !t3.is_zero() + !t2.is_zero() + !t1.is_zero() + !t0.is_zero();
    if (nonzero == 1) {
        if (!t2.is_zero() || !t1.is_zero()) {
            nf.kind = NormalForm::Kind::Form2;
            nf.swapped = !t1.is_zero();
            nf.pattern = nf.swapped ? "X*Y^2" : "X^2*Y";
        } else {
            nf.kind = NormalForm::Kind::Form3;
            nf.swapped = !t0.is_zero();
            nf.pattern = nf.swapped ? "Y^3" : "X^3";
        }
        nf.repeated_factor = true;
        return nf;
    }

    // Other: pull out the monomial part X^a Y^b and report the cofactor.
    unsigned lowest_x = 3, highest_x = 0;
    for (const auto &[i, c] : sym.coeffs()) {
        lowest_x = std::min(lowest_x, i);
        highest_x = std::max(highest_x, i);
    }
    const unsigned a = lowest_x, b = 3 - highest_x;
    SymbolForm::Coeffs rest;
    for (const auto &[i, c] : sym.coeffs())
        rest.emplace(i - a, c);
    const SymbolForm cofactor(3 - a - b, std::move(rest));
    std::string pattern = join(power("X", a), power("Y", b));
    if (cofactor.degree() > 0) {
        const std::string body = cofactor.to_string();
        pattern = join(pattern, cofactor.coeffs().size() > 1 ? "(" + body + ")" : body);
    }
    nf.kind = NormalForm::Kind::Other;
    nf.pattern = pattern;
    nf.repeated_factor = a >= 2 || b >= 2;
    return nf;
}

Lpdo normalize_form1(const Lpdo &L) {
    const NormalForm nf = classify_normal_form(L);
    if (nf.kind != NormalForm::Kind::Form1)
        throw PreconditionError("symbol(L) has the form XY(pX + qY)");
    if (nf.p == RatFunc(1))
        return L;
    return nf.p.inverse() * L;
}

} // namespace lpdo
