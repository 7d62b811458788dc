#include "lpdo/operator.hpp"

#include <algorithm>
#include <sstream>

#include "lpdo/error.hpp"

namespace lpdo {

namespace {

Rational binomial(unsigned n, unsigned k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rational(r);
}

} // namespace

Lpdo::Lpdo(const RatFunc &f) {
    if (!f.is_zero())
        terms_.emplace(Exponent{0, 0}, f);
}

Lpdo::Lpdo(std::initializer_list<std::pair<const Exponent, RatFunc>> terms) {
    for (const auto &[e, c] : terms)
        add_term(e, c);
}

Lpdo Lpdo::term(const RatFunc &c, Exponent e) {
    Lpdo L;
    L.add_term(e, c);
    return L;
}

std::optional<unsigned> Lpdo::order() const noexcept {
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first.total();
}

RatFunc Lpdo::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RatFunc() : it->second;
}

Lpdo Lpdo::layer(unsigned k) const {
    Lpdo out;
    for (const auto &[e, c] : terms_)
        if (e.total() == k)
            out.terms_.emplace(e, c);
    return out;
}

void Lpdo::add_term(const Exponent &e, const RatFunc &c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Lpdo &Lpdo::operator+=(const Lpdo &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

Lpdo &Lpdo::operator-=(const Lpdo &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

Lpdo Lpdo::operator-() const {
    Lpdo r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

Lpdo operator*(const RatFunc &f, const Lpdo &L) {
    Lpdo r;
    if (f.is_zero())
        return r;
    for (const auto &[e, c] : L.terms_)
        r.terms_.emplace(e, f * c);
    return r;
}

std::string Lpdo::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::string mono;
        auto append = [&mono](const char *d, std::uint32_t k) {
            if (k == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += d;
            if (k > 1)
                mono += "^" + std::to_string(k);
        };
        append("Dx", e.i);
        append("Dy", e.j);

        // A negative single-term polynomial coefficient is printed as a
        // subtraction; everything else keeps its sign inside the group.
        RatFunc shown = c;
        bool negative = false;
        if (c.num().terms().size() == 1 && c.num().leading_coefficient() < 0) {
            negative = true;
            shown = -c;
        }
        std::string coeff = shown.to_string();
        // A trailing polynomial continues the flat sum, so its own leading
        // minus can serve as the separator.
        if (mono.empty() && !first && !negative && shown.is_polynomial() && coeff.front() == '-') {
            negative = true;
            coeff.erase(0, 1);
        }
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        if (mono.empty()) {
            os << coeff;
            continue;
        }
        if (shown == RatFunc(1)) {
            os << mono;
            continue;
        }
        const bool group = shown.num().terms().size() > 1 || !shown.is_polynomial();
        os << (group ? "(" + coeff + ")" : coeff) << "*" << mono;
    }
    return os.str();
}

Lpdo compose(const Lpdo &a, const Lpdo &b) {
    Lpdo r;
    for (const auto &[ea, ca] : a.terms()) {
        for (const auto &[eb, cb] : b.terms()) {
            // Dx^i Dy^j ∘ cb = sum C(i,s) C(j,t) ∂x^s ∂y^t(cb) Dx^{i-s} Dy^{j-t}
            RatFunc dxs = cb;
            for (std::uint32_t s = 0; s <= ea.i; ++s) {
                if (s > 0)
                    dxs = partial(dxs, Var::x);
                if (dxs.is_zero())
                    break;
                RatFunc dst = dxs;
                for (std::uint32_t t = 0; t <= ea.j; ++t) {
                    if (t > 0)
                        dst = partial(dst, Var::y);
                    if (dst.is_zero())
                        break;
                    const RatFunc coeff = ca * dst * RatFunc(binomial(ea.i, s) * binomial(ea.j, t));
                    r += Lpdo::term(coeff, {ea.i - s + eb.i, ea.j - t + eb.j});
                }
            }
        }
    }
    return r;
}

Lpdo gauge(const Lpdo &L, const RatFunc &g) {
    if (g.is_zero())
        throw PreconditionError("g != 0");
    return g.inverse() * compose(L, Lpdo(g));
}

Lpdo swap_xy(const Lpdo &L) {
    Lpdo r;
    for (const auto &[e, c] : L.terms())
        r += Lpdo::term(c.swapped_xy(), {e.j, e.i});
    return r;
}

} // namespace lpdo
