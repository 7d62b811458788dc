#include "lpdo/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace lpdo {

namespace {

// Dense univariate polynomial over Z, index = exponent. Trimmed: no trailing
// zeros, empty vector is zero.
using ZPoly = std::vector<Integer>;

void trim(ZPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int deg(const ZPoly &p) { return static_cast<int>(p.size()) - 1; }

ZPoly mul(const ZPoly &a, const ZPoly &b) {
    if (a.empty() || b.empty())
        return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (std::size_t k = 0; k < b.size(); ++k)
                mpz_addmul(r[i + k].get_mpz_t(), a[i].get_mpz_t(), b[k].get_mpz_t());
    trim(r);
    return r;
}

Integer content(const ZPoly &p) {
    Integer g = 0;
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

// Divides out the integer content and makes the leading coefficient positive.
void make_primitive(ZPoly &p) {
    if (p.empty())
        return;
    Integer g = content(p);
    if (p.back() < 0)
        g = -g;
    if (g != 1)
        for (auto &c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// lc(b)^k · a = q·b + r with deg r < deg b.
ZPoly pseudo_rem(ZPoly a, const ZPoly &b) {
    const Integer &lc = b.back();
    while (!a.empty() && deg(a) >= deg(b)) {
        const int shift = deg(a) - deg(b);
        const Integer lead = a.back();
        for (auto &c : a)
            c *= lc;
        for (std::size_t i = 0; i < b.size(); ++i)
            mpz_submul(a[i + shift].get_mpz_t(), lead.get_mpz_t(), b[i].get_mpz_t());
        trim(a);
    }
    return a;
}

// Primitive gcd with positive leading coefficient; integer content is
// dropped since callers only need it up to a unit of Q.
ZPoly gcd(ZPoly a, ZPoly b) {
    if (a.empty()) {
        make_primitive(b);
        return b;
    }
    make_primitive(a);
    make_primitive(b);
    if (deg(a) < deg(b))
        std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    make_primitive(a);
    return a;
}

// a / b when b divides a over Z[y] (true for the contents used below).
ZPoly div_exact(ZPoly a, const ZPoly &b) {
    if (a.empty())
        return {};
    ZPoly q(a.size() - b.size() + 1);
    while (!a.empty()) {
        const int shift = deg(a) - deg(b);
        Integer c;
        mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            mpz_submul(a[i + shift].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        trim(a);
    }
    trim(q);
    return q;
}

// Z[y][x]: index = exponent of x, entries are polynomials in y.
using RecPoly = std::vector<ZPoly>;

void trim(RecPoly &p) {
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

// Integer multiple of p with content 1 over Z.
RecPoly to_rec(const BivarPoly &p) {
    const BivarPoly q = p.primitive();
    RecPoly r(q.is_zero() ? 0 : q.degree(Var::x) + 1);
    for (const auto &[e, c] : q.terms()) {
        auto &u = r[e.i];
        if (u.size() <= e.j)
            u.resize(e.j + 1);
        u[e.j] = c.get_num();
    }
    for (auto &u : r)
        trim(u);
    trim(r);
    return r;
}

BivarPoly from_rec(const RecPoly &r) {
    BivarPoly out;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j)
            if (r[i][j] != 0)
                out += BivarPoly::monomial(Rational(r[i][j]), {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    return out;
}

// Content in Z[y], i.e. the gcd of the coefficients of x^k.
ZPoly content(const RecPoly &r) {
    ZPoly g;
    for (const auto &u : r) {
        g = gcd(g, u);
        if (g.size() == 1)
            break;
    }
    return g;
}

RecPoly primitive_part(const RecPoly &r, const ZPoly &cont) {
    RecPoly out;
    out.reserve(r.size());
    for (const auto &u : r)
        out.push_back(div_exact(u, cont));
    return out;
}

RecPoly pseudo_rem(RecPoly a, const RecPoly &b) {
    const ZPoly &lc = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const ZPoly lead = a.back();
        for (auto &u : a)
            u = mul(u, lc);
        for (int i = 0; i <= db; ++i) {
            const ZPoly t = mul(lead, b[i]);
            auto &u = a[i + shift];
            if (u.size() < t.size())
                u.resize(t.size());
            for (std::size_t k = 0; k < t.size(); ++k)
                u[k] -= t[k];
            trim(u);
        }
        trim(a);
    }
    return a;
}

} // namespace

BivarPoly::BivarPoly(const Rational &c) {
    if (c != 0)
        terms_.emplace(Exponent{0, 0}, c);
}

BivarPoly BivarPoly::variable(Var v) {
    return monomial(1, v == Var::x ? Exponent{1, 0} : Exponent{0, 1});
}

BivarPoly BivarPoly::monomial(const Rational &c, Exponent e) {
    BivarPoly p;
    if (c != 0)
        p.terms_.emplace(e, c);
    return p;
}

bool BivarPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total() == 0);
}

Rational BivarPoly::constant_value() const { return coefficient({0, 0}); }

int BivarPoly::total_degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total());
}

int BivarPoly::degree(Var v) const noexcept {
    int d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max(d, static_cast<int>(v == Var::x ? e.i : e.j));
    return d;
}

Rational BivarPoly::coefficient(Exponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Exponent &e, const Rational &c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

BivarPoly &BivarPoly::operator+=(const BivarPoly &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

BivarPoly &BivarPoly::operator-=(const BivarPoly &o) {
    for (const auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

BivarPoly &BivarPoly::operator*=(const Rational &c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_)
        v *= c;
    return *this;
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b) {
    BivarPoly r;
    for (const auto &[ea, ca] : a.terms_)
        for (const auto &[eb, cb] : b.terms_)
            r.add_term({ea.i + eb.i, ea.j + eb.j}, ca * cb);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r = *this;
    for (auto &[e, c] : r.terms_)
        c = -c;
    return r;
}

BivarPoly BivarPoly::pow(unsigned n) const {
    BivarPoly result(1), base = *this;
    while (n) {
        if (n & 1u)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

BivarPoly BivarPoly::derivative(Var v) const {
    BivarPoly r;
    for (const auto &[e, c] : terms_) {
        const std::uint32_t k = v == Var::x ? e.i : e.j;
        if (k == 0)
            continue;
        Exponent d = e;
        (v == Var::x ? d.i : d.j) -= 1;
        r.add_term(d, c * k);
    }
    return r;
}

BivarPoly BivarPoly::swapped_xy() const {
    BivarPoly r;
    for (const auto &[e, c] : terms_)
        r.terms_.emplace(Exponent{e.j, e.i}, c);
    return r;
}

std::optional<BivarPoly> BivarPoly::divide_exact(const BivarPoly &a, const BivarPoly &b) {
    if (b.is_zero())
        return std::nullopt;
    BivarPoly rem = a, quot;
    const Exponent lb = b.leading_exponent();
    const Rational &cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponent lr = rem.leading_exponent();
        if (lr.i < lb.i || lr.j < lb.j)
            return std::nullopt;
        const BivarPoly t = monomial(rem.leading_coefficient() / cb, {lr.i - lb.i, lr.j - lb.j});
        quot += t;
        rem -= t * b;
    }
    return quot;
}

Integer BivarPoly::denominator_lcm() const {
    Integer l = 1;
    for (const auto &[e, c] : terms_)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

Integer BivarPoly::numerator_gcd() const {
    Integer g = 0;
    for (const auto &[e, c] : terms_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    return g;
}

BivarPoly BivarPoly::primitive() const {
    if (is_zero())
        return {};
    BivarPoly r = *this;
    r *= Rational(denominator_lcm());
    Rational scale(1, r.numerator_gcd());
    if (r.leading_coefficient() < 0)
        scale = -scale;
    r *= scale;
    return r;
}

std::string BivarPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string mono;
        auto append = [&mono](const char *v, std::uint32_t k) {
            if (k == 0)
                return;
            if (!mono.empty())
                mono += "*";
            mono += v;
            if (k > 1)
                mono += "^" + std::to_string(k);
        };
        append("x", e.i);
        append("y", e.j);
        if (mono.empty())
            os << mag.get_str();
        else if (mag == 1)
            os << mono;
        else
            os << mag.get_str() << "*" << mono;
    }
    return os.str();
}

BivarPoly gcd(const BivarPoly &a, const BivarPoly &b) {
    if (a.is_zero())
        return b.primitive();
    if (b.is_zero())
        return a.primitive();
    if (a.is_constant() || b.is_constant())
        return BivarPoly(1);
    if (a.terms().size() == 1 || b.terms().size() == 1) {
        // gcd with a monomial is the common power of x and y
        std::uint32_t i = UINT32_MAX, j = UINT32_MAX;
        for (const auto *p : {&a, &b})
            for (const auto &[e, c] : p->terms()) {
                i = std::min(i, e.i);
                j = std::min(j, e.j);
            }
        return BivarPoly::monomial(1, {i, j});
    }

    RecPoly ra = to_rec(a), rb = to_rec(b);
    const ZPoly ca = content(ra), cb = content(rb);
    const ZPoly cg = gcd(ca, cb);
    RecPoly pa = primitive_part(ra, ca), pb = primitive_part(rb, cb);
    if (pa.size() < pb.size())
        std::swap(pa, pb);
    while (!pb.empty()) {
        RecPoly r = pseudo_rem(pa, pb);
        pa = std::move(pb);
        if (r.empty())
            break;
        pb = primitive_part(r, content(r));
    }
    pa = primitive_part(pa, content(pa));
    RecPoly g;
    for (const auto &u : pa)
        g.push_back(mul(u, cg));
    return from_rec(g).primitive();
}

} // namespace lpdo
