#include "lpdo/reducibility.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lpdo/division.hpp"
#include "lpdo/error.hpp"
#include "lpdo/normal_form.hpp"

namespace lpdo {

std::string SymbolFactorPattern::to_string() const {
    std::string out;
    auto put = [&out](char v, unsigned k) {
        if (k == 0)
            return;
        out += v;
        if (k > 1)
            out += "^" + std::to_string(k);
    };
    put('X', x);
    put('Y', y);
    put('S', s);
    return out.empty() ? "1" : out;
}

SymbolFactorPattern symbol_lcm(const std::vector<SymbolFactorPattern> &patterns) {
    SymbolFactorPattern out;
    for (const auto &p : patterns) {
        if (p.s > 0) {
            if (out.q && p.q && !(*out.q == *p.q))
                throw PreconditionError("all patterns share the same q");
            if (!out.q)
                out.q = p.q;
        }
        out.x = std::max(out.x, p.x);
        out.y = std::max(out.y, p.y);
        out.s = std::max(out.s, p.s);
    }
    return out;
}

namespace {

// Forms a, b equal up to a factor in K.
bool proportional_forms(const SymbolForm &a, const SymbolForm &b) {
    if (a.degree() != b.degree() || a.is_zero() || b.is_zero())
        return false;
    if (a.coeffs().begin()->first != b.coeffs().begin()->first)
        return false;
    const RatFunc ratio = a.coeffs().begin()->second / b.coeffs().begin()->second;
    SymbolForm::Coeffs scaled;
    for (const auto &[i, c] : b.coeffs())
        scaled.emplace(i, ratio * c);
    return a == SymbolForm(b.degree(), std::move(scaled));
}

SymbolForm pattern_form(const SymbolFactorPattern &p, const RatFunc &q) {
    SymbolForm f(0, {{0, RatFunc(1)}});
    const SymbolForm X = LinearForm::X().to_symbol(), Y = LinearForm::Y().to_symbol();
    const SymbolForm S = LinearForm(RatFunc(1), q).to_symbol();
    for (unsigned k = 0; k < p.x; ++k)
        f = f * X;
    for (unsigned k = 0; k < p.y; ++k)
        f = f * Y;
    for (unsigned k = 0; k < p.s; ++k)
        f = f * S;
    return f;
}

LinearForm slot_form(char slot, const RatFunc &q) {
    switch (slot) {
    case 'X': return LinearForm::X();
    case 'Y': return LinearForm::Y();
    default: return LinearForm(RatFunc(1), q);
    }
}

} // namespace

std::optional<SymbolFactorPattern> symbol_pattern(const Lpdo &F, const RatFunc &q) {
    const auto ord = F.order();
    if (!ord || *ord == 0 || *ord > 2)
        throw PreconditionError("1 <= order(factor) <= 2");
    const SymbolForm sym = symbol(F);
    for (unsigned s = 0; s <= *ord; ++s)
        for (unsigned y = 0; y + s <= *ord; ++y) {
            SymbolFactorPattern p{*ord - s - y, y, s, std::nullopt};
            if (s > 0)
                p.q = q;
            if (proportional_forms(sym, pattern_form(p, q)))
                return p;
        }
    return std::nullopt;
}

std::string to_string(ReducibilityGroup g) {
    switch (g) {
    case ReducibilityGroup::I: return "I";
    case ReducibilityGroup::IIa: return "II.a";
    case ReducibilityGroup::IIb: return "II.b";
    case ReducibilityGroup::IIc: return "II.c";
    case ReducibilityGroup::IIIa: return "III.a";
    case ReducibilityGroup::IIIb: return "III.b";
    case ReducibilityGroup::IIIc: return "III.c";
    case ReducibilityGroup::V: return "V";
    }
    return "?";
}

ReducibilityGroup parse_group(std::string_view name) {
    for (ReducibilityGroup g : all_groups)
        if (to_string(g) == name)
            return g;
    throw PreconditionError("group is one of I, II.a, II.b, II.c, III.a, III.b, III.c, V; got '" +
                            std::string(name) + "'");
}

std::vector<std::string> group_symbols(ReducibilityGroup g) {
    switch (g) {
    case ReducibilityGroup::I: return {"X", "Y", "S"};
    case ReducibilityGroup::IIa: return {"XS", "YS"};
    case ReducibilityGroup::IIb: return {"XS", "XY"};
    case ReducibilityGroup::IIc: return {"YS", "XY"};
    case ReducibilityGroup::IIIa: return {"X", "YS"};
    case ReducibilityGroup::IIIb: return {"Y", "XS"};
    case ReducibilityGroup::IIIc: return {"S", "XY"};
    case ReducibilityGroup::V: return {"XS", "YS", "XY"};
    }
    return {};
}

std::string to_string(Irreducibility i) {
    switch (i) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::Unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(ReducibilityVerdict::Status s) {
    switch (s) {
    case ReducibilityVerdict::Status::CompletelyReducible: return "CompletelyReducible";
    case ReducibilityVerdict::Status::NotByTheseFactors: return "NotByTheseFactors";
    case ReducibilityVerdict::Status::Unknown: return "Unknown";
    }
    return "Unknown";
}

namespace {

// Leading coefficient scaled to 1, so multiples in K compare equal.
Lpdo monic(const Lpdo &F) { return F.terms().begin()->second.inverse() * F; }

std::optional<ReducibilityGroup> group_of(const std::vector<std::string> &symbols) {
    const std::multiset<std::string> have(symbols.begin(), symbols.end());
    for (ReducibilityGroup g : all_groups) {
        const auto want = group_symbols(g);
        if (have == std::multiset<std::string>(want.begin(), want.end()))
            return g;
    }
    return std::nullopt;
}

void certify_irreducibility(FactorCheck &check, const RatFunc &q) {
    const auto &p = *check.pattern;
    if (p.degree() == 1) {
        check.irreducible = Irreducibility::Irreducible;
        return;
    }
    if (p.x == 2 || p.y == 2 || p.s == 2) {
        check.irreducible = Irreducibility::Unknown;
        return;
    }
    std::string slots;
    if (p.x)
        slots += 'X';
    if (p.y)
        slots += 'Y';
    if (p.s)
        slots += 'S';
    const LinearForm a = slot_form(slots[0], q), b = slot_form(slots[1], q);
    // Sym(F) = r·a·b; put r on the left form.
    const SymbolForm sym = symbol(check.factor);
    const SymbolForm ab = a.to_symbol() * b.to_symbol();
    const unsigned lead = sym.coeffs().begin()->first;
    const RatFunc r = sym.coeffs().begin()->second / ab.coefficient(lead, 2 - lead);
    for (const auto &[s1, s2] : {std::pair{LinearForm(r * a.cx, r * a.cy), b},
                                 std::pair{LinearForm(r * b.cx, r * b.cy), a}}) {
        if (auto split = solve_order2_coprime(check.factor, s1, s2)) {
            check.irreducible = Irreducibility::Reducible;
            check.split = std::move(split);
            return;
        }
    }
    check.irreducible = Irreducibility::Irreducible;
}

} // namespace

ReducibilityVerdict check_complete_reducibility(const Lpdo &L, const std::vector<Lpdo> &factors) {
    if (L.order() != 3u)
        throw PreconditionError("order(L) == 3");
    const Lpdo Ln = normalize_form1(L);
    const RatFunc q = classify_normal_form(Ln).q;

    std::vector<Lpdo> unique;
    for (const auto &F : factors) {
        const auto ord = F.order();
        if (!ord || *ord == 0 || *ord > 2)
            throw PreconditionError("1 <= order(factor) <= 2");
        const Lpdo m = monic(F);
        if (std::none_of(unique.begin(), unique.end(), [&](const Lpdo &u) { return monic(u) == m; }))
            unique.push_back(F);
    }

    ReducibilityVerdict v;
    std::vector<SymbolFactorPattern> patterns;
    std::vector<std::string> symbols;
    bool all_divide = true, all_patterned = true;
    for (const auto &F : unique) {
        FactorCheck check;
        check.factor = F;
        check.divides = right_divide_layered(Ln, F).exact();
        check.pattern = symbol_pattern(F, q);
        if (F.order() == 1u)
            check.irreducible = Irreducibility::Irreducible;
        all_divide = all_divide && check.divides;
        if (check.pattern) {
            const std::string name = check.pattern->to_string();
            if (std::find(symbols.begin(), symbols.end(), name) != symbols.end())
                throw PreconditionError("at most one right factor per symbol type (" + name + ")");
            symbols.push_back(name);
            patterns.push_back(*check.pattern);
        } else {
            all_patterned = false;
        }
        v.factors.push_back(std::move(check));
    }

    v.lcm = symbol_lcm(patterns);
    v.lcm_matches_symbol = all_patterned && v.lcm.x == 1 && v.lcm.y == 1 && v.lcm.s == 1;
    v.group = group_of(symbols);

    if (!all_divide) {
        v.status = ReducibilityVerdict::Status::NotByTheseFactors;
        v.reason = "a supplied factor is not a right factor of L";
        return v;
    }
    if (!v.lcm_matches_symbol) {
        v.status = ReducibilityVerdict::Status::NotByTheseFactors;
        v.reason = "lcm of factor symbols " + v.lcm.to_string() + " != Sym(L) = XYS";
        return v;
    }

    bool unknown = false;
    for (auto &check : v.factors) {
        certify_irreducibility(check, q);
        if (check.irreducible == Irreducibility::Reducible) {
            v.status = ReducibilityVerdict::Status::NotByTheseFactors;
            v.reason = "factor " + check.factor.to_string() + " is reducible";
            return v;
        }
        unknown = unknown || check.irreducible == Irreducibility::Unknown;
    }
    if (unknown) {
        v.status = ReducibilityVerdict::Status::Unknown;
        v.reason = "irreducibility of a repeated-symbol factor cannot be certified";
        return v;
    }
    v.status = ReducibilityVerdict::Status::CompletelyReducible;
    v.reason = "all factors divide, are irreducible, and lcm of symbols equals Sym(L)";
    return v;
}

ConditionReport group_conditions(const InvariantSet &inv, ReducibilityGroup g) {
    if (!(inv.q == RatFunc(1)))
        throw PreconditionError("q == 1");

    auto d = [](const RatFunc &f, unsigned nx, unsigned ny) { return partial(f, nx, ny); };
    const RatFunc &I1 = inv.I1, &I2 = inv.I2, &I3 = inv.I3, &I4 = inv.I4, &I5 = inv.I5;
    const RatFunc I1x = d(I1, 1, 0), I1y = d(I1, 0, 1), I1xx = d(I1, 2, 0), I1xy = d(I1, 1, 1), I1yy = d(I1, 0, 2);
    const RatFunc I2x = d(I2, 1, 0), I2y = d(I2, 0, 1), I3x = d(I3, 1, 0), I3y = d(I3, 0, 1), I4y = d(I4, 0, 1);
    const RatFunc half(Rational(1, 2)), two(2), three(3);

    std::vector<Residual> r;
    switch (g) {
    case ReducibilityGroup::I: {
        const RatFunc w = two * I1x + I1y; // (2Dx + Dy)(I1)
        r = {{"(Dy + I1)(2Dx + Dy)(I1) = 0", d(w, 0, 1) + I1 * w},
             {"I2 = I1x - I3", I2 - (I1x - I3)},
             {"I3 = (I1y + 2 I1x)/3", I3 - (I1y + two * I1x) / three},
             {"I4 = -I2 + I3", I4 - (-I2 + I3)},
             {"I5 = I1 I1x - 2 I1 I3 - I1xy/2", I5 - (I1 * I1x - two * I1 * I3 - half * I1xy)}};
        break;
    }
    case ReducibilityGroup::IIa:
        // A function of y - x is exactly one annihilated by Dx + Dy.
        r = {{"I2 = F(y - x)", I2x + I2y},
             {"I3 = 0", I3},
             {"I4 = 0", I4},
             {"I5 = -I1xy/2 + I2y", I5 - (-half * I1xy + I2y)}};
        break;
    case ReducibilityGroup::IIb:
        r = {{"I1xy + I2x - I1 I1y - 2 I1 I2 = 0", I1xy + I2x - I1 * I1y - two * I1 * I2},
             {"I3 = 0", I3},
             {"I4 = -I1y + I1x - 3 I2", I4 - (-I1y + I1x - three * I2)},
             {"I5 = I4y - I1xy/2 + I2y", I5 - (I4y - half * I1xy + I2y)}};
        break;
    case ReducibilityGroup::IIc:
        r = {{"I1xy - I1 I1x - I2y + I1 I2 = 0", I1xy - I1 * I1x - I2y + I1 * I2},
             {"I3 = I1y - I1x + 3 I2", I3 - (I1y - I1x + three * I2)},
             {"I4 = 0", I4},
             {"I5 = I3x - I1xy/2 - I2x", I5 - (I3x - half * I1xy - I2x)}};
        break;
    case ReducibilityGroup::IIIa:
        r = {{"-I3x + (I1x I1 + I1xy + I1xx)/2 = 0", -I3x + half * (I1x * I1 + I1xy + I1xx)},
             {"I2 = I1x/2", I2 - half * I1x},
             {"I4 = 0", I4},
             {"I5 = -I1xy/2 + I2 I1 + I2y", I5 - (-half * I1xy + I2 * I1 + I2y)}};
        break;
    case ReducibilityGroup::IIIb:
        r = {{"-I4y - I1y I1/2 + I1xy/2 + I1yy/2 = 0", -I4y - half * I1y * I1 + half * I1xy + half * I1yy},
             {"I2 = -I1y/2", I2 + half * I1y},
             {"I3 = 0", I3},
             {"I5 = I2 I1 - I1xy/2 - I2x", I5 - (I2 * I1 - half * I1xy - I2x)}};
        break;
    case ReducibilityGroup::IIIc:
        r = {{"-I3y + (I1xy + I1xx - I1 I1y - I1 I1x)/2 - I3x = 0",
              -I3y + half * (I1xy + I1xx - I1 * I1y - I1 * I1x) - I3x},
             {"I2 = (I1x - I1y)/2", I2 - half * (I1x - I1y)},
             {"I4 = -I2 + I3", I4 - (-I2 + I3)},
             {"I5 = (I1 I1x - I1 I1y - I1xy)/2 - I1 I3", I5 - (half * (I1 * I1x - I1 * I1y - I1xy) - I1 * I3)}};
        break;
    case ReducibilityGroup::V:
        r = {{"I1xx - I1yy = 0", I1xx - I1yy},
             {"I1xx - 2 I1 I1x + 2 I1xy - I1 I1y = 0", I1xx - two * I1 * I1x + two * I1xy - I1 * I1y},
             {"I2 = (I1x - I1y)/3", I2 - (I1x - I1y) / three},
             {"I3 = 0", I3},
             {"I4 = 0", I4},
             {"I5 = -I1xy/2 + I2y", I5 - (-half * I1xy + I2y)}};
        break;
    }

    ConditionReport report;
    report.label = to_string(g);
    report.holds = std::all_of(r.begin(), r.end(), [](const Residual &e) { return e.value.is_zero(); });
    report.residuals = std::move(r);
    return report;
}

} // namespace lpdo
