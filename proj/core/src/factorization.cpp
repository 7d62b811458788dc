#include "lpdo/factorization.hpp"

#include <algorithm>
#include <map>

#include "lpdo/division.hpp"
#include "lpdo/error.hpp"

namespace lpdo {

std::string to_string(FactType t) {
    switch (t) {
    case FactType::S_XY: return "(S)(XY)";
    case FactType::S_X_Y: return "(S)(X)(Y)";
    case FactType::S_Y_X: return "(S)(Y)(X)";
    case FactType::X_SY: return "(X)(SY)";
    case FactType::X_S_Y: return "(X)(S)(Y)";
    case FactType::X_Y_S: return "(X)(Y)(S)";
    case FactType::XY_S: return "(XY)(S)";
    case FactType::YS_X: return "(YS)(X)";
    case FactType::XS_Y: return "(XS)(Y)";
    case FactType::Y_SX: return "(Y)(SX)";
    case FactType::Y_X_S: return "(Y)(X)(S)";
    case FactType::Y_S_X: return "(Y)(S)(X)";
    }
    return "?";
}

namespace {

// Group letters sorted into X, Y, S order so that "(SX)" == "(XS)".
std::string canonical_group(std::string g) {
    auto rank = [](char c) { return c == 'X' ? 0 : c == 'Y' ? 1 : 2; };
    std::sort(g.begin(), g.end(), [&](char a, char b) { return rank(a) < rank(b); });
    return g;
}

std::vector<std::string> split_groups(std::string_view name) {
    std::vector<std::string> groups;
    std::size_t k = 0;
    while (k < name.size()) {
        if (name[k] == ' ') {
            ++k;
            continue;
        }
        if (name[k] != '(')
            return {};
        const std::size_t close = name.find(')', k);
        if (close == std::string_view::npos)
            return {};
        std::string g(name.substr(k + 1, close - k - 1));
        for (char c : g)
            if (c != 'X' && c != 'Y' && c != 'S')
                return {};
        groups.push_back(canonical_group(std::move(g)));
        k = close + 1;
    }
    return groups;
}

} // namespace

std::vector<std::string> factor_patterns(FactType t) { return split_groups(to_string(t)); }

FactType parse_fact_type(std::string_view name) {
    const auto groups = split_groups(name);
    if (!groups.empty())
        for (FactType t : all_fact_types)
            if (factor_patterns(t) == groups)
                return t;
    throw PreconditionError("factorization type is one of the twelve types of XY*S, got '" + std::string(name) + "'");
}

namespace {

// Invariants with every derivative the condition sets use.
struct Jet {
    RatFunc q, qx, qy, qxx, qxy, qyy, qxxx;
    RatFunc I1, I1x, I1y, I1xx, I1xy;
    RatFunc I2, I2x, I2y;
    RatFunc I3, I3x;
    RatFunc I4, I4x, I4y;
    RatFunc I5;

    explicit Jet(const InvariantSet &inv)
        : q(inv.q), qx(partial(q, 1, 0)), qy(partial(q, 0, 1)), qxx(partial(q, 2, 0)), qxy(partial(q, 1, 1)),
          qyy(partial(q, 0, 2)), qxxx(partial(q, 3, 0)), I1(inv.I1), I1x(partial(I1, 1, 0)),
          I1y(partial(I1, 0, 1)), I1xx(partial(I1, 2, 0)), I1xy(partial(I1, 1, 1)), I2(inv.I2),
          I2x(partial(I2, 1, 0)), I2y(partial(I2, 0, 1)), I3(inv.I3), I3x(partial(I3, 1, 0)), I4(inv.I4),
          I4x(partial(I4, 1, 0)), I4y(partial(I4, 0, 1)), I5(inv.I5) {}
};

RatFunc c(long n, long d = 1) { return RatFunc(Rational(n, d)); }

// Each residual is an exact expression in the invariants; zero ⟺ the
// equation holds.

RatFunc eq_A1(const Jet &j) { return j.I3 + j.qyy; }

RatFunc eq_B1(const Jet &j) { return j.I3 * j.q * j.q - j.q * j.I1y + j.qy * j.I1 - c(2) * j.I2; }

RatFunc eq_C1(const Jet &j) { return -c(2) * j.qx * j.I1 + j.q * j.I1x - j.I4 - c(2) * j.q * j.I2; }

// Homogeneous in the weights w(Dx)=a, w(Dy)=b, w(q)=a-b; the last term is
// quadratic in q_x.
RatFunc eq_D1(const Jet &j) { return j.q * j.qxx - j.I4 - c(2) * j.qx * j.qx; }

RatFunc eq_SXY1(const Jet &j) {
    const RatFunc &q = j.q;
    return j.I3 * q * q * q - j.I1y * q * q + j.qy * j.I1 * q - j.I4 + q * j.I1x - c(2) * j.qx * j.I1 -
           c(3) * q * j.I2;
}

RatFunc eq_SXY2(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx, &qy = j.qy;
    const RatFunc q2 = q * q, q3 = q2 * q;
    return -q2 * j.I4y + c(1, 2) * q3 * j.I1xy - q * j.I4x - c(3, 2) * q2 * qx * j.I1y + q3 * j.I5 +
           q2 * j.I1xx - c(3, 2) * j.I1 * q2 * j.qxy - c(2) * j.I1 * q * j.qxx + c(5) * j.I1 * q * qx * qy +
           c(6) * j.I1 * qx * qx + c(3) * j.I4 * qx + c(3) * j.I4 * q * qy - q * j.I1 * j.I1x + j.I1 * j.I4 +
           c(2) * qx * j.I1 * j.I1 - c(4) * j.I1x * q * qx - c(3, 2) * j.I1x * q2 * qy - c(2) * q2 * j.I2x -
           q3 * j.I2y + j.I2 * q * j.I1 + c(4) * j.I2 * q * qx + c(2) * j.I2 * q2 * qy;
}

RatFunc eq_SXY3(const Jet &j) { return -j.I4 + j.q * j.I1x - c(2) * j.qx * j.I1 - j.q * j.I2; }

// Shared second equation of (X)(SY) and (XS)(Y).
RatFunc eq_XSY2(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx, &qy = j.qy;
    const RatFunc q2 = q * q, q3 = q2 * q;
    return -c(3, 2) * qx * q * j.I1y - q3 * j.I3x + j.I5 * q2 + c(1, 2) * q2 * j.I1xy - c(1, 2) * q * qy * j.I1x +
           qx * q2 * j.I3 + c(2) * j.I1 * qx * qy - c(1, 2) * j.I1 * j.qxy * q - c(4) * qx * j.I2 + q * j.I2x;
}

RatFunc eq_XYS1(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx;
    const RatFunc q2 = q * q, q3 = q2 * q;
    return -q * j.I2 + q * qx * j.qy + j.qyy * q3 - q2 * j.qxy + q * j.qxx + j.I3 * q3 - j.I4 - c(2) * qx * qx;
}

RatFunc eq_XYS2(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx, &qy = j.qy;
    const RatFunc q2 = q * q, q3 = q2 * q, q4 = q3 * q;
    return q3 * j.I5 + q * j.I4x + c(1, 2) * q3 * j.I1xy - c(3, 2) * q2 * qx * j.I1y + j.I1 * j.I4 +
           q2 * j.I2x + c(2) * j.I1 * q * qx * qy + c(2) * j.I1 * qx * qx - c(5) * j.I4 * qx -
           c(1, 2) * j.I1 * q2 * j.qxy - j.I1 * q * j.qxx + j.I4 * q * qy - c(1, 2) * j.I1x * q2 * qy -
           c(4) * j.I2 * q * qx - c(10) * qx * qx * qx - q2 * j.qxxx - q4 * j.I3x + j.I3 * q3 * qx +
           c(2) * q * qx * qx * qy - q2 * qy * j.qxx + c(8) * q * qx * j.qxx;
}

// Shared second equation of (YS)(X) and (Y)(SX).
RatFunc eq_YSX2(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx, &qy = j.qy;
    const RatFunc q2 = q * q;
    return -q * j.I4y + c(1, 2) * q2 * j.I1xy + j.I5 * q2 - j.I2 * j.I1 - q2 * j.I2y + c(2) * qy * j.I4 +
           c(3) * j.I1 * qx * qy - c(3, 2) * j.I1 * j.qxy * q - c(1, 2) * q * qy * j.I1x -
           c(3, 2) * qx * q * j.I1y;
}

RatFunc eq_YXS3(const Jet &j) {
    const RatFunc &q = j.q, &qx = j.qx;
    return -q * j.qxx + j.I4 + c(2) * qx * qx + q * j.I2 - q * qx * j.qy + q * q * j.qxy;
}

using Equation = RatFunc (*)(const Jet &);

struct NamedEquation {
    const char *name;
    Equation eval;
};

std::vector<NamedEquation> equations(FactType t) {
    const NamedEquation A1{"(A1)", eq_A1}, B1{"(B1)", eq_B1}, C1{"(C1)", eq_C1}, D1{"(D1)", eq_D1};
    const NamedEquation SXY1{"(S)(XY)#1", eq_SXY1}, SXY2{"(S)(XY)#2", eq_SXY2};
    const NamedEquation SXY3{"(S)(X)(Y)#3", eq_SXY3};
    const NamedEquation XSY2{"(X)(SY)#2", eq_XSY2};
    const NamedEquation XYS1{"(XY)(S)#1", eq_XYS1}, XYS2{"(XY)(S)#2", eq_XYS2};
    const NamedEquation YSX2{"(YS)(X)#2", eq_YSX2};
    const NamedEquation YXS3{"(Y)(X)(S)#3", eq_YXS3};
    switch (t) {
    case FactType::S_XY: return {SXY1, SXY2};
    case FactType::S_X_Y: return {SXY1, SXY2, SXY3};
    case FactType::S_Y_X: return {SXY1, SXY2, C1};
    case FactType::X_SY: return {D1, XSY2};
    case FactType::X_S_Y: return {D1, XSY2, B1};
    // Left factor X and right factor S with coprime symbols force the
    // complete factorization, so the type is the conjunction of both blocks.
    case FactType::X_Y_S: return {D1, XSY2, XYS1, XYS2};
    case FactType::XY_S: return {XYS1, XYS2};
    case FactType::YS_X: return {C1, YSX2};
    case FactType::XS_Y: return {B1, XSY2};
    case FactType::Y_SX: return {A1, YSX2};
    case FactType::Y_X_S: return {XYS1, XYS2, YXS3};
    case FactType::Y_S_X: return {C1, YSX2, A1};
    }
    return {};
}

ConditionReport evaluate(const Jet &jet, FactType t) {
    ConditionReport report;
    report.label = to_string(t);
    report.holds = true;
    for (const auto &eq : equations(t)) {
        RatFunc v = eq.eval(jet);
        report.holds = report.holds && v.is_zero();
        report.residuals.push_back({eq.name, std::move(v)});
    }
    return report;
}

} // namespace

ConditionReport condition_residuals(const InvariantSet &inv, FactType t) { return evaluate(Jet(inv), t); }

std::vector<ConditionReport> condition_sweep(const InvariantSet &inv) {
    const Jet jet(inv);
    std::vector<ConditionReport> out;
    for (FactType t : all_fact_types)
        out.push_back(evaluate(jet, t));
    return out;
}

bool verify_factorization(const Lpdo &L, const Factorization &fac) { return fac.product() == L; }

std::optional<Factorization> solve_order2_coprime(const Lpdo &L, const LinearForm &s1, const LinearForm &s2) {
    if (L.order() != 2u)
        throw PreconditionError("order(L) == 2");
    if (proportional(s1, s2))
        throw PreconditionError("s1 and s2 are not proportional");
    if (!(symbol(L) == s1.to_symbol() * s2.to_symbol()))
        throw PreconditionError("symbol(L) == s1*s2");

    // (s1 + g)∘(s2 + f): first-order part is s1(s2x) Dx + s1(s2y) Dy
    // + (g s2x + f s1x) Dx + (g s2y + f s1y) Dy, where s1(h) = s1x h_x + s1y h_y.
    auto along_s1 = [&](const RatFunc &h) { return s1.cx * partial(h, Var::x) + s1.cy * partial(h, Var::y); };
    const RatFunc rhs_x = L.coefficient({1, 0}) - along_s1(s2.cx);
    const RatFunc rhs_y = L.coefficient({0, 1}) - along_s1(s2.cy);
    // [s2x s1x; s2y s1y] (g, f)^T = (rhs_x, rhs_y)^T
    const RatFunc det = s2.cx * s1.cy - s1.cx * s2.cy;
    const RatFunc g = (rhs_x * s1.cy - s1.cx * rhs_y) / det;
    const RatFunc f = (s2.cx * rhs_y - s2.cy * rhs_x) / det;

    if (!(along_s1(f) + g * f - L.coefficient({0, 0})).is_zero())
        return std::nullopt;
    Factorization fac{{s1.to_operator() + Lpdo(g), s2.to_operator() + Lpdo(f)}};
    if (!verify_factorization(L, fac))
        throw InconsistencyError("order-2 coprime solution does not reproduce L");
    return fac;
}

Factorization construct_triple(const Lpdo &L, const Lpdo &F1, const Lpdo &F2) {
    if (L.order() != 3u)
        throw PreconditionError("order(L) == 3");
    if (F1.order() != 1u)
        throw PreconditionError("order(F1) == 1");
    if (F2.order() != 1u)
        throw PreconditionError("order(F2) == 1");
    if (proportional(LinearForm::of(F1), LinearForm::of(F2)))
        throw PreconditionError("gcd(symbol(F1), symbol(F2)) == 1");
    const DivisionResult left = left_divide(L, F1);
    if (!left.exact())
        throw PreconditionError("F1 is a left factor of L");
    if (!right_divide(L, F2).exact())
        throw PreconditionError("F2 is a right factor of L");

    const DivisionResult middle = right_divide(left.quotient, F2);
    if (!middle.exact())
        throw InconsistencyError("left quotient is not right-divisible by F2 although symbols are coprime");
    return Factorization{{F1, middle.quotient, F2}};
}

} // namespace lpdo
